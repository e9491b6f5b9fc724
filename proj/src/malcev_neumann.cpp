#include "nw/malcev_neumann.hpp"

#include <set>

#include "nw/error.hpp"

namespace nw {

namespace {

std::int64_t floor_mod(std::int64_t x, std::int64_t n) {
    const std::int64_t r = x % n;
    return r < 0 ? r + n : r;
}

std::optional<RatVector> span_coordinates(const std::vector<AlgElement>& basis, const AlgElement& x) {
    if (basis.empty()) return x.is_zero() ? std::optional<RatVector>(RatVector{}) : std::nullopt;
    RatMatrix m(x.dim(), RatVector(basis.size()));
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t k = 0; k < x.dim(); ++k) m[k][j] = basis[j].c[k];
    return solve(m, x.c, basis.size());
}

void require_same_context(const TwistedSeries& x, const TwistedSeries& y) {
    if (x.context() != y.context()) throw PreconditionError("series belong to different Mal'cev-Neumann contexts");
}

std::size_t eps_index(const MNContext& ctx, GroupElem g) { return ctx.eps().index(ctx.eps().apply(g)); }

Json exp_json(const GExp& e) {
    Json j = Json::array();
    for (unsigned x : e) j.push_back(x);
    return j;
}

}  // namespace

std::vector<GroupElem> OrderedGroup::generators() const {
    if (kind_ == Kind::Z) return {{1, 0}};
    return {{1, 0}, {0, 1}};
}

std::string OrderedGroup::str(GroupElem g) const {
    if (kind_ == Kind::Z) return std::to_string(g.a);
    return std::to_string(g.a) + "," + std::to_string(g.b);
}

EpsilonMap::EpsilonMap(OrderedGroup group, std::vector<unsigned> orders, std::vector<GExp> images)
    : group_(group), orders_(std::move(orders)), images_(std::move(images)) {
    if (images_.size() != group_.rank()) throw PreconditionError("epsilon needs one image per generator of Gamma");
    for (unsigned n : orders_)
        if (n == 0) throw PreconditionError("epsilon target factors must have positive order");
    for (auto& img : images_) {
        if (img.size() != orders_.size()) throw PreconditionError("epsilon image has the wrong number of components");
        for (std::size_t i = 0; i < img.size(); ++i) img[i] %= orders_[i];
    }
    std::set<std::size_t> reached{0};
    std::vector<std::size_t> frontier{0};
    while (!frontier.empty()) {
        const GExp e = element(frontier.back());
        frontier.pop_back();
        for (const auto& img : images_) {
            GExp f = e;
            for (std::size_t i = 0; i < f.size(); ++i) f[i] = (f[i] + img[i]) % orders_[i];
            if (reached.insert(index(f)).second) frontier.push_back(index(f));
        }
    }
    if (reached.size() != target_size()) throw PreconditionError("epsilon is not surjective");
}

std::size_t EpsilonMap::target_size() const {
    std::size_t n = 1;
    for (unsigned o : orders_) n *= o;
    return n;
}

GExp EpsilonMap::apply(GroupElem g) const {
    if (!group_.contains(g)) throw PreconditionError("group element outside Gamma");
    GExp e(orders_.size());
    const std::int64_t coords[2] = {g.a, g.b};
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        const std::int64_t n = orders_[i];
        std::int64_t s = 0;
        for (std::size_t j = 0; j < images_.size(); ++j) s = floor_mod(s + floor_mod(coords[j], n) * images_[j][i], n);
        e[i] = static_cast<unsigned>(s);
    }
    return e;
}

bool EpsilonMap::in_kernel(GroupElem g) const {
    for (unsigned x : apply(g))
        if (x != 0) return false;
    return true;
}

std::size_t EpsilonMap::index(const GExp& e) const {
    std::size_t idx = 0;
    for (std::size_t i = orders_.size(); i-- > 0;) idx = idx * orders_[i] + e[i];
    return idx;
}

GExp EpsilonMap::element(std::size_t index) const {
    GExp e(orders_.size());
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        e[i] = static_cast<unsigned>(index % orders_[i]);
        index /= orders_[i];
    }
    return e;
}

std::shared_ptr<const MNContext> MNContext::make(AlgebraWithSubfield a, EpsilonMap eps, UnitMode mode) {
    const StructAlgebra& alg = *a.algebra;
    const SubfieldSpec& k = a.subfield;
    if (const std::string err = k.validate(alg); !err.empty()) throw PreconditionError("invalid subfield: " + err);
    if (k.generators.size() != eps.orders().size())
        throw PreconditionError("epsilon target must have one factor per subfield generator");
    for (std::size_t i = 0; i < k.generators.size(); ++i)
        if (k.generator_orders[i] != eps.orders()[i])
            throw PreconditionError("epsilon factor order differs from the generator order");

    std::shared_ptr<MNContext> ctx(new MNContext());
    ctx->alg_ = std::move(a);
    ctx->eps_ = std::move(eps);
    ctx->mode_ = mode;
    ctx->centralizer_ = centralizer(alg, ctx->alg_.subfield);

    const SubfieldSpec& s = ctx->alg_.subfield;
    const EpsilonMap& e = ctx->eps_;
    const std::size_t n = e.target_size();

    std::vector<AlgElement> gen_units;
    if (mode == UnitMode::GeneratorPowers) {
        for (std::size_t i = 0; i < s.generators.size(); ++i) {
            AlgElement u = skolem_noether_unit(alg, s, s.generators[i]);
            if (alg.pow(u, e.orders()[i]) != alg.one())
                throw PreconditionError("generator-power units need u_sigma^n = 1, but u = " + alg.format(u) +
                                        " has u^" + std::to_string(e.orders()[i]) + " = " +
                                        alg.format(alg.pow(u, e.orders()[i])));
            gen_units.push_back(std::move(u));
        }
    }

    for (std::size_t g = 0; g < n; ++g) {
        const GExp ex = e.element(g);
        SubfieldMap map = s.identity();
        AlgElement u = alg.one();
        for (std::size_t i = 0; i < ex.size(); ++i)
            for (unsigned t = 0; t < ex[i]; ++t) {
                map = s.compose(s.generators[i], map);
                if (mode == UnitMode::GeneratorPowers) u = alg.mul(u, gen_units[i]);
            }
        if (mode == UnitMode::PerG && g != 0) u = skolem_noether_unit(alg, s, map);
        const auto uinv = alg.inverse(u);
        if (!uinv) throw PreconditionError("unit u_g is not invertible");
        for (std::size_t b = 0; b < s.basis.size(); ++b)
            if (alg.mul(alg.mul(*uinv, s.basis[b]), u) != map.images[b])
                throw PreconditionError("unit u_g does not conjugate K by g");
        ctx->units_.push_back(std::move(u));
    }

    ctx->sum_.resize(n * n);
    ctx->left_.resize(n * n);
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h) {
            GExp x = e.element(g);
            const GExp y = e.element(h);
            for (std::size_t i = 0; i < x.size(); ++i) x[i] = (x[i] + y[i]) % e.orders()[i];
            const std::size_t gh = e.index(x);
            ctx->sum_[g * n + h] = gh;
            ctx->left_[g * n + h] = alg.mul(*alg.inverse(ctx->units_[gh]), ctx->units_[g]);
        }
    return ctx;
}

std::optional<RatVector> MNContext::centralizer_coordinates(const AlgElement& x) const {
    if (x.dim() != algebra().dim()) return std::nullopt;
    return span_coordinates(centralizer_.basis, x);
}

Json MNContext::describe() const {
    const StructAlgebra& a = algebra();
    Json j;
    j["gamma"] = eps_.group().name();
    Json orders = Json::array();
    for (unsigned o : eps_.orders()) orders.push_back(o);
    j["G_orders"] = orders;
    Json images = Json::array();
    const auto gens = eps_.group().generators();
    for (std::size_t i = 0; i < gens.size(); ++i)
        images.push_back(Json{{"generator", eps_.group().str(gens[i])}, {"image", exp_json(eps_.images()[i])}});
    j["eps"] = images;
    j["unit_mode"] = mode_ == UnitMode::PerG ? "per-G (u_Id = 1)" : "generator powers";
    j["algebra_dim"] = a.dim();
    Json k = Json::array();
    for (const auto& b : subfield().basis) k.push_back(a.format(b));
    j["subfield_basis"] = k;
    Json c = Json::array();
    for (const auto& b : centralizer_.basis) c.push_back(a.format(b));
    j["centralizer_basis"] = c;
    Json units = Json::array();
    for (std::size_t g = 0; g < units_.size(); ++g)
        units.push_back(Json{{"g", exp_json(eps_.element(g))}, {"u", a.format(units_[g])}});
    j["units"] = units;
    return j;
}

TwistedSeries TwistedSeries::zero(MNContextPtr ctx) { return from_trusted(std::move(ctx), {}); }

TwistedSeries TwistedSeries::from_trusted(MNContextPtr ctx, Terms terms) {
    if (!ctx) throw PreconditionError("series needs a context");
    TwistedSeries s;
    s.ctx_ = std::move(ctx);
    s.terms_ = std::move(terms);
    return s;
}

TwistedSeries TwistedSeries::from_terms(MNContextPtr ctx, const std::vector<std::pair<GroupElem, AlgElement>>& terms) {
    if (!ctx) throw PreconditionError("series needs a context");
    const OrderedGroup& grp = ctx->eps().group();
    Terms out;
    for (const auto& [g, r] : terms) {
        const std::string where = "term a_(" + grp.str(g) + ")";
        if (!grp.contains(g)) throw PreconditionError(where + ": index outside " + grp.name());
        if (r.dim() != ctx->algebra().dim()) throw PreconditionError(where + ": coefficient has the wrong dimension");
        if (!ctx->in_centralizer(r))
            throw PreconditionError(where + ": coefficient " + ctx->algebra().format(r) + " is not in C_A(K)");
        auto [it, fresh] = out.try_emplace(g, r);
        if (!fresh) it->second += r;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return from_trusted(std::move(ctx), std::move(out));
}

TwistedSeries TwistedSeries::monomial(MNContextPtr ctx, GroupElem g, const AlgElement& r) {
    return from_terms(std::move(ctx), {{g, r}});
}

std::string TwistedSeries::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [g, r] : terms_) {
        if (!out.empty()) out += " + ";
        out += "a_(" + ctx_->eps().group().str(g) + ")·[" + ctx_->algebra().format(r) + "]";
    }
    return out;
}

TwistedSeries mn_add(const TwistedSeries& x, const TwistedSeries& y) {
    require_same_context(x, y);
    auto terms = x.terms();
    for (const auto& [g, r] : y.terms()) {
        auto [it, fresh] = terms.try_emplace(g, r);
        if (!fresh) {
            it->second += r;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    return TwistedSeries::from_trusted(x.context(), std::move(terms));
}

TwistedSeries mn_sub(const TwistedSeries& x, const TwistedSeries& y) {
    require_same_context(x, y);
    TwistedSeries::Terms neg;
    for (const auto& [g, r] : y.terms()) neg.emplace(g, -r);
    return mn_add(x, TwistedSeries::from_trusted(y.context(), std::move(neg)));
}

TwistedSeries mn_mul(const TwistedSeries& x, const TwistedSeries& y) {
    require_same_context(x, y);
    const MNContext& ctx = *x.context();
    const StructAlgebra& a = ctx.algebra();
    std::vector<std::size_t> yg;
    for (const auto& term : y.terms()) yg.push_back(eps_index(ctx, term.first));
    TwistedSeries::Terms out;
    for (const auto& [gamma, r] : x.terms()) {
        const std::size_t g = eps_index(ctx, gamma);
        std::size_t idx = 0;
        for (const auto& [delta, s] : y.terms()) {
            const std::size_t h = yg[idx++];
            const AlgElement alpha = a.mul(a.mul(a.mul(ctx.cocycle_left(g, h), r), ctx.unit(h)), s);
            auto [it, fresh] = out.try_emplace(gamma + delta, alpha);
            if (!fresh) it->second += alpha;
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return TwistedSeries::from_trusted(x.context(), std::move(out));
}

TwistedSeries mn_truncate(const TwistedSeries& x, GroupElem cutoff) {
    TwistedSeries::Terms out(x.terms().begin(), x.terms().upper_bound(cutoff));
    return TwistedSeries::from_trusted(x.context(), std::move(out));
}

std::optional<GroupElem> mn_valuation(const TwistedSeries& x) {
    if (x.is_zero()) return std::nullopt;
    return x.terms().begin()->first;
}

const AlgElement& mn_leading(const TwistedSeries& x) {
    if (x.is_zero()) throw PreconditionError("leading coefficient of the zero series");
    return x.terms().begin()->second;
}

TwistedSeries mn_invert_up_to(const TwistedSeries& s, GroupElem cutoff) {
    const MNContextPtr& ctxp = s.context();
    const MNContext& ctx = *ctxp;
    const StructAlgebra& a = ctx.algebra();
    if (s.is_zero()) throw PreconditionError("inverse of the zero series");
    const GroupElem v = *mn_valuation(s);
    const std::size_t g = eps_index(ctx, v);
    const std::size_t ginv = eps_index(ctx, -v);
    // (a_v c)(a_{-v} d) = a_0 u_Id^{-1} u_g c u_{g^-1} d
    const AlgElement lead = a.mul(a.mul(ctx.cocycle_left(g, ginv), mn_leading(s)), ctx.unit(ginv));
    const auto d = a.inverse(lead);
    if (!d) throw PreconditionError("leading coefficient " + a.format(mn_leading(s)) + " is not invertible");
    const TwistedSeries minv = TwistedSeries::from_trusted(ctxp, {{-v, *d}});
    const TwistedSeries one = TwistedSeries::from_trusted(ctxp, {{GroupElem{}, a.one()}});

    const TwistedSeries y = mn_sub(mn_mul(s, minv), one);
    if (y.is_zero()) return minv;
    if (ctx.eps().group().kind() == OrderedGroup::Kind::ZxZ && cutoff.a > 0)
        for (const auto& term : y.terms())
            if (term.first.a == 0)
                throw PreconditionError("cutoff " + ctx.eps().group().str(cutoff) +
                                        " unreachable: the geometric tail has a term at a_(" +
                                        ctx.eps().group().str(term.first) + ") with first coordinate 0");
    const TwistedSeries neg_y = mn_sub(TwistedSeries::zero(ctxp), y);
    TwistedSeries power = one;
    TwistedSeries sum = one;
    constexpr int kMaxIterations = 100000;
    for (int k = 0;; ++k) {
        if (k == kMaxIterations) throw PreconditionError("inversion did not reach the cutoff");
        power = mn_truncate(mn_mul(power, neg_y), cutoff);
        if (power.is_zero()) break;
        sum = mn_add(sum, power);
    }
    return mn_mul(minv, sum);
}

bool is_central(const TwistedSeries& s) {
    const MNContextPtr& ctxp = s.context();
    const MNContext& ctx = *ctxp;
    const auto commutes = [&](const TwistedSeries& x) { return mn_mul(s, x) == mn_mul(x, s); };
    for (const auto& c : ctx.centralizer_basis())
        if (!commutes(TwistedSeries::from_trusted(ctxp, {{GroupElem{}, c}}))) return false;
    for (const auto& gen : ctx.eps().group().generators())
        if (!commutes(TwistedSeries::from_trusted(ctxp, {{gen, ctx.algebra().one()}}))) return false;
    for (const auto& k : ctx.subfield().basis)
        if (!commutes(TwistedSeries::from_trusted(ctxp, {{GroupElem{}, k}}))) return false;
    return true;
}

bool is_central_structural(const TwistedSeries& s) {
    const MNContext& ctx = *s.context();
    const AlgElement& one = ctx.algebra().one();
    for (const auto& [g, r] : s.terms()) {
        if (!ctx.eps().in_kernel(g)) return false;
        if (!span_coordinates({one}, r)) return false;
    }
    return true;
}

DegreeIdentity degree_identity(const MNContext& ctx) {
    DegreeIdentity d;
    d.deg_d = static_cast<long>(ctx.eps().target_size() * ctx.centralizer_basis().size());
    d.deg_a = static_cast<long>(ctx.algebra().dim());
    d.equal = d.deg_d == d.deg_a;
    return d;
}

MNContextPtr hamilton_context() {
    return MNContext::make(quaternion(Rational(-1), Rational(-1)), EpsilonMap(OrderedGroup::z(), {2}, {{1}}));
}

MNContextPtr biquadratic_tensor_context() {
    return MNContext::make(tensor(quaternion(Rational(-1), Rational(-1)), quaternion(Rational(-3), Rational(-1))),
                           EpsilonMap(OrderedGroup::zxz(), {2, 2}, {{1, 0}, {0, 1}}));
}

MNContextPtr generator_power_context() {
    return MNContext::make(quaternion(Rational(-1), Rational(1)), EpsilonMap(OrderedGroup::z(), {2}, {{1}}),
                           UnitMode::GeneratorPowers);
}

TwistedSeries random_series(const MNContextPtr& ctx, Rng& rng, const RandomSeriesShape& shape) {
    const auto& basis = ctx->centralizer_basis();
    const bool two = ctx->eps().group().kind() == OrderedGroup::Kind::ZxZ;
    for (;;) {
        const int n = static_cast<int>(uniform_int(rng, 1, shape.max_terms));
        TwistedSeries::Terms terms;
        for (int t = 0; t < n; ++t) {
            GroupElem g{uniform_int(rng, -shape.index_range, shape.index_range),
                        two ? uniform_int(rng, -shape.index_range, shape.index_range) : 0};
            AlgElement r = ctx->algebra().zero();
            for (const auto& b : basis) r += Rational(uniform_int(rng, -shape.coeff_range, shape.coeff_range)) * b;
            auto [it, fresh] = terms.try_emplace(g, r);
            if (!fresh) it->second += r;
        }
        std::erase_if(terms, [](const auto& kv) { return kv.second.is_zero(); });
        if (!terms.empty()) return TwistedSeries::from_trusted(ctx, std::move(terms));
    }
}

}  // namespace nw
