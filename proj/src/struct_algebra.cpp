#include "nw/struct_algebra.hpp"

#include "nw/error.hpp"

namespace nw {

namespace {

RatVector kron(const RatVector& x, const RatVector& y) {
    RatVector out;
    out.reserve(x.size() * y.size());
    for (const auto& a : x)
        for (const auto& b : y) out.push_back(a * b);
    return out;
}

std::string tensor_label(const std::string& a, const std::string& b) {
    if (b == "1") return a;
    if (a == "1") return b + "'";
    return a + b + "'";
}

}  // namespace

AlgElement AlgElement::basis(std::size_t dim, std::size_t i) {
    AlgElement e = zero(dim);
    e.c.at(i) = 1;
    return e;
}

bool AlgElement::is_zero() const {
    for (const auto& x : c)
        if (!x.is_zero()) return false;
    return true;
}

AlgElement& AlgElement::operator+=(const AlgElement& o) {
    if (o.dim() != dim()) throw PreconditionError("algebra elements of different dimension");
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
    return *this;
}

AlgElement& AlgElement::operator-=(const AlgElement& o) {
    if (o.dim() != dim()) throw PreconditionError("algebra elements of different dimension");
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
    return *this;
}

AlgElement AlgElement::operator-() const {
    AlgElement r = *this;
    for (auto& x : r.c) x = -x;
    return r;
}

AlgElement operator*(const Rational& s, AlgElement x) {
    for (auto& v : x.c) v *= s;
    return x;
}

StructAlgebra::StructAlgebra(const Dense& c, std::vector<std::string> labels)
    : dim_(c.size()), table_(c.size() * c.size()), labels_(std::move(labels)) {
    if (dim_ == 0) throw PreconditionError("algebra of dimension zero");
    if (labels_.size() != dim_) throw PreconditionError("one label per basis element required");
    for (std::size_t i = 0; i < dim_; ++i) {
        if (c[i].size() != dim_) throw PreconditionError("structure constants have the wrong shape");
        for (std::size_t j = 0; j < dim_; ++j) {
            if (c[i][j].size() != dim_) throw PreconditionError("structure constants have the wrong shape");
            for (std::size_t k = 0; k < dim_; ++k)
                if (!c[i][j][k].is_zero()) table_[i * dim_ + j].push_back({k, c[i][j][k]});
        }
    }
    check_associative();

    // Two-sided unit: u e_j = e_j and e_j u = e_j for every j.
    RatMatrix m;
    RatVector rhs;
    for (std::size_t j = 0; j < dim_; ++j) {
        for (int side = 0; side < 2; ++side) {
            for (std::size_t r = 0; r < dim_; ++r) {
                RatVector row(dim_, Rational(0));
                for (std::size_t i = 0; i < dim_; ++i) row[i] = side == 0 ? c[i][j][r] : c[j][i][r];
                m.push_back(std::move(row));
                rhs.push_back(r == j ? Rational(1) : Rational(0));
            }
        }
    }
    const auto unit = solve(m, rhs, dim_);
    if (!unit) throw PreconditionError("structure constants define an algebra without a two-sided unit");
    one_ = AlgElement(*unit);
}

void StructAlgebra::check_associative() const {
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            for (std::size_t k = 0; k < dim_; ++k) {
                const AlgElement ei = basis(i), ek = basis(k);
                if (mul(basis_product(i, j), ek) != mul(ei, basis_product(j, k)))
                    throw PreconditionError("structure constants are not associative on (e" + std::to_string(i) +
                                            ", e" + std::to_string(j) + ", e" + std::to_string(k) + ")");
            }
}

AlgElement StructAlgebra::basis_product(std::size_t i, std::size_t j) const {
    AlgElement out = zero();
    for (const auto& t : table(i, j)) out.c[t.k] += t.c;
    return out;
}

AlgElement StructAlgebra::mul(const AlgElement& x, const AlgElement& y) const {
    if (x.dim() != dim_ || y.dim() != dim_) throw PreconditionError("element does not belong to this algebra");
    AlgElement out = zero();
    Rational xy;
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x.c[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (y.c[j].is_zero()) continue;
            xy = x.c[i] * y.c[j];
            for (const auto& t : table(i, j)) out.c[t.k] += xy * t.c;
        }
    }
    return out;
}

std::optional<AlgElement> StructAlgebra::inverse(const AlgElement& x) const {
    RatMatrix lx(dim_, RatVector(dim_, Rational(0)));
    for (std::size_t j = 0; j < dim_; ++j) {
        const AlgElement col = mul(x, basis(j));
        for (std::size_t k = 0; k < dim_; ++k) lx[k][j] = col.c[k];
    }
    auto y = solve(lx, one_.c, dim_);
    if (!y) return std::nullopt;
    AlgElement inv(std::move(*y));
    if (mul(inv, x) != one_) return std::nullopt;
    return inv;
}

AlgElement StructAlgebra::pow(const AlgElement& x, long e) const {
    AlgElement base = x;
    if (e < 0) {
        auto inv = inverse(x);
        if (!inv) throw PreconditionError("negative power of a non-invertible element");
        base = *inv;
        e = -e;
    }
    AlgElement r = one_;
    for (; e > 0; --e) r = mul(r, base);
    return r;
}

bool StructAlgebra::commute(const AlgElement& x, const AlgElement& y) const { return mul(x, y) == mul(y, x); }

std::string StructAlgebra::format(const AlgElement& x) const {
    std::string out;
    for (std::size_t i = 0; i < dim_; ++i) {
        const Rational& v = x.c[i];
        if (v.is_zero()) continue;
        const bool neg = v.sign() < 0;
        const Rational mag = neg ? -v : v;
        out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        const std::string& label = labels_[i];
        if (label == "1")
            out += mag.str();
        else if (mag == Rational(1))
            out += label;
        else if (mag.is_integer())
            out += mag.str() + label;
        else
            out += "(" + mag.str() + ")" + label;
    }
    return out.empty() ? "0" : out;
}

std::optional<RatVector> SubfieldSpec::coordinates(const AlgElement& x) const {
    if (basis.empty()) return std::nullopt;
    const std::size_t n = x.dim();
    RatMatrix m(n, RatVector(basis.size(), Rational(0)));
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t k = 0; k < n; ++k) m[k][j] = basis[j].c[k];
    return solve(m, x.c, basis.size());
}

AlgElement SubfieldSpec::apply(const SubfieldMap& g, const AlgElement& x) const {
    const auto coords = coordinates(x);
    if (!coords) throw PreconditionError("element is outside the subfield");
    AlgElement out = AlgElement::zero(x.dim());
    for (std::size_t j = 0; j < basis.size(); ++j) out += (*coords)[j] * g.images[j];
    return out;
}

SubfieldMap SubfieldSpec::compose(const SubfieldMap& g, const SubfieldMap& h) const {
    SubfieldMap out;
    for (const auto& img : h.images) out.images.push_back(apply(g, img));
    return out;
}

SubfieldMap SubfieldSpec::identity() const { return SubfieldMap{basis}; }

std::string SubfieldSpec::validate(const StructAlgebra& a) const {
    if (basis.empty()) return "empty subfield basis";
    if (generators.size() != generator_orders.size()) return "one order per generator required";
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (!a.commute(basis[i], basis[j])) return "subfield basis elements do not commute";
            if (!coordinates(a.mul(basis[i], basis[j]))) return "subfield span is not closed under products";
        }
    if (!coordinates(a.one())) return "subfield span does not contain the unit";
    for (std::size_t g = 0; g < generators.size(); ++g) {
        const auto& map = generators[g];
        if (map.images.size() != basis.size()) return "generator map has the wrong number of images";
        for (const auto& img : map.images)
            if (!coordinates(img)) return "generator image outside the subfield";
        if (apply(map, a.one()) != a.one()) return "generator does not fix the unit";
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = 0; j < basis.size(); ++j)
                if (apply(map, a.mul(basis[i], basis[j])) != a.mul(map.images[i], map.images[j]))
                    return "generator is not multiplicative";
        SubfieldMap power = map;
        for (unsigned k = 1; k < generator_orders[g]; ++k) {
            if (power.images == basis) return "generator order is smaller than declared";
            power = compose(map, power);
        }
        if (power.images != basis) return "generator order does not divide the declared order";
    }
    return {};
}

AlgebraWithSubfield quaternion(const Rational& a, const Rational& b) {
    if (a.is_zero() || b.is_zero()) throw PreconditionError("quaternion algebra parameters must be nonzero");
    StructAlgebra::Dense c(4, std::vector<RatVector>(4, RatVector(4, Rational(0))));
    auto set = [&](std::size_t i, std::size_t j, std::size_t k, const Rational& v) { c[i][j][k] = v; };
    // basis order: 1, i, j, k
    for (std::size_t x = 0; x < 4; ++x) {
        set(0, x, x, 1);
        set(x, 0, x, 1);
    }
    set(1, 1, 0, a);
    set(2, 2, 0, b);
    set(3, 3, 0, -(a * b));
    set(1, 2, 3, 1);
    set(2, 1, 3, -1);
    set(1, 3, 2, a);
    set(3, 1, 2, -a);
    set(2, 3, 1, -b);
    set(3, 2, 1, b);

    auto alg = std::make_shared<const StructAlgebra>(c, std::vector<std::string>{"1", "i", "j", "k"});
    SubfieldSpec k;
    k.basis = {alg->basis(0), alg->basis(1)};
    k.generators = {SubfieldMap{{alg->basis(0), -alg->basis(1)}}};
    k.generator_orders = {2};
    return {std::move(alg), std::move(k)};
}

AlgebraWithSubfield tensor(const AlgebraWithSubfield& x, const AlgebraWithSubfield& y) {
    const StructAlgebra& a1 = *x.algebra;
    const StructAlgebra& a2 = *y.algebra;
    const std::size_t d1 = a1.dim(), d2 = a2.dim(), d = d1 * d2;
    StructAlgebra::Dense c(d, std::vector<RatVector>(d));
    for (std::size_t a = 0; a < d1; ++a)
        for (std::size_t b = 0; b < d2; ++b)
            for (std::size_t e = 0; e < d1; ++e)
                for (std::size_t f = 0; f < d2; ++f)
                    c[a * d2 + b][e * d2 + f] = kron(a1.basis_product(a, e).c, a2.basis_product(b, f).c);
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < d1; ++a)
        for (std::size_t b = 0; b < d2; ++b) labels.push_back(tensor_label(a1.labels()[a], a2.labels()[b]));

    auto alg = std::make_shared<const StructAlgebra>(c, std::move(labels));
    SubfieldSpec k;
    for (const auto& u : x.subfield.basis)
        for (const auto& v : y.subfield.basis) k.basis.emplace_back(kron(u.c, v.c));
    for (std::size_t g = 0; g < x.subfield.generators.size(); ++g) {
        SubfieldMap m;
        for (const auto& u : x.subfield.generators[g].images)
            for (const auto& v : y.subfield.basis) m.images.emplace_back(kron(u.c, v.c));
        k.generators.push_back(std::move(m));
        k.generator_orders.push_back(x.subfield.generator_orders[g]);
    }
    for (std::size_t h = 0; h < y.subfield.generators.size(); ++h) {
        SubfieldMap m;
        for (const auto& u : x.subfield.basis)
            for (const auto& v : y.subfield.generators[h].images) m.images.emplace_back(kron(u.c, v.c));
        k.generators.push_back(std::move(m));
        k.generator_orders.push_back(y.subfield.generator_orders[h]);
    }
    return {std::move(alg), std::move(k)};
}

CentralizerResult centralizer(const StructAlgebra& a, const SubfieldSpec& s) {
    const std::size_t n = a.dim();
    RatMatrix m;
    for (const auto& k : s.basis) {
        std::vector<AlgElement> cols;
        for (std::size_t j = 0; j < n; ++j) cols.push_back(a.mul(k, a.basis(j)) - a.mul(a.basis(j), k));
        for (std::size_t r = 0; r < n; ++r) {
            RatVector row(n);
            for (std::size_t j = 0; j < n; ++j) row[j] = cols[j].c[r];
            m.push_back(std::move(row));
        }
    }
    CentralizerResult out;
    for (auto& v : nullspace(m, n)) out.basis.emplace_back(std::move(v));
    // dim K is the rank of the spanning set.
    RatMatrix span(n, RatVector(s.basis.size()));
    for (std::size_t j = 0; j < s.basis.size(); ++j)
        for (std::size_t r = 0; r < n; ++r) span[r][j] = s.basis[j].c[r];
    out.dimension_identity = out.basis.size() * rank(span, s.basis.size()) == n;
    return out;
}

AlgElement skolem_noether_unit(const StructAlgebra& a, const SubfieldSpec& s, const SubfieldMap& g) {
    const std::size_t n = a.dim();
    RatMatrix m;
    for (std::size_t b = 0; b < s.basis.size(); ++b) {
        const AlgElement& k = s.basis[b];
        const AlgElement& gk = g.images.at(b);
        std::vector<AlgElement> cols;
        for (std::size_t j = 0; j < n; ++j) cols.push_back(a.mul(k, a.basis(j)) - a.mul(a.basis(j), gk));
        for (std::size_t r = 0; r < n; ++r) {
            RatVector row(n);
            for (std::size_t j = 0; j < n; ++j) row[j] = cols[j].c[r];
            m.push_back(std::move(row));
        }
    }
    std::vector<AlgElement> sols;
    for (auto& v : nullspace(m, n)) sols.emplace_back(std::move(v));

    const auto conjugates_correctly = [&](const AlgElement& u, const AlgElement& uinv) {
        for (std::size_t b = 0; b < s.basis.size(); ++b)
            if (a.mul(a.mul(uinv, s.basis[b]), u) != g.images[b]) return false;
        return true;
    };
    std::vector<AlgElement> candidates = sols;
    for (std::size_t i = 0; i < sols.size(); ++i)
        for (std::size_t j = i + 1; j < sols.size(); ++j)
            for (int c : {1, -1, 2, -2}) candidates.push_back(sols[i] + Rational(c) * sols[j]);
    for (const auto& u : candidates) {
        const auto uinv = a.inverse(u);
        if (uinv && conjugates_correctly(u, *uinv)) return u;
    }
    throw PreconditionError("skolem_noether_unit: no invertible conjugating element found (" +
                            std::to_string(sols.size()) + "-dimensional solution space)");
}

}  // namespace nw
