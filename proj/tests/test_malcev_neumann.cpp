#include <doctest.h>

#include "nw/error.hpp"
#include "nw/malcev_neumann.hpp"

using namespace nw;

namespace {

Rational R(long n, long d = 1) { return Rational(Integer(n), Integer(d)); }

struct Hamilton {
    MNContextPtr ctx = hamilton_context();
    const StructAlgebra& A = ctx->algebra();
    AlgElement one = A.one(), i = A.basis(1), j = A.basis(2);
    TwistedSeries a(std::int64_t g, const AlgElement& r) const { return TwistedSeries::monomial(ctx, {g, 0}, r); }
};

/// Independent model of the Hamilton context: coefficients x + y i in Q(i), u_sigma = j,
/// so (a_g r)(a_h s) = a_{g+h} c(g, h) sigma^h(r) s with c = -1 when g, h are both odd.
using Gauss = std::pair<Rational, Rational>;
using GaussSeries = std::map<std::int64_t, Gauss>;

GaussSeries to_gauss(const TwistedSeries& s) {
    GaussSeries out;
    for (const auto& [g, r] : s.terms()) out[g.a] = {r.c[0], r.c[1]};
    return out;
}

GaussSeries gauss_mul(const GaussSeries& x, const GaussSeries& y) {
    GaussSeries out;
    for (const auto& [g, r] : x)
        for (const auto& [h, s] : y) {
            const bool odd_g = (g % 2) != 0, odd_h = (h % 2) != 0;
            const Rational sign = (odd_g && odd_h) ? R(-1) : R(1);
            const Rational ri = odd_h ? -r.second : r.second;  // sigma^h
            const Rational re = r.first * s.first - ri * s.second;
            const Rational im = r.first * s.second + ri * s.first;
            auto& acc = out[g + h];
            acc.first += sign * re;
            acc.second += sign * im;
        }
    std::erase_if(out, [](const auto& kv) { return kv.second.first.is_zero() && kv.second.second.is_zero(); });
    return out;
}

bool support_above(const TwistedSeries& s, GroupElem cutoff) {
    for (const auto& [g, r] : s.terms())
        if (!(cutoff < g)) return false;
    return true;
}

}  // namespace

TEST_CASE("multiplication rules in the Hamilton context") {
    Hamilton h;
    CHECK(mn_mul(h.a(1, h.i), h.a(1, h.one)) == h.a(2, h.i));
    CHECK(mn_mul(h.a(0, h.i), h.a(1, h.one)) == h.a(1, -h.i));
    const TwistedSeries s = mn_add(h.a(2, h.i), h.a(5, h.one + h.i));
    CHECK(mn_mul(s, TwistedSeries::zero(h.ctx)).is_zero());
    CHECK(mn_mul(s, h.a(0, h.one)) == s);
    CHECK(mn_mul(h.a(1, h.one), h.a(1, h.one)) == h.a(2, -h.one));  // u_Id^-1 j j = -1
    CHECK(h.ctx->unit(0) == h.one);
    CHECK(h.ctx->unit(1) == h.j);
    CHECK(s.str() == "a_(2)·[i] + a_(5)·[1 + i]");
}

TEST_CASE("coefficients must lie in C_A(K)") {
    Hamilton h;
    CHECK_THROWS_WITH_AS(TwistedSeries::monomial(h.ctx, {5, 0}, h.j), doctest::Contains("a_(5)"), PreconditionError);
    CHECK_THROWS_AS(TwistedSeries::monomial(h.ctx, {1, 1}, h.one), PreconditionError);
    const auto other = hamilton_context();
    CHECK_THROWS_AS(mn_mul(h.a(1, h.one), TwistedSeries::monomial(other, {1, 0}, other->algebra().one())),
                    PreconditionError);
    CHECK(TwistedSeries::from_terms(h.ctx, {{{1, 0}, h.i}, {{1, 0}, -h.i}}).is_zero());
}

TEST_CASE("valuation and leading coefficient") {
    Hamilton h;
    const TwistedSeries s = mn_add(h.a(2, h.i), h.a(5, h.one + h.i));
    CHECK(mn_valuation(s) == GroupElem{2, 0});
    CHECK_FALSE(mn_valuation(TwistedSeries::zero(h.ctx)));
    CHECK(mn_leading(s) == h.i);
    CHECK(mn_leading(h.a(0, h.one + h.i)) == h.one + h.i);
    CHECK_THROWS_AS(mn_leading(TwistedSeries::zero(h.ctx)), PreconditionError);

    const auto bq = biquadratic_tensor_context();
    const AlgElement one = bq->algebra().one();
    const TwistedSeries z2 = TwistedSeries::from_terms(bq, {{{0, 3}, one}, {{1, 0}, one}});
    CHECK(mn_valuation(z2) == GroupElem{0, 3});
    CHECK(z2.str() == "a_(0,3)·[1] + a_(1,0)·[1]");
}

TEST_CASE("inversion up to a cutoff") {
    Hamilton h;
    const TwistedSeries s = mn_add(h.a(0, h.one), h.a(1, h.i));
    const TwistedSeries t = mn_invert_up_to(s, {3, 0});
    const TwistedSeries err = mn_sub(mn_mul(s, t), h.a(0, h.one));
    CHECK_FALSE(err.is_zero());
    CHECK(support_above(err, {3, 0}));

    CHECK(mn_invert_up_to(h.a(0, R(2) * h.one), {10, 0}) == h.a(0, R(1, 2) * h.one));
    const TwistedSeries m = h.a(-1, h.i);
    const TwistedSeries mi = mn_invert_up_to(m, {0, 0});
    CHECK(mn_mul(m, mi) == h.a(0, h.one));
    CHECK(mn_mul(mi, m) == h.a(0, h.one));
    CHECK_THROWS_AS(mn_invert_up_to(TwistedSeries::zero(h.ctx), {0, 0}), PreconditionError);

    const auto bq = biquadratic_tensor_context();
    const AlgElement one = bq->algebra().one();
    const TwistedSeries tail = TwistedSeries::from_terms(bq, {{{0, 0}, one}, {{0, 1}, one}});
    CHECK_THROWS_WITH_AS(mn_invert_up_to(tail, {1, 0}), doctest::Contains("unreachable"), PreconditionError);
    const TwistedSeries ti = mn_invert_up_to(tail, {0, 4});
    CHECK(support_above(mn_sub(mn_mul(tail, ti), TwistedSeries::monomial(bq, {0, 0}, one)), {0, 4}));
}

TEST_CASE("center membership") {
    Hamilton h;
    CHECK(is_central(h.a(2, h.one)));
    CHECK_FALSE(is_central(h.a(1, h.one)));
    CHECK_FALSE(is_central(h.a(2, h.i)));
    CHECK(is_central_structural(h.a(2, h.one)));
    CHECK_FALSE(is_central_structural(h.a(1, h.one)));
    CHECK_FALSE(is_central_structural(h.a(2, h.i)));
    CHECK(is_central(TwistedSeries::zero(h.ctx)));
    CHECK(h.ctx->eps().in_kernel({-4, 0}));
    CHECK_FALSE(h.ctx->eps().in_kernel({3, 0}));
}

TEST_CASE("degree identity") {
    const DegreeIdentity d1 = degree_identity(*hamilton_context());
    CHECK((d1.deg_d == 4 && d1.deg_a == 4 && d1.equal));
    const DegreeIdentity d2 = degree_identity(*biquadratic_tensor_context());
    CHECK((d2.deg_d == 16 && d2.deg_a == 16 && d2.equal));
    auto h = quaternion(-1, -1);
    SubfieldSpec f{{h.algebra->one()}, {}, {}};
    const auto trivial = MNContext::make({h.algebra, f}, EpsilonMap(OrderedGroup::z(), {}, {{}}));
    const DegreeIdentity d3 = degree_identity(*trivial);
    CHECK((d3.deg_d == 4 && d3.deg_a == 4 && d3.equal));
}

TEST_CASE("epsilon maps") {
    CHECK_THROWS_AS(EpsilonMap(OrderedGroup::z(), {2, 2}, {{1, 0}}), PreconditionError);  // not surjective
    CHECK_THROWS_AS(EpsilonMap(OrderedGroup::zxz(), {2}, {{1}}), PreconditionError);      // one image per generator
    const EpsilonMap e(OrderedGroup::zxz(), {2, 2}, {{1, 0}, {0, 1}});
    CHECK(e.target_size() == 4);
    CHECK(e.apply({-3, 4}) == GExp{1, 0});
    CHECK(e.index(e.element(3)) == 3);
}

TEST_CASE("generator-power units") {
    CHECK_THROWS_WITH_AS(MNContext::make(quaternion(-1, -1), EpsilonMap(OrderedGroup::z(), {2}, {{1}}),
                                         UnitMode::GeneratorPowers),
                         doctest::Contains("u_sigma^n = 1"), PreconditionError);
    const auto ctx = generator_power_context();
    const AlgElement one = ctx->algebra().one();
    const auto a = [&](std::int64_t g) { return TwistedSeries::monomial(ctx, {g, 0}, one); };
    for (std::int64_t g = -3; g <= 3; ++g)
        for (std::int64_t h = -3; h <= 3; ++h) CHECK(mn_mul(a(g), a(h)) == a(g + h));
    CHECK(ctx->unit(1) == ctx->algebra().basis(2));
}

TEST_CASE("Hamilton products agree with the Gaussian-rational model") {
    const auto ctx = hamilton_context();
    Rng rng(101);
    for (int i = 0; i < 300; ++i) {
        const TwistedSeries x = random_series(ctx, rng), y = random_series(ctx, rng);
        CHECK(to_gauss(mn_mul(x, y)) == gauss_mul(to_gauss(x), to_gauss(y)));
    }
}

TEST_CASE("ring identities on random series") {
    for (const auto& ctx : {hamilton_context(), biquadratic_tensor_context()}) {
        Rng rng(102);
        const StructAlgebra& A = ctx->algebra();
        for (int i = 0; i < 300; ++i) {
            const TwistedSeries s1 = random_series(ctx, rng), s2 = random_series(ctx, rng),
                                s3 = random_series(ctx, rng);
            const TwistedSeries p = mn_mul(s1, s2);
            const GroupElem v1 = *mn_valuation(s1), v2 = *mn_valuation(s2);
            CHECK(mn_valuation(p) == std::optional<GroupElem>(v1 + v2));
            // Leading coefficient from the leading terms alone.
            const EpsilonMap& e = ctx->eps();
            const std::size_t g = e.index(e.apply(v1)), h = e.index(e.apply(v2));
            const AlgElement alpha = A.mul(
                A.mul(A.mul(A.mul(*A.inverse(ctx->unit(ctx->g_add(g, h))), ctx->unit(g)), mn_leading(s1)), ctx->unit(h)),
                mn_leading(s2));
            CHECK(mn_leading(p) == alpha);
            CHECK_FALSE(alpha.is_zero());
            CHECK(mn_mul(p, s3) == mn_mul(s1, mn_mul(s2, s3)));
            CHECK(mn_mul(s1, mn_add(s2, s3)) == mn_add(p, mn_mul(s1, s3)));
            CHECK(mn_mul(mn_add(s1, s2), s3) == mn_add(mn_mul(s1, s3), mn_mul(s2, s3)));
            const TwistedSeries sum = mn_add(s1, s2);
            if (!sum.is_zero()) {
                CHECK(std::min(v1, v2) <= *mn_valuation(sum));
                if (v1 != v2) CHECK(*mn_valuation(sum) == std::min(v1, v2));
            }
            for (const auto& [gamma, r] : p.terms()) CHECK(ctx->in_centralizer(r));
        }
    }
}

TEST_CASE("random inversions round-trip") {
    for (const auto& ctx : {hamilton_context(), biquadratic_tensor_context()}) {
        Rng rng(103);
        const bool two = ctx->eps().group().kind() == OrderedGroup::Kind::ZxZ;
        const TwistedSeries one = TwistedSeries::monomial(ctx, {}, ctx->algebra().one());
        for (int i = 0; i < 40; ++i) {
            const TwistedSeries s = random_series(ctx, rng, {3, 2, 3});
            const GroupElem cutoff{uniform_int(rng, -1, 3), two ? uniform_int(rng, -2, 2) : 0};
            TwistedSeries t = TwistedSeries::zero(ctx);
            try {
                t = mn_invert_up_to(s, cutoff);
            } catch (const PreconditionError& e) {
                CHECK(two);
                CHECK(std::string(e.what()).find("unreachable") != std::string::npos);
                continue;
            }
            CHECK(support_above(mn_sub(mn_mul(s, t), one), cutoff));
        }
    }
}
