#include "nw/check_report.hpp"
#include "nw/cli.hpp"
#include "nw/malcev_neumann.hpp"

namespace nw::cli {

namespace {

struct Tally {
    long passed = 0;
    long total = 0;
    void record(bool ok) {
        passed += ok ? 1 : 0;
        ++total;
    }
    Json to_json() const { return Json{{"passed", passed}, {"total", total}}; }
};

/// Leading coefficient of s1*s2 predicted from the leading terms alone.
AlgElement alpha(const MNContext& ctx, const TwistedSeries& s1, const TwistedSeries& s2) {
    const StructAlgebra& a = ctx.algebra();
    const EpsilonMap& e = ctx.eps();
    const std::size_t g = e.index(e.apply(*mn_valuation(s1)));
    const std::size_t h = e.index(e.apply(*mn_valuation(s2)));
    const AlgElement ugh_inv = *a.inverse(ctx.unit(ctx.g_add(g, h)));
    return a.mul(a.mul(a.mul(a.mul(ugh_inv, ctx.unit(g)), mn_leading(s1)), ctx.unit(h)), mn_leading(s2));
}

/// Half of the candidates lie in F((ker eps)) so both outcomes are exercised.
TwistedSeries center_candidate(const MNContextPtr& ctx, Rng& rng) {
    const int kind = static_cast<int>(uniform_int(rng, 0, 3));
    if (kind == 0) return random_series(ctx, rng);
    const bool two = ctx->eps().group().kind() == OrderedGroup::Kind::ZxZ;
    TwistedSeries::Terms terms;
    const int n = static_cast<int>(uniform_int(rng, 1, 3));
    for (int t = 0; t < n; ++t) {
        GroupElem g;
        do g = {uniform_int(rng, -4, 4), two ? uniform_int(rng, -4, 4) : 0};
        while (!ctx->eps().in_kernel(g));
        AlgElement r = Rational(uniform_int(rng, 1, 5)) * ctx->algebra().one();
        if (kind == 1 && t == 0) r = random_series(ctx, rng).terms().begin()->second;
        terms[g] = r;
    }
    if (kind == 3) {
        GroupElem g;
        do g = {uniform_int(rng, -4, 4), two ? uniform_int(rng, -4, 4) : 0};
        while (ctx->eps().in_kernel(g));
        terms[g] = ctx->algebra().one();
    }
    return TwistedSeries::from_trusted(ctx, std::move(terms));
}

Json run_context(const std::string& name, const MNContextPtr& ctx, const MnDemoOptions& opts, Rng& rng,
                 CheckReport& checks) {
    Tally additivity, associativity, distributivity, leading, center;
    for (long i = 0; i < opts.samples; ++i) {
        const TwistedSeries s1 = random_series(ctx, rng);
        const TwistedSeries s2 = random_series(ctx, rng);
        const TwistedSeries s3 = random_series(ctx, rng);
        const TwistedSeries p12 = mn_mul(s1, s2);
        const GroupElem v1 = *mn_valuation(s1), v2 = *mn_valuation(s2);
        additivity.record(mn_valuation(p12) == std::optional<GroupElem>(v1 + v2));
        leading.record(!p12.is_zero() && !mn_leading(p12).is_zero() && mn_leading(p12) == alpha(*ctx, s1, s2));
        associativity.record(mn_mul(p12, s3) == mn_mul(s1, mn_mul(s2, s3)));
        distributivity.record(mn_mul(s1, mn_add(s2, s3)) == mn_add(p12, mn_mul(s1, s3)) &&
                              mn_mul(mn_add(s1, s2), s3) == mn_add(mn_mul(s1, s3), mn_mul(s2, s3)));
        const TwistedSeries c = center_candidate(ctx, rng);
        center.record(is_central(c) == is_central_structural(c));
    }
    const DegreeIdentity d = degree_identity(*ctx);
    const auto count = [](const Tally& t) { return std::to_string(t.passed) + "/" + std::to_string(t.total); };
    checks.add(name + ": degree identity", d.equal,
               "[D : Z(D)] = (Gamma : ker eps)[C_A(K) : F] = " + std::to_string(d.deg_d) + ", [A : F] = " +
                   std::to_string(d.deg_a));
    checks.add(name + ": centralizer dimension", ctx->centralizer_dimension_identity(), "[C_A(K) : F][K : F] = [A : F]");
    checks.add(name + ": valuation additivity", additivity.passed == additivity.total,
               "v(s1 s2) = v(s1) + v(s2) on " + count(additivity));
    checks.add(name + ": leading coefficient", leading.passed == leading.total,
               "leading coefficient of s1 s2 equals u_gh^-1 u_g r u_h s and is nonzero on " + count(leading));
    checks.add(name + ": associativity", associativity.passed == associativity.total,
               "(s1 s2) s3 = s1 (s2 s3) on " + count(associativity));
    checks.add(name + ": distributivity", distributivity.passed == distributivity.total,
               "both distributive laws on " + count(distributivity));
    checks.add(name + ": center classification", center.passed == center.total,
               "commutation test agrees with supp in ker eps and coefficients in F on " + count(center));
    return Json{{"name", name},
                {"context", ctx->describe()},
                {"degree_identity", Json{{"deg_D", d.deg_d}, {"deg_A", d.deg_a}, {"equal", d.equal}}},
                {"samples",
                 Json{{"valuation_additivity", additivity.to_json()},
                      {"leading_coefficient", leading.to_json()},
                      {"associativity", associativity.to_json()},
                      {"distributivity", distributivity.to_json()},
                      {"center_classification", center.to_json()}}}};
}

}  // namespace

Json mn_demo_payload(const MnDemoOptions& opts) {
    Rng rng(opts.seed);
    CheckReport checks;
    Json contexts = Json::array();

    const MNContextPtr h = hamilton_context();
    contexts.push_back(run_context("hamilton", h, opts, rng, checks));
    const MNContextPtr bq = biquadratic_tensor_context();
    contexts.push_back(run_context("biquadratic tensor", bq, opts, rng, checks));

    const StructAlgebra& ha = h->algebra();
    const AlgElement one = ha.one(), i = ha.basis(1);
    const auto mono = [&](std::int64_t g, const AlgElement& r) { return TwistedSeries::monomial(h, {g, 0}, r); };
    Json spots = Json::array();
    const auto spot = [&](const TwistedSeries& s, bool expected) {
        const bool central = is_central(s);
        spots.push_back(Json{{"series", s.str()}, {"central", central}});
        checks.add("hamilton: " + s.str() + (expected ? " central" : " not central"), central == expected,
                   "center is F((ker eps)) with ker eps = 2Z");
    };
    spot(mono(2, one), true);
    spot(mono(1, one), false);
    spot(mono(2, i), false);

    const TwistedSeries lhs = mn_mul(mono(1, i), mono(1, one));
    checks.add("hamilton: a_1 i * a_1 = a_2 i", lhs == mono(2, i), "product is " + lhs.str());
    const TwistedSeries conj = mn_mul(mono(0, i), mono(1, one));
    checks.add("hamilton: i * a_1 = a_1 (-i)", conj == mono(1, -i), "product is " + conj.str());

    const MNContextPtr gp = generator_power_context();
    const auto a1 = TwistedSeries::monomial(gp, {1, 0}, gp->algebra().one());
    const auto a2 = TwistedSeries::monomial(gp, {2, 0}, gp->algebra().one());
    checks.add("generator powers: a_1 a_1 = a_2", mn_mul(a1, a1) == a2,
               "u_sigma = " + gp->algebra().format(gp->unit(1)) + " has u_sigma^2 = 1, so the cocycle is trivial");

    return Json{{"seed", opts.seed},
                {"samples", opts.samples},
                {"contexts", contexts},
                {"center_spot_checks", spots},
                {"generator_power_context", gp->describe()},
                {"checks", checks.to_json()}};
}

}  // namespace nw::cli
