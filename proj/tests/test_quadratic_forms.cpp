#include <doctest.h>

#include "nw/error.hpp"
#include "nw/quadratic_forms.hpp"
#include "nw/random.hpp"
#include "support/oracles.hpp"

using namespace nw;

namespace {

FpPoly P(std::uint64_t p, const char* s) { return FpPoly::parse(p, s); }
Place ff(std::uint64_t p, const char* s) { return Place::finite(P(p, s)); }

oracle::Poly as_oracle(const FpPoly& f) {
    oracle::Poly out;
    for (auto c : f.coeffs()) out.push_back(static_cast<std::int64_t>(c));
    return out;
}

DiagForm example_form(std::uint64_t p) {
    const FpPoly t = P(p, "t"), b = P(p, "t+1") * P(p, "t+2");
    return DiagForm(p, {t, b, t * b});
}

FiniteDiagForm prime_form(std::uint64_t p, std::vector<std::uint64_t> d) {
    std::vector<FpPoly> e;
    for (auto x : d) e.push_back(FpPoly::constant(p, x));
    return FiniteDiagForm(FpPoly::t(p), e);
}

/// Exhaustive isotropy over F_p[t]/(m) for small fields.
bool exhaustive_isotropic(const FiniteDiagForm& q) {
    const std::int64_t p = static_cast<std::int64_t>(q.modulus.base_p());
    oracle::Poly m = as_oracle(q.modulus);
    const std::size_t d = static_cast<std::size_t>(q.modulus.degree());
    const auto elems = oracle::all_polys(p, d);
    std::vector<std::size_t> idx(q.dim(), 0);
    for (;;) {
        std::size_t i = 0;
        while (i < idx.size() && ++idx[i] == elems.size()) idx[i++] = 0;
        if (i == idx.size()) return false;
        oracle::Poly sum;
        for (std::size_t k = 0; k < idx.size(); ++k)
            sum = oracle::add(sum, oracle::mul(as_oracle(q.entries[k]), oracle::mul(elems[idx[k]], elems[idx[k]], p), p), p);
        if (oracle::rem(sum, m, p).empty()) return true;
    }
}

bool witness_is_zero(const FiniteDiagForm& q, const std::vector<FpPoly>& w) {
    const std::int64_t p = static_cast<std::int64_t>(q.modulus.base_p());
    bool nonzero = false;
    oracle::Poly sum;
    for (std::size_t k = 0; k < q.dim(); ++k) {
        nonzero = nonzero || !w[k].is_zero();
        sum = oracle::add(sum, oracle::mul(as_oracle(q.entries[k]), oracle::mul(as_oracle(w[k]), as_oracle(w[k]), p), p), p);
    }
    return nonzero && oracle::rem(sum, as_oracle(q.modulus), p).empty();
}

FpPoly random_nonzero(Rng& rng, std::uint64_t p, int max_deg) {
    for (;;) {
        std::vector<FpPoly::Coeff> c(static_cast<std::size_t>(max_deg) + 1);
        for (auto& x : c) x = static_cast<FpPoly::Coeff>(uniform_int(rng, 0, static_cast<std::int64_t>(p) - 1));
        FpPoly f(p, c);
        if (!f.is_zero()) return f;
    }
}

}  // namespace

TEST_CASE("place_valuation") {
    CHECK(place_valuation(P(3, "t^2+t"), ff(3, "t")) == 1);
    CHECK(place_valuation(P(3, "t^2+2"), ff(3, "t")) == 0);
    CHECK(place_valuation(P(3, "t"), Place::function_field_infinite(3)) == -1);
    CHECK(place_valuation(P(3, "t^3"), P(3, "t+1") * P(3, "t"), ff(3, "t")) == 2);
    CHECK_THROWS_AS(place_valuation(FpPoly::zero(3), ff(3, "t")), PreconditionError);
}

TEST_CASE("residue_at") {
    CHECK(residue_at(P(3, "t+1") * P(3, "t+2"), ff(3, "t")).value == P(3, "2"));
    CHECK(residue_at(P(3, "t"), ff(3, "t+1")).value == P(3, "2"));
    CHECK(residue_at(P(3, "t"), ff(3, "t+2")).value == P(3, "1"));
    CHECK(residue_at(P(3, "t^3"), ff(3, "t^2+1")).value == P(3, "2t"));
    CHECK_THROWS_AS(residue_at(P(3, "t"), ff(3, "t")), PreconditionError);
}

TEST_CASE("springer_split") {
    const auto r = springer_split(example_form(3), ff(3, "t+2"));
    CHECK(r.first.entries == std::vector<FpPoly>{P(3, "1")});
    CHECK(r.second.entries == std::vector<FpPoly>{P(3, "2"), P(3, "2")});
    const DiagForm ones(3, {P(3, "1"), P(3, "1"), P(3, "1")});
    const auto r1 = springer_split(ones, ff(3, "t"));
    CHECK(r1.first.dim() == 3);
    CHECK(r1.second.dim() == 0);
    const auto r2 = springer_split(DiagForm(3, {P(3, "t")}), ff(3, "t"));
    CHECK(r2.first.dim() == 0);
    CHECK(r2.second.entries == std::vector<FpPoly>{P(3, "1")});
    // Even powers of the uniformizer are square factors.
    const auto r3 = springer_split(DiagForm(3, {P(3, "t^3"), P(3, "t^2+t^4")}), ff(3, "t"));
    CHECK(r3.first.entries == std::vector<FpPoly>{P(3, "1")});
    CHECK(r3.second.entries == std::vector<FpPoly>{P(3, "1")});
}

TEST_CASE("grouped residue decomposition gives the same verdict") {
    // <t> + (t+1)(t+2)<1, t>: the second residue form at v_{t+2} is (t+1)<1, t> reduced.
    const auto r = springer_split(example_form(3), ff(3, "t+2"));
    const FpPoly u = residue_at(P(3, "t+1"), ff(3, "t+2")).value;
    const FpPoly tbar = residue_at(P(3, "t"), ff(3, "t+2")).value;
    const FiniteDiagForm grouped(FpPoly::t(3), {u, (u * tbar) % FpPoly::t(3)});
    CHECK(is_isotropic_finite(grouped).isotropic == is_isotropic_finite(r.second).isotropic);
    CHECK_FALSE(is_isotropic_finite(grouped).isotropic);
}

TEST_CASE("is_isotropic_finite") {
    const auto ones = is_isotropic_finite(prime_form(3, {1, 1, 1}));
    CHECK(ones.isotropic);
    REQUIRE(ones.witness);
    CHECK(*ones.witness == std::vector<FpPoly>{P(3, "1"), P(3, "1"), P(3, "1")});
    CHECK_FALSE(is_isotropic_finite(prime_form(3, {2, 2})).isotropic);
    CHECK_FALSE(is_isotropic_finite(prime_form(5, {1})).isotropic);
    CHECK(is_isotropic_finite(prime_form(5, {1, 1})).isotropic);
}

TEST_CASE("anisotropic_at") {
    CHECK(anisotropic_at(example_form(3), ff(3, "t+2")));
    CHECK_FALSE(anisotropic_at(DiagForm(3, {P(3, "1"), P(3, "1"), P(3, "1")}), ff(3, "t")));
    CHECK_FALSE(anisotropic_at(DiagForm(5, {P(5, "1"), P(5, "-1")}), ff(5, "t^2+2")));
}

TEST_CASE("not_isometric_certificate") {
    const DiagForm q = example_form(3);
    const DiagForm ones(3, {P(3, "1"), P(3, "1"), P(3, "1")});
    const auto cert = not_isometric_certificate(q, ones);
    REQUIRE(cert);
    CHECK(cert->anisotropic_side == 1);
    CHECK(cert->place == ff(3, "t+2"));
    CHECK(cert->isotropy_vector == std::vector<std::uint64_t>{1, 1, 1});
    const auto rev = not_isometric_certificate(ones, q);
    REQUIRE(rev);
    CHECK(rev->anisotropic_side == 2);
    CHECK_FALSE(not_isometric_certificate(q, q));
    CHECK_FALSE(not_isometric_certificate(ones, ones));
    CHECK_THROWS_AS(not_isometric_certificate(q, DiagForm(3, {P(3, "1")})), PreconditionError);
}

TEST_CASE("isotropy over small finite fields agrees with exhaustive search") {
    Rng rng(51);
    struct Field {
        std::uint64_t p;
        unsigned d;
        std::size_t max_dim;
    };
    for (const Field f : {Field{3, 1, 4}, Field{5, 1, 4}, Field{7, 1, 4}, Field{3, 2, 4}, Field{5, 2, 3},
                          Field{3, 3, 3}, Field{5, 3, 2}}) {
        const FpPoly m = f.d == 1 ? FpPoly::t(f.p) : smallest_irreducible(f.p, f.d);
        for (std::size_t dim = 1; dim <= f.max_dim; ++dim) {
            for (int rep = 0; rep < 6; ++rep) {
                std::vector<FpPoly> e;
                for (std::size_t k = 0; k < dim; ++k) {
                    FpPoly x;
                    do x = random_nonzero(rng, f.p, static_cast<int>(f.d) - 1) % m;
                    while (x.is_zero());
                    e.push_back(x);
                }
                const FiniteDiagForm q(m, e);
                const auto r = is_isotropic_finite(q);
                CHECK(r.isotropic == exhaustive_isotropic(q));
                if (r.witness) CHECK(witness_is_zero(q, *r.witness));
                if (r.isotropic && dim >= 3) CHECK(r.witness.has_value());
            }
        }
    }
}

TEST_CASE("Springer anisotropy is sound against polynomial zero search") {
    Rng rng(52);
    const std::uint64_t p = 3;
    std::vector<Place> places;
    for (unsigned d = 1; d <= 2; ++d)
        for (const auto& pi : monic_irreducibles(p, d)) places.push_back(Place::finite(pi));
    int anisotropic = 0;
    for (int i = 0; i < 200; ++i) {
        std::vector<FpPoly> e;
        for (int k = 0; k < 3; ++k) e.push_back(random_nonzero(rng, p, 2));
        const DiagForm q(p, e);
        const Place& v = places[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(places.size()) - 1))];
        const auto split = springer_split(q, v);
        CHECK(split.first.dim() + split.second.dim() == 3);
        if (!anisotropic_at(q, v)) continue;
        ++anisotropic;
        std::vector<oracle::Poly> d;
        for (const auto& x : e) d.push_back(as_oracle(x));
        CHECK_FALSE(oracle::has_polynomial_zero(d, 3, 3));
    }
    CHECK(anisotropic > 0);
}
