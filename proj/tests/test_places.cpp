#include <doctest.h>

#include "nw/error.hpp"
#include "nw/places.hpp"
#include "nw/random.hpp"

using namespace nw;

namespace {

QZClass qz(long n, long d) { return qz_make(Rational(Integer(n), Integer(d))); }
Place rp(long p) { return Place::rational_prime(p); }
Place ff(std::uint64_t p, const char* s) { return Place::finite(FpPoly::parse(p, s)); }

InvariantProfile psq3() {
    InvariantProfile P;
    P.set(rp(13), qz(8, 9));
    P.set(rp(41), qz(1, 9));
    return P;
}

InvariantProfile deg8_profile() {
    InvariantProfile P(BaseField::function_field(3));
    P.set(ff(3, "t"), qz(3, 8));
    P.set(ff(3, "t+1"), qz(5, 8));
    return P;
}

LocalExtensionData psq3_ext() {
    LocalExtensionData E(3);
    E.set_place(rp(13), {{3, 1}});
    E.set_place(rp(41), {{1, 3}});
    return E;
}

LocalExtensionData deg8_ext() {
    LocalExtensionData E(4);
    E.set_place(ff(3, "t"), {{2, 2}});
    E.set_place(ff(3, "t+1"), {{2, 2}});
    return E;
}

}  // namespace

TEST_CASE("place construction and parsing") {
    CHECK_THROWS_AS(Place::rational_prime(15), PreconditionError);
    CHECK_THROWS_AS(ff(3, "t^2+2"), PreconditionError);  // (t+1)(t+2)
    CHECK_THROWS_AS(Place::finite(FpPoly::parse(2, "t")), PreconditionError);
    CHECK(Place::parse(BaseField::rationals(), "13") == rp(13));
    CHECK(Place::parse(BaseField::rationals(), "inf").is_real());
    CHECK(Place::parse(BaseField::function_field(3), "t^2+1") == ff(3, "t^2+1"));
    CHECK(Place::parse(BaseField::function_field(3), "1/t") == Place::function_field_infinite(3));
    CHECK_THROWS_AS(Place::parse(BaseField::rationals(), "12"), DataError);
    CHECK(ff(3, "t^2+1").residue_field_size() == 9);
    CHECK(rp(41).residue_field_size() == 41);
}

TEST_CASE("profile_is_valid") {
    CHECK(profile_is_valid(psq3()));
    CHECK(profile_is_valid(deg8_profile()));
    InvariantProfile bad;
    bad.set(rp(13), qz(1, 9));
    CHECK_FALSE(profile_is_valid(bad));
    InvariantProfile real;
    real.set(Place::real_infinite(), qz(1, 2));
    real.set(rp(2), qz(1, 2));
    CHECK(profile_is_valid(real));
    InvariantProfile real_bad;
    real_bad.set(Place::real_infinite(), qz(1, 4));
    real_bad.set(rp(2), qz(3, 4));
    CHECK_FALSE(profile_is_valid(real_bad));
    InvariantProfile wrong_field(BaseField::function_field(3));
    CHECK_THROWS_AS(wrong_field.set(rp(13), qz(1, 2)), PreconditionError);
}

TEST_CASE("profile_degree") {
    CHECK(profile_degree(psq3()) == 9);
    CHECK(profile_degree(deg8_profile()) == 8);
    CHECK(profile_degree(InvariantProfile()) == 1);
    InvariantProfile bad;
    bad.set(rp(13), qz(1, 9));
    CHECK_THROWS_AS(profile_degree(bad), PreconditionError);
}

TEST_CASE("extend_profile") {
    InvariantProfile P;
    P.set(rp(13), qz(8, 9));
    LocalExtensionData E(3);
    E.set_place(rp(13), {{3, 1}});
    const auto ext = extend_profile(P, E);
    REQUIRE(ext.size() == 1);
    CHECK(ext[0].inv == qz(2, 3));

    InvariantProfile Q(BaseField::function_field(3));
    Q.set(ff(3, "t"), qz(3, 8));
    LocalExtensionData F(4);
    F.set_place(ff(3, "t"), {{2, 2}});
    CHECK(extend_profile(Q, F)[0].inv == qz(1, 2));

    CHECK(extend_profile(InvariantProfile(), E).empty());
    InvariantProfile uncovered;
    uncovered.set(rp(7), qz(1, 3));
    CHECK_THROWS_AS(extend_profile(uncovered, E), PreconditionError);
    CHECK_THROWS_AS(E.set_place(rp(41), {{1, 2}}), PreconditionError);
}

TEST_CASE("contains_subfield") {
    const auto v1 = contains_subfield(psq3(), psq3_ext(), 3);
    CHECK(v1.contained);
    CHECK(v1.lcm_of_orders == 3);
    const auto v2 = contains_subfield(deg8_profile(), deg8_ext(), 4);
    CHECK(v2.contained);
    CHECK(v2.lcm_of_orders == 2);
    InvariantProfile half;
    half.set(rp(13), qz(1, 2));
    half.set(rp(41), qz(1, 2));
    LocalExtensionData trivial(1);
    trivial.set_place(rp(13), {{1, 1}});
    trivial.set_place(rp(41), {{1, 1}});
    const auto v3 = contains_subfield(half, trivial, 1);
    CHECK(v3.contained);
    CHECK(v3.lcm_of_orders == 2);
    CHECK_THROWS_AS(contains_subfield(half, psq3_ext(), 3), PreconditionError);
}

TEST_CASE("cor23_verify") {
    const CheckReport r1 = cor23_verify(psq3(), rp(13), rp(41), psq3_ext(), 9, 3);
    CHECK(r1.all_pass());
    const CheckReport r2 = cor23_verify(deg8_profile(), ff(3, "t"), ff(3, "t+1"), deg8_ext(), 8, 4);
    CHECK(r2.all_pass());

    InvariantProfile low;
    low.set(rp(13), qz(1, 3));
    low.set(rp(41), qz(2, 3));
    const CheckReport r3 = cor23_verify(low, rp(13), rp(41), psq3_ext(), 9, 3);
    CHECK_FALSE(r3.all_pass());
    REQUIRE(r3.find("(b) order n at v1") != nullptr);
    CHECK_FALSE(r3.find("(b) order n at v1")->pass);
    CHECK(r3.find("(a) invariants sum to zero")->pass);
}

TEST_CASE("profile JSON round trip and errors") {
    const Json j = deg8_profile().to_json();
    CHECK(j.dump() == R"({"base":{"Fp_t":3},"entries":[{"place":"t","inv":"3/8"},{"place":"t+1","inv":"5/8"}]})");
    const InvariantProfile back = InvariantProfile::from_json(j);
    CHECK(back.entries() == deg8_profile().entries());
    CHECK(InvariantProfile::from_json(psq3().to_json()).entries() == psq3().entries());
    Json dup = Json::parse(R"({"base":"Q","entries":[{"place":"13","inv":"1/2"},{"place":"13","inv":"1/2"}]})");
    CHECK_THROWS_AS(InvariantProfile::from_json(dup), DataError);
    Json bad_inv = Json::parse(R"({"base":"Q","entries":[{"place":"13","inv":"x"}]})");
    CHECK_THROWS_WITH_AS(InvariantProfile::from_json(bad_inv), doctest::Contains("/entries/0/inv"), DataError);
}

TEST_CASE("random profiles: validity, degree and trivial containment") {
    Rng rng(41);
    const std::vector<long> primes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29};
    for (int i = 0; i < 500; ++i) {
        InvariantProfile P;
        QZClass sum;
        const int n = static_cast<int>(uniform_int(rng, 1, 5));
        for (int k = 0; k < n; ++k) {
            const QZClass x = qz(uniform_int(rng, 0, 30), uniform_int(rng, 1, 12));
            P.set(rp(primes[k]), x);
            sum = qz_add(sum, x);
        }
        const bool balance = uniform_int(rng, 0, 1) == 1;
        if (balance) P.set(rp(primes[n]), qz_neg(sum));
        const bool zero_sum = balance || sum.is_zero();
        CHECK(profile_is_valid(P) == zero_sum);
        if (!zero_sum) {
            CHECK_THROWS_AS(profile_degree(P), PreconditionError);
            continue;
        }
        const Integer deg = profile_degree(P);
        CHECK((deg == 1) == P.empty());
        LocalExtensionData trivial(1);
        for (const auto& [place, inv] : P.entries()) trivial.set_place(place, {{1, 1}});
        const auto v = contains_subfield(P, trivial, 1);
        CHECK(v.contained);
        CHECK(v.lcm_of_orders == deg);
        // Base change by random local degrees unfolds to qz_scale entrywise.
        LocalExtensionData E(6);
        for (const auto& [place, inv] : P.entries()) E.set_place(place, {{2, 1}, {1, 1}, {3, 1}});
        for (const auto& w : extend_profile(P, E)) {
            const Integer ef = w.degree.e * w.degree.f;
            CHECK(w.inv == qz_scale(ef, P.at(w.below)));
            CHECK(qz_order(w.inv) == qz_order(P.at(w.below)) / gcd(ef, qz_order(P.at(w.below))));
        }
    }
}
