#pragma once

#include <optional>
#include <string>

#include "nw/check_report.hpp"
#include "nw/quadratic_forms.hpp"

namespace nw {

/// Behaviour of a finite place in F_p(t)(sqrt d).
enum class QuadBehavior { Ramified, Inert, Split };
const char* to_string(QuadBehavior b);

/// Which quadratic subfield of F(sqrt a, sqrt b) is the inertia field of a place.
enum class InertiaField { SqrtA, SqrtB, SqrtAB, None, All };
const char* to_string(InertiaField f);

/// d is a square in F_p(t): square leading coefficient and even multiplicities.
bool is_square_in_function_field(const FpPoly& d);

/// Odd valuation: ramified; even valuation: inert or split by the residue square class.
QuadBehavior quad_behavior(const FpPoly& d, const Place& v);

InertiaField inertia_field(const FpPoly& a, const FpPoly& b, const Place& v);

struct BiquadraticSplitting {
    bool unique = false;  ///< exactly one place of K above v
    unsigned e = 1, f = 1, g = 1;
};

/// Decomposition of v in K = F(sqrt a, sqrt b); unique with (e, f) = (2, 2) iff one
/// quadratic subfield is inert and another ramified.
BiquadraticSplitting extends_uniquely_deg4(const FpPoly& a, const FpPoly& b, const Place& v);

/// Degree-8 construction over F_p(t) with K = F(sqrt a, sqrt b) and two places.
struct Deg8Witness {
    std::uint64_t p = 0;
    FpPoly a, b;
    Place v1 = Place::real_infinite();
    Place v2 = Place::real_infinite();
    InvariantProfile profile;
    CheckReport checks;

    /// a = t, b = (t+1)(t+2), v1 = v_t, v2 = v_{t+1}; profile and checks left empty.
    static Deg8Witness defaults(std::uint64_t p);
    Json to_json() const;
};

/// Hypotheses of the degree-8 noncrossed-product criterion for the witness.
CheckReport verify_theorem27(const Deg8Witness& w);

LocalExtensionData deg8_local_data(const Deg8Witness& w);

/// Default family for a prime p = 3 mod 8, with the profile {v1 -> 3/8, v2 -> 5/8}.
Deg8Witness build_deg8_witness(std::uint64_t p);

}  // namespace nw
