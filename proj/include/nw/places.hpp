#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "nw/check_report.hpp"
#include "nw/fp_poly.hpp"
#include "nw/json.hpp"
#include "nw/qz.hpp"

namespace nw {

/// Q, or the rational function field F_p(t) for an odd prime p.
struct BaseField {
    enum class Kind { Rationals, FunctionField };
    Kind kind = Kind::Rationals;
    std::uint64_t p = 0;  ///< characteristic, FunctionField only

    static BaseField rationals() { return {}; }
    static BaseField function_field(std::uint64_t p);

    Json to_json() const;
    static BaseField from_json(const Json& j);
    std::string str() const;
    friend bool operator==(const BaseField&, const BaseField&) = default;
};

struct RationalPrime {
    Integer p;
};
struct RealInfinite {};
struct FunctionFieldFinite {
    FpPoly pi;  ///< monic irreducible over F_p
};
struct FunctionFieldInfinite {
    std::uint64_t base_p = 0;
};

/// A place of Q or of F_p(t). Factories verify primality / irreducibility.
class Place {
public:
    using Variant = std::variant<RationalPrime, RealInfinite, FunctionFieldFinite, FunctionFieldInfinite>;

    static Place rational_prime(const Integer& p);
    static Place real_infinite();
    static Place finite(const FpPoly& pi);
    static Place function_field_infinite(std::uint64_t p);
    /// Place string: decimal prime, "inf", polynomial in t, or "1/t".
    static Place parse(const BaseField& base, std::string_view text);

    const Variant& value() const { return v_; }
    bool is_real() const { return std::holds_alternative<RealInfinite>(v_); }
    bool is_function_field_finite() const { return std::holds_alternative<FunctionFieldFinite>(v_); }
    const FpPoly& pi() const;  ///< FunctionFieldFinite only
    bool belongs_to(const BaseField& base) const;
    /// Residue field size for finite places (p, or p^deg pi).
    Integer residue_field_size() const;

    std::string str() const;

    friend bool operator<(const Place& a, const Place& b);
    friend bool operator==(const Place& a, const Place& b);

private:
    explicit Place(Variant v) : v_(std::move(v)) {}
    Variant v_;
};

/// Finitely supported map place -> Q/Z over one base field; zero classes are never stored.
class InvariantProfile {
public:
    explicit InvariantProfile(BaseField base = BaseField::rationals()) : base_(base) {}

    const BaseField& base() const { return base_; }
    const std::map<Place, QZClass>& entries() const { return entries_; }
    /// Sets (or clears, when zero) the invariant at a place of the base field.
    void set(const Place& place, const QZClass& inv);
    QZClass at(const Place& place) const;
    bool empty() const { return entries_.empty(); }

    Json to_json() const;
    static InvariantProfile from_json(const Json& j);

private:
    BaseField base_;
    std::map<Place, QZClass> entries_;
};

struct LocalDegree {
    unsigned e = 1;  ///< ramification index
    unsigned f = 1;  ///< inertia degree
};

/// Local splitting data of a degree-k extension K/F at finitely many base places.
class LocalExtensionData {
public:
    explicit LocalExtensionData(unsigned base_degree);

    unsigned base_degree() const { return k_; }
    /// Records the places w above v; requires sum of e*f = k and e, f >= 1.
    void set_place(const Place& v, std::vector<LocalDegree> above);
    const std::map<Place, std::vector<LocalDegree>>& places() const { return above_; }
    const std::vector<LocalDegree>* above(const Place& v) const;

    Json to_json() const;
    static LocalExtensionData from_json(const BaseField& base, const Json& j);

private:
    unsigned k_;
    std::map<Place, std::vector<LocalDegree>> above_;
};

/// Invariant of A (x) K at the index-th place w above `below`.
struct ExtendedInvariant {
    Place below;
    std::size_t index = 0;
    LocalDegree degree;
    QZClass inv;
};

struct ContainmentVerdict {
    bool contained = false;
    Integer lcm_of_orders = 1;
    std::vector<ExtendedInvariant> extended;
};

/// Sum zero in Q/Z, real entries in {0, 1/2}, no real places over F_p(t).
bool profile_is_valid(const InvariantProfile& profile);

/// LCM of the orders of all invariants (1 for the empty profile). Rejects invalid profiles.
Integer profile_degree(const InvariantProfile& profile);

/// Base change: each w above v receives [K_w : F_v] * Inv_v, with [K_w : F_v] = e*f.
std::vector<ExtendedInvariant> extend_profile(const InvariantProfile& profile, const LocalExtensionData& ext);

/// Whether a degree-k extension with the given local data embeds in the division
/// algebra with this profile: the LCM of extended orders must equal n/k.
ContainmentVerdict contains_subfield(const InvariantProfile& profile, const LocalExtensionData& ext,
                                     unsigned k);

/// Checks the hypotheses of the invariant-profile existence criterion for a
/// degree-n algebra containing the degree-k extension, and the conclusions
/// that follow. Failures are report entries.
CheckReport cor23_verify(const InvariantProfile& profile, const Place& v1, const Place& v2,
                         const LocalExtensionData& ext, const Integer& n, const Integer& k);

}  // namespace nw
