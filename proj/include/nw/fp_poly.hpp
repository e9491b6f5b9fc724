#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nw/rational.hpp"

namespace nw {

/// Polynomial over F_p in the variable t. Coefficients are stored in
/// ascending degree order, reduced into [0, p), without trailing zeros; the
/// zero polynomial has no coefficients.
class FpPoly {
public:
    using Coeff = std::uint64_t;

    FpPoly() = default;
    FpPoly(std::uint64_t p, std::vector<Coeff> ascending);

    static FpPoly zero(std::uint64_t p) { return FpPoly(p, {}); }
    static FpPoly constant(std::uint64_t p, Coeff c) { return FpPoly(p, {c}); }
    /// c * t^k
    static FpPoly monomial(std::uint64_t p, Coeff c, unsigned k);
    static FpPoly t(std::uint64_t p) { return monomial(p, 1, 1); }
    /// Parses strings like "t^2+2t+1", "2*t + 1", "t-1"; coefficients are reduced mod p.
    static FpPoly parse(std::uint64_t p, std::string_view text);

    std::uint64_t base_p() const { return p_; }
    const std::vector<Coeff>& coeffs() const { return c_; }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    Coeff leading() const { return c_.empty() ? 0 : c_.back(); }
    Coeff coeff(std::size_t k) const { return k < c_.size() ? c_[k] : 0; }
    Coeff eval(Coeff x) const;

    FpPoly monic() const;
    FpPoly derivative() const;
    FpPoly scaled(Coeff c) const;

    FpPoly& operator+=(const FpPoly& o);
    FpPoly& operator-=(const FpPoly& o);
    friend FpPoly operator+(FpPoly a, const FpPoly& b) { return a += b; }
    friend FpPoly operator-(FpPoly a, const FpPoly& b) { return a -= b; }
    FpPoly operator-() const;
    friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
    friend bool operator==(const FpPoly& a, const FpPoly& b) = default;

    /// Human-readable form, highest degree first: "t^2+2t+1", "0".
    std::string str() const;

private:
    void normalize();
    std::uint64_t p_ = 0;
    std::vector<Coeff> c_;
};

/// Orders by degree, then by coefficients from the top down.
bool poly_less(const FpPoly& a, const FpPoly& b);

/// Quotient and remainder; deg(remainder) < deg(divisor). Throws on a zero divisor.
std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b);
FpPoly operator%(const FpPoly& a, const FpPoly& b);
/// Monic gcd (zero when both inputs are zero).
FpPoly gcd(const FpPoly& a, const FpPoly& b);
FpPoly mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m);
FpPoly powmod(const FpPoly& base, const Integer& exp, const FpPoly& m);

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);
std::uint64_t pow_mod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t p);

/// Rabin's irreducibility test.
bool is_irreducible(const FpPoly& f);

/// Monic irreducible polynomials of exact degree d, in poly_less order.
std::vector<FpPoly> monic_irreducibles(std::uint64_t p, unsigned d);
/// First entry of monic_irreducibles(p, d), found without enumerating all of them.
FpPoly smallest_irreducible(std::uint64_t p, unsigned d);

struct Factor {
    FpPoly poly;  ///< monic irreducible
    unsigned multiplicity;
    friend bool operator==(const Factor&, const Factor&) = default;
};

/// Complete factorization f = leading(f) * prod poly^multiplicity, factors sorted by poly_less.
/// Square-free decomposition, distinct-degree splitting, then Cantor-Zassenhaus
/// equal-degree splitting driven by a fixed enumeration of trial polynomials.
std::vector<Factor> factorize(const FpPoly& f);

}  // namespace nw
