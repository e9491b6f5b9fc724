#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nw/fp_poly.hpp"
#include "nw/places.hpp"

namespace nw {

/// Element of the residue field F_p[t]/(modulus) ~ F_{p^d}, d = deg(modulus).
/// The prime field itself uses modulus t.
struct ResidueFieldElem {
    FpPoly modulus;
    FpPoly value;  ///< reduced, degree < d

    static ResidueFieldElem prime_field(std::uint64_t p, std::uint64_t c);
    bool is_zero() const { return value.is_zero(); }
    std::string str() const { return value.str(); }
    friend bool operator==(const ResidueFieldElem&, const ResidueFieldElem&) = default;
};

/// Residue field F_{p^d} of a finite place of F_p(t); modulus t stands for F_p itself.
FpPoly residue_modulus(const Place& v);
Integer residue_field_size(const FpPoly& modulus);
/// Nonzero square test by exponentiation to (q-1)/2 in the residue field.
bool is_square(const ResidueFieldElem& x);

/// Diagonal form <d_1, ..., d_n> over F_p(t) with nonzero polynomial entries.
struct DiagForm {
    std::uint64_t p = 0;
    std::vector<FpPoly> entries;

    DiagForm() = default;
    DiagForm(std::uint64_t p, std::vector<FpPoly> entries);
    std::size_t dim() const { return entries.size(); }
    std::string str() const;
};

/// Diagonal form over a finite residue field; entries are nonzero reduced residues.
struct FiniteDiagForm {
    FpPoly modulus;
    std::vector<FpPoly> entries;

    FiniteDiagForm() = default;
    FiniteDiagForm(FpPoly modulus, std::vector<FpPoly> entries);
    std::size_t dim() const { return entries.size(); }
    std::string str() const;
};

/// Multiplicity of the place in f; -deg f at the infinite place. f != 0.
int place_valuation(const FpPoly& f, const Place& v);
/// Valuation of num/den.
int place_valuation(const FpPoly& num, const FpPoly& den, const Place& v);

/// f mod pi_v; requires place_valuation(f, v) = 0.
ResidueFieldElem residue_at(const FpPoly& f, const Place& v);

struct SpringerResidues {
    FiniteDiagForm first;   ///< residues of the unit entries
    FiniteDiagForm second;  ///< residues of the entries divided by pi_v
};

/// Splits q at v after removing even powers of pi_v from each entry.
SpringerResidues springer_split(const DiagForm& q, const Place& v);

struct IsotropyResult {
    bool isotropic = false;
    /// Nonzero zero vector, when one was found by the bounded search.
    std::optional<std::vector<FpPoly>> witness;
};

/// dim 1: anisotropic; dim 2: -d1 d2 square; dim >= 3: isotropic (Chevalley-Warning),
/// with a witness from the brute-force kernel when the field has at most 2^16 elements.
IsotropyResult is_isotropic_finite(const FiniteDiagForm& q);

/// Both Springer residue forms anisotropic over the residue field of v.
/// True implies q is anisotropic over F_p(t).
bool anisotropic_at(const DiagForm& q, const Place& v);

/// Nonzero x in F_p^n with sum d_i x_i^2 = 0 as a polynomial, if one exists.
std::optional<std::vector<std::uint64_t>> constant_zero(const DiagForm& q);

struct NonIsometryCertificate {
    int anisotropic_side = 0;  ///< 1 or 2: which argument is anisotropic at `place`
    Place place;
    SpringerResidues residues;
    std::vector<std::uint64_t> isotropy_vector;  ///< zero of the other form over F_p

    Json to_json() const;
};

/// Certificate that q1 and q2 are not isometric: one is anisotropic at a
/// completion while the other has a zero over F_p. nullopt means inconclusive.
std::optional<NonIsometryCertificate> not_isometric_certificate(const DiagForm& q1, const DiagForm& q2);

}  // namespace nw
