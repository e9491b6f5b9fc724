#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nw/linear_solve.hpp"

namespace nw {

/// Coefficient vector of an element of a structure-constant algebra.
struct AlgElement {
    RatVector c;

    AlgElement() = default;
    explicit AlgElement(RatVector coeffs) : c(std::move(coeffs)) {}
    static AlgElement zero(std::size_t dim) { return AlgElement(RatVector(dim, Rational(0))); }
    static AlgElement basis(std::size_t dim, std::size_t i);

    std::size_t dim() const { return c.size(); }
    bool is_zero() const;

    AlgElement& operator+=(const AlgElement& o);
    AlgElement& operator-=(const AlgElement& o);
    friend AlgElement operator+(AlgElement a, const AlgElement& b) { return a += b; }
    friend AlgElement operator-(AlgElement a, const AlgElement& b) { return a -= b; }
    AlgElement operator-() const;
    friend AlgElement operator*(const Rational& s, AlgElement x);
    friend bool operator==(const AlgElement&, const AlgElement&) = default;
};

/// Finite-dimensional associative unital algebra over Q: e_i e_j = sum_k c[i][j][k] e_k.
/// Structure constants are stored sparsely; associativity and the unit are
/// verified at construction.
class StructAlgebra {
public:
    using Dense = std::vector<std::vector<RatVector>>;  ///< c[i][j] is the coefficient vector of e_i e_j

    /// Throws PreconditionError when the constants are not associative or have no two-sided unit.
    StructAlgebra(const Dense& c, std::vector<std::string> labels);

    std::size_t dim() const { return dim_; }
    const AlgElement& one() const { return one_; }
    AlgElement zero() const { return AlgElement::zero(dim_); }
    AlgElement basis(std::size_t i) const { return AlgElement::basis(dim_, i); }
    const std::vector<std::string>& labels() const { return labels_; }
    /// Coefficient vector of e_i e_j.
    AlgElement basis_product(std::size_t i, std::size_t j) const;

    AlgElement mul(const AlgElement& x, const AlgElement& y) const;
    /// Two-sided inverse, or nullopt when x is not invertible.
    std::optional<AlgElement> inverse(const AlgElement& x) const;
    AlgElement pow(const AlgElement& x, long e) const;
    bool commute(const AlgElement& x, const AlgElement& y) const;

    /// "1 + 2i - 1/2k" using the basis labels.
    std::string format(const AlgElement& x) const;

private:
    struct Term {
        std::size_t k;
        Rational c;
    };
    const std::vector<Term>& table(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
    void check_associative() const;

    std::size_t dim_;
    std::vector<std::vector<Term>> table_;
    std::vector<std::string> labels_;
    AlgElement one_;
};

/// Field automorphism of a commutative subalgebra, given by the images of its basis.
struct SubfieldMap {
    std::vector<AlgElement> images;
};

/// Commutative subfield K of A (by a spanning basis) with generators of an abelian Gal(K/F).
struct SubfieldSpec {
    std::vector<AlgElement> basis;
    std::vector<SubfieldMap> generators;
    std::vector<unsigned> generator_orders;  ///< order of each generator

    /// Coordinates of x in `basis`, nullopt if x is outside the span.
    std::optional<RatVector> coordinates(const AlgElement& x) const;
    /// Image of an arbitrary element of the span.
    AlgElement apply(const SubfieldMap& g, const AlgElement& x) const;
    SubfieldMap compose(const SubfieldMap& g, const SubfieldMap& h) const;  ///< x -> g(h(x))
    SubfieldMap identity() const;
    /// Commuting basis, closed under products, generators are unital ring automorphisms of
    /// the stated orders. Returns an empty string when valid, otherwise the first problem.
    std::string validate(const StructAlgebra& a) const;
};

struct AlgebraWithSubfield {
    std::shared_ptr<const StructAlgebra> algebra;
    SubfieldSpec subfield;
};

/// (a, b)_Q with basis 1, i, j, k: i^2 = a, j^2 = b, ij = -ji = k; subfield Q(i), sigma(i) = -i.
AlgebraWithSubfield quaternion(const Rational& a, const Rational& b);

/// A1 (x) A2 with Kronecker structure constants; subfields and generators combine
/// componentwise (generators of A1 act as g (x) id, then those of A2 as id (x) h).
AlgebraWithSubfield tensor(const AlgebraWithSubfield& a1, const AlgebraWithSubfield& a2);

struct CentralizerResult {
    std::vector<AlgElement> basis;
    bool dimension_identity = false;  ///< dim C * dim K == dim A
};

/// Basis of C_A(K), the elements commuting with every basis element of K.
CentralizerResult centralizer(const StructAlgebra& a, const SubfieldSpec& s);

/// Canonical invertible u with u^{-1} k u = g(k) for all k in K: the first
/// invertible vector of the normalized nullspace basis, then small combinations.
AlgElement skolem_noether_unit(const StructAlgebra& a, const SubfieldSpec& s, const SubfieldMap& g);

}  // namespace nw
