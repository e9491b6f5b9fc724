#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nw/json.hpp"
#include "nw/random.hpp"
#include "nw/struct_algebra.hpp"

namespace nw {

/// Element of Z (b unused, always 0) or of Z x Z; compared lexicographically.
struct GroupElem {
    std::int64_t a = 0;
    std::int64_t b = 0;

    friend auto operator<=>(const GroupElem&, const GroupElem&) = default;
    friend GroupElem operator+(GroupElem x, GroupElem y) { return {x.a + y.a, x.b + y.b}; }
    friend GroupElem operator-(GroupElem x) { return {-x.a, -x.b}; }
};

class OrderedGroup {
public:
    enum class Kind { Z, ZxZ };

    static OrderedGroup z() { return OrderedGroup(Kind::Z); }
    static OrderedGroup zxz() { return OrderedGroup(Kind::ZxZ); }

    Kind kind() const { return kind_; }
    std::size_t rank() const { return kind_ == Kind::Z ? 1 : 2; }
    /// Standard generators: 1, or (1,0) and (0,1).
    std::vector<GroupElem> generators() const;
    bool contains(GroupElem g) const { return kind_ == Kind::ZxZ || g.b == 0; }
    std::string str(GroupElem g) const;
    std::string name() const { return kind_ == Kind::Z ? "Z" : "Z x Z (lex)"; }

private:
    explicit OrderedGroup(Kind k) : kind_(k) {}
    Kind kind_;
};

/// Exponent vector of an element of G = Z/n_1 x ... x Z/n_k.
using GExp = std::vector<unsigned>;

/// epsilon: Gamma -> G, given by the images of the standard generators of Gamma.
class EpsilonMap {
public:
    /// `orders` are the n_i; `images[j]` is the exponent vector of the j-th generator.
    /// Throws PreconditionError on shape mismatch or when the map is not surjective.
    EpsilonMap(OrderedGroup group, std::vector<unsigned> orders, std::vector<GExp> images);

    const OrderedGroup& group() const { return group_; }
    const std::vector<unsigned>& orders() const { return orders_; }
    const std::vector<GExp>& images() const { return images_; }
    std::size_t target_size() const;  ///< |G|

    GExp apply(GroupElem g) const;
    bool in_kernel(GroupElem g) const;
    /// Mixed-radix index of an element of G (first component least significant).
    std::size_t index(const GExp& e) const;
    GExp element(std::size_t index) const;

private:
    OrderedGroup group_;
    std::vector<unsigned> orders_;
    std::vector<GExp> images_;
};

enum class UnitMode {
    PerG,           ///< u_g from Skolem-Noether for every g, u_Id = 1
    GeneratorPowers ///< u_g = prod u_{sigma_i}^{e_i}; requires u_{sigma_i}^{n_i} = 1
};

/// Coefficient algebra A with subfield K, conjugating units u_g, C_A(K) and epsilon.
class MNContext {
public:
    /// Throws PreconditionError when the subfield spec is invalid, when the number of
    /// subfield generators differs from the number of factors of G, or (GeneratorPowers)
    /// when some u_{sigma_i}^{n_i} != 1.
    static std::shared_ptr<const MNContext> make(AlgebraWithSubfield a, EpsilonMap eps,
                                                 UnitMode mode = UnitMode::PerG);

    const StructAlgebra& algebra() const { return *alg_.algebra; }
    const SubfieldSpec& subfield() const { return alg_.subfield; }
    const EpsilonMap& eps() const { return eps_; }
    UnitMode mode() const { return mode_; }
    const std::vector<AlgElement>& centralizer_basis() const { return centralizer_.basis; }
    bool centralizer_dimension_identity() const { return centralizer_.dimension_identity; }
    const AlgElement& unit(std::size_t g) const { return units_[g]; }
    /// u_{gh}^{-1} u_g, the left factor of the product coefficient.
    const AlgElement& cocycle_left(std::size_t g, std::size_t h) const { return left_[g * units_.size() + h]; }
    /// Index of g + h in G.
    std::size_t g_add(std::size_t g, std::size_t h) const { return sum_[g * units_.size() + h]; }

    /// Coordinates of x in the centralizer basis, nullopt if x is not in C_A(K).
    std::optional<RatVector> centralizer_coordinates(const AlgElement& x) const;
    bool in_centralizer(const AlgElement& x) const { return centralizer_coordinates(x).has_value(); }

    Json describe() const;

private:
    MNContext() = default;

    AlgebraWithSubfield alg_;
    EpsilonMap eps_{OrderedGroup::z(), {}, {{}}};
    UnitMode mode_ = UnitMode::PerG;
    CentralizerResult centralizer_;
    std::vector<AlgElement> units_;
    std::vector<AlgElement> left_;
    std::vector<std::size_t> sum_;
};

using MNContextPtr = std::shared_ptr<const MNContext>;

/// Finitely supported sum a_gamma r_gamma with r_gamma in C_A(K), no zero coefficients.
class TwistedSeries {
public:
    using Terms = std::map<GroupElem, AlgElement>;

    static TwistedSeries zero(MNContextPtr ctx);
    /// Throws PreconditionError naming the term when a coefficient is outside C_A(K)
    /// or an index is outside Gamma. Repeated indices are summed.
    static TwistedSeries from_terms(MNContextPtr ctx, const std::vector<std::pair<GroupElem, AlgElement>>& terms);
    static TwistedSeries monomial(MNContextPtr ctx, GroupElem g, const AlgElement& r);

    const MNContextPtr& context() const { return ctx_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// "a_(2)·[i] + a_(5)·[1 + i]" in increasing support order; "0" for the zero series.
    std::string str() const;

    friend bool operator==(const TwistedSeries& x, const TwistedSeries& y) { return x.terms_ == y.terms_; }

    /// Unchecked construction for results of ring operations.
    static TwistedSeries from_trusted(MNContextPtr ctx, Terms terms);

private:
    MNContextPtr ctx_;
    Terms terms_;
};

TwistedSeries mn_add(const TwistedSeries& x, const TwistedSeries& y);
TwistedSeries mn_sub(const TwistedSeries& x, const TwistedSeries& y);
/// Term (gamma, r) times (delta, s) contributes u_{gh}^{-1} u_g r u_h s at gamma + delta,
/// where g = eps(gamma), h = eps(delta).
TwistedSeries mn_mul(const TwistedSeries& x, const TwistedSeries& y);
/// Terms with index > cutoff dropped.
TwistedSeries mn_truncate(const TwistedSeries& x, GroupElem cutoff);
/// Minimum of the support; nullopt stands for infinity (zero series).
std::optional<GroupElem> mn_valuation(const TwistedSeries& x);
/// Coefficient at the valuation. Throws PreconditionError on the zero series.
const AlgElement& mn_leading(const TwistedSeries& x);
/// t with every index of s*t - 1 greater than `cutoff`. Throws PreconditionError when
/// the leading coefficient is not invertible or when no finite iteration reaches the
/// cutoff (Z x Z with a tail term of first coordinate 0 and cutoff.a > 0).
TwistedSeries mn_invert_up_to(const TwistedSeries& s, GroupElem cutoff);

/// s commutes with a_0 c for each centralizer basis element c, with a_gamma for the
/// generators of Gamma, and with each subfield basis element.
bool is_central(const TwistedSeries& s);
/// supp(s) in ker eps and every coefficient in Q·1.
bool is_central_structural(const TwistedSeries& s);

struct DegreeIdentity {
    long deg_d = 0;  ///< (Gamma : ker eps) * [C_A(K) : F]
    long deg_a = 0;  ///< [A : F]
    bool equal = false;
};
DegreeIdentity degree_identity(const MNContext& ctx);

/// Hamilton quaternions, K = Q(i), Gamma = Z, eps(1) = sigma.
MNContextPtr hamilton_context();
/// (-1,-1) (x) (-3,-1), K = Q(i, i'), Gamma = Z x Z, eps(r,s) = sigma^r tau^s.
MNContextPtr biquadratic_tensor_context();
/// (-1, 1) with u_{sigma^z} = u_sigma^z (u_sigma = j, j^2 = 1), Gamma = Z.
MNContextPtr generator_power_context();

struct RandomSeriesShape {
    int max_terms = 3;
    std::int64_t index_range = 3;  ///< indices drawn from [-range, range] per coordinate
    std::int64_t coeff_range = 3;  ///< centralizer coordinates drawn from [-range, range]
};
/// Nonzero random series with coefficients in C_A(K).
TwistedSeries random_series(const MNContextPtr& ctx, Rng& rng, const RandomSeriesShape& shape = {});

}  // namespace nw
