#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "nw/rational.hpp"

namespace nw {

/// Bound on a Dirichlet progression search, counted in candidates tested.
struct SearchBudget {
    static constexpr std::uint64_t kDefaultCandidates = 10'000'000;
    std::uint64_t max_candidates = kDefaultCandidates;
};

/// Deterministic primality. Exact below 3.3e24; larger inputs are rejected.
bool is_prime(const Integer& n);

/// Prime factorization by trial division, ascending primes with multiplicity.
std::vector<std::pair<Integer, unsigned>> factor_small(Integer n);

Integer euler_phi(const Integer& n);

Integer pow_mod(Integer base, Integer exp, const Integer& mod);

/// Smallest k >= 1 with a^k = 1 mod n. Requires n >= 2 and gcd(a, n) = 1.
Integer mult_order(const Integer& a, const Integer& n);

/// Smallest m >= 2 generating (Z/qZ)^x; 1 for q = 2.
Integer primitive_root(const Integer& q);

/// Smallest prime p = a mod m with p > m, testing at most budget.max_candidates
/// members of the class. Throws SearchBudgetExceeded when the budget runs out.
Integer prime_in_ap(const Integer& a, const Integer& m, const SearchBudget& budget = {});

/// Same search with an explicit exclusive lower bound instead of m.
Integer prime_in_ap_above(const Integer& a, const Integer& m, const Integer& lower,
                          const SearchBudget& budget = {});

/// Whether a is a nonzero square in F_{p^d}. Euler's criterion for d = 1,
/// exponentiation in F_p[t]/(pi) for a degree-d irreducible pi otherwise.
bool is_square_mod(const Integer& a, std::uint64_t p, unsigned d = 1);

}  // namespace nw
