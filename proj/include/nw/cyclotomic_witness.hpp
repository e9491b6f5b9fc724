#pragma once

#include <string>

#include "nw/check_report.hpp"
#include "nw/number_theory.hpp"
#include "nw/places.hpp"

namespace nw {

/// Decomposition of a rational prime ell in the degree-p subfield K of Q(zeta_q).
struct SplittingData {
    Integer ell;
    unsigned e = 1, f = 1, g = 1;  ///< e*f*g = p
};

/// Witness for the degree-p^2 construction over Q: primes q, r, primitive root m,
/// the invariant profile {v_q -> (p^2-1)/p^2, v_r -> 1/p^2}, and check results.
struct PsqWitness {
    Integer p, q, m, r;
    InvariantProfile profile;
    CheckReport checks;

    Json to_json() const;
};

/// Smallest prime q = 1 + p mod p^2 (with q > p^2).
Integer find_q(const Integer& p, const SearchBudget& budget = {});

/// Smallest prime r = 2q + m(1 - q) mod pq with r > q. Also asserts the
/// derived congruences r = 2 mod p and r = m mod q.
Integer find_r(const Integer& p, const Integer& q, const Integer& m, const SearchBudget& budget = {});

/// Splitting of ell in K: q is totally ramified; any other ell is unramified with
/// inertia degree equal to the order of ell in the order-p quotient of (Z/qZ)^x.
SplittingData splitting_in_K(const Integer& ell, const Integer& p, const Integer& q);

/// Ramification/inertia and residue-field hypotheses for the degree-p^2
/// noncrossed-product criterion, checked on the witness's q and r.
CheckReport verify_theorem21(const PsqWitness& w);

/// Local data of K at v_q and v_r, from splitting_in_K.
LocalExtensionData psq_local_data(const Integer& p, const Integer& q, const Integer& r);

/// Full pipeline for an odd prime p. Search failures propagate as SearchBudgetExceeded.
PsqWitness build_psq_witness(const Integer& p, const SearchBudget& budget = {});

}  // namespace nw
