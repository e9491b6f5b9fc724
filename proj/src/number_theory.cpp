#include "nw/number_theory.hpp"

#include <array>

#include "nw/error.hpp"
#include "nw/fp_poly.hpp"

namespace nw {

namespace {

// Jaeschke/Sorenson-Webster: the first 13 primes are a deterministic
// Miller-Rabin witness set below 3317044064679887385961981.
const Integer kMillerRabinBound("3317044064679887385961981");
constexpr std::array<unsigned long, 13> kBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

bool strong_probable_prime(const Integer& n, unsigned long base) {
    Integer d = n - 1;
    unsigned s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d /= 2;
        ++s;
    }
    Integer x = pow_mod(Integer(base), d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n - 1) return true;
    }
    return false;
}

}  // namespace

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    for (unsigned long b : kBases) {
        if (n == b) return true;
        if (n % b == 0) return false;
    }
    if (n < 41 * 41) return true;
    if (n >= kMillerRabinBound)
        throw PreconditionError("is_prime: " + n.get_str() + " is beyond the deterministic range");
    for (unsigned long b : kBases)
        if (!strong_probable_prime(n, b)) return false;
    return true;
}

std::vector<std::pair<Integer, unsigned>> factor_small(Integer n) {
    if (n < 1) throw PreconditionError("factor_small: n must be positive");
    std::vector<std::pair<Integer, unsigned>> out;
    for (Integer d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        unsigned e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e) out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

Integer euler_phi(const Integer& n) {
    Integer phi = n;
    for (const auto& [prime, e] : factor_small(n)) phi = phi / prime * (prime - 1);
    return phi;
}

Integer pow_mod(Integer base, Integer exp, const Integer& mod) {
    if (exp < 0) throw PreconditionError("pow_mod: negative exponent");
    Integer r;
    base = mod_floor(base, mod);
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    return r;
}

Integer mult_order(const Integer& a, const Integer& n) {
    if (n < 2) throw PreconditionError("mult_order: modulus must be at least 2");
    const Integer ar = mod_floor(a, n);
    if (gcd(ar, n) != 1)
        throw PreconditionError("mult_order: " + a.get_str() + " is not coprime to " + n.get_str());
    Integer order = euler_phi(n);
    for (const auto& [prime, e] : factor_small(order)) {
        for (unsigned i = 0; i < e; ++i) {
            if (pow_mod(ar, order / prime, n) != 1) break;
            order /= prime;
        }
    }
    return order;
}

Integer primitive_root(const Integer& q) {
    if (!is_prime(q)) throw PreconditionError("primitive_root: " + q.get_str() + " is not prime");
    if (q == 2) return 1;
    const auto factors = factor_small(q - 1);
    for (Integer m = 2; m < q; ++m) {
        bool generator = true;
        for (const auto& [ell, e] : factors) {
            if (pow_mod(m, (q - 1) / ell, q) == 1) {
                generator = false;
                break;
            }
        }
        if (generator) return m;
    }
    throw PreconditionError("primitive_root: no generator found");  // unreachable for prime q
}

Integer prime_in_ap_above(const Integer& a, const Integer& m, const Integer& lower,
                          const SearchBudget& budget) {
    if (m < 1) throw PreconditionError("prime_in_ap: modulus must be positive");
    const Integer residue = mod_floor(a, m);
    if (gcd(residue, m) != 1)
        throw PreconditionError("prime_in_ap: gcd(" + a.get_str() + ", " + m.get_str() +
                                ") != 1, the class holds no prime above the modulus");
    // First member of the class strictly above `lower`.
    Integer candidate = residue + m * (floor_div(lower - residue, m) + 1);
    while (candidate < 2) candidate += m;
    for (std::uint64_t tested = 0; tested < budget.max_candidates; ++tested, candidate += m) {
        if (is_prime(candidate)) return candidate;
    }
    throw SearchBudgetExceeded("search budget exceeded: no prime = " + residue.get_str() + " mod " +
                               m.get_str() + " among " + std::to_string(budget.max_candidates) +
                               " candidates above " + lower.get_str());
}

Integer prime_in_ap(const Integer& a, const Integer& m, const SearchBudget& budget) {
    return prime_in_ap_above(a, m, m, budget);
}

bool is_square_mod(const Integer& a, std::uint64_t p, unsigned d) {
    if (d == 0) throw PreconditionError("is_square_mod: degree must be positive");
    if (p == 2 || !is_prime(from_u64(p)))
        throw PreconditionError("is_square_mod: field characteristic must be an odd prime");
    const Integer ar = mod_floor(a, from_u64(p));
    if (ar == 0) throw PreconditionError("is_square_mod: zero is not a unit square class");
    if (d == 1) return pow_mod(ar, (from_u64(p) - 1) / 2, from_u64(p)) == 1;

    const FpPoly modulus = smallest_irreducible(p, d);
    const FpPoly elem = FpPoly::constant(p, to_u64(ar));
    Integer field_size;
    mpz_ui_pow_ui(field_size.get_mpz_t(), p, d);
    const FpPoly power = powmod(elem, (field_size - 1) / 2, modulus);
    return power == FpPoly::constant(p, 1);
}

}  // namespace nw
