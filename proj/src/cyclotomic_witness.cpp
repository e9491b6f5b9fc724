#include "nw/cyclotomic_witness.hpp"

#include "nw/error.hpp"

namespace nw {

namespace {

void require_odd_prime(const Integer& p, const char* op) {
    if (p == 2 || !is_prime(p)) throw PreconditionError(std::string(op) + ": p = " + p.get_str() + " is not an odd prime");
}

InvariantProfile psq_profile(const Integer& p, const Integer& q, const Integer& r) {
    const Integer p2 = p * p;
    InvariantProfile profile;
    profile.set(Place::rational_prime(q), qz_make(Rational(p2 - 1, p2)));
    profile.set(Place::rational_prime(r), qz_make(Rational(Integer(1), p2)));
    return profile;
}

}  // namespace

Integer find_q(const Integer& p, const SearchBudget& budget) {
    require_odd_prime(p, "find_q");
    try {
        return prime_in_ap(1 + p, p * p, budget);
    } catch (const SearchBudgetExceeded& e) {
        throw SearchBudgetExceeded("find_q(p = " + p.get_str() + "): " + e.what());
    }
}

Integer find_r(const Integer& p, const Integer& q, const Integer& m, const SearchBudget& budget) {
    require_odd_prime(p, "find_r");
    if (!is_prime(q)) throw PreconditionError("find_r: q = " + q.get_str() + " is not prime");
    if (q == p) throw PreconditionError("find_r: q must differ from p");
    if (mult_order(m, q) != q - 1)
        throw PreconditionError("find_r: m = " + m.get_str() + " is not a primitive root mod " + q.get_str());
    const Integer modulus = p * q;
    const Integer residue = mod_floor(2 * q + m * (1 - q), modulus);
    Integer r;
    try {
        r = prime_in_ap_above(residue, modulus, q, budget);
    } catch (const SearchBudgetExceeded& e) {
        throw SearchBudgetExceeded("find_r(p = " + p.get_str() + ", q = " + q.get_str() + "): " + e.what());
    }
    if (mod_floor(r, p) != 2 || mod_floor(r, q) != mod_floor(m, q))
        throw PreconditionError("find_r: congruences r = 2 mod p, r = m mod q failed for r = " + r.get_str());
    return r;
}

SplittingData splitting_in_K(const Integer& ell, const Integer& p, const Integer& q) {
    if (!is_prime(ell)) throw PreconditionError("splitting_in_K: " + ell.get_str() + " is not prime");
    if (mod_floor(q - 1, p) != 0)
        throw PreconditionError("splitting_in_K: q = " + q.get_str() + " is not 1 mod p = " + p.get_str() +
                                ", so Q(zeta_q) has no degree-p subfield");
    const unsigned pu = static_cast<unsigned>(to_u64(p));
    if (ell == q) return {ell, pu, 1, 1};
    const Integer d = mult_order(ell, q);
    const Integer f = d / gcd(d, (q - 1) / p);
    const unsigned fu = static_cast<unsigned>(to_u64(f));
    return {ell, 1, fu, pu / fu};
}

LocalExtensionData psq_local_data(const Integer& p, const Integer& q, const Integer& r) {
    LocalExtensionData ext(static_cast<unsigned>(to_u64(p)));
    for (const auto& ell : {q, r}) {
        const SplittingData s = splitting_in_K(ell, p, q);
        ext.set_place(Place::rational_prime(ell), std::vector<LocalDegree>(s.g, LocalDegree{s.e, s.f}));
    }
    return ext;
}

CheckReport verify_theorem21(const PsqWitness& w) {
    CheckReport report;
    const Integer& p = w.p;
    const Integer p2 = p * p;
    const std::string tag = "q = " + w.q.get_str() + ", r = " + w.r.get_str();

    report.add("q = 1 + p mod p^2", mod_floor(w.q, p2) == mod_floor(1 + p, p2),
               "q mod p^2 = " + mod_floor(w.q, p2).get_str());
    const bool primitive = gcd(w.m, w.q) == 1 && mult_order(w.m, w.q) == w.q - 1;
    report.add("m generates (Z/qZ)^x", primitive, "m = " + w.m.get_str());
    const Integer pq = p * w.q;
    report.add("r = 2q + m(1-q) mod pq", mod_floor(w.r, pq) == mod_floor(2 * w.q + w.m * (1 - w.q), pq),
               "r mod pq = " + mod_floor(w.r, pq).get_str());
    report.add("r = 2 mod p and r = m mod q", mod_floor(w.r, p) == 2 && mod_floor(w.r - w.m, w.q) == 0,
               "r mod p = " + mod_floor(w.r, p).get_str() + ", r mod q = " + mod_floor(w.r, w.q).get_str());

    // Condition (2): K/F totally ramified at v_q, char != p, no primitive p^2-th roots of unity.
    bool ramified = false;
    std::string ram_detail;
    try {
        const auto s = splitting_in_K(w.q, p, w.q);
        ramified = Integer(s.e) == p && s.f == 1 && s.g == 1;
        ram_detail = "(e,f,g) = (" + std::to_string(s.e) + "," + std::to_string(s.f) + "," + std::to_string(s.g) + ")";
    } catch (const PreconditionError& e) {
        ram_detail = e.what();
    }
    report.add("(2) v_q totally ramified in K", ramified, ram_detail);
    report.add("(2) residue characteristic of v_q differs from p", w.q != p, tag);
    report.add("(2) no primitive p^2-th root of unity in F_q", mod_floor(w.q - 1, p2) != 0,
               "q - 1 = " + Integer(w.q - 1).get_str() + (mod_floor(w.q - 1, p2) != 0 ? " is not" : " is") +
                   " divisible by p^2");

    // Condition (3): K/F inertial at v_r, finite residue field, |F_r| not 0 or 1 mod p.
    bool inertial = false;
    std::string in_detail;
    try {
        const auto s = splitting_in_K(w.r, p, w.q);
        inertial = s.e == 1 && Integer(s.f) == p && s.g == 1;
        in_detail = "(e,f,g) = (" + std::to_string(s.e) + "," + std::to_string(s.f) + "," + std::to_string(s.g) + ")";
    } catch (const PreconditionError& e) {
        in_detail = e.what();
    }
    report.add("(3) v_r inertial in K", inertial, in_detail);
    report.add("(3) residue field of v_r is finite", true, "F_" + w.r.get_str());
    const Integer rmod = mod_floor(w.r, p);
    report.add("(3) |F_r| not 0 or 1 mod p", rmod != 0 && rmod != 1, "r mod p = " + rmod.get_str());
    return report;
}

Json PsqWitness::to_json() const {
    return Json{{"kind", "psq"},
                {"p", to_u64(p)},
                {"q", to_u64(q)},
                {"m", to_u64(m)},
                {"r", to_u64(r)},
                {"profile", profile.to_json()},
                {"checks", checks.to_json()},
                {"conclusion", "noncrossed product of degree p^2 over Q((x))"}};
}

PsqWitness build_psq_witness(const Integer& p, const SearchBudget& budget) {
    require_odd_prime(p, "build_psq_witness");
    PsqWitness w;
    w.p = p;
    w.q = find_q(p, budget);
    w.m = primitive_root(w.q);
    w.r = find_r(p, w.q, w.m, budget);
    w.profile = psq_profile(p, w.q, w.r);

    const Place vq = Place::rational_prime(w.q);
    const Place vr = Place::rational_prime(w.r);
    const LocalExtensionData ext = psq_local_data(p, w.q, w.r);
    w.checks.append(cor23_verify(w.profile, vq, vr, ext, p * p, p), "profile: ");
    w.checks.append(verify_theorem21(w), "ramification: ");
    return w;
}

}  // namespace nw
