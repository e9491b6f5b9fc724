#include "nw/biquadratic_witness.hpp"

#include <array>

#include "nw/error.hpp"
#include "nw/number_theory.hpp"

namespace nw {

namespace {

void require_biquadratic(const FpPoly& a, const FpPoly& b) {
    if (a.is_zero() || b.is_zero()) throw PreconditionError("biquadratic: zero generator");
    if (is_square_in_function_field(a) || is_square_in_function_field(b) || is_square_in_function_field(a * b))
        throw PreconditionError("biquadratic: a = " + a.str() + ", b = " + b.str() +
                                " are not independent modulo squares");
}

std::array<QuadBehavior, 3> behaviors(const FpPoly& a, const FpPoly& b, const Place& v) {
    return {quad_behavior(a, v), quad_behavior(b, v), quad_behavior(a * b, v)};
}

}  // namespace

const char* to_string(QuadBehavior b) {
    switch (b) {
        case QuadBehavior::Ramified: return "ramified";
        case QuadBehavior::Inert: return "inert";
        case QuadBehavior::Split: return "split";
    }
    return "?";
}

const char* to_string(InertiaField f) {
    switch (f) {
        case InertiaField::SqrtA: return "sqrt(a)";
        case InertiaField::SqrtB: return "sqrt(b)";
        case InertiaField::SqrtAB: return "sqrt(ab)";
        case InertiaField::None: return "none";
        case InertiaField::All: return "all";
    }
    return "?";
}

bool is_square_in_function_field(const FpPoly& d) {
    if (d.is_zero()) return true;
    if (!is_square_mod(Integer(static_cast<unsigned long>(d.leading())), d.base_p())) return false;
    for (const auto& f : factorize(d))
        if (f.multiplicity % 2) return false;
    return true;
}

QuadBehavior quad_behavior(const FpPoly& d, const Place& v) {
    if (is_square_in_function_field(d))
        throw PreconditionError("quad_behavior: " + d.str() + " is a square in F_p(t)");
    const int val = place_valuation(d, v);
    if (val % 2) return QuadBehavior::Ramified;
    FpPoly unit = d;
    for (int i = 0; i < val; ++i) unit = divmod(unit, v.pi()).first;
    return is_square(residue_at(unit, v)) ? QuadBehavior::Split : QuadBehavior::Inert;
}

InertiaField inertia_field(const FpPoly& a, const FpPoly& b, const Place& v) {
    require_biquadratic(a, b);
    const auto beh = behaviors(a, b, v);
    int ramified = 0, inert = 0, inert_at = -1;
    for (int i = 0; i < 3; ++i) {
        if (beh[i] == QuadBehavior::Ramified) ++ramified;
        if (beh[i] == QuadBehavior::Inert) {
            ++inert;
            inert_at = i;
        }
    }
    if (ramified == 0) return InertiaField::All;
    if (inert != 1) return InertiaField::None;
    return std::array{InertiaField::SqrtA, InertiaField::SqrtB, InertiaField::SqrtAB}[inert_at];
}

BiquadraticSplitting extends_uniquely_deg4(const FpPoly& a, const FpPoly& b, const Place& v) {
    require_biquadratic(a, b);
    const auto beh = behaviors(a, b, v);
    BiquadraticSplitting s;
    for (auto x : beh) {
        if (x == QuadBehavior::Ramified) s.e = 2;
        if (x == QuadBehavior::Inert) s.f = 2;
    }
    s.g = 4 / (s.e * s.f);
    s.unique = s.g == 1;
    return s;
}

Deg8Witness Deg8Witness::defaults(std::uint64_t p) {
    Deg8Witness w;
    w.p = p;
    w.a = FpPoly::t(p);
    w.b = FpPoly(p, {1, 1}) * FpPoly(p, {2, 1});
    w.v1 = Place::finite(FpPoly::t(p));
    w.v2 = Place::finite(FpPoly(p, {1, 1}));
    w.profile = InvariantProfile(BaseField::function_field(p));
    return w;
}

Json Deg8Witness::to_json() const {
    return Json{{"kind", "deg8"},
                {"p", p},
                {"a", a.str()},
                {"b", b.str()},
                {"v1", v1.str()},
                {"v2", v2.str()},
                {"profile", profile.to_json()},
                {"checks", checks.to_json()},
                {"conclusion", "C_A(K)((Z×Z)) is a noncrossed product"}};
}

CheckReport verify_theorem27(const Deg8Witness& w) {
    CheckReport report;
    const bool odd = w.p != 2;
    report.add("v1 nondyadic", odd, "residue characteristic " + std::to_string(w.p));
    report.add("v2 nondyadic", odd, "residue characteristic " + std::to_string(w.p));

    const bool independent = !is_square_in_function_field(w.a) && !is_square_in_function_field(w.b) &&
                             !is_square_in_function_field(w.a * w.b);
    report.add("a, b independent modulo squares", independent,
               "a = " + w.a.str() + ", b = " + w.b.str() + ", ab = " + (w.a * w.b).str());

    bool distinct = false;
    std::string detail;
    if (independent) {
        const InertiaField i1 = inertia_field(w.a, w.b, w.v1);
        const InertiaField i2 = inertia_field(w.a, w.b, w.v2);
        const auto quadratic = [](InertiaField f) {
            return f == InertiaField::SqrtA || f == InertiaField::SqrtB || f == InertiaField::SqrtAB;
        };
        distinct = quadratic(i1) && quadratic(i2) && i1 != i2;
        detail = "inertia field at " + w.v1.str() + ": " + to_string(i1) + ", at " + w.v2.str() + ": " + to_string(i2);
    } else {
        detail = "K is not biquadratic";
    }
    report.add("(2) inertia fields of v1 and v2 are distinct quadratic extensions", distinct, detail);

    for (const auto& [label, v] : {std::pair{"(3) |F_v1| != 1 mod 4", &w.v1}, std::pair{"(4) |F_v2| != 1 mod 4", &w.v2}}) {
        const Integer size = v->residue_field_size();
        report.add(label, mod_floor(size, 4) != 1,
                   "|F_" + v->str() + "| = " + size.get_str() + " = " + mod_floor(size, 4).get_str() + " mod 4");
    }

    const DiagForm form(w.p, {w.a, w.b, w.a * w.b});
    const DiagForm ones(w.p, {FpPoly::constant(w.p, 1), FpPoly::constant(w.p, 1), FpPoly::constant(w.p, 1)});
    const auto cert = not_isometric_certificate(form, ones);
    std::string cert_detail = "inconclusive";
    if (cert) {
        cert_detail = std::string(cert->anisotropic_side == 1 ? form.str() : ones.str()) + " anisotropic at " +
                      cert->place.str() + " (residue forms " + cert->residues.first.str() + " and " +
                      cert->residues.second.str() + "); the other form has the zero (";
        for (std::size_t i = 0; i < cert->isotropy_vector.size(); ++i)
            cert_detail += (i ? "," : "") + std::to_string(cert->isotropy_vector[i]);
        cert_detail += ") over F_" + std::to_string(w.p);
    }
    report.add("<a, b, ab> not isometric to <1, 1, 1>", cert.has_value(), cert_detail);
    return report;
}

LocalExtensionData deg8_local_data(const Deg8Witness& w) {
    LocalExtensionData ext(4);
    for (const Place* v : {&w.v1, &w.v2}) {
        const auto s = extends_uniquely_deg4(w.a, w.b, *v);
        ext.set_place(*v, std::vector<LocalDegree>(s.g, LocalDegree{s.e, s.f}));
    }
    return ext;
}

Deg8Witness build_deg8_witness(std::uint64_t p) {
    if (!is_prime(from_u64(p)) || p % 8 != 3)
        throw PreconditionError("build_deg8_witness: p = " + std::to_string(p) +
                                " must be a prime congruent to 3 mod 8 (so that 2 and -1 are nonsquares mod p)");
    Deg8Witness w = Deg8Witness::defaults(p);
    w.profile.set(w.v1, qz_make(Rational(3, 8)));
    w.profile.set(w.v2, qz_make(Rational(5, 8)));
    w.checks.append(cor23_verify(w.profile, w.v1, w.v2, deg8_local_data(w), 8, 4), "profile: ");
    w.checks.append(verify_theorem27(w), "hypothesis: ");
    return w;
}

}  // namespace nw
