#include "nw/quadratic_forms.hpp"

#include <algorithm>
#include <set>

#include "nw/error.hpp"
#include "nw/kernels/zero_scan.hpp"

namespace nw {

namespace {

constexpr std::uint64_t kMaxWitnessFieldSize = 1 << 16;

using kernels::Row;

Row encode(const FpPoly& value) {
    if (value.degree() >= static_cast<int>(kernels::kRowBytes))
        throw PreconditionError("value " + value.str() + " does not fit a kernel row");
    Row r;
    for (std::size_t k = 0; k < value.coeffs().size(); ++k) r.b[k] = static_cast<std::uint8_t>(value.coeffs()[k]);
    return r;
}

// All elements of F_p[t]/(modulus), index j <-> base-p digits of j (c_0 least significant).
std::vector<FpPoly> enumerate_field(const FpPoly& modulus) {
    const std::uint64_t p = modulus.base_p();
    const std::size_t d = static_cast<std::size_t>(modulus.degree());
    std::vector<FpPoly> out;
    std::vector<FpPoly::Coeff> digits(d, 0);
    for (;;) {
        out.emplace_back(p, digits);
        std::size_t k = 0;
        while (k < d && ++digits[k] == p) digits[k++] = 0;
        if (k == d) break;
    }
    return out;
}

// Generic fallback for characteristics the byte kernels cannot hold.
bool search_zero_generic(const std::vector<FpPoly>& entries, const std::vector<FpPoly>& elems,
                         const FpPoly* modulus, std::vector<std::size_t>& idx, std::size_t pos, FpPoly acc,
                         bool any_nonzero) {
    if (pos == entries.size()) return any_nonzero && acc.is_zero();
    for (std::size_t j = 0; j < elems.size(); ++j) {
        const FpPoly sq = elems[j] * elems[j];
        FpPoly term = entries[pos] * sq;
        if (modulus) term = term % *modulus;
        idx[pos] = j;
        if (search_zero_generic(entries, elems, modulus, idx, pos + 1, acc + term, any_nonzero || j != 0)) return true;
    }
    return false;
}

std::optional<std::vector<std::size_t>> find_zero(const std::vector<FpPoly>& entries, const std::vector<FpPoly>& elems,
                                                  const FpPoly* modulus, std::uint64_t p) {
    if (p <= kernels::kMaxKernelPrime) {
        std::vector<std::vector<Row>> tables;
        for (const auto& e : entries) {
            std::vector<Row> rows;
            rows.reserve(elems.size());
            for (const auto& x : elems) {
                FpPoly v = e * (x * x);
                if (modulus) v = v % *modulus;
                rows.push_back(encode(v));
            }
            tables.push_back(std::move(rows));
        }
        return kernels::find_zero_combination(tables, static_cast<unsigned>(p));
    }
    std::vector<std::size_t> idx(entries.size(), 0);
    if (search_zero_generic(entries, elems, modulus, idx, 0, FpPoly::zero(p), false)) return idx;
    return std::nullopt;
}

std::string join_entries(const std::vector<FpPoly>& entries) {
    std::string s = "<";
    for (std::size_t i = 0; i < entries.size(); ++i) s += (i ? ", " : "") + entries[i].str();
    return s + ">";
}

}  // namespace

ResidueFieldElem ResidueFieldElem::prime_field(std::uint64_t p, std::uint64_t c) {
    return {FpPoly::t(p), FpPoly::constant(p, c)};
}

FpPoly residue_modulus(const Place& v) { return v.pi(); }

Integer residue_field_size(const FpPoly& modulus) {
    Integer q;
    mpz_ui_pow_ui(q.get_mpz_t(), modulus.base_p(), static_cast<unsigned long>(modulus.degree()));
    return q;
}

bool is_square(const ResidueFieldElem& x) {
    if (x.is_zero()) throw PreconditionError("is_square: zero is not a unit square class");
    const Integer q = residue_field_size(x.modulus);
    if (x.modulus.base_p() == 2) return true;
    return powmod(x.value, (q - 1) / 2, x.modulus) == FpPoly::constant(x.modulus.base_p(), 1);
}

DiagForm::DiagForm(std::uint64_t p_, std::vector<FpPoly> e) : p(p_), entries(std::move(e)) {
    for (const auto& x : entries) {
        if (x.is_zero()) throw PreconditionError("diagonal form with a zero entry");
        if (x.base_p() != p) throw PreconditionError("diagonal form entries over mixed prime fields");
    }
}

std::string DiagForm::str() const { return join_entries(entries); }

FiniteDiagForm::FiniteDiagForm(FpPoly m, std::vector<FpPoly> e) : modulus(std::move(m)), entries(std::move(e)) {
    for (auto& x : entries) {
        x = x % modulus;
        if (x.is_zero()) throw PreconditionError("finite diagonal form with a zero entry");
    }
}

std::string FiniteDiagForm::str() const { return join_entries(entries); }

int place_valuation(const FpPoly& f, const Place& v) {
    if (f.is_zero()) throw PreconditionError("place_valuation: zero has infinite valuation");
    if (std::holds_alternative<FunctionFieldInfinite>(v.value())) return -f.degree();
    const FpPoly& pi = v.pi();
    if (pi.base_p() != f.base_p()) throw PreconditionError("place_valuation: mismatched characteristic");
    int val = 0;
    FpPoly g = f;
    for (;;) {
        auto [q, r] = divmod(g, pi);
        if (!r.is_zero()) break;
        g = std::move(q);
        ++val;
    }
    return val;
}

int place_valuation(const FpPoly& num, const FpPoly& den, const Place& v) {
    return place_valuation(num, v) - place_valuation(den, v);
}

ResidueFieldElem residue_at(const FpPoly& f, const Place& v) {
    const int val = place_valuation(f, v);
    if (val != 0)
        throw PreconditionError("residue_at: " + f.str() + " has valuation " + std::to_string(val) + " at " + v.str());
    return {v.pi(), f % v.pi()};
}

SpringerResidues springer_split(const DiagForm& q, const Place& v) {
    const FpPoly& pi = v.pi();
    std::vector<FpPoly> first, second;
    for (const auto& entry : q.entries) {
        int val = place_valuation(entry, v);
        FpPoly unit = entry;
        for (; val > 0; --val) unit = divmod(unit, pi).first;
        // unit * pi^val; even powers are squares, so only the parity matters.
        if (place_valuation(entry, v) % 2 == 0)
            first.push_back(unit % pi);
        else
            second.push_back(unit % pi);
    }
    return {FiniteDiagForm(pi, std::move(first)), FiniteDiagForm(pi, std::move(second))};
}

IsotropyResult is_isotropic_finite(const FiniteDiagForm& q) {
    const FpPoly& mod = q.modulus;
    const std::uint64_t p = mod.base_p();
    IsotropyResult out;
    if (q.dim() <= 1) return out;

    std::vector<FpPoly> active;
    if (q.dim() == 2) {
        const FpPoly disc = (-(q.entries[0] * q.entries[1])) % mod;
        out.isotropic = is_square({mod, disc});
        if (!out.isotropic) return out;
        active = q.entries;
    } else {
        out.isotropic = true;
        active.assign(q.entries.begin(), q.entries.begin() + 3);
    }

    const Integer size = residue_field_size(mod);
    if (size > kMaxWitnessFieldSize) return out;
    const auto elems = enumerate_field(mod);
    const auto idx = find_zero(active, elems, &mod, p);
    if (idx) {
        std::vector<FpPoly> witness(q.dim(), FpPoly::zero(p));
        for (std::size_t i = 0; i < idx->size(); ++i) witness[i] = elems[(*idx)[i]];
        out.witness = std::move(witness);
    }
    return out;
}

bool anisotropic_at(const DiagForm& q, const Place& v) {
    const auto parts = springer_split(q, v);
    return !is_isotropic_finite(parts.first).isotropic && !is_isotropic_finite(parts.second).isotropic;
}

std::optional<std::vector<std::uint64_t>> constant_zero(const DiagForm& q) {
    if (q.dim() == 0) return std::nullopt;
    std::vector<FpPoly> elems;
    for (std::uint64_t c = 0; c < q.p; ++c) elems.push_back(FpPoly::constant(q.p, c));
    const auto idx = find_zero(q.entries, elems, nullptr, q.p);
    if (!idx) return std::nullopt;
    std::vector<std::uint64_t> out;
    for (auto i : *idx) out.push_back(i);
    return out;
}

Json NonIsometryCertificate::to_json() const {
    Json vec = Json::array();
    for (auto x : isotropy_vector) vec.push_back(x);
    return Json{{"anisotropic_side", anisotropic_side},
                {"place", place.str()},
                {"first_residue_form", residues.first.str()},
                {"second_residue_form", residues.second.str()},
                {"isotropy_vector", vec}};
}

std::optional<NonIsometryCertificate> not_isometric_certificate(const DiagForm& q1, const DiagForm& q2) {
    if (q1.dim() != q2.dim()) throw PreconditionError("not_isometric_certificate: dimension mismatch");
    if (q1.p != q2.p) throw PreconditionError("not_isometric_certificate: forms over different fields");

    std::set<FpPoly, decltype(&poly_less)> candidates(&poly_less);
    for (const auto* q : {&q1, &q2})
        for (const auto& e : q->entries)
            for (const auto& f : factorize(e)) candidates.insert(f.poly);

    const auto try_side = [&](const DiagForm& aniso, const DiagForm& iso,
                              int side) -> std::optional<NonIsometryCertificate> {
        for (const auto& pi : candidates) {
            const Place v = Place::finite(pi);
            if (!anisotropic_at(aniso, v)) continue;
            auto zero = constant_zero(iso);
            if (!zero) return std::nullopt;
            return NonIsometryCertificate{side, v, springer_split(aniso, v), std::move(*zero)};
        }
        return std::nullopt;
    };
    if (auto c = try_side(q1, q2, 1)) return c;
    return try_side(q2, q1, 2);
}

}  // namespace nw
