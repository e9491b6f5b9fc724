#include "nw/places.hpp"

#include <sstream>

#include "nw/error.hpp"
#include "nw/number_theory.hpp"

namespace nw {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

const Json& require_key(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) throw DataError(where + ": missing key \"" + key + "\"");
    return j.at(key);
}

std::string require_string(const Json& j, const std::string& where) {
    if (!j.is_string()) throw DataError(where + ": expected a string");
    return j.get<std::string>();
}

unsigned require_positive(const Json& j, const std::string& where) {
    if (!j.is_number_unsigned() || j.get<std::uint64_t>() == 0 || j.get<std::uint64_t>() > 1'000'000)
        throw DataError(where + ": expected a positive integer");
    return static_cast<unsigned>(j.get<std::uint64_t>());
}

}  // namespace

BaseField BaseField::function_field(std::uint64_t p) {
    if (p == 2 || !is_prime(from_u64(p)))
        throw PreconditionError("F_p(t) requires an odd prime p, got " + std::to_string(p));
    return {Kind::FunctionField, p};
}

Json BaseField::to_json() const {
    if (kind == Kind::Rationals) return "Q";
    return Json{{"Fp_t", p}};
}

BaseField BaseField::from_json(const Json& j) {
    if (j.is_string() && j.get<std::string>() == "Q") return rationals();
    if (j.is_object() && j.contains("Fp_t") && j.at("Fp_t").is_number_unsigned()) {
        try {
            return function_field(j.at("Fp_t").get<std::uint64_t>());
        } catch (const PreconditionError& e) {
            throw DataError(std::string("/base: ") + e.what());
        }
    }
    throw DataError("/base: expected \"Q\" or {\"Fp_t\": p}");
}

std::string BaseField::str() const { return kind == Kind::Rationals ? "Q" : "F_" + std::to_string(p) + "(t)"; }

Place Place::rational_prime(const Integer& p) {
    if (!is_prime(p)) throw PreconditionError("place: " + p.get_str() + " is not prime");
    return Place(RationalPrime{p});
}

Place Place::real_infinite() { return Place(RealInfinite{}); }

Place Place::finite(const FpPoly& pi) {
    if (pi.base_p() == 2) throw PreconditionError("place: dyadic function fields are not supported");
    if (!pi.is_monic() || !is_irreducible(pi))
        throw PreconditionError("place: " + pi.str() + " is not a monic irreducible over F_" +
                                std::to_string(pi.base_p()));
    return Place(FunctionFieldFinite{pi});
}

Place Place::function_field_infinite(std::uint64_t p) { return Place(FunctionFieldInfinite{p}); }

Place Place::parse(const BaseField& base, std::string_view text) {
    const std::string s(text);
    try {
        if (base.kind == BaseField::Kind::Rationals) {
            if (s == "inf") return real_infinite();
            if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
                throw DataError("place '" + s + "': expected a decimal prime or \"inf\"");
            return rational_prime(Integer(s));
        }
        if (s == "1/t") return function_field_infinite(base.p);
        return finite(FpPoly::parse(base.p, s));
    } catch (const PreconditionError& e) {
        throw DataError(e.what());
    }
}

const FpPoly& Place::pi() const {
    if (const auto* f = std::get_if<FunctionFieldFinite>(&v_)) return f->pi;
    throw PreconditionError("place " + str() + " is not a finite place of F_p(t)");
}

bool Place::belongs_to(const BaseField& base) const {
    return std::visit(Overloaded{
                          [&](const RationalPrime&) { return base.kind == BaseField::Kind::Rationals; },
                          [&](const RealInfinite&) { return base.kind == BaseField::Kind::Rationals; },
                          [&](const FunctionFieldFinite& f) {
                              return base.kind == BaseField::Kind::FunctionField && f.pi.base_p() == base.p;
                          },
                          [&](const FunctionFieldInfinite& f) {
                              return base.kind == BaseField::Kind::FunctionField && f.base_p == base.p;
                          },
                      },
                      v_);
}

Integer Place::residue_field_size() const {
    return std::visit(Overloaded{
                          [](const RationalPrime& r) { return r.p; },
                          [](const RealInfinite&) -> Integer {
                              throw PreconditionError("the real place has no finite residue field");
                          },
                          [](const FunctionFieldFinite& f) {
                              Integer q;
                              mpz_ui_pow_ui(q.get_mpz_t(), f.pi.base_p(), static_cast<unsigned long>(f.pi.degree()));
                              return q;
                          },
                          [](const FunctionFieldInfinite& f) { return from_u64(f.base_p); },
                      },
                      v_);
}

std::string Place::str() const {
    return std::visit(Overloaded{
                          [](const RationalPrime& r) { return r.p.get_str(); },
                          [](const RealInfinite&) { return std::string("inf"); },
                          [](const FunctionFieldFinite& f) { return f.pi.str(); },
                          [](const FunctionFieldInfinite&) { return std::string("1/t"); },
                      },
                      v_);
}

bool operator<(const Place& a, const Place& b) {
    if (a.v_.index() != b.v_.index()) return a.v_.index() < b.v_.index();
    return std::visit(Overloaded{
                          [&](const RationalPrime& x) { return x.p < std::get<RationalPrime>(b.v_).p; },
                          [&](const RealInfinite&) { return false; },
                          [&](const FunctionFieldFinite& x) {
                              const auto& y = std::get<FunctionFieldFinite>(b.v_);
                              if (x.pi.base_p() != y.pi.base_p()) return x.pi.base_p() < y.pi.base_p();
                              return poly_less(x.pi, y.pi);
                          },
                          [&](const FunctionFieldInfinite& x) {
                              return x.base_p < std::get<FunctionFieldInfinite>(b.v_).base_p;
                          },
                      },
                      a.v_);
}

bool operator==(const Place& a, const Place& b) { return !(a < b) && !(b < a); }

void InvariantProfile::set(const Place& place, const QZClass& inv) {
    if (!place.belongs_to(base_))
        throw PreconditionError("place " + place.str() + " does not belong to " + base_.str());
    if (inv.is_zero())
        entries_.erase(place);
    else
        entries_.insert_or_assign(place, inv);
}

QZClass InvariantProfile::at(const Place& place) const {
    const auto it = entries_.find(place);
    return it == entries_.end() ? QZClass{} : it->second;
}

Json InvariantProfile::to_json() const {
    Json entries = Json::array();
    for (const auto& [place, inv] : entries_) entries.push_back({{"place", place.str()}, {"inv", inv.str()}});
    return Json{{"base", base_.to_json()}, {"entries", entries}};
}

InvariantProfile InvariantProfile::from_json(const Json& j) {
    InvariantProfile out(BaseField::from_json(require_key(j, "base", "profile")));
    const Json& entries = require_key(j, "entries", "profile");
    if (!entries.is_array()) throw DataError("/entries: expected an array");
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const std::string where = "/entries/" + std::to_string(i);
        const Place place = Place::parse(out.base_, require_string(require_key(entries[i], "place", where), where + "/place"));
        if (out.entries_.count(place)) throw DataError(where + ": duplicate place " + place.str());
        QZClass inv;
        try {
            inv = QZClass::parse(require_string(require_key(entries[i], "inv", where), where + "/inv"));
        } catch (const DataError& e) {
            throw DataError(where + "/inv: " + e.what());
        }
        out.set(place, inv);
    }
    return out;
}

LocalExtensionData::LocalExtensionData(unsigned base_degree) : k_(base_degree) {
    if (k_ == 0) throw PreconditionError("extension degree must be positive");
}

void LocalExtensionData::set_place(const Place& v, std::vector<LocalDegree> above) {
    unsigned total = 0;
    for (const auto& d : above) {
        if (d.e == 0 || d.f == 0) throw PreconditionError("local data at " + v.str() + ": e and f must be >= 1");
        total += d.e * d.f;
    }
    if (total != k_)
        throw PreconditionError("local data at " + v.str() + ": sum of e*f is " + std::to_string(total) +
                                ", expected " + std::to_string(k_));
    above_.insert_or_assign(v, std::move(above));
}

const std::vector<LocalDegree>* LocalExtensionData::above(const Place& v) const {
    const auto it = above_.find(v);
    return it == above_.end() ? nullptr : &it->second;
}

Json LocalExtensionData::to_json() const {
    Json places = Json::array();
    for (const auto& [v, list] : above_) {
        Json above = Json::array();
        for (const auto& d : list) above.push_back({{"e", d.e}, {"f", d.f}});
        places.push_back({{"place", v.str()}, {"above", above}});
    }
    return Json{{"k", k_}, {"places", places}};
}

LocalExtensionData LocalExtensionData::from_json(const BaseField& base, const Json& j) {
    LocalExtensionData out(require_positive(require_key(j, "k", "/extension"), "/extension/k"));
    const Json& places = require_key(j, "places", "/extension");
    if (!places.is_array()) throw DataError("/extension/places: expected an array");
    for (std::size_t i = 0; i < places.size(); ++i) {
        const std::string where = "/extension/places/" + std::to_string(i);
        const Place v = Place::parse(base, require_string(require_key(places[i], "place", where), where + "/place"));
        const Json& above = require_key(places[i], "above", where);
        if (!above.is_array()) throw DataError(where + "/above: expected an array");
        std::vector<LocalDegree> list;
        for (std::size_t a = 0; a < above.size(); ++a) {
            const std::string w = where + "/above/" + std::to_string(a);
            list.push_back({require_positive(require_key(above[a], "e", w), w + "/e"),
                            require_positive(require_key(above[a], "f", w), w + "/f")});
        }
        try {
            out.set_place(v, std::move(list));
        } catch (const PreconditionError& e) {
            throw DataError(where + ": " + e.what());
        }
    }
    return out;
}

bool profile_is_valid(const InvariantProfile& profile) {
    QZClass sum;
    const QZClass half = qz_make(Rational(1, 2));
    for (const auto& [place, inv] : profile.entries()) {
        if (place.is_real()) {
            if (profile.base().kind == BaseField::Kind::FunctionField) return false;
            if (inv != half) return false;
        }
        sum = qz_add(sum, inv);
    }
    return sum.is_zero();
}

Integer profile_degree(const InvariantProfile& profile) {
    if (!profile_is_valid(profile)) throw PreconditionError("profile_degree: profile is not a valid invariant profile");
    Integer n = 1;
    for (const auto& [place, inv] : profile.entries()) n = lcm(n, qz_order(inv));
    return n;
}

std::vector<ExtendedInvariant> extend_profile(const InvariantProfile& profile, const LocalExtensionData& ext) {
    std::vector<ExtendedInvariant> out;
    for (const auto& [place, inv] : profile.entries()) {
        const auto* above = ext.above(place);
        if (!above)
            throw PreconditionError("extend_profile: no local extension data at place " + place.str() +
                                    " where the invariant " + inv.str() + " is nonzero");
        for (std::size_t i = 0; i < above->size(); ++i) {
            const LocalDegree d = (*above)[i];
            out.push_back({place, i, d, qz_scale(Integer(d.e * d.f), inv)});
        }
    }
    return out;
}

ContainmentVerdict contains_subfield(const InvariantProfile& profile, const LocalExtensionData& ext, unsigned k) {
    const Integer n = profile_degree(profile);
    if (k == 0 || n % k != 0)
        throw PreconditionError("contains_subfield: k = " + std::to_string(k) + " does not divide n = " + n.get_str());
    if (ext.base_degree() != k)
        throw PreconditionError("contains_subfield: extension data has degree " + std::to_string(ext.base_degree()) +
                                ", expected " + std::to_string(k));
    ContainmentVerdict verdict;
    verdict.extended = extend_profile(profile, ext);
    for (const auto& w : verdict.extended) verdict.lcm_of_orders = lcm(verdict.lcm_of_orders, qz_order(w.inv));
    verdict.contained = verdict.lcm_of_orders == n / k;
    return verdict;
}

CheckReport cor23_verify(const InvariantProfile& profile, const Place& v1, const Place& v2,
                         const LocalExtensionData& ext, const Integer& n, const Integer& k) {
    CheckReport report;
    const bool factorizes = k > 0 && n > 0 && n % k == 0;
    const Integer m = factorizes ? Integer(n / k) : Integer(0);
    report.add("n = k*m", factorizes,
               "n = " + n.get_str() + ", k = " + k.get_str() + (factorizes ? ", m = " + m.get_str() : ", k does not divide n"));

    QZClass sum;
    bool real_ok = true;
    for (const auto& [place, inv] : profile.entries()) {
        sum = qz_add(sum, inv);
        if (place.is_real() &&
            (profile.base().kind == BaseField::Kind::FunctionField || inv != qz_make(Rational(1, 2))))
            real_ok = false;
    }
    report.add("(a) invariants sum to zero", sum.is_zero(), "sum of t_v = " + sum.str() + " in Q/Z");
    report.add("real places admissible", real_ok, "real local invariants must lie in {0, 1/2}");

    const auto order_at = [&](const Place& v) { return qz_order(profile.at(v)); };
    for (const auto& [label, v] : {std::pair{"v1", &v1}, std::pair{"v2", &v2}}) {
        const Integer ord = order_at(*v);
        report.add(std::string("(b) order n at ") + label, ord == n,
                   "t at " + v->str() + " = " + profile.at(*v).str() + " has order " + ord.get_str() + ", n = " +
                       n.get_str());
    }

    bool c_ok = factorizes;
    std::string offenders;
    for (const auto& [place, inv] : profile.entries()) {
        if (place == v1 || place == v2) continue;
        if (!factorizes || m % qz_order(inv) != 0) {
            c_ok = false;
            offenders += " " + place.str() + "->" + inv.str();
        }
    }
    report.add("(c) other nonzero invariants have order dividing m", c_ok,
               offenders.empty() ? "all remaining invariants have order dividing m (v1, v2 excluded)"
                                 : "offending places:" + offenders);
    report.add("(d) finite support", true,
               "profile has " + std::to_string(profile.entries().size()) + " nonzero entries");

    for (const auto& [label, v] : {std::pair{"v1", &v1}, std::pair{"v2", &v2}}) {
        const auto* above = ext.above(*v);
        const bool unique = above && above->size() == 1 && Integer((*above)[0].e * (*above)[0].f) == k;
        std::string detail = "places above " + v->str() + ": ";
        detail += above ? std::to_string(above->size()) : std::string("no data");
        if (unique) detail += " (e=" + std::to_string((*above)[0].e) + ", f=" + std::to_string((*above)[0].f) + ")";
        report.add(std::string(label) + " extends uniquely to K", unique, detail);
    }

    bool degree_ok = false;
    std::string degree_detail = "profile invalid";
    if (profile_is_valid(profile)) {
        const Integer deg = profile_degree(profile);
        degree_ok = deg == n;
        degree_detail = "LCM of invariant orders = " + deg.get_str();
    }
    report.add("A has degree n", degree_ok, degree_detail);

    bool contained = false;
    std::string contain_detail;
    try {
        if (!factorizes || !k.fits_uint_p()) throw PreconditionError("k does not divide n");
        const auto verdict = contains_subfield(profile, ext, static_cast<unsigned>(k.get_ui()));
        contained = verdict.contained && profile_degree(profile) == n;
        contain_detail = "LCM of extended invariant orders = " + verdict.lcm_of_orders.get_str() + ", n/k = " +
                         (factorizes ? m.get_str() : std::string("undefined"));
    } catch (const PreconditionError& e) {
        contain_detail = e.what();
    }
    report.add("A contains K", contained, contain_detail);

    for (const auto& [label, v] : {std::pair{"v1", &v1}, std::pair{"v2", &v2}}) {
        const bool division = order_at(*v) == n;
        report.add(std::string(label) + " extends to A", division,
                   division ? "invariant of order n at " + v->str() + ": the completion is a division algebra"
                            : "completion at " + v->str() + " is not a division algebra");
    }

    const bool exists = sum.is_zero() && real_ok;
    report.add("existence of A", exists,
               exists ? "exists by Hasse-Brauer-Noether (not materialized)"
                      : "profile violates the Hasse-Brauer-Noether conditions");
    return report;
}

}  // namespace nw
