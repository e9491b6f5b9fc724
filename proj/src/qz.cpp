#include "nw/qz.hpp"

#include "nw/error.hpp"

namespace nw {

QZClass qz_make(const Rational& r) {
    QZClass out;
    out.den_ = r.den();
    out.num_ = mod_floor(r.num(), out.den_);
    // r is already in lowest terms, and shifting the numerator by a multiple
    // of the denominator keeps it coprime to the denominator.
    if (out.num_ == 0) out.den_ = 1;
    return out;
}

QZClass qz_add(const QZClass& x, const QZClass& y) {
    return qz_make(Rational(x.num(), x.den()) + Rational(y.num(), y.den()));
}

QZClass qz_neg(const QZClass& x) { return qz_make(-Rational(x.num(), x.den())); }

Integer qz_order(const QZClass& x) { return x.den(); }

QZClass qz_scale(const Integer& k, const QZClass& x) {
    return qz_make(Rational(k) * Rational(x.num(), x.den()));
}

std::string QZClass::str() const { return num_.get_str() + "/" + den_.get_str(); }

QZClass QZClass::parse(std::string_view text) {
    return qz_make(Rational::parse(text));
}

Integer lcm_list(std::span<const Integer> ks) {
    if (ks.empty()) throw PreconditionError("lcm_list: empty list");
    Integer acc = 1;
    for (const auto& k : ks) {
        if (k <= 0) throw PreconditionError("lcm_list: non-positive entry " + k.get_str());
        acc = lcm(acc, k);
    }
    return acc;
}

}  // namespace nw
