#pragma once

#include <span>
#include <string>
#include <string_view>

#include "nw/rational.hpp"

namespace nw {

/// An element of Q/Z in reduced form: 0 <= num < den, gcd(num, den) = 1, zero is 0/1.
///
/// Local invariants of central simple algebras live here. Equality is
/// structural because the representative is canonical.
class QZClass {
public:
    QZClass() = default;

    Integer num() const { return num_; }
    Integer den() const { return den_; }
    bool is_zero() const { return num_ == 0; }

    /// Serialized form "num/den" (zero is "0/1").
    std::string str() const;
    static QZClass parse(std::string_view text);

    friend bool operator==(const QZClass& a, const QZClass& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    friend QZClass qz_make(const Rational& r);
    Integer num_{0};
    Integer den_{1};
};

/// Canonical representative of r + Z.
QZClass qz_make(const Rational& r);
QZClass qz_add(const QZClass& x, const QZClass& y);
QZClass qz_neg(const QZClass& x);
/// Smallest k >= 1 with k*x = 0; this is the reduced denominator.
Integer qz_order(const QZClass& x);
QZClass qz_scale(const Integer& k, const QZClass& x);

/// Least common multiple of a nonempty list of positive integers.
Integer lcm_list(std::span<const Integer> ks);

}  // namespace nw
