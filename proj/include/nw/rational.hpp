#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace nw {

using Integer = mpz_class;

/// Exact rational number kept in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}                      // NOLINT(implicit)
    Rational(int v) : q_(static_cast<long>(v)) {}    // NOLINT(implicit)
    Rational(const Integer& v) : q_(v) {}            // NOLINT(implicit)
    Rational(const Integer& num, const Integer& den);

    /// Parses "a", "-a" or "a/b".
    static Rational parse(std::string_view text);

    Integer num() const { return q_.get_num(); }
    Integer den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { Rational r; r.q_ = -q_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// "n" for integers, "n/d" otherwise.
    std::string str() const;

    const mpq_class& raw() const { return q_; }

private:
    mpq_class q_{0};
};

/// Floor division rounding toward negative infinity.
Integer floor_div(const Integer& a, const Integer& b);
/// Non-negative remainder of a modulo b, b > 0.
Integer mod_floor(const Integer& a, const Integer& b);
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
std::string to_string(const Integer& v);
/// Narrowing conversion; throws PreconditionError when v does not fit.
std::int64_t to_i64(const Integer& v);
std::uint64_t to_u64(const Integer& v);
Integer from_u64(std::uint64_t v);

}  // namespace nw
