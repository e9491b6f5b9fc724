#include "nw/rational.hpp"

#include <limits>

#include "nw/error.hpp"

namespace nw {

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw PreconditionError("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw PreconditionError("division by zero rational");
    q_ /= o.q_;
    return *this;
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    mpq_class q;
    if (s.empty() || q.set_str(s, 10) != 0) throw DataError("not a rational number: '" + s + "'");
    if (q.get_den() == 0) throw DataError("zero denominator in '" + s + "'");
    q.canonicalize();
    return Rational(q.get_num(), q.get_den());
}

std::string Rational::str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer mod_floor(const Integer& a, const Integer& b) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r < 0) r += abs(b);
    return r;
}

Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

std::string to_string(const Integer& v) { return v.get_str(); }

std::int64_t to_i64(const Integer& v) {
    if (!mpz_fits_slong_p(v.get_mpz_t())) throw PreconditionError("integer " + v.get_str() + " exceeds 64 bits");
    static_assert(sizeof(long) == 8);
    return v.get_si();
}

std::uint64_t to_u64(const Integer& v) {
    if (v < 0 || !mpz_fits_ulong_p(v.get_mpz_t()))
        throw PreconditionError("integer " + v.get_str() + " is not a 64-bit unsigned value");
    return v.get_ui();
}

Integer from_u64(std::uint64_t v) {
    static_assert(sizeof(unsigned long) == 8);
    return Integer(static_cast<unsigned long>(v));
}

}  // namespace nw
