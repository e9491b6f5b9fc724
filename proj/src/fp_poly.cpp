#include "nw/fp_poly.hpp"

#include <algorithm>
#include <cctype>

#include "nw/error.hpp"
#include "nw/number_theory.hpp"

namespace nw {

namespace {

constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 31;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a * b % p; }

void require_same_field(const FpPoly& a, const FpPoly& b) {
    if (a.base_p() != b.base_p())
        throw PreconditionError("polynomials over different prime fields (p = " + std::to_string(a.base_p()) +
                                " vs " + std::to_string(b.base_p()) + ")");
}

FpPoly pth_root(const FpPoly& f) {
    const std::uint64_t p = f.base_p();
    std::vector<FpPoly::Coeff> out;
    for (std::size_t i = 0; i < f.coeffs().size(); i += p) out.push_back(f.coeffs()[i]);
    return FpPoly(p, std::move(out));
}

FpPoly exact_div(const FpPoly& a, const FpPoly& b) { return divmod(a, b).first; }

void squarefree_parts(const FpPoly& f, unsigned scale, std::vector<Factor>& out) {
    const std::uint64_t p = f.base_p();
    const FpPoly one = FpPoly::constant(p, 1);
    if (f.degree() <= 0) return;
    const FpPoly df = f.derivative();
    if (df.is_zero()) {
        squarefree_parts(pth_root(f), scale * static_cast<unsigned>(p), out);
        return;
    }
    FpPoly c = gcd(f, df);
    FpPoly w = exact_div(f, c);
    unsigned i = 1;
    while (w != one) {
        FpPoly y = gcd(w, c);
        FpPoly z = exact_div(w, y);
        if (z.degree() > 0) out.push_back({z, i * scale});
        ++i;
        w = y;
        c = exact_div(c, y);
    }
    if (c != one) squarefree_parts(pth_root(c), scale * static_cast<unsigned>(p), out);
}

// Trial polynomials for equal-degree splitting: every nonconstant polynomial
// of degree < bound, in increasing order of their base-p encoding.
class TrialSequence {
public:
    TrialSequence(std::uint64_t p, int bound) : p_(p), digits_(static_cast<std::size_t>(bound), 0) {}
    FpPoly next() {
        for (;;) {
            std::size_t k = 0;
            while (k < digits_.size() && ++digits_[k] == p_) digits_[k++] = 0;
            if (k == digits_.size()) throw PreconditionError("equal-degree splitting exhausted trial polynomials");
            FpPoly a(p_, digits_);
            if (a.degree() >= 1) return a;
        }
    }

private:
    std::uint64_t p_;
    std::vector<FpPoly::Coeff> digits_;
};

void equal_degree_split(const FpPoly& g, unsigned d, std::vector<FpPoly>& out) {
    if (static_cast<unsigned>(g.degree()) == d) {
        out.push_back(g);
        return;
    }
    const std::uint64_t p = g.base_p();
    const FpPoly one = FpPoly::constant(p, 1);
    TrialSequence trials(p, g.degree());
    for (;;) {
        const FpPoly a = trials.next();
        FpPoly h;
        if (p == 2) {
            // Trace map a + a^2 + ... + a^(2^(d-1)).
            FpPoly term = a % g;
            h = term;
            for (unsigned i = 1; i < d; ++i) {
                term = mulmod(term, term, g);
                h += term;
            }
        } else {
            Integer q;
            mpz_ui_pow_ui(q.get_mpz_t(), p, d);
            h = powmod(a, (q - 1) / 2, g) - one;
        }
        const FpPoly f = gcd(h, g);
        if (f.degree() > 0 && f.degree() < g.degree()) {
            equal_degree_split(f, d, out);
            equal_degree_split(exact_div(g, f), d, out);
            return;
        }
    }
}

}  // namespace

std::uint64_t pow_mod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    base %= p;
    while (exp) {
        if (exp & 1) r = mul_mod(r, base, p);
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) throw PreconditionError("inverse of zero in F_" + std::to_string(p));
    return pow_mod_u64(a, p - 2, p);
}

FpPoly::FpPoly(std::uint64_t p, std::vector<Coeff> ascending) : p_(p), c_(std::move(ascending)) {
    if (p < 2 || p >= kMaxModulus) throw PreconditionError("FpPoly: unsupported modulus " + std::to_string(p));
    for (auto& x : c_) x %= p_;
    normalize();
}

void FpPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly FpPoly::monomial(std::uint64_t p, Coeff c, unsigned k) {
    std::vector<Coeff> v(k + 1, 0);
    v[k] = c;
    return FpPoly(p, std::move(v));
}

FpPoly::Coeff FpPoly::eval(Coeff x) const {
    Coeff acc = 0;
    x %= p_;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = (mul_mod(acc, x, p_) + *it) % p_;
    return acc;
}

FpPoly FpPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(inv_mod(leading(), p_));
}

FpPoly FpPoly::scaled(Coeff c) const {
    std::vector<Coeff> v(c_);
    for (auto& x : v) x = mul_mod(x, c % p_, p_);
    return FpPoly(p_, std::move(v));
}

FpPoly FpPoly::derivative() const {
    std::vector<Coeff> v;
    for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(mul_mod(c_[i], i % p_, p_));
    return FpPoly(p_, std::move(v));
}

FpPoly& FpPoly::operator+=(const FpPoly& o) {
    require_same_field(*this, o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = (c_[i] + o.c_[i]) % p_;
    normalize();
    return *this;
}

FpPoly& FpPoly::operator-=(const FpPoly& o) { return *this += -o; }

FpPoly FpPoly::operator-() const {
    std::vector<Coeff> v(c_);
    for (auto& x : v) x = (p_ - x) % p_;
    return FpPoly(p_, std::move(v));
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
    require_same_field(a, b);
    const std::uint64_t p = a.p_;
    if (a.is_zero() || b.is_zero()) return FpPoly::zero(p);
    std::vector<FpPoly::Coeff> v(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (!a.c_[i]) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = (v[i + j] + a.c_[i] * b.c_[j]) % p;
    }
    return FpPoly(p, std::move(v));
}

std::string FpPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const Coeff c = c_[static_cast<std::size_t>(k)];
        if (!c) continue;
        if (!out.empty()) out += '+';
        if (k == 0 || c != 1) out += std::to_string(c);
        if (k >= 1) out += 't';
        if (k >= 2) out += '^' + std::to_string(k);
    }
    return out;
}

FpPoly FpPoly::parse(std::uint64_t p, std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    const auto fail = [&](std::size_t pos, const std::string& why) -> DataError {
        return DataError("cannot parse polynomial '" + std::string(text) + "' at offset " + std::to_string(pos) +
                         ": " + why);
    };
    if (s.empty()) throw fail(0, "empty input");

    auto read_number = [&](std::size_t& i) -> Integer {
        const std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) throw fail(i, "expected a number");
        return Integer(s.substr(start, i - start));
    };

    FpPoly acc = zero(p);
    std::size_t i = 0;
    bool first = true;
    while (i < s.size()) {
        bool negative = false;
        if (s[i] == '+' || s[i] == '-') {
            negative = s[i] == '-';
            ++i;
        } else if (!first) {
            throw fail(i, "expected '+' or '-'");
        }
        first = false;
        if (i >= s.size()) throw fail(i, "dangling sign");

        Integer coef = 1;
        bool has_coef = false;
        if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            coef = read_number(i);
            has_coef = true;
            if (i < s.size() && s[i] == '*') {
                ++i;
                if (i >= s.size() || s[i] != 't') throw fail(i, "expected 't' after '*'");
            }
        }
        unsigned exponent = 0;
        if (i < s.size() && s[i] == 't') {
            ++i;
            exponent = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                const Integer e = read_number(i);
                if (e > 4096) throw fail(i, "exponent too large");
                exponent = static_cast<unsigned>(e.get_ui());
            }
        } else if (!has_coef) {
            throw fail(i, "expected a coefficient or 't'");
        }
        const Integer reduced = mod_floor(negative ? Integer(-coef) : coef, from_u64(p));
        acc += monomial(p, to_u64(reduced), exponent);
    }
    return acc;
}

bool poly_less(const FpPoly& a, const FpPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return std::lexicographical_compare(a.coeffs().rbegin(), a.coeffs().rend(), b.coeffs().rbegin(),
                                        b.coeffs().rend());
}

std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b) {
    require_same_field(a, b);
    if (b.is_zero()) throw PreconditionError("polynomial division by zero");
    const std::uint64_t p = a.base_p();
    if (a.degree() < b.degree()) return {FpPoly::zero(p), a};
    std::vector<FpPoly::Coeff> rem(a.coeffs());
    std::vector<FpPoly::Coeff> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1), 0);
    const auto& bc = b.coeffs();
    const std::uint64_t lead_inv = inv_mod(b.leading(), p);
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        const std::size_t top = static_cast<std::size_t>(k + b.degree());
        const std::uint64_t q = rem[top] * lead_inv % p;
        quot[static_cast<std::size_t>(k)] = q;
        if (!q) continue;
        for (std::size_t j = 0; j < bc.size(); ++j) {
            auto& r = rem[static_cast<std::size_t>(k) + j];
            r = (r + p - bc[j] * q % p) % p;
        }
    }
    return {FpPoly(p, std::move(quot)), FpPoly(p, std::move(rem))};
}

FpPoly operator%(const FpPoly& a, const FpPoly& b) { return divmod(a, b).second; }

FpPoly gcd(const FpPoly& a, const FpPoly& b) {
    FpPoly x = a, y = b;
    while (!y.is_zero()) {
        FpPoly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

FpPoly mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m) { return (a * b) % m; }

FpPoly powmod(const FpPoly& base, const Integer& exp, const FpPoly& m) {
    if (exp < 0) throw PreconditionError("powmod: negative exponent");
    FpPoly result = FpPoly::constant(base.base_p(), 1) % m;
    FpPoly b = base % m;
    const std::size_t bits = mpz_sizeinbase(exp.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = mulmod(result, result, m);
        if (mpz_tstbit(exp.get_mpz_t(), i)) result = mulmod(result, b, m);
    }
    return result;
}

bool is_irreducible(const FpPoly& f) {
    if (f.degree() < 1) return false;
    if (f.degree() == 1) return true;
    const std::uint64_t p = f.base_p();
    const FpPoly g = f.monic();
    const unsigned n = static_cast<unsigned>(g.degree());
    const FpPoly t = FpPoly::t(p);
    const Integer pz = from_u64(p);
    // frob[k] = t^(p^k) mod g
    std::vector<FpPoly> frob{t % g};
    for (unsigned k = 1; k <= n; ++k) frob.push_back(powmod(frob.back(), pz, g));
    if (frob[n] != t % g) return false;
    for (const auto& [q, e] : factor_small(Integer(n))) {
        const unsigned k = n / static_cast<unsigned>(q.get_ui());
        if (gcd(frob[k] - t, g).degree() != 0) return false;
    }
    return true;
}

std::vector<FpPoly> monic_irreducibles(std::uint64_t p, unsigned d) {
    std::vector<FpPoly> out;
    std::vector<FpPoly::Coeff> digits(d + 1, 0);
    digits[d] = 1;
    for (;;) {
        FpPoly f(p, digits);
        if (is_irreducible(f)) out.push_back(f);
        unsigned k = 0;
        while (k < d && ++digits[k] == p) digits[k++] = 0;
        if (k == d) break;
    }
    std::sort(out.begin(), out.end(), poly_less);
    return out;
}

FpPoly smallest_irreducible(std::uint64_t p, unsigned d) {
    if (d == 0) throw PreconditionError("smallest_irreducible: degree must be positive");
    // Walk monic polynomials in poly_less order: the coefficient of t^(d-1) is
    // the most significant digit.
    std::vector<FpPoly::Coeff> digits(d + 1, 0);
    digits[d] = 1;
    for (;;) {
        FpPoly f(p, digits);
        if (is_irreducible(f)) return f;
        unsigned k = 0;
        while (k < d && ++digits[k] == p) digits[k++] = 0;
        if (k == d) break;
    }
    throw PreconditionError("no irreducible polynomial found");  // unreachable: one exists for every d
}

std::vector<Factor> factorize(const FpPoly& f) {
    if (f.is_zero()) throw PreconditionError("factorize: zero polynomial");
    const std::uint64_t p = f.base_p();
    std::vector<Factor> squarefree;
    squarefree_parts(f.monic(), 1, squarefree);

    std::vector<Factor> out;
    for (const auto& [part, mult] : squarefree) {
        FpPoly rest = part;
        FpPoly h = FpPoly::t(p) % rest;
        const Integer pz = from_u64(p);
        for (unsigned d = 1; rest.degree() >= static_cast<int>(2 * d); ++d) {
            h = powmod(h, pz, rest);
            const FpPoly g = gcd(h - FpPoly::t(p), rest);
            if (g.degree() > 0) {
                std::vector<FpPoly> pieces;
                equal_degree_split(g, d, pieces);
                for (auto& piece : pieces) out.push_back({piece.monic(), mult});
                rest = exact_div(rest, g);
                h = h % rest;
            }
        }
        if (rest.degree() > 0) out.push_back({rest.monic(), mult});
    }
    std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) { return poly_less(a.poly, b.poly); });
    return out;
}

}  // namespace nw
