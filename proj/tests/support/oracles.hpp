#pragma once
// Brute-force reference implementations on machine integers. They share no
// code with the library and are only practical for small inputs.

#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::int64_t mod(std::int64_t a, std::int64_t n) { return ((a % n) + n) % n; }

/// Smallest k >= 1 with a^k = 1 mod n by repeated multiplication; 0 if none.
inline std::int64_t order(std::int64_t a, std::int64_t n) {
    const std::int64_t base = mod(a, n);
    std::int64_t x = base;
    for (std::int64_t k = 1; k <= n; ++k) {
        if (x == 1 % n) return k;
        x = x * base % n;
    }
    return 0;
}

inline std::int64_t phi(std::int64_t n) {
    std::int64_t c = 0;
    for (std::int64_t k = 1; k <= n; ++k)
        if (std::gcd(k, n) == 1) ++c;
    return c;
}

/// Smallest m >= 2 whose powers exhaust (Z/qZ)^x, q prime; 1 for q = 2.
inline std::int64_t primitive_root(std::int64_t q) {
    if (q == 2) return 1;
    for (std::int64_t m = 2; m < q; ++m) {
        std::set<std::int64_t> seen;
        std::int64_t x = 1;
        for (std::int64_t k = 0; k < q - 1; ++k) {
            x = x * m % q;
            seen.insert(x);
        }
        if (static_cast<std::int64_t>(seen.size()) == q - 1) return m;
    }
    return 0;
}

inline std::set<std::int64_t> nonzero_squares(std::int64_t p) {
    std::set<std::int64_t> s;
    for (std::int64_t x = 1; x < p; ++x) s.insert(x * x % p);
    return s;
}

/// Smallest prime above `lower` in the class a mod m, by linear scan.
inline std::int64_t prime_in_class_above(std::int64_t a, std::int64_t m, std::int64_t lower) {
    for (std::int64_t n = lower + 1;; ++n)
        if (mod(n, m) == mod(a, m) && is_prime(n)) return n;
}

/// Polynomials over F_p as ascending coefficient vectors of fixed length.
using Poly = std::vector<std::int64_t>;

inline Poly trim(Poly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

inline Poly mul(const Poly& a, const Poly& b, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    return trim(c);
}

inline Poly add(const Poly& a, const Poly& b, std::int64_t p) {
    Poly c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = ((i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0)) % p;
    return trim(c);
}

/// Remainder modulo a monic polynomial m.
inline Poly rem(Poly a, const Poly& m, std::int64_t p) {
    a = trim(a);
    const std::size_t d = m.size() - 1;
    while (a.size() > d) {
        const std::int64_t c = a.back();
        const std::size_t shift = a.size() - 1 - d;
        for (std::size_t i = 0; i <= d; ++i) a[shift + i] = mod(a[shift + i] - c * m[i], p);
        a = trim(a);
    }
    return a;
}

/// All polynomials of degree < n (the zero polynomial first).
inline std::vector<Poly> all_polys(std::int64_t p, std::size_t n) {
    std::vector<Poly> out;
    std::int64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= p;
    for (std::int64_t code = 0; code < total; ++code) {
        Poly f(n);
        std::int64_t c = code;
        for (std::size_t i = 0; i < n; ++i) {
            f[i] = c % p;
            c /= p;
        }
        out.push_back(trim(f));
    }
    return out;
}

/// Nonzero squares of F_p[t]/(m) for monic irreducible m, by squaring every element.
inline std::set<Poly> field_squares(const Poly& m, std::int64_t p) {
    std::set<Poly> s;
    for (const auto& x : all_polys(p, m.size() - 1))
        if (!x.empty()) s.insert(rem(mul(x, x, p), m, p));
    return s;
}

/// Whether a monic polynomial has no monic factor of degree 1..deg/2, by trial division.
inline bool irreducible(const Poly& f, std::int64_t p) {
    const std::size_t d = f.size() - 1;
    for (std::size_t k = 1; 2 * k <= d; ++k)
        for (auto g : all_polys(p, k)) {
            g.resize(k + 1, 0);
            g[k] = 1;
            if (rem(f, g, p).empty()) return false;
        }
    return d >= 1;
}

/// Whether sum d_i x_i^2 = 0 has a solution in polynomials of degree <= max_deg, not all zero.
inline bool has_polynomial_zero(const std::vector<Poly>& d, std::int64_t p, std::size_t max_deg) {
    const auto polys = all_polys(p, max_deg + 1);
    std::vector<Poly> squares;
    for (const auto& x : polys) squares.push_back(mul(x, x, p));
    // Meet in the middle on the last coordinate.
    std::map<Poly, bool> last;  // value -d_n x_n^2 -> whether x_n != 0
    for (std::size_t k = 0; k < polys.size(); ++k) {
        Poly v = mul(d.back(), squares[k], p);
        for (auto& c : v) c = mod(-c, p);
        last[v] = last[v] || !polys[k].empty();
    }
    std::vector<std::size_t> idx(d.size() - 1, 0);
    for (;;) {
        Poly sum;
        bool nonzero = false;
        for (std::size_t i = 0; i < idx.size(); ++i) {
            sum = add(sum, mul(d[i], squares[idx[i]], p), p);
            nonzero = nonzero || !polys[idx[i]].empty();
        }
        if (auto it = last.find(sum); it != last.end() && (nonzero || it->second)) return true;
        std::size_t i = 0;
        while (i < idx.size() && ++idx[i] == polys.size()) idx[i++] = 0;
        if (i == idx.size()) return false;
    }
}

/// Reduced fraction in [0, 1) for n/d mod 1.
inline std::pair<std::int64_t, std::int64_t> qz(std::int64_t n, std::int64_t d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    n = mod(n, d);
    const std::int64_t g = std::gcd(n, d);
    return {n / g, d / g};
}

}  // namespace oracle
