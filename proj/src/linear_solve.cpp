#include "nw/linear_solve.hpp"

#include <stdexcept>

#include "nw/error.hpp"

namespace nw {

namespace {

using IntMatrix = std::vector<std::vector<Integer>>;

IntMatrix clear_denominators(const RatMatrix& a, std::size_t cols) {
    IntMatrix m;
    m.reserve(a.size());
    for (const auto& row : a) {
        if (row.size() != cols) throw PreconditionError("matrix row has the wrong length");
        Integer scale = 1;
        for (const auto& x : row) scale = lcm(scale, x.den());
        std::vector<Integer> out;
        out.reserve(cols);
        for (const auto& x : row) out.push_back(x.num() * (scale / x.den()));
        m.push_back(std::move(out));
    }
    return m;
}

// In-place fraction-free row echelon form; returns pivot columns.
std::vector<std::size_t> bareiss(IntMatrix& m, std::size_t cols) {
    std::vector<std::size_t> pivots;
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t piv = r;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[r]);
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Integer v = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = std::move(v);
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// Back substitution over the echelon rows with the given values of free columns.
RatVector back_substitute(const IntMatrix& m, const std::vector<std::size_t>& pivots, std::size_t cols,
                          RatVector x, const std::vector<Integer>* rhs) {
    for (std::size_t r = pivots.size(); r-- > 0;) {
        const std::size_t c = pivots[r];
        Rational acc = rhs ? Rational((*rhs)[r]) : Rational(0);
        for (std::size_t j = c + 1; j < cols; ++j)
            if (m[r][j] != 0 && !x[j].is_zero()) acc -= Rational(m[r][j]) * x[j];
        x[c] = acc / Rational(m[r][c]);
    }
    return x;
}

void content_normalize(RatVector& v) {
    Integer den = 1;
    for (const auto& x : v) den = lcm(den, x.den());
    Integer g = 0;
    for (const auto& x : v) g = gcd(g, x.num() * (den / x.den()));
    if (g == 0) return;
    for (auto& x : v) x = Rational(x.num() * (den / x.den()), g);
}

}  // namespace

std::vector<RatVector> nullspace(const RatMatrix& a, std::size_t cols) {
    IntMatrix m = clear_denominators(a, cols);
    const auto pivots = bareiss(m, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<RatVector> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        RatVector x(cols, Rational(0));
        x[f] = 1;
        x = back_substitute(m, pivots, cols, std::move(x), nullptr);
        content_normalize(x);
        if (x[f].sign() < 0)
            for (auto& e : x) e = -e;
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b, std::size_t cols) {
    if (a.size() != b.size()) throw PreconditionError("solve: right-hand side has the wrong length");
    RatMatrix aug = a;
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
    IntMatrix m = clear_denominators(aug, cols + 1);
    const auto pivots = bareiss(m, cols + 1);
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    std::vector<Integer> rhs;
    for (std::size_t r = 0; r < pivots.size(); ++r) rhs.push_back(m[r][cols]);
    return back_substitute(m, pivots, cols, RatVector(cols, Rational(0)), &rhs);
}

std::size_t rank(const RatMatrix& a, std::size_t cols) {
    IntMatrix m = clear_denominators(a, cols);
    return bareiss(m, cols).size();
}

}  // namespace nw
