#include <cstdlib>
#include <cstring>
#include <stdexcept>

#include "nw/kernels/zero_scan.hpp"

namespace nw::kernels {

Isa detect_isa() {
#if defined(__x86_64__) || defined(__i386__)
    static const bool has_avx2 = [] {
        __builtin_cpu_init();
        return __builtin_cpu_supports("avx2") != 0;
    }();
    if (has_avx2) return Isa::Avx2;
#endif
    return Isa::Scalar;
}

Isa active_isa() {
    static const Isa isa = [] {
        const char* force = std::getenv("NW_FORCE_SCALAR");
        if (force && std::strcmp(force, "1") == 0) return Isa::Scalar;
        return detect_isa();
    }();
    return isa;
}

const char* isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

std::size_t find_negating_row(std::span<const Row> rows, const Row& target, unsigned p, std::size_t start) {
    if (p < 2 || p > kMaxKernelPrime) throw std::invalid_argument("zero-scan kernel: characteristic out of range");
    return active_isa() == Isa::Avx2 ? avx2::find_negating_row(rows, target, p, start)
                                     : scalar::find_negating_row(rows, target, p, start);
}

void add_rows_mod(const Row& a, const Row& b, unsigned p, Row& out) {
    if (p < 2 || p > kMaxKernelPrime) throw std::invalid_argument("zero-scan kernel: characteristic out of range");
    if (active_isa() == Isa::Avx2)
        avx2::add_rows_mod(a, b, p, out);
    else
        scalar::add_rows_mod(a, b, p, out);
}

std::optional<std::vector<std::size_t>> find_zero_combination(std::span<const std::vector<Row>> tables, unsigned p,
                                                              std::uint64_t max_combinations) {
    const std::size_t n = tables.size();
    if (n == 0) return std::nullopt;
    for (const auto& t : tables)
        if (t.empty() || t[0] != Row{}) throw std::invalid_argument("find_zero_combination: row 0 must be zero");

    std::vector<std::size_t> idx(n, 0);
    std::vector<Row> partial(n + 1);  // partial[i] = sum of tables[j][idx[j]] for j >= i, j >= 1
    auto refresh_from = [&](std::size_t i) {
        for (std::size_t j = std::min(i, n - 1) + 1; j-- > 1;) add_rows_mod(partial[j + 1], tables[j][idx[j]], p, partial[j]);
    };
    refresh_from(n - 1);

    for (std::uint64_t tried = 0; tried < max_combinations; ++tried) {
        bool rest_zero = true;
        for (std::size_t j = 1; j < n; ++j) rest_zero = rest_zero && idx[j] == 0;
        const Row& target = n > 1 ? partial[1] : partial[n];
        const std::size_t hit = find_negating_row(tables[0], target, p, rest_zero ? 1 : 0);
        if (hit != npos) {
            idx[0] = hit;
            return idx;
        }
        // Odometer over x_1..x_{n-1}, x_1 least significant.
        std::size_t j = 1;
        while (j < n && ++idx[j] == tables[j].size()) idx[j++] = 0;
        if (j >= n) return std::nullopt;
        refresh_from(j);
    }
    return std::nullopt;
}

}  // namespace nw::kernels
