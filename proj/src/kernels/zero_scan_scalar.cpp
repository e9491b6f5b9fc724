#include "nw/kernels/zero_scan.hpp"

namespace nw::kernels::scalar {

std::size_t find_negating_row(std::span<const Row> rows, const Row& target, unsigned p, std::size_t start) {
    for (std::size_t i = start; i < rows.size(); ++i) {
        bool zero = true;
        for (std::size_t k = 0; k < kRowBytes && zero; ++k)
            zero = (static_cast<unsigned>(rows[i].b[k]) + target.b[k]) % p == 0;
        if (zero) return i;
    }
    return npos;
}

void add_rows_mod(const Row& a, const Row& b, unsigned p, Row& out) {
    for (std::size_t k = 0; k < kRowBytes; ++k)
        out.b[k] = static_cast<std::uint8_t>((static_cast<unsigned>(a.b[k]) + b.b[k]) % p);
}

}  // namespace nw::kernels::scalar
