#include "nw/kernels/zero_scan.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define NW_HAVE_X86 1
#endif

namespace nw::kernels::avx2 {

#ifdef NW_HAVE_X86

__attribute__((target("avx2"))) std::size_t find_negating_row(std::span<const Row> rows, const Row& target,
                                                               unsigned p, std::size_t start) {
    const __m256i t = _mm256_load_si256(reinterpret_cast<const __m256i*>(target.b.data()));
    const __m256i zero = _mm256_setzero_si256();
    const __m256i pv = _mm256_set1_epi8(static_cast<char>(p));
    // Residues are < p <= 127, so a byte sum is < 2p and is 0 mod p iff it is 0 or p.
    for (std::size_t i = start; i < rows.size(); ++i) {
        const __m256i r = _mm256_load_si256(reinterpret_cast<const __m256i*>(rows[i].b.data()));
        const __m256i s = _mm256_add_epi8(r, t);
        const __m256i hit = _mm256_or_si256(_mm256_cmpeq_epi8(s, zero), _mm256_cmpeq_epi8(s, pv));
        if (_mm256_movemask_epi8(hit) == -1) return i;
    }
    return npos;
}

__attribute__((target("avx2"))) void add_rows_mod(const Row& a, const Row& b, unsigned p, Row& out) {
    const __m256i x = _mm256_load_si256(reinterpret_cast<const __m256i*>(a.b.data()));
    const __m256i y = _mm256_load_si256(reinterpret_cast<const __m256i*>(b.b.data()));
    const __m256i s = _mm256_add_epi8(x, y);
    // s - p wraps above s exactly when s < p.
    const __m256i reduced = _mm256_min_epu8(s, _mm256_sub_epi8(s, _mm256_set1_epi8(static_cast<char>(p))));
    _mm256_store_si256(reinterpret_cast<__m256i*>(out.b.data()), reduced);
}

#else

std::size_t find_negating_row(std::span<const Row> rows, const Row& target, unsigned p, std::size_t start) {
    return scalar::find_negating_row(rows, target, p, start);
}

void add_rows_mod(const Row& a, const Row& b, unsigned p, Row& out) { scalar::add_rows_mod(a, b, p, out); }

#endif

}  // namespace nw::kernels::avx2
