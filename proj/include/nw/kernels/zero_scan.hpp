#pragma once

// Brute-force zero search for diagonal forms over F_p and F_p[t].
//
// Field or polynomial values are encoded as rows of kRowBytes coefficient
// bytes (little-endian in degree, zero padded). The inner loop adds a fixed
// target row to every candidate row mod p and tests for the zero row; it has
// a scalar reference and an AVX2 variant selected at runtime.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace nw::kernels {

inline constexpr std::size_t kRowBytes = 32;
/// Largest characteristic the byte kernels accept (sums of two residues must fit a byte).
inline constexpr unsigned kMaxKernelPrime = 127;
inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

struct alignas(32) Row {
    std::array<std::uint8_t, kRowBytes> b{};
    friend bool operator==(const Row&, const Row&) = default;
};

enum class Isa { Scalar, Avx2 };

/// Best variant the running CPU supports.
Isa detect_isa();
/// Variant used by the dispatching entry points; honours NW_FORCE_SCALAR=1.
Isa active_isa();
const char* isa_name(Isa isa);

namespace scalar {
std::size_t find_negating_row(std::span<const Row> rows, const Row& target, unsigned p, std::size_t start);
void add_rows_mod(const Row& a, const Row& b, unsigned p, Row& out);
}  // namespace scalar

namespace avx2 {
/// Only callable when detect_isa() == Isa::Avx2.
std::size_t find_negating_row(std::span<const Row> rows, const Row& target, unsigned p, std::size_t start);
void add_rows_mod(const Row& a, const Row& b, unsigned p, Row& out);
}  // namespace avx2

/// First index i >= start with rows[i] + target = 0 (mod p) in every byte, or npos.
std::size_t find_negating_row(std::span<const Row> rows, const Row& target, unsigned p, std::size_t start = 0);
void add_rows_mod(const Row& a, const Row& b, unsigned p, Row& out);

/// Searches for indices (x_0, ..., x_{n-1}), not all zero, with
/// sum_i tables[i][x_i] = 0 (mod p). Row 0 of every table must be the zero
/// row (the image of the zero element). Combinations are enumerated with the
/// last coordinate most significant and x_0 scanned by the kernel; at most
/// max_combinations assignments of x_1..x_{n-1} are tried.
std::optional<std::vector<std::size_t>> find_zero_combination(std::span<const std::vector<Row>> tables, unsigned p,
                                                              std::uint64_t max_combinations = ~std::uint64_t{0});

}  // namespace nw::kernels
