#pragma once

#include <cstddef>
#include <cstdint>

// Data-parallel inner loops used by the graph and solver layers.
// Every kernel has a scalar reference implementation and, on x86-64,
// an AVX2 variant selected at runtime. The variants are required to be
// bit-identical to the scalar reference (the AVX2 code uses the same
// operation order and no FMA contraction), which the test suite checks.

namespace pcm::kernels {

enum class Isa { Scalar, Avx2 };

/// ISA the dispatch table currently points at.
Isa active_isa();

/// Force a specific ISA (testing hook). Throws std::runtime_error if the
/// requested ISA is not available on this machine.
void force_isa(Isa isa);

/// Best ISA supported by the running CPU.
Isa best_isa();

/// Popcount of a & b over nwords 64-bit words.
std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b,
                           std::size_t nwords);

/// True if a & b has any bit set.
bool and_any(const std::uint64_t* a, const std::uint64_t* b,
             std::size_t nwords);

/// out = a & b.
void and_store(const std::uint64_t* a, const std::uint64_t* b,
               std::uint64_t* out, std::size_t nwords);

/// Popcount over nwords words.
std::uint64_t popcount(const std::uint64_t* a, std::size_t nwords);

/// Pairwise-consistency row: for j in [0, count), set bit j of `row` iff
///   || (x_i - x_j) - (y_i - y_j) ||^2 <= eps2
/// where point k of cloud X is (xx[k], xy[k], xz[k]) and likewise for Y.
/// Bit i (the self pair, distance 0) is set too; callers clear it.
/// `row` must hold ceil(count / 64) words and is fully overwritten.
void consistency_row(const double* xx, const double* xy, const double* xz,
                     const double* yx, const double* yy, const double* yz,
                     std::size_t count, std::size_t i, double eps2,
                     std::uint64_t* row);

namespace scalar {
std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b,
                           std::size_t nwords);
bool and_any(const std::uint64_t* a, const std::uint64_t* b,
             std::size_t nwords);
void and_store(const std::uint64_t* a, const std::uint64_t* b,
               std::uint64_t* out, std::size_t nwords);
std::uint64_t popcount(const std::uint64_t* a, std::size_t nwords);
void consistency_row(const double* xx, const double* xy, const double* xz,
                     const double* yx, const double* yy, const double* yz,
                     std::size_t count, std::size_t i, double eps2,
                     std::uint64_t* row);
}  // namespace scalar

#if defined(PCM_HAVE_AVX2_TU)
namespace avx2 {
std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b,
                           std::size_t nwords);
bool and_any(const std::uint64_t* a, const std::uint64_t* b,
             std::size_t nwords);
void and_store(const std::uint64_t* a, const std::uint64_t* b,
               std::uint64_t* out, std::size_t nwords);
std::uint64_t popcount(const std::uint64_t* a, std::size_t nwords);
void consistency_row(const double* xx, const double* xy, const double* xz,
                     const double* yx, const double* yy, const double* yz,
                     std::size_t count, std::size_t i, double eps2,
                     std::uint64_t* row);
}  // namespace avx2
#endif

}  // namespace pcm::kernels
