#include "pcm/kernels.hpp"

#include <stdexcept>

namespace pcm::kernels {
namespace {

struct Dispatch {
  Isa isa;
  std::uint64_t (*and_popcount)(const std::uint64_t*, const std::uint64_t*,
                                std::size_t);
  bool (*and_any)(const std::uint64_t*, const std::uint64_t*, std::size_t);
  void (*and_store)(const std::uint64_t*, const std::uint64_t*,
                    std::uint64_t*, std::size_t);
  std::uint64_t (*popcount)(const std::uint64_t*, std::size_t);
  void (*consistency_row)(const double*, const double*, const double*,
                          const double*, const double*, const double*,
                          std::size_t, std::size_t, double, std::uint64_t*);
};

constexpr Dispatch kScalar = {
    Isa::Scalar,        scalar::and_popcount, scalar::and_any,
    scalar::and_store,  scalar::popcount,     scalar::consistency_row,
};

#if defined(PCM_HAVE_AVX2_TU)
constexpr Dispatch kAvx2 = {
    Isa::Avx2,        avx2::and_popcount, avx2::and_any,
    avx2::and_store,  avx2::popcount,     avx2::consistency_row,
};
#endif

bool avx2_available() {
#if defined(PCM_HAVE_AVX2_TU)
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

Dispatch pick(Isa isa) {
#if defined(PCM_HAVE_AVX2_TU)
  if (isa == Isa::Avx2) return kAvx2;
#endif
  if (isa == Isa::Avx2) {
    throw std::runtime_error("AVX2 kernels not compiled into this build");
  }
  return kScalar;
}

Dispatch& table() {
  static Dispatch d = pick(avx2_available() ? Isa::Avx2 : Isa::Scalar);
  return d;
}

}  // namespace

Isa active_isa() { return table().isa; }

Isa best_isa() { return avx2_available() ? Isa::Avx2 : Isa::Scalar; }

void force_isa(Isa isa) {
  if (isa == Isa::Avx2 && !avx2_available()) {
    throw std::runtime_error("AVX2 not supported on this CPU");
  }
  table() = pick(isa);
}

std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b,
                           std::size_t nwords) {
  return table().and_popcount(a, b, nwords);
}

bool and_any(const std::uint64_t* a, const std::uint64_t* b,
             std::size_t nwords) {
  return table().and_any(a, b, nwords);
}

void and_store(const std::uint64_t* a, const std::uint64_t* b,
               std::uint64_t* out, std::size_t nwords) {
  table().and_store(a, b, out, nwords);
}

std::uint64_t popcount(const std::uint64_t* a, std::size_t nwords) {
  return table().popcount(a, nwords);
}

void consistency_row(const double* xx, const double* xy, const double* xz,
                     const double* yx, const double* yy, const double* yz,
                     std::size_t count, std::size_t i, double eps2,
                     std::uint64_t* row) {
  table().consistency_row(xx, xy, xz, yx, yy, yz, count, i, eps2, row);
}

}  // namespace pcm::kernels
