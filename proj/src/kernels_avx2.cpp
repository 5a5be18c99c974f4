#include "pcm/kernels.hpp"

#if defined(PCM_HAVE_AVX2_TU)

#include <immintrin.h>

#include <bit>

// AVX2 variants. Arithmetic mirrors the scalar reference exactly: the
// consistency row uses explicit sub/mul/add intrinsics (no FMA) in the
// same association order, so results are bit-identical per element.

namespace pcm::kernels::avx2 {

std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b,
                           std::size_t nwords) {
  std::uint64_t total = 0;
  std::size_t w = 0;
  for (; w + 4 <= nwords; w += 4) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + w));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + w));
    const __m256i vand = _mm256_and_si256(va, vb);
    alignas(32) std::uint64_t buf[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(buf), vand);
    total += static_cast<std::uint64_t>(std::popcount(buf[0]));
    total += static_cast<std::uint64_t>(std::popcount(buf[1]));
    total += static_cast<std::uint64_t>(std::popcount(buf[2]));
    total += static_cast<std::uint64_t>(std::popcount(buf[3]));
  }
  for (; w < nwords; ++w) {
    total += static_cast<std::uint64_t>(std::popcount(a[w] & b[w]));
  }
  return total;
}

bool and_any(const std::uint64_t* a, const std::uint64_t* b,
             std::size_t nwords) {
  std::size_t w = 0;
  for (; w + 4 <= nwords; w += 4) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + w));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + w));
    if (!_mm256_testz_si256(va, vb)) return true;
  }
  for (; w < nwords; ++w) {
    if (a[w] & b[w]) return true;
  }
  return false;
}

void and_store(const std::uint64_t* a, const std::uint64_t* b,
               std::uint64_t* out, std::size_t nwords) {
  std::size_t w = 0;
  for (; w + 4 <= nwords; w += 4) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + w));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + w));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + w),
                        _mm256_and_si256(va, vb));
  }
  for (; w < nwords; ++w) out[w] = a[w] & b[w];
}

std::uint64_t popcount(const std::uint64_t* a, std::size_t nwords) {
  std::uint64_t total = 0;
  for (std::size_t w = 0; w < nwords; ++w) {
    total += static_cast<std::uint64_t>(std::popcount(a[w]));
  }
  return total;
}

void consistency_row(const double* xx, const double* xy, const double* xz,
                     const double* yx, const double* yy, const double* yz,
                     std::size_t count, std::size_t i, double eps2,
                     std::uint64_t* row) {
  const __m256d xix = _mm256_set1_pd(xx[i]);
  const __m256d xiy = _mm256_set1_pd(xy[i]);
  const __m256d xiz = _mm256_set1_pd(xz[i]);
  const __m256d yix = _mm256_set1_pd(yx[i]);
  const __m256d yiy = _mm256_set1_pd(yy[i]);
  const __m256d yiz = _mm256_set1_pd(yz[i]);
  const __m256d veps2 = _mm256_set1_pd(eps2);

  const std::size_t nwords = (count + 63) / 64;
  for (std::size_t w = 0; w < nwords; ++w) row[w] = 0;

  std::size_t j = 0;
  for (; j + 4 <= count; j += 4) {
    const __m256d dx = _mm256_sub_pd(_mm256_sub_pd(xix, _mm256_loadu_pd(xx + j)),
                                     _mm256_sub_pd(yix, _mm256_loadu_pd(yx + j)));
    const __m256d dy = _mm256_sub_pd(_mm256_sub_pd(xiy, _mm256_loadu_pd(xy + j)),
                                     _mm256_sub_pd(yiy, _mm256_loadu_pd(yy + j)));
    const __m256d dz = _mm256_sub_pd(_mm256_sub_pd(xiz, _mm256_loadu_pd(xz + j)),
                                     _mm256_sub_pd(yiz, _mm256_loadu_pd(yz + j)));
    const __m256d d2 = _mm256_add_pd(
        _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy)),
        _mm256_mul_pd(dz, dz));
    const __m256d cmp = _mm256_cmp_pd(d2, veps2, _CMP_LE_OQ);
    const std::uint64_t mask =
        static_cast<std::uint64_t>(_mm256_movemask_pd(cmp));
    if (mask) row[j >> 6] |= mask << (j & 63);
  }
  for (; j < count; ++j) {
    const double dx = (xx[i] - xx[j]) - (yx[i] - yx[j]);
    const double dy = (xy[i] - xy[j]) - (yy[i] - yy[j]);
    const double dz = (xz[i] - xz[j]) - (yz[i] - yz[j]);
    const double d2 = ((dx * dx) + (dy * dy)) + (dz * dz);
    if (d2 <= eps2) row[j >> 6] |= std::uint64_t{1} << (j & 63);
  }
}

}  // namespace pcm::kernels::avx2

#endif  // PCM_HAVE_AVX2_TU
