#include "pcm/kernels.hpp"

#include <bit>

namespace pcm::kernels::scalar {

std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b,
                           std::size_t nwords) {
  std::uint64_t total = 0;
  for (std::size_t w = 0; w < nwords; ++w) {
    total += static_cast<std::uint64_t>(std::popcount(a[w] & b[w]));
  }
  return total;
}

bool and_any(const std::uint64_t* a, const std::uint64_t* b,
             std::size_t nwords) {
  for (std::size_t w = 0; w < nwords; ++w) {
    if (a[w] & b[w]) return true;
  }
  return false;
}

void and_store(const std::uint64_t* a, const std::uint64_t* b,
               std::uint64_t* out, std::size_t nwords) {
  for (std::size_t w = 0; w < nwords; ++w) out[w] = a[w] & b[w];
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
  const double xix = xx[i], xiy = xy[i], xiz = xz[i];
  const double yix = yx[i], yiy = yy[i], yiz = yz[i];
  const std::size_t nwords = (count + 63) / 64;
  for (std::size_t w = 0; w < nwords; ++w) row[w] = 0;
  for (std::size_t j = 0; j < count; ++j) {
    const double dx = (xix - xx[j]) - (yix - yx[j]);
    const double dy = (xiy - xy[j]) - (yiy - yy[j]);
    const double dz = (xiz - xz[j]) - (yiz - yz[j]);
    const double d2 = ((dx * dx) + (dy * dy)) + (dz * dz);
    if (d2 <= eps2) row[j >> 6] |= std::uint64_t{1} << (j & 63);
  }
}

}  // namespace pcm::kernels::scalar
