#include <bit>

#include "hexcube/kernels.hpp"

namespace hexcube::kernels::scalar {

std::size_t five_gonal_row(const std::uint16_t* ra, const std::uint16_t* rb, const std::uint16_t* rx,
                           const std::uint16_t* ry, int base, std::size_t begin, std::size_t end,
                           std::uint32_t* hits) {
  std::size_t count = 0;
  for (std::size_t z = begin; z < end; ++z) {
    const int v = base + int(rx[z]) + int(ry[z]) - int(ra[z]) - int(rb[z]);
    if (v > 0) hits[count++] = static_cast<std::uint32_t>(z);
  }
  return count;
}

std::size_t hamming_row(const std::uint64_t* planes, std::size_t words, std::size_t stride, std::size_t i,
                        const std::uint16_t* drow, int scale, std::size_t begin, std::size_t end) {
  for (std::size_t j = begin; j < end; ++j) {
    int h = 0;
    for (std::size_t w = 0; w < words; ++w) h += std::popcount(planes[w * stride + i] ^ planes[w * stride + j]);
    if (h != scale * int(drow[j])) return j;
  }
  return end;
}

}  // namespace hexcube::kernels::scalar
