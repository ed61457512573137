// Built with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include "hexcube/kernels.hpp"

namespace hexcube::kernels::avx2 {

std::size_t five_gonal_row(const std::uint16_t* ra, const std::uint16_t* rb, const std::uint16_t* rx,
                           const std::uint16_t* ry, int base, std::size_t begin, std::size_t end,
                           std::uint32_t* hits) {
  std::size_t count = 0;
  std::size_t z = begin;
  const __m256i vbase = _mm256_set1_epi32(base);
  const __m256i zero = _mm256_setzero_si256();
  auto widen = [](const std::uint16_t* p) {
    return _mm256_cvtepu16_epi32(_mm_loadu_si128(reinterpret_cast<const __m128i*>(p)));
  };
  for (; z + 8 <= end; z += 8) {
    __m256i v = _mm256_add_epi32(vbase, _mm256_add_epi32(widen(rx + z), widen(ry + z)));
    v = _mm256_sub_epi32(v, _mm256_add_epi32(widen(ra + z), widen(rb + z)));
    unsigned mask = static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpgt_epi32(v, zero))));
    while (mask != 0) {
      hits[count++] = static_cast<std::uint32_t>(z + __builtin_ctz(mask));
      mask &= mask - 1;
    }
  }
  for (; z < end; ++z) {
    const int v = base + int(rx[z]) + int(ry[z]) - int(ra[z]) - int(rb[z]);
    if (v > 0) hits[count++] = static_cast<std::uint32_t>(z);
  }
  return count;
}

namespace {

// Per-64-bit-lane popcount: nibble lookup, then byte sums via SAD.
inline __m256i popcount_epi64(__m256i x) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4, 0, 1, 1, 2, 1, 2, 2, 3, 1,
                                       2, 2, 3, 2, 3, 3, 4);
  const __m256i low = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(x, low);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(x, 4), low);
  const __m256i bytes = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
  return _mm256_sad_epu8(bytes, _mm256_setzero_si256());
}

}  // namespace

std::size_t hamming_row(const std::uint64_t* planes, std::size_t words, std::size_t stride, std::size_t i,
                        const std::uint16_t* drow, int scale, std::size_t begin, std::size_t end) {
  std::size_t j = begin;
  const __m256i vscale = _mm256_set1_epi64x(scale);
  for (; j + 4 <= end; j += 4) {
    __m256i acc = _mm256_setzero_si256();
    for (std::size_t w = 0; w < words; ++w) {
      const std::uint64_t* plane = planes + w * stride;
      const __m256i x = _mm256_xor_si256(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(plane + j)),
                                         _mm256_set1_epi64x(static_cast<long long>(plane[i])));
      acc = _mm256_add_epi64(acc, popcount_epi64(x));
    }
    const __m256i d = _mm256_cvtepu16_epi64(_mm_loadl_epi64(reinterpret_cast<const __m128i*>(drow + j)));
    const __m256i want = _mm256_mul_epu32(d, vscale);
    const unsigned ok = static_cast<unsigned>(_mm256_movemask_pd(_mm256_castsi256_pd(_mm256_cmpeq_epi64(acc, want))));
    if (ok != 0xF) return j + __builtin_ctz(~ok & 0xF);
  }
  return scalar::hamming_row(planes, words, stride, i, drow, scale, j, end);
}

}  // namespace hexcube::kernels::avx2
