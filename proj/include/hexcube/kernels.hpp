#pragma once

// Inner loops of the metric checks.  Each kernel has a scalar reference
// version and, on x86-64, an AVX2 version compiled in its own translation
// unit.  `dispatch()` picks the widest variant the running CPU supports;
// the equivalence tests call the variants directly.

#include <cstddef>
#include <cstdint>

namespace hexcube::kernels {

enum class Isa { scalar, avx2 };

const char* isa_name(Isa isa);
bool cpu_supports(Isa isa);
/// Widest supported ISA, unless HEXCUBE_ISA=scalar forces the reference path.
Isa preferred_isa();

/// Five-gonal row scan.  For z in [begin, end) tests
///   base + rx[z] + ry[z] - ra[z] - rb[z] > 0
/// and writes the passing z, ascending, to `hits` (capacity end - begin).
/// Returns the number of hits.
using FiveGonalRowFn = std::size_t (*)(const std::uint16_t* ra, const std::uint16_t* rb,
                                       const std::uint16_t* rx, const std::uint16_t* ry, int base,
                                       std::size_t begin, std::size_t end, std::uint32_t* hits);

/// Scaled Hamming check of one vertex against a range.  `planes` holds
/// `words` bit planes of `stride` 64-bit codes each (plane w, vertex v at
/// planes[w * stride + v]).  Returns the first j in [begin, end) with
///   popcount(code(i) ^ code(j)) != scale * drow[j], or `end`.
using HammingRowFn = std::size_t (*)(const std::uint64_t* planes, std::size_t words, std::size_t stride,
                                     std::size_t i, const std::uint16_t* drow, int scale, std::size_t begin,
                                     std::size_t end);

namespace scalar {
std::size_t five_gonal_row(const std::uint16_t* ra, const std::uint16_t* rb, const std::uint16_t* rx,
                           const std::uint16_t* ry, int base, std::size_t begin, std::size_t end,
                           std::uint32_t* hits);
std::size_t hamming_row(const std::uint64_t* planes, std::size_t words, std::size_t stride, std::size_t i,
                        const std::uint16_t* drow, int scale, std::size_t begin, std::size_t end);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define HEXCUBE_HAVE_AVX2_KERNELS 1
namespace avx2 {
std::size_t five_gonal_row(const std::uint16_t* ra, const std::uint16_t* rb, const std::uint16_t* rx,
                           const std::uint16_t* ry, int base, std::size_t begin, std::size_t end,
                           std::uint32_t* hits);
std::size_t hamming_row(const std::uint64_t* planes, std::size_t words, std::size_t stride, std::size_t i,
                        const std::uint16_t* drow, int scale, std::size_t begin, std::size_t end);
}  // namespace avx2
#else
#define HEXCUBE_HAVE_AVX2_KERNELS 0
#endif

struct KernelTable {
  Isa isa;
  FiveGonalRowFn five_gonal_row;
  HammingRowFn hamming_row;
};

KernelTable table_for(Isa isa);
/// Table for preferred_isa(), resolved once.
const KernelTable& dispatch();

}  // namespace hexcube::kernels
