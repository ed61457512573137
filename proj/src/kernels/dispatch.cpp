#include <cstdlib>
#include <cstring>

#include "hexcube/kernels.hpp"

namespace hexcube::kernels {

const char* isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

bool cpu_supports(Isa isa) {
  if (isa == Isa::scalar) return true;
#if HEXCUBE_HAVE_AVX2_KERNELS && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa preferred_isa() {
  const char* forced = std::getenv("HEXCUBE_ISA");
  if (forced != nullptr && std::strcmp(forced, "scalar") == 0) return Isa::scalar;
  return cpu_supports(Isa::avx2) ? Isa::avx2 : Isa::scalar;
}

KernelTable table_for(Isa isa) {
#if HEXCUBE_HAVE_AVX2_KERNELS
  if (isa == Isa::avx2 && cpu_supports(Isa::avx2)) {
    return {Isa::avx2, &avx2::five_gonal_row, &avx2::hamming_row};
  }
#endif
  return {Isa::scalar, &scalar::five_gonal_row, &scalar::hamming_row};
}

const KernelTable& dispatch() {
  static const KernelTable table = table_for(preferred_isa());
  return table;
}

}  // namespace hexcube::kernels
