#include "brauer/error.hpp"

namespace brauer {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "INVALID_ARGUMENT";
    case Errc::index_out_of_range: return "INDEX_OUT_OF_RANGE";
    case Errc::symmetry_broken: return "SYMMETRY_BROKEN";
    case Errc::disconnected: return "DISCONNECTED";
    case Errc::kernel_dimension: return "KERNEL_DIMENSION";
    case Errc::mixed_signs: return "MIXED_SIGNS";
    case Errc::reconstruction_failed: return "RECONSTRUCTION_FAILED";
    case Errc::verification_failed: return "VERIFICATION_FAILED";
    case Errc::cache_corrupt: return "CACHE_CORRUPT";
    case Errc::odd_product: return "ODD_PRODUCT";
    case Errc::non_integer: return "NON_INTEGER";
  }
  return "UNKNOWN";
}

}  // namespace brauer
