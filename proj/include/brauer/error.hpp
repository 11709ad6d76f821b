#pragma once

#include <stdexcept>
#include <string>

namespace brauer {

enum class Errc {
  invalid_argument,
  index_out_of_range,
  symmetry_broken,
  disconnected,
  kernel_dimension,
  mixed_signs,
  reconstruction_failed,
  verification_failed,
  cache_corrupt,
  odd_product,
  non_integer,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace brauer
