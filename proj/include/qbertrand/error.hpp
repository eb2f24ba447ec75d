#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qbertrand {

enum class Errc {
  invalid_parameter,
  negative_discriminant,
  not_normalizable,
  divergent_norm,
  grid_too_coarse,
  no_sign_change,
  wrong_alpha,
  degenerate_coefficient,
  complex_roots,
  turning_point_on_grid,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it onto an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace qbertrand
