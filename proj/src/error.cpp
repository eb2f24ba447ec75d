#include "qbertrand/error.hpp"

namespace qbertrand {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_parameter: return "InvalidParameter";
    case Errc::negative_discriminant: return "NegativeDiscriminant";
    case Errc::not_normalizable: return "NotNormalizable";
    case Errc::divergent_norm: return "DivergentNorm";
    case Errc::grid_too_coarse: return "GridTooCoarse";
    case Errc::no_sign_change: return "NoSignChange";
    case Errc::wrong_alpha: return "WrongAlpha";
    case Errc::degenerate_coefficient: return "DegenerateCoefficient";
    case Errc::complex_roots: return "ComplexRoots";
    case Errc::turning_point_on_grid: return "TurningPointOnGrid";
  }
  return "Unknown";
}

}  // namespace qbertrand
