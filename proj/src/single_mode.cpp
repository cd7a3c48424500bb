#include "cvnet/single_mode.hpp"

#include <cmath>

namespace cvnet {

bool SingleModeCM::pure() const {
  return std::abs(a * a - std::norm(b) - 0.25) <= kPureTolerance;
}

SingleModeCM make_state(double a, double b_mag, double b_arg) {
  if (!std::isfinite(a) || !std::isfinite(b_mag) || !std::isfinite(b_arg)) {
    throw NumericalFailure("make_state: non-finite input");
  }
  if (a <= 0.0) {
    throw NonPositive("make_state: diagonal entry a must be positive");
  }
  if (b_mag < 0.0) {
    throw NonPositive("make_state: off-diagonal magnitude must be nonnegative");
  }
  if (a * a - b_mag * b_mag < 0.25 - kPureTolerance) {
    throw UncertaintyViolation("make_state: a^2 - |b|^2 < 1/4");
  }
  return SingleModeCM{a, std::polar(b_mag, b_arg)};
}

SingleModeCM pure_state(double b_mag, double b_arg) {
  if (!std::isfinite(b_mag) || !std::isfinite(b_arg)) {
    throw NumericalFailure("pure_state: non-finite input");
  }
  if (b_mag < 0.0) {
    throw NonPositive("pure_state: off-diagonal magnitude must be nonnegative");
  }
  return SingleModeCM{std::sqrt(0.25 + b_mag * b_mag),
                      std::polar(b_mag, b_arg)};
}

SpectralSummary spectral(const SingleModeCM& state) {
  const double mag = std::abs(state.b);
  SpectralSummary s;
  s.lambda_min = state.a - mag;
  s.lambda_max = state.a + mag;
  s.nonclassicality = -std::log2(2.0 * s.lambda_min);
  s.nonclassical_depth = std::max(0.0, 0.5 - s.lambda_min);
  return s;
}

}  // namespace cvnet
