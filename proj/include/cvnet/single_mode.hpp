#pragma once

#include <complex>

#include "cvnet/errors.hpp"

namespace cvnet {

// Purity predicate tolerance: |a^2 - |b|^2 - 1/4| <= kPureTolerance.
inline constexpr double kPureTolerance = 1e-9;

// Quantifier magnitudes below this are reported as exactly zero.
inline constexpr double kZeroThreshold = 1e-12;

// 2x2 bosonic covariance block [[a, b], [conj(b), a]] of one optical mode.
// Vacuum is a = 1/2, b = 0; physical states satisfy a^2 - |b|^2 >= 1/4.
struct SingleModeCM {
  double a = 0.5;
  std::complex<double> b{0.0, 0.0};

  bool pure() const;
};

// Eigenvalues of the block together with the nonclassicality quantities
// derived from the minimum one.
struct SpectralSummary {
  double lambda_min = 0.0;          // a - |b|
  double lambda_max = 0.0;          // a + |b|
  double nonclassicality = 0.0;     // N = -log2(2 lambda_min), bits
  double nonclassical_depth = 0.0;  // tau = max(0, 1/2 - lambda_min)
};

// Validated construction with b = b_mag * exp(i b_arg).
SingleModeCM make_state(double a, double b_mag, double b_arg);

// Pure state for the given off-diagonal: a = sqrt(1/4 + b_mag^2).
SingleModeCM pure_state(double b_mag, double b_arg);

SpectralSummary spectral(const SingleModeCM& state);

}  // namespace cvnet
