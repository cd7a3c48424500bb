#pragma once

#include <cmath>
#include <numbers>

#include "cvnet/entanglement.hpp"
#include "cvnet/network.hpp"
#include "cvnet/rng.hpp"

// Shared reference states and small builders for the test suites. The three
// pure states and the pi/4 splitter reproduce the reference figure setup.
namespace fixtures {

inline cvnet::SingleModeCM state_a() { return cvnet::pure_state(0.3, 0.0); }
inline cvnet::SingleModeCM state_b() { return cvnet::pure_state(0.5, 0.0); }
inline cvnet::SingleModeCM state_c() { return cvnet::pure_state(0.7, 0.0); }

inline constexpr double kTheta1 = std::numbers::pi / 4.0;

// Two-mode output of one splitter on (A, B).
inline cvnet::MultiModeCM two_mode_output(double theta = kTheta1,
                                          double phi = 0.0) {
  const auto cm =
      cvnet::MultiModeCM::from_modes({{"A", state_a()}, {"B", state_b()}});
  return cvnet::apply_bs(cm, cvnet::BeamSplitter(theta, phi, "A", "B"));
}

// Three-mode output of the two-splitter chain: BS1 on (A, B), BS2 on (B, C).
inline cvnet::MultiModeCM three_mode_output(double theta2, double phi2 = 1.0) {
  auto cm = cvnet::MultiModeCM::from_modes(
      {{"A", state_a()}, {"B", state_b()}, {"C", state_c()}});
  cm = cvnet::apply_bs(cm, cvnet::BeamSplitter(kTheta1, 0.0, "A", "B"));
  return cvnet::apply_bs(cm, cvnet::BeamSplitter(theta2, phi2, "B", "C"));
}

inline cvnet::SingleModeCM random_pure(cvnet::Rng& rng) {
  return cvnet::pure_state(rng.uniform(0.0, 1.0), rng.angle());
}

inline cvnet::SingleModeCM random_mixed(cvnet::Rng& rng) {
  auto s = random_pure(rng);
  s.a += 0.5 * (1.0 - rng.uniform());  // inflation in (0, 0.5]
  return s;
}

// Random two-mode splitter output with matched phase, pure or mixed inputs.
inline cvnet::MultiModeCM random_pair_output(cvnet::Rng& rng, bool pure_inputs,
                                             double* theta_out = nullptr) {
  const auto sa = pure_inputs ? random_pure(rng) : random_mixed(rng);
  const auto sb = pure_inputs ? random_pure(rng) : random_mixed(rng);
  const double theta = rng.mixing_angle();
  if (theta_out) *theta_out = theta;
  const auto cm = cvnet::MultiModeCM::from_modes({{"A", sa}, {"B", sb}});
  const double phi = cvnet::matched_phase(sa.b, sb.b);
  return cvnet::apply_bs(cm, cvnet::BeamSplitter(theta, phi, "A", "B"));
}

}  // namespace fixtures
