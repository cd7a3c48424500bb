#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "cvnet/covariance.hpp"

namespace cvnet {

// Lossless two-mode beam splitter with transmittance cos^2(theta) and phase
// shift phi. The first listed mode takes the top row of the 4x4 unitary;
// swapping the pair is equivalent to flipping the sign of theta's effects.
class BeamSplitter {
 public:
  BeamSplitter(double theta, double phi, std::string mode_a,
               std::string mode_b);

  double theta() const { return theta_; }
  double phi() const { return phi_; }
  const std::string& mode_a() const { return mode_a_; }
  const std::string& mode_b() const { return mode_b_; }
  bool couples(const std::string& x, const std::string& y) const;

 private:
  double theta_;
  double phi_;
  std::string mode_a_;
  std::string mode_b_;
};

enum class Metric { LogNeg, Xi, Sn, Contangle, Residual };

const char* metric_name(Metric m);

struct ReportRequest {
  Metric metric;
  std::vector<std::string> party_a;
  std::vector<std::string> party_b;
};

// Input states plus an ordered splitter list plus requested reports.
struct NetworkSpec {
  std::vector<std::pair<std::string, SingleModeCM>> inputs;
  std::vector<BeamSplitter> splitters;
  std::vector<ReportRequest> reports;

  // Checks label references, report bipartitions, and sn applicability.
  void validate() const;
  bool has_input(const std::string& label) const;
};

// Network execution trace. steps[i] is the state after splitter i; the final
// state is steps.back() (or the initial assembly when there are no splitters).
struct NetworkRun {
  MultiModeCM initial;
  std::vector<MultiModeCM> steps;

  const MultiModeCM& final_cm() const {
    return steps.empty() ? initial : steps.back();
  }
  const MultiModeCM& before_step(int i) const {
    return i == 0 ? initial : steps[i - 1];
  }
};

// The 4x4 beam-splitter matrix in bosonic ordering (a1*, a1, a2*, a2).
Eigen::Matrix4cd bs_unitary(double theta, double phi);

// V' = U~^dag V U~ with the unitary embedded on the two target modes.
// Preserves det, physicality, and global purity.
MultiModeCM apply_bs(const MultiModeCM& cm, const BeamSplitter& bs);

NetworkRun run_network(const NetworkSpec& spec);

// Sub-CM on the kept modes; label order of the source is preserved.
MultiModeCM partial_trace(const MultiModeCM& cm,
                          const std::vector<std::string>& keep);

// Phase-matching rule phi = [arg(prev) - arg(next)] / 2, principal branch.
// Zero by convention when either off-diagonal vanishes.
double matched_phase(std::complex<double> prev_offdiag,
                     std::complex<double> next_offdiag);

}  // namespace cvnet
