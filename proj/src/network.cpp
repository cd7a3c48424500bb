#include "cvnet/network.hpp"

#include <cmath>
#include <numbers>
#include <set>

namespace cvnet {
namespace {

// Principal range (-pi, pi]; phases are 2pi-periodic so this is exact.
double wrap_phase(double phi) {
  double w = std::remainder(phi, 2.0 * std::numbers::pi);
  if (w <= -std::numbers::pi) w += 2.0 * std::numbers::pi;
  return w;
}

}  // namespace

BeamSplitter::BeamSplitter(double theta, double phi, std::string mode_a,
                           std::string mode_b)
    : theta_(theta),
      phi_(wrap_phase(phi)),
      mode_a_(std::move(mode_a)),
      mode_b_(std::move(mode_b)) {
  if (!std::isfinite(theta) || theta < 0.0 || theta > std::numbers::pi) {
    throw InvalidParameter("beam splitter theta must lie in [0, pi]");
  }
  if (!std::isfinite(phi)) {
    throw InvalidParameter("beam splitter phi must be finite");
  }
  if (mode_a_ == mode_b_) {
    throw DuplicateMode("beam splitter '" + mode_a_ +
                        "' couples a mode with itself");
  }
}

bool BeamSplitter::couples(const std::string& x, const std::string& y) const {
  return (mode_a_ == x && mode_b_ == y) || (mode_a_ == y && mode_b_ == x);
}

const char* metric_name(Metric m) {
  switch (m) {
    case Metric::LogNeg:
      return "logneg";
    case Metric::Xi:
      return "xi";
    case Metric::Sn:
      return "sn";
    case Metric::Contangle:
      return "contangle";
    case Metric::Residual:
      return "residual";
  }
  return "?";
}

bool NetworkSpec::has_input(const std::string& label) const {
  for (const auto& [name, state] : inputs) {
    if (name == label) return true;
  }
  return false;
}

void NetworkSpec::validate() const {
  if (inputs.empty()) {
    throw ShapeMismatch("network has no input modes");
  }
  std::set<std::string> declared;
  for (const auto& [name, state] : inputs) {
    if (!declared.insert(name).second) {
      throw DuplicateMode("duplicate input mode '" + name + "'");
    }
  }
  for (const auto& bs : splitters) {
    if (!declared.count(bs.mode_a())) {
      throw UnknownLabel("beam splitter references unknown mode '" +
                         bs.mode_a() + "'");
    }
    if (!declared.count(bs.mode_b())) {
      throw UnknownLabel("beam splitter references unknown mode '" +
                         bs.mode_b() + "'");
    }
  }
  for (const auto& report : reports) {
    if (report.party_a.empty() || report.party_b.empty()) {
      throw ShapeMismatch("report bipartition has an empty side");
    }
    std::set<std::string> a_side;
    for (const auto& l : report.party_a) {
      if (!declared.count(l)) {
        throw UnknownLabel("report references unknown mode '" + l + "'");
      }
      if (!a_side.insert(l).second) {
        throw DuplicateMode("report lists mode '" + l + "' twice");
      }
    }
    for (const auto& l : report.party_b) {
      if (!declared.count(l)) {
        throw UnknownLabel("report references unknown mode '" + l + "'");
      }
      if (a_side.count(l)) {
        throw ShapeMismatch("report bipartition is not disjoint: mode '" + l +
                            "' appears on both sides");
      }
      if (!a_side.insert("\x01" + l).second) {
        throw DuplicateMode("report lists mode '" + l + "' twice");
      }
    }
    if (report.metric == Metric::Sn) {
      if (report.party_a.size() != 1 || report.party_b.size() != 1) {
        throw InvalidParameter(
            "sn reports require a single mode on each side");
      }
      bool coupled = false;
      for (const auto& bs : splitters) {
        coupled = coupled || bs.couples(report.party_a[0], report.party_b[0]);
      }
      if (!coupled) {
        throw InvalidParameter(
            "sn report requires a beam splitter coupling exactly these two "
            "modes");
      }
    }
    if (report.metric == Metric::Residual &&
        (report.party_a.size() != 1 || report.party_b.size() != 2)) {
      throw InvalidParameter(
          "residual reports take one mode versus exactly two modes");
    }
  }
}

Eigen::Matrix4cd bs_unitary(double theta, double phi) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const std::complex<double> e = std::polar(1.0, phi);
  Eigen::Matrix4cd u = Eigen::Matrix4cd::Zero();
  u(0, 0) = c;
  u(0, 2) = s * e;
  u(1, 1) = c;
  u(1, 3) = s * std::conj(e);
  u(2, 0) = -s * std::conj(e);
  u(2, 2) = c;
  u(3, 1) = -s * e;
  u(3, 3) = c;
  return u;
}

MultiModeCM apply_bs(const MultiModeCM& cm, const BeamSplitter& bs) {
  const int i = cm.index_of(bs.mode_a());
  const int j = cm.index_of(bs.mode_b());
  const Eigen::Index dim = cm.quadrature().rows();
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
  const Eigen::Matrix4cd u4 = bs_unitary(bs.theta(), bs.phi());
  const int idx[4] = {2 * i, 2 * i + 1, 2 * j, 2 * j + 1};
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      u(idx[r], idx[c]) = u4(r, c);
    }
  }
  const Eigen::MatrixXcd out = u.adjoint() * cm.bosonic() * u;
  return MultiModeCM::from_bosonic(0.5 * (out + out.adjoint()), cm.labels());
}

NetworkRun run_network(const NetworkSpec& spec) {
  spec.validate();
  NetworkRun run{MultiModeCM::from_modes(spec.inputs), {}};
  run.steps.reserve(spec.splitters.size());
  const MultiModeCM* current = &run.initial;
  for (const auto& bs : spec.splitters) {
    run.steps.push_back(apply_bs(*current, bs));
    current = &run.steps.back();
  }
  return run;
}

MultiModeCM partial_trace(const MultiModeCM& cm,
                          const std::vector<std::string>& keep) {
  if (keep.empty()) {
    throw EmptyKeepSet("partial_trace: keep set is empty");
  }
  std::set<int> kept;
  for (const auto& label : keep) {
    kept.insert(cm.index_of(label));
  }
  const int m = static_cast<int>(kept.size());
  Eigen::VectorXi rows(2 * m);
  std::vector<std::string> labels;
  labels.reserve(m);
  int at = 0;
  for (int k : kept) {  // std::set iterates ascending: source order preserved
    rows(at++) = 2 * k;
    rows(at++) = 2 * k + 1;
    labels.push_back(cm.labels()[k]);
  }
  Eigen::MatrixXd sub = cm.quadrature()(rows, rows);
  return MultiModeCM::from_quadrature(std::move(sub), std::move(labels));
}

double matched_phase(std::complex<double> prev_offdiag,
                     std::complex<double> next_offdiag) {
  if (prev_offdiag == std::complex<double>(0.0, 0.0) ||
      next_offdiag == std::complex<double>(0.0, 0.0)) {
    return 0.0;
  }
  return 0.5 * (std::arg(prev_offdiag) - std::arg(next_offdiag));
}

}  // namespace cvnet
