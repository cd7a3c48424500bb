#include "cvnet/covariance.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace cvnet {
namespace {

constexpr double kStructureTolerance = 1e-12;

void require_even_square(Eigen::Index rows, Eigen::Index cols,
                         const char* what) {
  if (rows != cols || rows % 2 != 0 || rows == 0) {
    throw ShapeMismatch(std::string(what) +
                        ": covariance matrix must be square with even, "
                        "positive dimension");
  }
}

// Block-diagonal per-mode change of basis S with S_k = [[1, i], [1, -i]]/sqrt2.
Eigen::MatrixXcd mode_basis(Eigen::Index dim) {
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index k = 0; k < dim / 2; ++k) {
    s(2 * k, 2 * k) = r;
    s(2 * k, 2 * k + 1) = std::complex<double>(0.0, r);
    s(2 * k + 1, 2 * k) = r;
    s(2 * k + 1, 2 * k + 1) = std::complex<double>(0.0, -r);
  }
  return s;
}

}  // namespace

Eigen::MatrixXcd bosonic_from_quadrature(const Eigen::MatrixXd& quad) {
  require_even_square(quad.rows(), quad.cols(), "bosonic_from_quadrature");
  const Eigen::MatrixXcd s = mode_basis(quad.rows());
  return s * quad * s.adjoint();
}

Eigen::MatrixXd quadrature_from_bosonic(const Eigen::MatrixXcd& bosonic) {
  require_even_square(bosonic.rows(), bosonic.cols(),
                      "quadrature_from_bosonic");
  const Eigen::MatrixXcd s = mode_basis(bosonic.rows());
  const Eigen::MatrixXcd g = s.adjoint() * bosonic * s;
  const double imag_residue = g.imag().cwiseAbs().maxCoeff();
  if (imag_residue > kStructureTolerance) {
    throw NumericalFailure(
        "quadrature_from_bosonic: matrix lacks bosonic CM structure "
        "(imaginary residue " +
        std::to_string(imag_residue) + ")");
  }
  return g.real();
}

MultiModeCM::MultiModeCM(Eigen::MatrixXd quad, std::vector<std::string> labels)
    : quad_(std::move(quad)), labels_(std::move(labels)) {}

MultiModeCM MultiModeCM::from_quadrature(Eigen::MatrixXd quad,
                                         std::vector<std::string> labels) {
  require_even_square(quad.rows(), quad.cols(), "from_quadrature");
  if (static_cast<Eigen::Index>(labels.size()) * 2 != quad.rows()) {
    throw ShapeMismatch("from_quadrature: label count must equal mode count");
  }
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) {
      throw DuplicateMode("from_quadrature: duplicate mode label '" + l + "'");
    }
  }
  const double asym = (quad - quad.transpose()).cwiseAbs().maxCoeff();
  if (asym > kStructureTolerance) {
    throw NumericalFailure("from_quadrature: matrix not symmetric (residue " +
                           std::to_string(asym) + ")");
  }
  Eigen::MatrixXd sym = 0.5 * (quad + quad.transpose());
  return MultiModeCM(std::move(sym), std::move(labels));
}

MultiModeCM MultiModeCM::from_bosonic(const Eigen::MatrixXcd& bosonic,
                                      std::vector<std::string> labels) {
  const double herm = (bosonic - bosonic.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kStructureTolerance) {
    throw NumericalFailure("from_bosonic: matrix not Hermitian (residue " +
                           std::to_string(herm) + ")");
  }
  return from_quadrature(quadrature_from_bosonic(bosonic), std::move(labels));
}

MultiModeCM MultiModeCM::from_modes(
    const std::vector<std::pair<std::string, SingleModeCM>>& modes) {
  const int n = static_cast<int>(modes.size());
  if (n == 0) {
    throw ShapeMismatch("from_modes: at least one mode required");
  }
  Eigen::MatrixXd quad = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  std::vector<std::string> labels;
  labels.reserve(modes.size());
  for (int k = 0; k < n; ++k) {
    const SingleModeCM& m = modes[k].second;
    quad(2 * k, 2 * k) = m.a + m.b.real();
    quad(2 * k + 1, 2 * k + 1) = m.a - m.b.real();
    quad(2 * k, 2 * k + 1) = m.b.imag();
    quad(2 * k + 1, 2 * k) = m.b.imag();
    labels.push_back(modes[k].first);
  }
  return from_quadrature(std::move(quad), std::move(labels));
}

Eigen::MatrixXcd MultiModeCM::bosonic() const {
  return bosonic_from_quadrature(quad_);
}

int MultiModeCM::index_of(const std::string& label) const {
  for (int i = 0; i < mode_count(); ++i) {
    if (labels_[i] == label) return i;
  }
  throw UnknownLabel("unknown mode label '" + label + "'");
}

bool MultiModeCM::has_label(const std::string& label) const {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

Eigen::Matrix2d MultiModeCM::mode_block(const std::string& label) const {
  const int k = index_of(label);
  return quad_.block<2, 2>(2 * k, 2 * k);
}

SingleModeCM MultiModeCM::mode_state(const std::string& label) const {
  return SingleModeCM{mode_block(label).trace() / 2.0, mode_offdiag(label)};
}

std::complex<double> MultiModeCM::mode_offdiag(const std::string& label) const {
  const Eigen::Matrix2d g = mode_block(label);
  return {(g(0, 0) - g(1, 1)) / 2.0, (g(0, 1) + g(1, 0)) / 2.0};
}

std::vector<double> symplectic_eigenvalues(const Eigen::MatrixXd& quad) {
  require_even_square(quad.rows(), quad.cols(), "symplectic_eigenvalues");
  const Eigen::Index n = quad.rows() / 2;
  Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  for (Eigen::Index k = 0; k < n; ++k) {
    omega(2 * k, 2 * k + 1) = 1.0;
    omega(2 * k + 1, 2 * k) = -1.0;
  }
  const Eigen::EigenSolver<Eigen::MatrixXd> solver(omega * quad, false);
  if (solver.info() != Eigen::Success) {
    throw NumericalFailure("symplectic_eigenvalues: eigensolver failed");
  }
  std::vector<double> moduli(2 * n);
  for (Eigen::Index i = 0; i < 2 * n; ++i) {
    moduli[i] = std::abs(solver.eigenvalues()[i]);
  }
  std::sort(moduli.begin(), moduli.end());
  std::vector<double> result(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const double lo = moduli[2 * k];
    const double hi = moduli[2 * k + 1];
    if (hi - lo > kSympPairTolerance) {
      throw NumericalFailure(
          "symplectic_eigenvalues: eigenvalue moduli failed to pair (gap " +
          std::to_string(hi - lo) + ")");
    }
    result[k] = 0.5 * (lo + hi);
  }
  return result;
}

std::vector<double> symplectic_eigenvalues(const MultiModeCM& cm) {
  return symplectic_eigenvalues(cm.quadrature());
}

MultiModeCM partial_transpose(const MultiModeCM& cm,
                              const std::vector<std::string>& modes) {
  std::set<int> flip;
  for (const auto& label : modes) {
    flip.insert(cm.index_of(label));
  }
  Eigen::MatrixXd g = cm.quadrature();
  for (int k : flip) {
    g.row(2 * k + 1) *= -1.0;
    g.col(2 * k + 1) *= -1.0;
  }
  return MultiModeCM::from_quadrature(std::move(g), cm.labels());
}

double purity_norm(const MultiModeCM& cm) {
  const double det = cm.quadrature().determinant();
  if (!(det > 0.0)) {
    throw NumericalFailure("purity_norm: determinant not positive");
  }
  return std::ldexp(1.0, -cm.mode_count()) / std::sqrt(det);
}

double ppt_norm(const MultiModeCM& cm,
                const std::vector<std::string>& party_a) {
  if (party_a.empty()) {
    throw ShapeMismatch("ppt_norm: party A is empty");
  }
  std::set<std::string> party(party_a.begin(), party_a.end());
  if (static_cast<int>(party.size()) == cm.mode_count()) {
    throw ShapeMismatch("ppt_norm: party B is empty");
  }
  const MultiModeCM pt = partial_transpose(cm, party_a);
  double norm = 1.0;
  for (double nu : symplectic_eigenvalues(pt)) {
    norm *= std::max(1.0, 1.0 / (2.0 * nu));
  }
  return norm;
}

}  // namespace cvnet
