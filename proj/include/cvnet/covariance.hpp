#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "cvnet/single_mode.hpp"

namespace cvnet {

// Conversion between the two 2n x 2n covariance representations:
//   quadrature -- real symmetric, mode ordering (x1, p1, ..., xn, pn)
//   bosonic    -- complex Hermitian, mode ordering (a1*, a1, ..., an*, an)
// related per 2x2 mode block by V = S g S^dag with S = [[1, i], [1, -i]]/sqrt2.
// The change of basis is unitary, so determinants are preserved and the round
// trip is the identity.
Eigen::MatrixXcd bosonic_from_quadrature(const Eigen::MatrixXd& quad);
Eigen::MatrixXd quadrature_from_bosonic(const Eigen::MatrixXcd& bosonic);

// n-mode Gaussian covariance matrix with named modes. The quadrature form is
// canonical; the bosonic form is materialized on demand. Instances are
// immutable: every operation returns a new value, so concurrent use needs no
// coordination.
class MultiModeCM {
 public:
  static MultiModeCM from_quadrature(Eigen::MatrixXd quad,
                                     std::vector<std::string> labels);
  static MultiModeCM from_bosonic(const Eigen::MatrixXcd& bosonic,
                                  std::vector<std::string> labels);
  // Block-diagonal assembly of independent single-mode states, in order.
  static MultiModeCM from_modes(
      const std::vector<std::pair<std::string, SingleModeCM>>& modes);

  int mode_count() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Eigen::MatrixXd& quadrature() const { return quad_; }
  Eigen::MatrixXcd bosonic() const;

  int index_of(const std::string& label) const;  // throws UnknownLabel
  bool has_label(const std::string& label) const;

  // Reduced single-mode quantities of one labelled mode.
  Eigen::Matrix2d mode_block(const std::string& label) const;
  SingleModeCM mode_state(const std::string& label) const;
  std::complex<double> mode_offdiag(const std::string& label) const;

 private:
  MultiModeCM(Eigen::MatrixXd quad, std::vector<std::string> labels);

  Eigen::MatrixXd quad_;
  std::vector<std::string> labels_;
};

// Moduli of the eigenvalues of i.Omega.gamma, one per conjugate pair,
// ascending. Pairs must agree within kSympPairTolerance.
inline constexpr double kSympPairTolerance = 1e-8;
std::vector<double> symplectic_eigenvalues(const MultiModeCM& cm);
std::vector<double> symplectic_eigenvalues(const Eigen::MatrixXd& quad);

// Sign flip of the p row and column of each listed mode; an involution.
MultiModeCM partial_transpose(const MultiModeCM& cm,
                              const std::vector<std::string>& modes);

// ||rho^2||_1 = 2^-n det(gamma)^{-1/2}.
double purity_norm(const MultiModeCM& cm);

// ||rho^{T_A}||_1 = prod_k max(1, 1/(2 nu~_k)) over the partially transposed
// symplectic spectrum. Always >= 1 for physical states.
double ppt_norm(const MultiModeCM& cm, const std::vector<std::string>& party_a);

}  // namespace cvnet
