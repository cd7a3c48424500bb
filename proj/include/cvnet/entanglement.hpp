#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cvnet/covariance.hpp"
#include "cvnet/network.hpp"

namespace cvnet {

// Per-bipartition record of the quantifiers. residual_nonclassicality is
// populated only when the bipartition is a single mode pair freshly mixed at
// one beam splitter; it does not track distribution through deeper layers.
struct EntanglementReport {
  std::vector<std::string> party_a;
  std::vector<std::string> party_b;
  double log_negativity = 0.0;  // E_N, bits
  double xi = 0.0;
  std::optional<double> residual_nonclassicality;  // S_N, bits
  double contangle = 0.0;       // E_N^2
  double ppt_trace_norm = 1.0;  // >= 1
  double purity_trace_norm = 1.0;
};

// E_N from the block-determinant formula of a two-mode CM.
double logneg_two_mode(const MultiModeCM& cm);

// E_N = max(0, log2 ||rho^{T_A}||_1) for an arbitrary bipartition.
double logneg_bipartition(const MultiModeCM& cm,
                          const std::vector<std::string>& party_a);

// S_N across one beam splitter at matched phase, from the eigenvalue mixing
// law lambda' = cos^2(theta) lambda_a + sin^2(theta) lambda_b.
double residual_nonclassicality(const SingleModeCM& state_a,
                                const SingleModeCM& state_b, double theta);

// xi = S - 1/2 - 8 det(V) from the block determinants (two modes only).
double xi_two_mode(const MultiModeCM& cm);

// xi = (1 - 1/T^2)(T^2/P^2 - 1)/2 with T = ppt_norm and P = purity_norm.
// Defined for any bipartition; agrees with xi_two_mode on entangled two-mode
// states.
double xi_trace_norm_path(const MultiModeCM& cm,
                          const std::vector<std::string>& party_a);

// Dispatch: block-determinant path for 1:1 two-mode bipartitions, trace-norm
// path otherwise.
double xi_bipartition(const MultiModeCM& cm,
                      const std::vector<std::string>& party_a);

// Closed form xi = 2 (lam_b - lam_a)(Lam_a - Lam_b) sin^2(2 theta) for pure
// inputs, plus the positivity coefficient 8 lam_a lam_b (Lam_a - Lam_b) /
// (lam_b - lam_a). The coefficient is undefined for degenerate inputs
// (lambda_a == lambda_b); the result is flagged instead of throwing.
struct XiClosedForm {
  double xi = 0.0;
  bool degenerate = false;
  std::optional<double> coefficient;
};
XiClosedForm xi_closed_form(double lam_a, double Lam_a, double lam_b,
                            double Lam_b, double theta);

// Squared logarithmic negativity of the bipartition.
double contangle(const MultiModeCM& cm, const std::vector<std::string>& party_a);

// R(a:bc) = C(a:bc) - C(a:b) - C(a:c) over reduced two-mode CMs.
double residual_entanglement(const MultiModeCM& cm, const std::string& a,
                             const std::string& b, const std::string& c);

// The xi-based variant xi(a:bc) - xi(a:b) - xi(a:c).
double xi_residual_entanglement(const MultiModeCM& cm, const std::string& a,
                                const std::string& b, const std::string& c);

enum class MonogamyMetric { LogNeg, Xi, Contangle };

struct MonogamyResult {
  double lhs = 0.0;    // metric(A : B u C)
  double rhs = 0.0;    // metric(A : B) + metric(A : C)
  double slack = 0.0;  // lhs - rhs
};

MonogamyResult monogamy_check(const MultiModeCM& cm,
                              const std::vector<std::string>& party_a,
                              const std::vector<std::string>& party_b,
                              const std::vector<std::string>& party_c,
                              MonogamyMetric metric);

// One evaluated report: the full record plus the value of the requested
// metric (for residual reports the value is R, computed across party_b).
struct ReportResult {
  ReportRequest request;
  EntanglementReport record;
  double value = 0.0;
};

std::vector<ReportResult> evaluate_reports(const NetworkRun& run,
                                           const NetworkSpec& spec);

}  // namespace cvnet
