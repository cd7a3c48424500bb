#include "cvnet/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace cvnet {
namespace {

double snap_zero(double x) { return std::abs(x) < kZeroThreshold ? 0.0 : x; }

void require_two_modes(const MultiModeCM& cm, const char* what) {
  if (cm.mode_count() != 2) {
    throw ShapeMismatch(std::string(what) + ": exactly two modes required");
  }
}

// S = 2 det(A) + 2 det(B) - 4 det(C) from the 2x2 quadrature blocks of a
// two-mode CM; block determinants agree with their bosonic counterparts.
double block_determinant_s(const MultiModeCM& cm) {
  const Eigen::MatrixXd& g = cm.quadrature();
  const double det_a = g.block<2, 2>(0, 0).determinant();
  const double det_b = g.block<2, 2>(2, 2).determinant();
  const double det_c = g.block<2, 2>(0, 2).determinant();
  return 2.0 * det_a + 2.0 * det_b - 4.0 * det_c;
}

std::vector<std::string> join_parties(const std::vector<std::string>& a,
                                      const std::vector<std::string>& b) {
  std::vector<std::string> all = a;
  all.insert(all.end(), b.begin(), b.end());
  return all;
}

double metric_value(const MultiModeCM& reduced,
                    const std::vector<std::string>& party_a,
                    MonogamyMetric metric) {
  switch (metric) {
    case MonogamyMetric::LogNeg:
      return logneg_bipartition(reduced, party_a);
    case MonogamyMetric::Xi:
      return xi_bipartition(reduced, party_a);
    case MonogamyMetric::Contangle:
      return contangle(reduced, party_a);
  }
  throw InvalidParameter("unknown monogamy metric");
}

}  // namespace

double logneg_two_mode(const MultiModeCM& cm) {
  require_two_modes(cm, "logneg_two_mode");
  const double s = block_determinant_s(cm);
  const double det = cm.quadrature().determinant();
  // Discriminants below the roundoff floor of s^2 - 16 det are exact double
  // roots (a degenerate PT pair can only sit at nu~ >= 1/2); sqrt would
  // amplify the noise to ~1e-8 otherwise.
  const double noise = 32.0 * std::numeric_limits<double>::epsilon() *
                       std::max(s * s, std::abs(16.0 * det));
  const double disc_raw = s * s - 16.0 * det;
  const double disc = disc_raw <= noise ? 0.0 : disc_raw;
  // 4 nu~_min^2 = s - sqrt(disc), evaluated through the conjugate form to
  // avoid cancellation at the separability boundary
  const double denom = s + std::sqrt(disc);
  if (!(denom > 0.0) || !(det > 0.0)) {
    throw NumericalFailure("logneg_two_mode: nonpositive spectral argument");
  }
  const double val = 16.0 * det / denom;
  return snap_zero(std::max(0.0, -0.5 * std::log2(val)));
}

double logneg_bipartition(const MultiModeCM& cm,
                          const std::vector<std::string>& party_a) {
  return snap_zero(std::max(0.0, std::log2(ppt_norm(cm, party_a))));
}

double residual_nonclassicality(const SingleModeCM& state_a,
                                const SingleModeCM& state_b, double theta) {
  const double lam_a = spectral(state_a).lambda_min;
  const double lam_b = spectral(state_b).lambda_min;
  const double c2 = std::cos(theta) * std::cos(theta);
  const double s2 = std::sin(theta) * std::sin(theta);
  const double lam_a1 = c2 * lam_a + s2 * lam_b;
  const double lam_b1 = s2 * lam_a + c2 * lam_b;
  return snap_zero(std::log2(lam_a1 * lam_b1 / (lam_a * lam_b)));
}

double xi_two_mode(const MultiModeCM& cm) {
  require_two_modes(cm, "xi_two_mode");
  const double s = block_determinant_s(cm);
  return snap_zero(s - 0.5 - 8.0 * cm.quadrature().determinant());
}

double xi_trace_norm_path(const MultiModeCM& cm,
                          const std::vector<std::string>& party_a) {
  const double t2 = std::pow(ppt_norm(cm, party_a), 2);
  const double p2 = std::pow(purity_norm(cm), 2);
  return snap_zero(0.5 * (1.0 - 1.0 / t2) * (t2 / p2 - 1.0));
}

double xi_bipartition(const MultiModeCM& cm,
                      const std::vector<std::string>& party_a) {
  if (cm.mode_count() == 2 && party_a.size() == 1) {
    return xi_two_mode(cm);
  }
  return xi_trace_norm_path(cm, party_a);
}

XiClosedForm xi_closed_form(double lam_a, double Lam_a, double lam_b,
                            double Lam_b, double theta) {
  XiClosedForm result;
  const double sin_2t = std::sin(2.0 * theta);
  result.xi =
      snap_zero(2.0 * (lam_b - lam_a) * (Lam_a - Lam_b) * sin_2t * sin_2t);
  result.degenerate = std::abs(lam_b - lam_a) < kZeroThreshold;
  if (!result.degenerate) {
    result.coefficient =
        8.0 * lam_a * lam_b * (Lam_a - Lam_b) / (lam_b - lam_a);
  }
  return result;
}

double contangle(const MultiModeCM& cm,
                 const std::vector<std::string>& party_a) {
  const double en = logneg_bipartition(cm, party_a);
  return en * en;
}

double residual_entanglement(const MultiModeCM& cm, const std::string& a,
                             const std::string& b, const std::string& c) {
  const MultiModeCM abc = partial_trace(cm, {a, b, c});
  return contangle(abc, {a}) - contangle(partial_trace(abc, {a, b}), {a}) -
         contangle(partial_trace(abc, {a, c}), {a});
}

double xi_residual_entanglement(const MultiModeCM& cm, const std::string& a,
                                const std::string& b, const std::string& c) {
  const MultiModeCM abc = partial_trace(cm, {a, b, c});
  return xi_trace_norm_path(abc, {a}) -
         xi_two_mode(partial_trace(abc, {a, b})) -
         xi_two_mode(partial_trace(abc, {a, c}));
}

MonogamyResult monogamy_check(const MultiModeCM& cm,
                              const std::vector<std::string>& party_a,
                              const std::vector<std::string>& party_b,
                              const std::vector<std::string>& party_c,
                              MonogamyMetric metric) {
  for (const auto& label : party_a) {
    for (const auto& other : party_b) {
      if (label == other) {
        throw ShapeMismatch("monogamy_check: parties are not disjoint");
      }
    }
    for (const auto& other : party_c) {
      if (label == other) {
        throw ShapeMismatch("monogamy_check: parties are not disjoint");
      }
    }
  }
  for (const auto& label : party_b) {
    for (const auto& other : party_c) {
      if (label == other) {
        throw ShapeMismatch("monogamy_check: parties are not disjoint");
      }
    }
  }
  MonogamyResult result;
  result.lhs = metric_value(
      partial_trace(cm, join_parties(party_a, join_parties(party_b, party_c))),
      party_a, metric);
  result.rhs =
      metric_value(partial_trace(cm, join_parties(party_a, party_b)), party_a,
                   metric) +
      metric_value(partial_trace(cm, join_parties(party_a, party_c)), party_a,
                   metric);
  result.slack = result.lhs - result.rhs;
  return result;
}

std::vector<ReportResult> evaluate_reports(const NetworkRun& run,
                                           const NetworkSpec& spec) {
  const MultiModeCM& final_cm = run.final_cm();
  std::vector<ReportResult> results;
  results.reserve(spec.reports.size());
  for (const auto& request : spec.reports) {
    ReportResult out;
    out.request = request;

    const MultiModeCM reduced =
        partial_trace(final_cm, join_parties(request.party_a, request.party_b));
    EntanglementReport& rec = out.record;
    rec.party_a = request.party_a;
    rec.party_b = request.party_b;
    rec.ppt_trace_norm = ppt_norm(reduced, request.party_a);
    rec.purity_trace_norm = purity_norm(reduced);
    rec.log_negativity =
        snap_zero(std::max(0.0, std::log2(rec.ppt_trace_norm)));
    rec.xi = xi_bipartition(reduced, request.party_a);
    rec.contangle = rec.log_negativity * rec.log_negativity;

    // S_N applies only to a mode pair freshly mixed at one splitter; it is
    // read off the retained step CMs around the first such splitter.
    if (request.party_a.size() == 1 && request.party_b.size() == 1) {
      const std::string& x = request.party_a[0];
      const std::string& y = request.party_b[0];
      for (std::size_t i = 0; i < spec.splitters.size(); ++i) {
        if (!spec.splitters[i].couples(x, y)) continue;
        const MultiModeCM& before = run.before_step(static_cast<int>(i));
        const MultiModeCM& after = run.steps[i];
        const double in_product = spectral(before.mode_state(x)).lambda_min *
                                  spectral(before.mode_state(y)).lambda_min;
        const double out_product = spectral(after.mode_state(x)).lambda_min *
                                   spectral(after.mode_state(y)).lambda_min;
        rec.residual_nonclassicality =
            snap_zero(std::log2(out_product / in_product));
        break;
      }
    }

    switch (request.metric) {
      case Metric::LogNeg:
        out.value = rec.log_negativity;
        break;
      case Metric::Xi:
        out.value = rec.xi;
        break;
      case Metric::Sn:
        out.value = rec.residual_nonclassicality.value();
        break;
      case Metric::Contangle:
        out.value = rec.contangle;
        break;
      case Metric::Residual:
        out.value = residual_entanglement(final_cm, request.party_a[0],
                                          request.party_b[0],
                                          request.party_b[1]);
        break;
    }
    results.push_back(std::move(out));
  }
  return results;
}

}  // namespace cvnet
