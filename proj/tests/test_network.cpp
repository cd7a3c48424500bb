#include <cmath>
#include <complex>
#include <numbers>

#include "cvnet/entanglement.hpp"
#include "cvnet/network.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace cvnet;
using std::numbers::pi;

namespace {

using cd = std::complex<double>;

// Independent oracle for the output blocks of one splitter: the explicit
// closed-form entries, written out term by term.
struct BlockOracle {
  Eigen::Matrix2cd a1, b1, ab1;
};

BlockOracle closed_form_blocks(const SingleModeCM& sa, const SingleModeCM& sb,
                               double theta, double phi) {
  const double c2 = std::cos(theta) * std::cos(theta);
  const double s2 = std::sin(theta) * std::sin(theta);
  const double sc = std::sin(theta) * std::cos(theta);
  const cd e = std::polar(1.0, phi);
  const cd e2 = std::polar(1.0, 2.0 * phi);
  BlockOracle o;
  o.a1 << sa.a * c2 + sb.a * s2, sa.b * c2 + sb.b * s2 * e2,
      std::conj(sa.b) * c2 + std::conj(sb.b) * s2 * std::conj(e2),
      sa.a * c2 + sb.a * s2;
  o.b1 << sa.a * s2 + sb.a * c2, sa.b * s2 * std::conj(e2) + sb.b * c2,
      std::conj(sa.b) * s2 * e2 + std::conj(sb.b) * c2,
      sa.a * s2 + sb.a * c2;
  o.ab1 << (sa.a - sb.a) * e, sa.b * std::conj(e) - sb.b * e,
      std::conj(sa.b) * e - std::conj(sb.b) * std::conj(e),
      (sa.a - sb.a) * std::conj(e);
  o.ab1 *= sc;
  return o;
}

double block_diff(const Eigen::Matrix2cd& x, const Eigen::Matrix2cd& y) {
  return (x - y).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("bs_unitary") {
  SUBCASE("theta = 0 is the identity") {
    CHECK((bs_unitary(0.0, 0.7) - Eigen::Matrix4cd::Identity())
              .cwiseAbs()
              .maxCoeff() == 0.0);
  }

  SUBCASE("theta = pi/2, phi = 0 swaps the blocks with signs") {
    Eigen::Matrix4cd expected = Eigen::Matrix4cd::Zero();
    expected(0, 2) = 1.0;
    expected(1, 3) = 1.0;
    expected(2, 0) = -1.0;
    expected(3, 1) = -1.0;
    CHECK((bs_unitary(pi / 2.0, 0.0) - expected).cwiseAbs().maxCoeff() <
          1e-15);
  }

  SUBCASE("unitary for random angles") {
    Rng rng(31);
    for (int it = 0; it < 50; ++it) {
      const auto u = bs_unitary(rng.uniform(0.0, pi), rng.angle());
      CHECK((u.adjoint() * u - Eigen::Matrix4cd::Identity())
                .cwiseAbs()
                .maxCoeff() < 1e-14);
    }
  }
}

TEST_CASE("beam splitter construction") {
  CHECK_THROWS_AS(BeamSplitter(-0.1, 0.0, "A", "B"), InvalidParameter);
  CHECK_THROWS_AS(BeamSplitter(pi + 0.1, 0.0, "A", "B"), InvalidParameter);
  CHECK_THROWS_AS(BeamSplitter(1.0, 0.0, "A", "A"), DuplicateMode);
  // phases wrap to the principal range
  CHECK(BeamSplitter(1.0, 2.0 * pi + 1.0, "A", "B").phi() ==
        doctest::Approx(1.0).epsilon(1e-15));
  CHECK(BeamSplitter(1.0, -pi, "A", "B").phi() == doctest::Approx(pi));
}

TEST_CASE("apply_bs") {
  SUBCASE("theta = 0 leaves the state unchanged") {
    const auto cm = fixtures::two_mode_output(0.9, 0.3);
    const auto out = apply_bs(cm, BeamSplitter(0.0, 0.5, "A", "B"));
    CHECK((out.quadrature() - cm.quadrature()).cwiseAbs().maxCoeff() < 1e-15);
  }

  SUBCASE("balanced splitter averages the reference diagonal blocks") {
    const auto sa = fixtures::state_a();
    const auto sb = fixtures::state_b();
    const auto out = fixtures::two_mode_output(pi / 4.0, 0.0);
    const auto a1 = out.mode_state("A");
    const auto b1 = out.mode_state("B");
    CHECK(a1.a == doctest::Approx((sa.a + sb.a) / 2.0).epsilon(1e-14));
    CHECK(b1.a == doctest::Approx((sa.a + sb.a) / 2.0).epsilon(1e-14));
    CHECK(std::abs(a1.b - (sa.b + sb.b) / 2.0) < 1e-14);
    CHECK(std::abs(b1.b - (sa.b + sb.b) / 2.0) < 1e-14);
  }

  SUBCASE("output blocks match the closed-form oracle") {
    Rng rng(37);
    for (int it = 0; it < 50; ++it) {
      const double ba = rng.uniform(0.0, 0.5);
      const double bb = rng.uniform(0.0, 0.5);
      const auto sa = make_state(std::sqrt(0.25 + ba * ba) + rng.uniform(), ba,
                                 rng.angle());
      const auto sb = make_state(std::sqrt(0.25 + bb * bb) + rng.uniform(), bb,
                                 rng.angle());
      const double theta = rng.uniform(0.0, pi);
      const double phi = rng.angle();
      const auto out =
          apply_bs(MultiModeCM::from_modes({{"A", sa}, {"B", sb}}),
                   BeamSplitter(theta, phi, "A", "B"));
      const Eigen::MatrixXcd v = out.bosonic();
      const auto oracle = closed_form_blocks(sa, sb, theta, phi);
      CHECK(block_diff(v.block<2, 2>(0, 0), oracle.a1) < 1e-13);
      CHECK(block_diff(v.block<2, 2>(2, 2), oracle.b1) < 1e-13);
      CHECK(block_diff(v.block<2, 2>(0, 2), oracle.ab1) < 1e-13);
    }
  }

  SUBCASE("preserves det, physicality, and purity") {
    Rng rng(41);
    for (int it = 0; it < 30; ++it) {
      const auto sa = fixtures::random_mixed(rng);
      const auto sb = fixtures::random_pure(rng);
      const auto sc = fixtures::random_mixed(rng);
      const auto cm = MultiModeCM::from_modes(
          {{"A", sa}, {"B", sb}, {"C", sc}});
      const auto out = apply_bs(
          cm, BeamSplitter(rng.mixing_angle(), rng.angle(), "C", "A"));
      const double det_in = cm.quadrature().determinant();
      const double det_out = out.quadrature().determinant();
      CHECK(det_out == doctest::Approx(det_in).epsilon(1e-12));
      CHECK(purity_norm(out) == doctest::Approx(purity_norm(cm)).epsilon(1e-9));

      // gamma + i Omega / 2 >= 0
      const Eigen::Index dim = out.quadrature().rows();
      Eigen::MatrixXcd h = out.quadrature().cast<cd>();
      for (Eigen::Index k = 0; k < dim / 2; ++k) {
        h(2 * k, 2 * k + 1) += cd(0.0, 0.5);
        h(2 * k + 1, 2 * k) += cd(0.0, -0.5);
      }
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
      CHECK(es.eigenvalues().minCoeff() > -1e-10);
    }
  }

  SUBCASE("swapping the listed pair flips the cross-block sign") {
    const auto cm = MultiModeCM::from_modes(
        {{"A", fixtures::state_a()}, {"B", fixtures::state_b()}});
    const auto fwd = apply_bs(cm, BeamSplitter(0.7, 0.0, "A", "B"));
    const auto swp = apply_bs(cm, BeamSplitter(0.7, 0.0, "B", "A"));
    const Eigen::MatrixXcd vf = fwd.bosonic();
    const Eigen::MatrixXcd vs = swp.bosonic();
    CHECK(block_diff(vf.block<2, 2>(0, 0), vs.block<2, 2>(0, 0)) < 1e-14);
    CHECK(block_diff(vf.block<2, 2>(2, 2), vs.block<2, 2>(2, 2)) < 1e-14);
    CHECK(block_diff(vf.block<2, 2>(0, 2), -vs.block<2, 2>(0, 2)) < 1e-14);
  }

  SUBCASE("unknown labels") {
    const auto cm = MultiModeCM::from_modes({{"A", SingleModeCM{}},
                                             {"B", SingleModeCM{}}});
    CHECK_THROWS_AS(apply_bs(cm, BeamSplitter(1.0, 0.0, "A", "Z")),
                    UnknownLabel);
  }
}

TEST_CASE("run_network") {
  SUBCASE("no splitters yields the block-diagonal assembly") {
    NetworkSpec spec;
    spec.inputs = {{"A", fixtures::state_a()}, {"B", fixtures::state_b()}};
    const auto run = run_network(spec);
    CHECK(run.steps.empty());
    CHECK((run.final_cm().quadrature() -
           MultiModeCM::from_modes(spec.inputs).quadrature())
              .cwiseAbs()
              .maxCoeff() == 0.0);
  }

  SUBCASE("two-splitter chain reproduces the reduced block expression") {
    // after tracing the ancilla, the A-row blocks are A1, cos(theta2)(AB)1,
    // and the B block is B1 cos^2 + C sin^2 (real matched-phase case)
    const double theta1 = 0.6;
    const double theta2 = 1.9;
    NetworkSpec spec;
    spec.inputs = {{"A", fixtures::state_a()},
                   {"B", fixtures::state_b()},
                   {"C", fixtures::state_c()}};
    spec.splitters = {BeamSplitter(theta1, 0.0, "A", "B"),
                      BeamSplitter(theta2, 0.0, "B", "C")};
    const auto run = run_network(spec);
    const auto reduced = partial_trace(run.final_cm(), {"A", "B"});
    const Eigen::MatrixXcd v = reduced.bosonic();

    const auto o =
        closed_form_blocks(fixtures::state_a(), fixtures::state_b(), theta1, 0.0);
    const double c2 = std::cos(theta2) * std::cos(theta2);
    const double s2 = std::sin(theta2) * std::sin(theta2);
    Eigen::Matrix2cd cblock;
    cblock << fixtures::state_c().a, fixtures::state_c().b,
        std::conj(fixtures::state_c().b), fixtures::state_c().a;
    CHECK(block_diff(v.block<2, 2>(0, 0), o.a1) < 1e-13);
    CHECK(block_diff(v.block<2, 2>(0, 2), o.ab1 * std::cos(theta2)) < 1e-13);
    CHECK(block_diff(v.block<2, 2>(2, 2), o.b1 * c2 + cblock * s2) < 1e-13);
  }

  SUBCASE("vacuum-ancilla chain keeps the global state pure") {
    NetworkSpec spec;
    spec.inputs = {{"A", fixtures::state_a()},
                   {"B", fixtures::state_b()},
                   {"C1", SingleModeCM{}},
                   {"C2", SingleModeCM{}}};
    spec.splitters = {BeamSplitter(0.8, 0.0, "A", "B"),
                      BeamSplitter(1.2, 0.0, "B", "C1"),
                      BeamSplitter(2.1, 0.0, "B", "C2")};
    const auto run = run_network(spec);
    for (double nu : symplectic_eigenvalues(run.final_cm())) {
      CHECK(nu == doctest::Approx(0.5).epsilon(1e-9));
    }
  }

  SUBCASE("equals the manual fold of apply_bs") {
    NetworkSpec spec;
    spec.inputs = {{"A", fixtures::state_a()},
                   {"B", fixtures::state_b()},
                   {"C", fixtures::state_c()}};
    spec.splitters = {BeamSplitter(0.9, 0.4, "A", "B"),
                      BeamSplitter(1.7, -0.8, "B", "C")};
    const auto run = run_network(spec);
    auto manual = MultiModeCM::from_modes(spec.inputs);
    for (const auto& bs : spec.splitters) {
      manual = apply_bs(manual, bs);
    }
    CHECK((run.final_cm().quadrature() - manual.quadrature())
              .cwiseAbs()
              .maxCoeff() == 0.0);
    REQUIRE(run.steps.size() == 2);
  }

  SUBCASE("validation rejects bad specs") {
    NetworkSpec spec;
    spec.inputs = {{"A", SingleModeCM{}}, {"A", SingleModeCM{}}};
    CHECK_THROWS_AS(run_network(spec), DuplicateMode);
    spec.inputs = {{"A", SingleModeCM{}}};
    spec.splitters = {BeamSplitter(1.0, 0.0, "A", "Z")};
    CHECK_THROWS_AS(run_network(spec), UnknownLabel);
    spec.splitters.clear();
    spec.reports = {{Metric::LogNeg, {"A"}, {"A"}}};
    CHECK_THROWS_AS(run_network(spec), ShapeMismatch);
  }
}

TEST_CASE("partial_trace") {
  const auto cm = fixtures::three_mode_output(1.3);

  SUBCASE("keeping all modes is the identity") {
    const auto kept = partial_trace(cm, {"A", "B", "C"});
    CHECK((kept.quadrature() - cm.quadrature()).cwiseAbs().maxCoeff() == 0.0);
  }

  SUBCASE("keeping one mode of one splitter output mixes the inputs") {
    Rng rng(43);
    for (int it = 0; it < 20; ++it) {
      const auto sa = fixtures::random_pure(rng);
      const auto sb = fixtures::random_mixed(rng);
      const double theta = rng.mixing_angle();
      const double phi = rng.angle();
      const auto out = apply_bs(MultiModeCM::from_modes({{"A", sa}, {"B", sb}}),
                                BeamSplitter(theta, phi, "A", "B"));
      const auto kept = partial_trace(out, {"A"});
      const auto oracle = closed_form_blocks(sa, sb, theta, phi);
      CHECK(block_diff(kept.bosonic(), oracle.a1) < 1e-13);
    }
  }

  SUBCASE("vacua reduce to vacua") {
    const auto vac = MultiModeCM::from_modes(
        {{"A", SingleModeCM{}}, {"B", SingleModeCM{}}, {"C", SingleModeCM{}}});
    const auto kept = partial_trace(vac, {"B", "C"});
    CHECK((kept.quadrature() - 0.5 * Eigen::MatrixXd::Identity(4, 4))
              .cwiseAbs()
              .maxCoeff() == 0.0);
    CHECK(kept.labels() == std::vector<std::string>{"B", "C"});
  }

  SUBCASE("errors") {
    CHECK_THROWS_AS(partial_trace(cm, {}), EmptyKeepSet);
    CHECK_THROWS_AS(partial_trace(cm, {"Z"}), UnknownLabel);
  }
}

TEST_CASE("matched_phase") {
  CHECK(matched_phase(cd(0.3, 0.0), cd(0.5, 0.0)) == 0.0);
  CHECK(matched_phase(std::polar(0.3, pi / 2.0), cd(0.5, 0.0)) ==
        doctest::Approx(pi / 4.0).epsilon(1e-15));
  CHECK(matched_phase(cd(0.5, 0.0), cd(0.7, 0.0)) == 0.0);
  CHECK(matched_phase(cd(0.0, 0.0), std::polar(0.4, 1.0)) == 0.0);
  CHECK(matched_phase(std::polar(0.4, 1.0), cd(0.0, 0.0)) == 0.0);
}

TEST_CASE("eigenvalue mixing laws at matched phase") {
  Rng rng(47);
  for (int it = 0; it < 200; ++it) {
    const auto sa =
        it % 2 ? fixtures::random_mixed(rng) : fixtures::random_pure(rng);
    const auto sb =
        it % 3 ? fixtures::random_mixed(rng) : fixtures::random_pure(rng);
    const double theta = rng.uniform(0.0, pi);
    const double phi = matched_phase(sa.b, sb.b);
    const auto out = apply_bs(MultiModeCM::from_modes({{"A", sa}, {"B", sb}}),
                              BeamSplitter(theta, phi, "A", "B"));
    const double lam_a = spectral(sa).lambda_min;
    const double lam_b = spectral(sb).lambda_min;
    const double lam_a1 = spectral(out.mode_state("A")).lambda_min;
    const double lam_b1 = spectral(out.mode_state("B")).lambda_min;
    const double c2 = std::cos(theta) * std::cos(theta);
    const double s2 = std::sin(theta) * std::sin(theta);

    CHECK(lam_a1 == doctest::Approx(c2 * lam_a + s2 * lam_b).epsilon(1e-10));
    CHECK(lam_b1 == doctest::Approx(s2 * lam_a + c2 * lam_b).epsilon(1e-10));

    // product identity relating the mixed and input eigenvalues
    const double lhs = lam_a1 * lam_b1 / (lam_a * lam_b) - 1.0;
    const double s2t = std::sin(2.0 * theta) * std::sin(2.0 * theta);
    const double rhs =
        (lam_b - lam_a) * (lam_b - lam_a) / (4.0 * lam_a * lam_b) * s2t;
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
  }
}
