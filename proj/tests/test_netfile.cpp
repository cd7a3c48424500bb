#include <cmath>
#include <numbers>

#include "cvnet/entanglement.hpp"
#include "cvnet/netfile.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace cvnet;
using std::numbers::pi;

namespace {

const char* kChain = R"(# two-splitter chain
mode A pure 0.3 0
mode B pure 0.5 0
mode C pure 0.7 0
bs BS1 A B theta=0.78539816339744828 phi=0
bs BS2 B C theta=$theta2 phi=1
report xi A:B
report xi A:C
report logneg A:BC
)";

}  // namespace

TEST_CASE("parsing the reference chain") {
  const auto nf = parse_netfile(kChain);
  REQUIRE(nf.modes().size() == 3);
  REQUIRE(nf.splitters().size() == 2);
  REQUIRE(nf.reports().size() == 3);
  CHECK(nf.modes()[0].name == "A");
  CHECK(nf.modes()[0].pure);
  CHECK(nf.modes()[0].b_mag == 0.3);
  CHECK(nf.splitters()[1].theta.kind == AngleExpr::Kind::Variable);
  CHECK(nf.splitters()[1].theta.variable == "theta2");
  CHECK(nf.reports()[2].metric == Metric::LogNeg);
  CHECK(nf.reports()[2].party_b == std::vector<std::string>{"B", "C"});
  CHECK(nf.placeholders() == std::vector<std::string>{"theta2"});

  const auto spec = nf.build({{"theta2", 1.1}});
  CHECK(spec.inputs.size() == 3);
  CHECK(spec.inputs[0].second.a == doctest::Approx(std::sqrt(0.34)));
  CHECK(spec.splitters[1].theta() == 1.1);
  CHECK(spec.splitters[1].phi() == 1.0);
}

TEST_CASE("mode declarations build the right states") {
  const auto nf = parse_netfile(
      "mode A pure 0.3 0\n"
      "mode B mixed 1.0 0.25 1.5\n");
  const auto spec = nf.build();
  CHECK(spec.inputs[0].second.pure());
  CHECK(!spec.inputs[1].second.pure());
  CHECK(spec.inputs[1].second.a == 1.0);
  CHECK(std::arg(spec.inputs[1].second.b) == doctest::Approx(1.5));
}

TEST_CASE("diagnostics carry positions and kinds") {
  CHECK_THROWS_AS(parse_netfile("mode A pure 0.3\n"), SyntaxError);
  CHECK_THROWS_AS(parse_netfile("what A\n"), SyntaxError);
  CHECK_THROWS_AS(parse_netfile("mode A pure zero 0\n"), SyntaxError);
  CHECK_THROWS_AS(parse_netfile("mode A pure 0.3 0\nmode A pure 0.1 0\n"),
                  DuplicateMode);
  CHECK_THROWS_AS(
      parse_netfile("mode A pure 0.3 0\nbs X A A theta=1 phi=0\n"),
      DuplicateMode);
  CHECK_THROWS_AS(parse_netfile("mode A pure 0.3 0\n"
                                "bs X A B theta=1 phi=0\n"),
                  UnknownLabel);
  CHECK_THROWS_AS(parse_netfile("mode A pure 0.3 0\nreport xi A:Z\n"),
                  UnknownLabel);
  CHECK_THROWS_AS(parse_netfile("mode A pure 0.3 0\nreport what A:A\n"),
                  SyntaxError);
  CHECK_THROWS_AS(parse_netfile("mode A pure 0.3 0\nreport xi A:A\n"),
                  SyntaxError);
  CHECK_THROWS_AS(
      parse_netfile("mode A pure 0.3 0\nmode B pure 0 0\n"
                    "bs X A B theta=matched phi=0\n"),
      SyntaxError);

  try {
    parse_netfile("mode A pure 0.3 0\nmode B pure x 0\n");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.line == 2);
    CHECK(e.column == 13);
  }
}

TEST_CASE("sn and residual arity is validated") {
  CHECK_THROWS_AS(parse_netfile("mode A pure 0.3 0\nmode B pure 0 0\n"
                                "mode C pure 0 0\nreport sn A:BC\n"),
                  SyntaxError);
  CHECK_THROWS_AS(parse_netfile("mode A pure 0.3 0\nmode B pure 0 0\n"
                                "report residual A:B\n"),
                  SyntaxError);
  // sn needs a splitter coupling exactly that pair; found at build time
  const auto nf = parse_netfile(
      "mode A pure 0.3 0\nmode B pure 0 0\nmode C pure 0 0\n"
      "bs X A B theta=1 phi=0\nreport sn A:C\n");
  CHECK_THROWS_AS(nf.build(), InvalidParameter);
}

TEST_CASE("variable bindings are one-to-one") {
  const auto nf = parse_netfile(kChain);
  CHECK_THROWS_AS(nf.build(), UnboundVariable);
  CHECK_THROWS_AS(nf.build({{"theta2", 1.0}, {"extra", 2.0}}),
                  UnboundVariable);
  CHECK_THROWS_AS(nf.build({{"extra", 2.0}}), UnboundVariable);
  CHECK_NOTHROW(nf.build({{"theta2", 1.0}}));
}

TEST_CASE("matched phases resolve progressively") {
  // first splitter: half the off-diagonal phase difference of the inputs;
  // second splitter: vacuum ancilla, zero by convention
  const auto nf = parse_netfile(
      "mode A pure 0.3 1.0\n"
      "mode B pure 0.5 0.2\n"
      "mode C pure 0 0\n"
      "bs BS1 A B theta=0.9 phi=matched\n"
      "bs BS2 B C theta=1.2 phi=matched\n");
  const auto spec = nf.build();
  CHECK(spec.splitters[0].phi() == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(spec.splitters[1].phi() == 0.0);

  // matched phases make the eigenvalue mixing law hold
  const auto run = run_network(spec);
  const auto sa = spec.inputs[0].second;
  const auto sb = spec.inputs[1].second;
  const double lam_a1 =
      spectral(run.steps[0].mode_state("A")).lambda_min;
  const double c2 = std::cos(0.9) * std::cos(0.9);
  const double s2 = std::sin(0.9) * std::sin(0.9);
  CHECK(lam_a1 == doctest::Approx(c2 * spectral(sa).lambda_min +
                                  s2 * spectral(sb).lambda_min)
                      .epsilon(1e-10));
}

TEST_CASE("report label tokenization") {
  const auto nf = parse_netfile(
      "mode B2 pure 0.1 0\n"
      "mode C1 pure 0.2 0\n"
      "mode A pure 0.3 0\n"
      "bs BS1 A B2 theta=1 phi=0\n"
      "report logneg A:B2C1\n"
      "report xi A:B2,C1\n");
  CHECK(nf.reports()[0].party_b == std::vector<std::string>{"B2", "C1"});
  CHECK(nf.reports()[1].party_b == std::vector<std::string>{"B2", "C1"});
}

TEST_CASE("render is a fixed point of parse") {
  const auto once = parse_netfile(kChain).render();
  const auto twice = parse_netfile(once).render();
  CHECK(once == twice);
  CHECK(once.find("theta=$theta2") != std::string::npos);

  const auto nf2 = parse_netfile(
      "mode A mixed 0.75 0.2 -0.4\nmode B pure 0 0\n"
      "bs S A B theta=0.5 phi=matched\nreport sn A:B\n");
  const auto r1 = nf2.render();
  CHECK(r1 == parse_netfile(r1).render());
  CHECK(r1.find("phi=matched") != std::string::npos);
}

TEST_CASE("build results match direct construction") {
  const auto nf = parse_netfile(kChain);
  const auto spec = nf.build({{"theta2", 1.3}});
  const auto run = run_network(spec);
  const auto direct = fixtures::three_mode_output(1.3);
  CHECK((run.final_cm().quadrature() - direct.quadrature())
            .cwiseAbs()
            .maxCoeff() < 1e-14);
}
