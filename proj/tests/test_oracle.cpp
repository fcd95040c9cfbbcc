#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "stabletail/closed_forms.hpp"
#include "stabletail/errors.hpp"
#include "stabletail/oracle.hpp"
#include "stabletail/quadrature.hpp"
#include "stabletail/tail_series.hpp"

using namespace stabletail;

namespace {
// alpha = 0.5 decays as exp(-sqrt(t)); the default 200 leaves too much tail
const OracleSpec kWideSpec{1500.0, 20000};
}  // namespace

TEST_CASE("oracle_pdf fixed points") {
  // alpha=2, theta=0: CF e^{-t^2}, density at 0 is 1/(2 sqrt pi)
  CHECK(oracle_pdf(validate(2.0, 0.0, 1.0), 0.0) ==
        doctest::Approx(0.28209479177387814).epsilon(1e-11));
  // alpha=1, theta=0: Cauchy at x=2 is 1/(5 pi)
  CHECK(oracle_pdf(validate(1.0, 0.0, 1.0), 2.0) ==
        doctest::Approx(0.063661977236758134).epsilon(1e-10));
}

TEST_CASE("oracle_pdf vs certified tail series") {
  const double series = pdf_tail_series(10.0, 0.5, 0.0, 40).value;
  const double bound = pdf_tail_series(10.0, 0.5, 0.0, 40).bound;
  const double ref = oracle_pdf(validate(0.5, 0.0, 1.0), 10.0, kWideSpec);
  CHECK(std::fabs(series - ref) <= bound + 1e-9);
}

TEST_CASE("oracle_cdf fixed points") {
  // Gaussian identity: G(1) = Phi(1/sqrt 2)
  CHECK(oracle_cdf(validate(2.0, 0.0, 1.0), 1.0) ==
        doctest::Approx(0.76024993890652327).epsilon(1e-9));
  // exact zero-point value, any parameters
  CHECK(oracle_cdf(validate(1.3, 0.2, 1.0), 0.0) == 0.4);
  CHECK(oracle_cdf(validate(0.5, 0.5, 1.0), 0.0) == 0.25);
  // generalized Cauchy cross-check
  CHECK(std::fabs(oracle_cdf(validate(1.0, 0.5, 1.0), 3.0) - cdf_alpha1(3.0, 0.5)) <=
        1e-8);
}

TEST_CASE("oracle self-consistency at the +inf proxy") {
  // the mass missing at x = 100 is the true upper tail, which for heavy
  // tails exceeds 1e-4 (Cauchy: 3.2e-3); consistency means cdf + tail = 1
  for (double alpha : {1.0, 1.4, 2.0}) {
    const double g = oracle_cdf(validate(alpha, 0.0, 1.0), 100.0);
    const CertifiedValue tail = cdf_series(100.0, alpha, 0.0, 30);
    CHECK(std::fabs(g + (1.0 - tail.value) - 1.0) <= 1e-6 + tail.bound);
    CHECK(g <= 1.0 + 1e-8);
  }
  // alpha = 2: the gaussian tail at 100 really is negligible
  CHECK(oracle_cdf(validate(2.0, 0.0, 1.0), 100.0) >= 1.0 - 1e-4);
}

TEST_CASE("oracle vs closed form over a grid") {
  for (double theta : {0.0, 0.5, -0.5}) {
    const StableParams p = validate(1.0, theta, 1.0);
    for (double x = -10.0; x <= 10.0; x += 2.5) {
      CHECK(std::fabs(oracle_cdf(p, x) - cdf_alpha1(x, theta)) <= 1e-8);
    }
  }
}

TEST_CASE("oracle vs quadrature module") {
  struct Case {
    double alpha, theta;
  };
  const Case cases[] = {{0.5, 0.0}, {0.5, 0.3}, {1.3, 0.0}, {2.0, 0.0}};
  for (const auto& c : cases) {
    const StableParams p = validate(c.alpha, c.theta, 1.0);
    const OracleSpec spec = c.alpha < 0.75 ? kWideSpec : OracleSpec{};
    for (double x : {0.5, 1.0, 5.0}) {
      const double ref = oracle_cdf(p, x, spec);
      const double got = cdf_integral(x, c.alpha, c.theta).value;
      CHECK(std::fabs(got - ref) <= 1e-7);
    }
  }
}

TEST_CASE("levy closed form via the oracle") {
  // alpha=1/2, theta=1: G(x) = erfc(1/(2 sqrt x))
  const StableParams p = validate(0.5, 1.0, 1.0);
  CHECK(std::fabs(oracle_cdf(p, 1.0, kWideSpec) - 0.47950012218695346) <= 1e-8);
}

TEST_CASE("oracle honesty checks") {
  // truncating at t_max = 5 for alpha = 0.5 leaves a tail far above 1e-10
  CHECK_THROWS_AS(oracle_pdf(validate(0.5, 0.0, 1.0), 1.0, OracleSpec{5.0, 1000}),
                  OracleAccuracyError);
  CHECK_THROWS_AS(oracle_cdf(validate(1.0, 0.0, 1.0), 101.0), DomainError);
  CHECK_THROWS_AS(oracle_pdf(validate(1.0, 0.0, 1.0), 1.0, OracleSpec{100.0, 10}),
                  DomainError);
  CHECK(oracle_truncation_bound(validate(0.5, 0.0, 1.0), OracleSpec{}) > 1e-10);
  CHECK(oracle_truncation_bound(validate(0.5, 0.0, 1.0), kWideSpec) < 1e-10);
}

TEST_CASE("lambda scaling passes through the characteristic function") {
  // G(x, alpha, theta, lambda) = G(x lambda^{-1/alpha}, alpha, theta, 1)
  const StableParams scaled = validate(1.3, 0.2, 2.5);
  const StableParams std_law = validate(1.3, 0.2, 1.0);
  const double x = 1.7;
  const double x_std = x * std::pow(2.5, -1.0 / 1.3);
  CHECK(std::fabs(oracle_cdf(scaled, x) - oracle_cdf(std_law, x_std)) <= 1e-8);
}
