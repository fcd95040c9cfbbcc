#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "stabletail/errors.hpp"
#include "stabletail/special.hpp"
#include "stabletail/tail_series.hpp"
#include "stabletail/threshold.hpp"

using namespace stabletail;

namespace {

// reference thresholds x_eps^30 at eps = 1e-5
constexpr double kReference[6][2] = {{0.5, 0.088}, {0.7, 0.402}, {0.9, 1.000},
                                     {1.1, 1.860}, {1.4, 3.552}, {1.7, 5.612}};

double lhs(double x, double alpha, int n, DenominatorConvention conv) {
  const double den = conv == DenominatorConvention::PiFactorial ? M_PI : alpha;
  return std::pow(x, -alpha * n) / (den * std::exp(log_gamma(n + 1.0))) *
         (std::exp(log_gamma(alpha * n)) +
          std::pow(x, -alpha) * std::exp(log_gamma(alpha * (n + 1))));
}

}  // namespace

TEST_CASE("pi convention reproduces the reference threshold table within 2%") {
  for (const auto& row : kReference) {
    const ThresholdResult r = solve_threshold(row[0], 30, 1e-5);
    CHECK(std::fabs(r.x_eps - row[1]) / row[1] <= 0.02);
  }
}

TEST_CASE("alpha convention does not reproduce the table") {
  int misses = 0;
  for (const auto& row : kReference) {
    const ThresholdResult r =
        solve_threshold(row[0], 30, 1e-5, DenominatorConvention::AlphaFactorial);
    if (std::fabs(r.x_eps - row[1]) / row[1] > 0.02) ++misses;
  }
  CHECK(misses >= 4);  // off by (pi/alpha)^{1/(alpha N)}, up to ~13% at alpha=0.5
}

TEST_CASE("solver residual meets its certificate") {
  for (const auto& row : kReference) {
    for (auto conv :
         {DenominatorConvention::PiFactorial, DenominatorConvention::AlphaFactorial}) {
      const ThresholdResult r = solve_threshold(row[0], 30, 1e-5, conv);
      CHECK(r.residual <= 1e-12 * r.epsilon);
      CHECK(r.x_eps > 0.0);
      CHECK(r.iterations <= 200);
      // the solved point really satisfies the equation
      CHECK(std::fabs(lhs(r.x_eps, row[0], 30, conv) / 1e-5 - 1.0) <= 1e-9);
    }
  }
}

TEST_CASE("solution certifies the series bound (pi convention)") {
  for (double alpha : {0.5, 0.9, 1.3, 1.7}) {
    const ThresholdResult r = solve_threshold(alpha, 30, 1e-5);
    CHECK(cdf_remainder_bound(r.x_eps, alpha, 30) <= 1e-5 * (1.0 + 1e-9));
    // and strictly above the bound just inside the threshold
    CHECK(cdf_remainder_bound(r.x_eps * 0.99, alpha, 30) > 1e-5);
  }
}

TEST_CASE("left side is strictly decreasing in x") {
  for (double alpha : {0.5, 1.0, 1.6}) {
    double prev = lhs(0.05, alpha, 10, DenominatorConvention::PiFactorial);
    for (double x = 0.1; x < 50.0; x *= 1.7) {
      const double cur = lhs(x, alpha, 10, DenominatorConvention::PiFactorial);
      CHECK(cur < prev);
      prev = cur;
    }
  }
}

TEST_CASE("halving epsilon pushes the threshold outward") {
  for (double alpha : {0.5, 1.0, 1.7}) {
    double eps = 1e-4;
    double prev = solve_threshold(alpha, 30, eps).x_eps;
    for (int i = 0; i < 6; ++i) {
      eps *= 0.5;
      const double cur = solve_threshold(alpha, 30, eps).x_eps;
      CHECK(cur > prev);
      prev = cur;
    }
  }
}

TEST_CASE("threshold_limit_behavior trichotomy") {
  const int grid[5] = {3, 10, 30, 60, 90};
  {
    const auto seq = threshold_limit_behavior(0.7, 1e-5, grid);
    for (int i = 1; i < 5; ++i) CHECK(seq[i].second < seq[i - 1].second);
  }
  {
    const auto seq = threshold_limit_behavior(1.0, 1e-5, grid);
    for (int i = 1; i < 5; ++i) CHECK(seq[i].second < seq[i - 1].second);
    for (const auto& [n, x] : seq) CHECK(x > 1.0);
    CHECK(seq.back().second < 1.2);  // approaching 1 from above
  }
  {
    const auto seq = threshold_limit_behavior(1.3, 1e-5, grid);
    CHECK(seq[1].second < seq[0].second);
    CHECK(seq[2].second < seq[1].second);
    CHECK(seq[3].second > seq[2].second);
    CHECK(seq[4].second > seq[3].second);
  }
}

TEST_CASE("bracket errors") {
  CHECK_THROWS_AS(solve_threshold(0.5, 3, 1e25), BracketError);
  CHECK_THROWS_AS(solve_threshold(0.5, 3, 1e-80), BracketError);
  CHECK_THROWS_AS(solve_threshold(2.5, 30, 1e-5), DomainError);
  CHECK_THROWS_AS(solve_threshold(1.0, 0, 1e-5), DomainError);
  CHECK_THROWS_AS(solve_threshold(1.0, 30, -1.0), DomainError);
}

TEST_CASE("pdf threshold certifies the pdf bound") {
  for (double alpha : {0.7, 1.3}) {
    const ThresholdResult r = solve_pdf_threshold(alpha, 30, 1e-5);
    CHECK(pdf_remainder_bound(r.x_eps, alpha, 30) <= 1e-5 * (1.0 + 1e-9));
    CHECK(pdf_remainder_bound(r.x_eps * 0.99, alpha, 30) > 1e-5);
  }
}
