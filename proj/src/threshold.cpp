#include "stabletail/threshold.hpp"

#include <cmath>
#include <string>

#include "stabletail/errors.hpp"
#include "stabletail/special.hpp"

namespace stabletail {

namespace {

constexpr double kBracketLo = 1e-8;
constexpr double kBracketHi = 1e20;
constexpr int kMaxIterations = 200;

struct BoundLhs {
  double alpha;
  double n;
  double log_den;  // ln(pi N!) or ln(alpha N!)
  double shift;    // 0 for the cdf bound, 1 for the pdf bound

  // ln LHS as a function of t = ln x; strictly decreasing in t.
  double operator()(double t) const {
    const double lead = -(alpha * n + shift) * t - log_den;
    const double a = lead + log_gamma(alpha * n + shift);
    const double b = lead - alpha * t + log_gamma(alpha * (n + 1.0) + shift);
    return log_add_exp(a, b);
  }
};

ThresholdResult bisect_threshold(double alpha, int n_terms, double epsilon,
                                 DenominatorConvention convention, double shift) {
  if (!(alpha > 0.0) || !(alpha <= 2.0)) {
    throw DomainError("solve_threshold: alpha outside (0, 2]");
  }
  if (n_terms < 1) throw DomainError("solve_threshold: n_terms must be >= 1");
  if (!(epsilon > 0.0)) throw DomainError("solve_threshold: epsilon must be > 0");

  const double den =
      convention == DenominatorConvention::PiFactorial ? kLnPi : std::log(alpha);
  const BoundLhs lhs{alpha, static_cast<double>(n_terms),
                     den + log_gamma(n_terms + 1.0), shift};
  const double target = std::log(epsilon);

  double lo = std::log(kBracketLo);
  double hi = std::log(kBracketHi);
  if (lhs(lo) < target) {
    throw BracketError("solve_threshold: x_eps below bracket floor 1e-8 (eps = " +
                       std::to_string(epsilon) + ")");
  }
  if (lhs(hi) > target) {
    throw BracketError("solve_threshold: x_eps above bracket ceiling 1e20");
  }

  int it = 0;
  while (it < kMaxIterations &&
         hi - lo > 1e-16 * std::max(1.0, std::fabs(lo) + std::fabs(hi))) {
    const double mid = 0.5 * (lo + hi);
    if (lhs(mid) > target) {
      lo = mid;
    } else {
      hi = mid;
    }
    ++it;
  }

  // return the upper bracket end: lhs(hi) <= eps holds by the bisection
  // invariant, so the remainder bound at x_eps (and beyond) never exceeds eps
  const double t = hi;
  ThresholdResult r;
  r.x_eps = std::exp(t);
  r.alpha = alpha;
  r.n_terms = n_terms;
  r.epsilon = epsilon;
  r.iterations = it;
  r.residual = std::fabs(std::exp(lhs(t)) - epsilon);
  r.denominator_convention = convention;
  return r;
}

}  // namespace

ThresholdResult solve_threshold(double alpha, int n_terms, double epsilon,
                                DenominatorConvention convention) {
  return bisect_threshold(alpha, n_terms, epsilon, convention, 0.0);
}

ThresholdResult solve_pdf_threshold(double alpha, int n_terms, double epsilon) {
  return bisect_threshold(alpha, n_terms, epsilon,
                          DenominatorConvention::PiFactorial, 1.0);
}

std::vector<std::pair<int, double>> threshold_limit_behavior(
    double alpha, double epsilon, std::span<const int> n_grid) {
  std::vector<std::pair<int, double>> out;
  out.reserve(n_grid.size());
  for (int n : n_grid) {
    out.emplace_back(n, solve_threshold(alpha, n, epsilon).x_eps);
  }
  return out;
}

}  // namespace stabletail
