#pragma once

#include <span>
#include <utility>
#include <vector>

namespace stabletail {

/// Denominator convention for the threshold equation. The proved remainder
/// bound carries 1/(pi N!); an alternative form with 1/(alpha N!) exists.
/// Both are implemented; PiFactorial reproduces the reference threshold
/// table and is the default everywhere.
enum class DenominatorConvention { PiFactorial, AlphaFactorial };

/// Solved threshold coordinate x_eps^N for one (alpha, N, epsilon) query:
/// the x at which the N-term remainder bound equals epsilon, so the series
/// is certified to accuracy epsilon for all |x| >= x_eps.
struct ThresholdResult {
  double x_eps;
  double alpha;
  int n_terms;
  double epsilon;
  int iterations;
  double residual;  // |LHS(x_eps) - epsilon|
  DenominatorConvention denominator_convention;
};

/// Solve x^{-alpha N}/(D N!) (Gamma(alpha N) + x^{-alpha} Gamma(alpha(N+1))) = eps
/// for x, D = pi or alpha. The left side is strictly decreasing in x (both
/// powers of x are negative), so bisection on ln x over [ln 1e-8, ln 1e20]
/// converges to a unique root.
ThresholdResult solve_threshold(
    double alpha, int n_terms, double epsilon,
    DenominatorConvention convention = DenominatorConvention::PiFactorial);

/// Same machinery applied to the pdf remainder bound (pi denominator).
ThresholdResult solve_pdf_threshold(double alpha, int n_terms, double epsilon);

/// Thresholds over an ascending N grid; used to exhibit the N -> infinity
/// trichotomy (x_eps -> 0 for alpha < 1, -> 1 for alpha = 1, -> infinity for
/// alpha > 1).
std::vector<std::pair<int, double>> threshold_limit_behavior(
    double alpha, double epsilon, std::span<const int> n_grid);

}  // namespace stabletail
