#pragma once

#include <string>
#include <vector>

namespace stabletail {

enum class Method {
  SeriesTail,
  Quadrature,
  ClosedFormAlpha1,
  ClosedFormZero,
};

const char* method_name(Method m);

/// A numeric value paired with an absolute-error bound and the method that
/// produced it. For SeriesTail the bound is the proved remainder expression
/// evaluated at the query point (rigorous); for Quadrature it is an error
/// estimate, not a theorem.
struct CertifiedValue {
  double value = 0.0;
  double bound = 0.0;
  Method method = Method::SeriesTail;
  int terms_used = 0;
  std::vector<std::string> warnings;
};

/// Partial sum of the tail expansion of the cdf at x -> +infinity,
///   G_N(x,alpha,theta) = (1/pi) sum_{n=1}^{N-1} (-1)^{n+1} Gamma(alpha n)
///                        sin(pi alpha n (1+theta)/2) x^{-alpha n} / n!,
/// summed in ascending n with compensated accumulation over log-space terms.
/// N = n_terms; N = 1 is the empty sum. theta = +-1 is rejected (the
/// expansion is not proved there).
double cdf_tail_sum(double x, double alpha, double theta, int n_terms);

/// Proved bound on the truncation remainder of the cdf tail series:
///   x^{-alpha N} / (pi N!) * (Gamma(alpha N) + x^{-alpha} Gamma(alpha (N+1))).
double cdf_remainder_bound(double x, double alpha, int n_terms);

/// Analogous bound for the pdf tail series:
///   x^{-alpha N - 1} / (pi N!) * (Gamma(alpha N + 1) + x^{-alpha} Gamma(alpha (N+1) + 1)).
double pdf_remainder_bound(double x, double alpha, int n_terms);

/// Tail-series cdf at any x != 0 (lambda = 1):
///   value = (1 + sign x)/2 - sign(x) G_N(|x|, alpha, theta sign(x))
/// with bound = cdf_remainder_bound(|x|, alpha, N). Does not itself enforce
/// |x| >= x_eps^N; the bound is the certificate.
CertifiedValue cdf_series(double x, double alpha, double theta, int n_terms);

/// Tail-series pdf at any x != 0 (lambda = 1):
///   value = g_N(|x|, alpha, theta sign(x)), bound = pdf_remainder_bound.
/// The n = 0 summand vanishes identically, so N = 1 yields 0.
CertifiedValue pdf_tail_series(double x, double alpha, double theta, int n_terms);

enum class ConvergenceRegime {
  ConvergentAllX,      // alpha < 1: the infinite series converges for every x
  ConvergentBeyondOne, // alpha = 1: converges for |x| > 1 only
  AsymptoticOnly,      // alpha > 1: divergent; asymptotic as x -> infinity
};

ConvergenceRegime convergence_regime(double alpha);

}  // namespace stabletail
