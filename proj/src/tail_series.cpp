#include "stabletail/tail_series.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "stabletail/errors.hpp"
#include "stabletail/special.hpp"

namespace stabletail {

const char* method_name(Method m) {
  switch (m) {
    case Method::SeriesTail: return "series-tail";
    case Method::Quadrature: return "quadrature";
    case Method::ClosedFormAlpha1: return "closed-form-alpha1";
    case Method::ClosedFormZero: return "closed-form-zero";
  }
  return "?";
}

namespace {

void check_series_domain(double x, double alpha, double theta, int n_terms) {
  if (!(alpha > 0.0) || !(alpha <= 2.0)) {
    throw DomainError("tail series: alpha outside (0, 2]");
  }
  if (std::fabs(theta) >= 1.0) {
    if (std::fabs(theta) == 1.0) {
      throw DomainError("tail series: theta* = +-1 excluded (no proved remainder)");
    }
    throw DomainError("tail series: |theta| > 1");
  }
  if (!(x > 0.0)) throw DomainError("tail series: x must be > 0");
  if (n_terms < 1) throw DomainError("tail series: n_terms must be >= 1");
}

// Sum sign * exp(log_abs) over terms, scaled by the largest magnitude so no
// intermediate exp() overflows spuriously. The result itself may still be
// +-inf when the true partial sum exceeds the double range (divergent-regime
// inputs); that is reported honestly.
double sum_log_terms(const std::vector<LogMagnitude>& terms) {
  double max_log = -std::numeric_limits<double>::infinity();
  for (const auto& t : terms) {
    if (t.sign != 0 && t.log_abs > max_log) max_log = t.log_abs;
  }
  if (max_log == -std::numeric_limits<double>::infinity()) return 0.0;
  NeumaierSum acc;
  for (const auto& t : terms) {
    if (t.sign != 0) acc.add(t.sign * std::exp(t.log_abs - max_log));
  }
  const double scaled = acc.total();
  if (scaled == 0.0) return 0.0;
  if (max_log > -700.0 && max_log < 700.0) return scaled * std::exp(max_log);
  const double lg = max_log + std::log(std::fabs(scaled));
  return std::copysign(std::exp(lg), scaled);
}

double remainder_bound(double x, double alpha, int n_terms, bool pdf) {
  if (!(x > 0.0)) throw DomainError("remainder bound: x must be > 0");
  if (n_terms < 1) throw DomainError("remainder bound: n_terms must be >= 1");
  const double n = n_terms;
  const double lx = std::log(x);
  const double shift = pdf ? 1.0 : 0.0;
  const double lead = -(alpha * n + shift) * lx - log_gamma(n + 1.0) - kLnPi;
  const double a = lead + log_gamma(alpha * n + shift);
  const double b = lead - alpha * lx + log_gamma(alpha * (n + 1.0) + shift);
  return std::exp(log_add_exp(a, b));
}

}  // namespace

double cdf_tail_sum(double x, double alpha, double theta, int n_terms) {
  check_series_domain(x, alpha, theta, n_terms);
  std::vector<LogMagnitude> terms;
  terms.reserve(n_terms > 1 ? n_terms - 1 : 0);
  for (int n = 1; n < n_terms; ++n) {
    terms.push_back(series_term_log(n, alpha, theta, x));
  }
  return sum_log_terms(terms);
}

double cdf_remainder_bound(double x, double alpha, int n_terms) {
  return remainder_bound(x, alpha, n_terms, /*pdf=*/false);
}

double pdf_remainder_bound(double x, double alpha, int n_terms) {
  return remainder_bound(x, alpha, n_terms, /*pdf=*/true);
}

CertifiedValue cdf_series(double x, double alpha, double theta, int n_terms) {
  if (x == 0.0) throw DomainError("cdf_series: x = 0; use the x = 0 closed form");
  const int sgn = x > 0.0 ? 1 : -1;
  const double theta_eff = theta * sgn;
  const double ax = std::fabs(x);
  const double tail = cdf_tail_sum(ax, alpha, theta_eff, n_terms);
  CertifiedValue cv;
  cv.value = sgn > 0 ? 1.0 - tail : tail;
  cv.bound = cdf_remainder_bound(ax, alpha, n_terms);
  cv.method = Method::SeriesTail;
  cv.terms_used = n_terms;
  return cv;
}

CertifiedValue pdf_tail_series(double x, double alpha, double theta, int n_terms) {
  if (x == 0.0) throw DomainError("pdf_tail_series: x = 0 is outside the tail regime");
  const int sgn = x > 0.0 ? 1 : -1;
  const double theta_eff = theta * sgn;
  const double ax = std::fabs(x);
  check_series_domain(ax, alpha, theta_eff, n_terms);
  std::vector<LogMagnitude> terms;
  terms.reserve(n_terms > 1 ? n_terms - 1 : 0);
  for (int n = 1; n < n_terms; ++n) {  // the n = 0 summand is identically zero
    terms.push_back(pdf_series_term_log(n, alpha, theta_eff, ax));
  }
  CertifiedValue cv;
  cv.value = sum_log_terms(terms);
  cv.bound = pdf_remainder_bound(ax, alpha, n_terms);
  cv.method = Method::SeriesTail;
  cv.terms_used = n_terms;
  return cv;
}

ConvergenceRegime convergence_regime(double alpha) {
  if (alpha < 1.0) return ConvergenceRegime::ConvergentAllX;
  if (alpha == 1.0) return ConvergenceRegime::ConvergentBeyondOne;
  return ConvergenceRegime::AsymptoticOnly;
}

}  // namespace stabletail
