#include "stabletail/special.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "stabletail/errors.hpp"

namespace stabletail {

namespace {

// Lanczos g = 7, 9-term coefficient set (Godfrey).
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

double log_gamma_lanczos(double z) {
  // valid for z >= 0.5
  const double zm1 = z - 1.0;
  double series = kLanczos[0];
  for (int i = 1; i < 9; ++i) series += kLanczos[i] / (zm1 + i);
  const double t = zm1 + kLanczosG + 0.5;
  return kLnSqrt2Pi + (zm1 + 0.5) * std::log(t) - t + std::log(series);
}

}  // namespace

double log_gamma(double z) {
  if (!(z > 0.0)) {
    throw DomainError("log_gamma: z = " + std::to_string(z) + " must be > 0");
  }
  if (z < 0.5) {
    // reflection: ln Gamma(z) = ln(pi / sin(pi z)) - ln Gamma(1 - z)
    return std::log(M_PI / sin_pi(z)) - log_gamma_lanczos(1.0 - z);
  }
  return log_gamma_lanczos(z);
}

double sin_pi(double x) {
  double sign = 1.0;
  if (x < 0.0) {
    x = -x;
    sign = -1.0;
  }
  if (x >= 9007199254740992.0) return 0.0;  // 2^53: every such double is an even integer
  double r = std::fmod(x, 2.0);             // exact
  if (r >= 1.0) {
    r -= 1.0;  // exact (Sterbenz)
    sign = -sign;
  }
  // r in [0, 1)
  double v = r <= 0.5 ? r : 1.0 - r;  // exact for r in [0.5, 1)
  double s = v <= 0.25 ? std::sin(M_PI * v) : std::cos(M_PI * (0.5 - v));
  return sign * s;
}

double log_add_exp(double log_a, double log_b) {
  if (log_a < log_b) std::swap(log_a, log_b);
  if (log_b == -std::numeric_limits<double>::infinity()) return log_a;
  return log_a + std::log1p(std::exp(log_b - log_a));
}

namespace {

LogMagnitude term_log(int n, double alpha, double theta, double x, bool pdf) {
  const double k = 0.5 * alpha * static_cast<double>(n) * (1.0 + theta);
  const double s = sin_pi(k);
  int sign = (s > 0.0) - (s < 0.0);
  if (n % 2 == 0) sign = -sign;  // (-1)^{n+1}
  if (sign == 0) return {-std::numeric_limits<double>::infinity(), 0};
  const double an = alpha * n;
  const double gamma_arg = pdf ? an + 1.0 : an;
  const double x_exponent = pdf ? an + 1.0 : an;
  const double log_abs = log_gamma(gamma_arg) - log_gamma(n + 1.0) -
                         x_exponent * std::log(x) + std::log(std::fabs(s)) - kLnPi;
  return {log_abs, sign};
}

}  // namespace

LogMagnitude series_term_log(int n, double alpha, double theta, double x) {
  return term_log(n, alpha, theta, x, /*pdf=*/false);
}

LogMagnitude pdf_series_term_log(int n, double alpha, double theta, double x) {
  return term_log(n, alpha, theta, x, /*pdf=*/true);
}

}  // namespace stabletail
