#include "stabletail/closed_forms.hpp"

#include <cmath>
#include <string>

#include "stabletail/errors.hpp"
#include "stabletail/special.hpp"

namespace stabletail {

double cdf_alpha1(double x, double theta) {
  if (!(std::fabs(theta) <= 1.0)) {
    throw DomainError("cdf_alpha1: |theta| = " + std::to_string(std::fabs(theta)) +
                      " exceeds 1");
  }
  if (std::fabs(theta) == 1.0) {
    const double atom = theta;  // point mass at theta (= +-1) for lambda = 1
    if (x > atom) return 1.0;
    if (x < atom) return 0.0;
    return 0.5;
  }
  const double s = sin_pi(0.5 * theta);
  const double c = std::cos(M_PI * 0.5 * std::fabs(theta));
  const double u = (x - s) / c;
  // branch on the sign of u so that G(-x,theta) == 1 - G(x,-theta) holds
  // bitwise: 1 - A is exact for A in [0.5, 1]
  if (u >= 0.0) return 0.5 + std::atan(u) / M_PI;
  return 1.0 - (0.5 + std::atan(-u) / M_PI);
}

double cdf_at_zero(double theta) {
  if (!(std::fabs(theta) <= 1.0)) {
    throw DomainError("cdf_at_zero: |theta| exceeds 1");
  }
  return (1.0 - theta) / 2.0;
}

double pdf_alpha1(double x, double theta) {
  if (!(std::fabs(theta) < 1.0)) {
    throw DomainError("pdf_alpha1: degenerate at |theta| = 1 (no density)");
  }
  const double s = sin_pi(0.5 * theta);
  const double c = std::cos(M_PI * 0.5 * theta);
  return c / (M_PI * (x * x - 2.0 * x * s + 1.0));
}

}  // namespace stabletail
