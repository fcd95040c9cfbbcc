#include "stabletail/params.hpp"

#include <cmath>
#include <string>

namespace stabletail {

double theta_bound(double alpha) {
  return std::min(1.0, 2.0 / alpha - 1.0);
}

StableParams validate(double alpha, double theta, double lambda) {
  if (!(alpha > 0.0) || !(alpha <= 2.0)) {
    throw DomainError("alpha = " + std::to_string(alpha) + " outside (0, 2]");
  }
  if (!std::isfinite(theta) || std::fabs(theta) > theta_bound(alpha)) {
    throw DomainError("theta = " + std::to_string(theta) +
                      " outside |theta| <= min(1, 2/alpha - 1) = " +
                      std::to_string(theta_bound(alpha)));
  }
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw DomainError("lambda = " + std::to_string(lambda) + " must be positive");
  }
  return StableParams{alpha, theta, lambda};
}

StandardizedQuery standardize(const StableParams& params, double x) {
  const int sign_x = (x > 0.0) - (x < 0.0);
  const double scale = std::pow(params.lambda, -1.0 / params.alpha);
  return StandardizedQuery{
      .x_std = std::fabs(x) * scale,
      .theta_eff = sign_x == 0 ? params.theta : params.theta * sign_x,
      .sign_x = sign_x,
  };
}

double apply_inversion(double g_plus, int sign_x) {
  if (g_plus < -1e-12 || g_plus > 1.0 + 1e-12 || !std::isfinite(g_plus)) {
    throw ContractError("apply_inversion: cdf value " + std::to_string(g_plus) +
                        " not in [0,1] beyond tolerance");
  }
  g_plus = std::min(1.0, std::max(0.0, g_plus));
  if (sign_x > 0) return g_plus;
  if (sign_x < 0) return 1.0 - g_plus;
  throw ContractError("apply_inversion: sign_x = 0; use the x = 0 closed form");
}

}  // namespace stabletail
