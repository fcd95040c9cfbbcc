#pragma once

#include "stabletail/errors.hpp"

namespace stabletail {

/// A strictly stable law in form "C": characteristic function
///   g^(t) = exp{ -lambda |t|^alpha exp(-i pi alpha theta sign(t) / 2) }
/// with alpha in (0,2], |theta| <= min(1, 2/alpha - 1), lambda > 0.
struct StableParams {
  double alpha;
  double theta;
  double lambda;
};

/// Admissible skewness range for a given alpha: min(1, 2/alpha - 1).
double theta_bound(double alpha);

/// Validate raw parameters. Rejects (never clamps) out-of-domain values.
StableParams validate(double alpha, double theta, double lambda);

/// A query folded onto the positive half-axis of the standard (lambda = 1)
/// law: x_std = |x| lambda^{-1/alpha}, theta_eff = theta sign(x).
///
/// The scaling law follows from the characteristic function:
/// g^(t,alpha,theta,lambda) = g^(t lambda^{1/alpha},alpha,theta,1), hence
/// G(x,alpha,theta,lambda) = G(x lambda^{-1/alpha},alpha,theta,1).
struct StandardizedQuery {
  double x_std;      // >= 0
  double theta_eff;  // theta * sign_x (theta itself when sign_x == 0)
  int sign_x;        // -1, 0, +1
};

StandardizedQuery standardize(const StableParams& params, double x);

/// Inversion property G(-x,alpha,theta) = 1 - G(x,alpha,-theta), applied to
/// a cdf value computed at (|x|, alpha, theta*). sign_x = 0 is rejected: the
/// x = 0 closed form must be used instead, never an approximation.
double apply_inversion(double g_plus, int sign_x);

}  // namespace stabletail
