#pragma once

namespace stabletail {

/// Generalized Cauchy cdf (alpha = 1):
///   G(x,1,theta) = 1/2 + (1/pi) arctan((x - sin(pi theta/2)) / cos(pi theta/2)).
/// |theta| = 1 degenerates to a unit point mass at +-1; the step-function
/// limit of the arctan formula is returned (1/2 at the atom itself).
double cdf_alpha1(double x, double theta);

/// G(0, alpha, theta) = (1 - theta) / 2 for every admissible (alpha, theta).
double cdf_at_zero(double theta);

/// Generalized Cauchy density (alpha = 1, |theta| < 1):
///   g(x,1,theta) = cos(pi theta/2) / (pi (x^2 - 2x sin(pi theta/2) + 1)).
/// The |theta| = 1 laws are degenerate and have no density.
double pdf_alpha1(double x, double theta);

}  // namespace stabletail
