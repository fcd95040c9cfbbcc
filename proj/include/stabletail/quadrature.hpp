#pragma once

#include "stabletail/tail_series.hpp"

namespace stabletail {

/// Tolerances and limits for the adaptive Gauss-Kronrod evaluation of the
/// integral representation. endpoint_margin is the offset from the two
/// singular endpoints phi = -pi theta/2 and phi = pi/2.
struct QuadratureSpec {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  int max_subdivisions = 200;
  double endpoint_margin = 1e-12;
};

void validate(const QuadratureSpec& spec);

/// Kernel of the second-type integral representation,
///   U(phi,alpha,theta) = (sin(alpha(phi + pi theta/2)) / cos phi)^{alpha/(1-alpha)}
///                        * cos(phi(1-alpha) - pi alpha theta/2) / cos phi,
/// evaluated through logs so the power factor cannot overflow prematurely.
/// Requires alpha != 1 and phi strictly inside (-pi theta/2, pi/2).
double u_kernel(double phi, double alpha, double theta);

/// exp{-x^{alpha/(alpha-1)} U(phi,alpha,theta)}: monotone in phi, decreasing
/// for alpha < 1 and increasing for alpha > 1, with range in [0,1].
double cdf_integrand(double x, double alpha, double theta, double phi);

/// G^(+)(x,alpha,theta) for x > 0, alpha != 1:
///   1 - (1+theta)/4 (1 + sign(1-alpha))
///     + sign(1-alpha)/pi * int_{-pi theta/2}^{pi/2} exp{-x^{alpha/(alpha-1)} U} dphi.
/// The returned bound is a quadrature error estimate (method = Quadrature),
/// not a proved theorem bound; when an endpoint boundary layer sharper than
/// the achieved subdivision is detected, the estimate is inflated to cover
/// it and a warning is attached.
/// Within 1e-8 of alpha = 1 the generalized-Cauchy closed form is used;
/// within 1e-3 a precision warning is attached (the exponent alpha/(alpha-1)
/// magnifies rounding).
CertifiedValue cdf_positive_integral(double x, double alpha, double theta,
                                     const QuadratureSpec& spec = {});

/// Full-line assembly: x = 0 delegates to the closed form (1-theta)/2,
/// otherwise (1 - sign x)/2 + sign(x) G^(+)(|x|, alpha, theta sign(x)).
CertifiedValue cdf_integral(double x, double alpha, double theta,
                            const QuadratureSpec& spec = {});

}  // namespace stabletail
