#pragma once

#include "stabletail/params.hpp"

namespace stabletail {

/// Configuration of the brute-force Fourier-inversion reference. A desk-scale
/// test fixture, never a production path: |x| <= 100, and each call checks
/// that the truncated characteristic-function tail is provably below 1e-10.
struct OracleSpec {
  double t_max = 200.0;  // truncation of the CF integral
  int panels = 20000;    // panel budget for the oscillatory part
};

/// Analytic upper bound on (1/pi) int_{t_max}^inf |g^(t)| dt, the truncation
/// error of the inversion integral.
double oracle_truncation_bound(const StableParams& params, const OracleSpec& spec);

/// Direct inversion of the characteristic function:
///   g(x) = (1/pi) int_0^{t_max} exp(-lambda c t^alpha) cos(x t - lambda s t^alpha) dt,
/// c = cos(pi alpha theta/2), s = sin(pi alpha theta/2), by composite
/// Gauss-Legendre panels (with a power substitution near t = 0 where t^alpha
/// is not smooth). Throws OracleAccuracyError if the truncation bound
/// exceeds 1e-10.
double oracle_pdf(const StableParams& params, double x, const OracleSpec& spec = {});

/// (1 - theta)/2 + int_0^x oracle_pdf, by adaptive Simpson on the outer
/// integral. Restricted to |x| <= 100.
double oracle_cdf(const StableParams& params, double x, const OracleSpec& spec = {});

}  // namespace stabletail
