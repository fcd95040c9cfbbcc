#include "stabletail/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "stabletail/errors.hpp"
#include "stabletail/special.hpp"

namespace stabletail {

namespace {

// 10-point Gauss-Legendre nodes/weights on [-1, 1].
constexpr double kGlX[5] = {
    0.148874338981631210884826001130,
    0.433395394129247190799265943166,
    0.679409568299024406234327365115,
    0.865063366688984510732096688423,
    0.973906528517171720077964012084,
};
constexpr double kGlW[5] = {
    0.295524224714752870173892994651,
    0.269266719309996355091226921569,
    0.219086362515982043995534934228,
    0.149451349150580593145776339658,
    0.066671344308688137593568809893,
};

template <typename F>
double gl10(const F& f, double lo, double hi) {
  const double c = 0.5 * (lo + hi);
  const double h = 0.5 * (hi - lo);
  double acc = 0.0;
  for (int i = 0; i < 5; ++i) {
    acc += kGlW[i] * (f(c - h * kGlX[i]) + f(c + h * kGlX[i]));
  }
  return acc * h;
}

template <typename F>
double gl10_panels(const F& f, double lo, double hi, int panels) {
  NeumaierSum acc;
  const double h = (hi - lo) / panels;
  for (int i = 0; i < panels; ++i) {
    acc.add(gl10(f, lo + i * h, lo + (i + 1) * h));
  }
  return acc.total();
}

// Recursive adaptive Simpson with standard |S2 - S1|/15 control.
template <typename F>
double simpson_step(const F& f, double a, double b, double fa, double fm,
                    double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

template <typename F>
double adaptive_simpson(const F& f, double a, double b, double tol) {
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_step(f, a, b, fa, fm, fb, whole, tol, 28);
}

struct CfParts {
  double c;       // cos(pi alpha theta / 2)
  double s;       // sin(pi alpha theta / 2)
  double t_eff;   // upper limit after underflow cut
};

CfParts cf_parts(const StableParams& p, const OracleSpec& spec) {
  const double half_ang = 0.5 * p.alpha * p.theta;
  CfParts parts;
  parts.c = std::cos(M_PI * half_ang);
  parts.s = sin_pi(half_ang);
  if (parts.c <= 0.0) {
    throw OracleAccuracyError(
        "oracle: cos(pi alpha theta/2) <= 0, inversion integral does not decay");
  }
  // beyond exp(-lambda c t^alpha) < exp(-745) the integrand is flush zero
  const double cut = std::pow(745.0 / (p.lambda * parts.c), 1.0 / p.alpha);
  parts.t_eff = std::min(spec.t_max, cut);
  return parts;
}

}  // namespace

double oracle_truncation_bound(const StableParams& params, const OracleSpec& spec) {
  const double half_ang = 0.5 * params.alpha * params.theta;
  const double c = std::cos(M_PI * half_ang);
  if (c <= 0.0) return std::numeric_limits<double>::infinity();
  // (1/pi) int_T^inf e^{-lambda c t^alpha} dt
  //   = Gamma(1/alpha, z) / (pi alpha (lambda c)^{1/alpha}),  z = lambda c T^alpha,
  // bounded with Gamma(s,z) <= z^{s-1} e^{-z} / (1 - (s-1)/z) for z > 2(s-1).
  const double s = 1.0 / params.alpha;
  const double z = params.lambda * c * std::pow(spec.t_max, params.alpha);
  if (z <= std::max(2.0 * std::fabs(s - 1.0), 2.0)) {
    return std::numeric_limits<double>::infinity();  // bound not applicable; t_max too small
  }
  double log_inc = (s - 1.0) * std::log(z) - z - std::log1p(-(s - 1.0) / z);
  const double log_bound = log_inc - kLnPi - std::log(params.alpha) -
                           s * std::log(params.lambda * c);
  return std::exp(log_bound);
}

double oracle_pdf(const StableParams& params, double x, const OracleSpec& spec) {
  if (!(spec.t_max > 0.0) || spec.panels < 100) {
    throw DomainError("OracleSpec: t_max > 0 and panels >= 100 required");
  }
  const double tail = oracle_truncation_bound(params, spec);
  if (!(tail <= 1e-10)) {
    throw OracleAccuracyError(
        "oracle truncation bound " + std::to_string(tail) +
        " exceeds 1e-10; raise t_max");
  }
  const CfParts cf = cf_parts(params, spec);
  const double lam = params.lambda;
  const auto integrand = [&](double t) {
    const double ta = std::pow(t, params.alpha);
    return std::exp(-lam * cf.c * ta) * std::cos(x * t - lam * cf.s * ta);
  };

  NeumaierSum total;
  const double split = std::min(1.0, cf.t_eff);
  {
    // t = v^m with alpha m >= 6 makes t^alpha smooth at the origin
    const int m = std::max(3, static_cast<int>(std::ceil(6.0 / params.alpha)));
    const auto g = [&](double v) {
      double t = std::pow(v, m);
      return integrand(t) * m * std::pow(v, m - 1);
    };
    const double v_hi = std::pow(split, 1.0 / m);
    const int panels =
        std::clamp(static_cast<int>(std::ceil(m * (std::fabs(x) + 2.0 * lam + 2.0) / 3.0)),
                   64, 8000);
    total.add(gl10_panels(g, 0.0, v_hi, panels));
  }
  if (cf.t_eff > 1.0) {
    // phase rate |x| + lambda alpha |s| t^{alpha-1}, <= the value at max(1, t_eff)
    const double freq =
        std::fabs(x) +
        lam * params.alpha * std::fabs(cf.s) *
            std::pow(std::max(1.0, cf.t_eff), std::max(0.0, params.alpha - 1.0));
    const int panels = std::clamp(
        static_cast<int>(std::ceil((cf.t_eff - 1.0) * (freq + 2.0) / 3.0)), 100,
        spec.panels);
    total.add(gl10_panels(integrand, 1.0, cf.t_eff, panels));
  }
  return total.total() / M_PI;
}

double oracle_cdf(const StableParams& params, double x, const OracleSpec& spec) {
  if (std::fabs(x) > 100.0) {
    throw DomainError("oracle_cdf: |x| <= 100 (desk-scale reference only)");
  }
  const double base = (1.0 - params.theta) / 2.0;
  if (x == 0.0) return base;
  const auto pdf = [&](double xi) { return oracle_pdf(params, xi, spec); };
  return base + adaptive_simpson(pdf, 0.0, x, 1e-11);
}

}  // namespace stabletail
