// Command-line front end: point evaluation, threshold solving, error maps and
// series-vs-quadrature tables as CSV/JSON on stdout, diagnostics on stderr.
//
// Exit codes: 0 success, 2 domain error, 3 numerical failure, 64 usage error.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stabletail/closed_forms.hpp"
#include "stabletail/errors.hpp"
#include "stabletail/evaluator.hpp"
#include "stabletail/oracle.hpp"
#include "stabletail/tables.hpp"

namespace st = stabletail;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitUsage = 64;

void print_report(const st::EvalReport& r) {
  std::cout << "x          " << st::format_full(r.x) << '\n'
            << "alpha      " << st::format_full(r.params.alpha) << '\n'
            << "theta      " << st::format_full(r.params.theta) << '\n'
            << "lambda     " << st::format_full(r.params.lambda) << '\n'
            << "method     " << st::method_name(r.method) << '\n'
            << "value      " << st::format_full(r.value) << '\n'
            << "bound      " << st::format_full(r.bound_or_estimate)
            << (r.bound_is_rigorous ? " (rigorous)" : " (estimate)") << '\n';
  if (r.threshold_used) {
    std::cout << "threshold  " << st::format_full(*r.threshold_used) << '\n';
  }
  for (const auto& w : r.warnings) std::cerr << "warning: " << w << '\n';
}

void print_threshold(const st::ThresholdResult& t) {
  const char* conv =
      t.denominator_convention == st::DenominatorConvention::PiFactorial ? "pi"
                                                                         : "alpha";
  std::cout << "x_eps      " << st::format_full(t.x_eps) << '\n'
            << "alpha      " << st::format_full(t.alpha) << '\n'
            << "n_terms    " << t.n_terms << '\n'
            << "epsilon    " << st::format_full(t.epsilon) << '\n'
            << "convention " << conv << '\n'
            << "iterations " << t.iterations << '\n'
            << "residual   " << st::format_full(t.residual) << '\n';
}

// Malformed grid flags are usage errors (exit 64), not domain errors.
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

st::Spacing parse_spacing(const std::string& s) {
  if (s == "log") return st::Spacing::Log;
  if (s == "linear") return st::Spacing::Linear;
  throw UsageError("spacing must be 'log' or 'linear'");
}

st::GridSpec parse_grid(double x_min, double x_max, int points, const std::string& spacing) {
  const st::GridSpec grid{x_min, x_max, points, parse_spacing(spacing)};
  if (points < 2) throw UsageError("--points must be >= 2");
  if (!(x_min < x_max)) throw UsageError("--x-min must be below --x-max");
  if (grid.spacing == st::Spacing::Log && !(x_min > 0.0)) {
    throw UsageError("log spacing requires --x-min > 0");
  }
  return grid;
}

struct Check {
  std::string name;
  bool ok;
  std::string detail;
};

int run_selfcheck() {
  std::vector<Check> checks;

  {
    const double reference[6][2] = {{0.5, 0.088}, {0.7, 0.402}, {0.9, 1.000},
                                {1.1, 1.860}, {1.4, 3.552}, {1.7, 5.612}};
    bool ok = true;
    double worst = 0.0;
    for (const auto& row : reference) {
      const double x = st::solve_threshold(row[0], 30, 1e-5).x_eps;
      const double rel = std::fabs(x - row[1]) / row[1];
      worst = std::max(worst, rel);
      ok = ok && rel <= 0.02;
    }
    checks.push_back({"threshold-table (pi convention)", ok,
                      "worst rel dev " + st::format_full(worst)});
  }

  {
    bool ok = true;
    double worst = 0.0;
    for (double theta : {0.0, 0.5, -0.5}) {
      for (double x : {1.5, 2.0, 5.0, 10.0}) {
        const st::CertifiedValue cv = st::cdf_series(x, 1.0, theta, 60);
        const double diff = std::fabs(cv.value - st::cdf_alpha1(x, theta));
        worst = std::max(worst, diff);
        ok = ok && diff <= cv.bound + 1e-14;
      }
    }
    checks.push_back({"alpha=1 series vs closed form", ok,
                      "worst |diff| " + st::format_full(worst)});
  }

  {
    std::mt19937 rng(20240817u);
    std::uniform_real_distribution<double> ua(0.2, 2.0);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    bool ok = true;
    double worst = 0.0;
    for (int i = 0; i < 40; ++i) {
      const double alpha = ua(rng);
      const double theta = (2.0 * u01(rng) - 1.0) * st::theta_bound(alpha) * 0.999;
      const double x = std::exp(std::log(1e-2) + u01(rng) * std::log(1e5));
      const st::StableParams p = st::validate(alpha, theta, 1.0);
      const st::StableParams pm = st::validate(alpha, -theta, 1.0);
      const st::EvalReport a = st::cdf(p, -x);
      const st::EvalReport b = st::cdf(pm, x);
      const double resid = std::fabs(a.value + b.value - 1.0);
      const double tol = 2.0 * (a.bound_or_estimate + b.bound_or_estimate) + 1e-12;
      worst = std::max(worst, resid - tol);
      ok = ok && resid <= tol;
      const st::EvalReport z = st::cdf(p, 0.0);
      ok = ok && z.value == (1.0 - theta) / 2.0;
    }
    checks.push_back({"inversion + zero-point identities", ok,
                      "worst excess " + st::format_full(std::max(0.0, worst))});
  }

  {
    bool ok = true;
    double worst = 0.0;
    for (double alpha : {0.7, 1.3}) {
      const double x_eps = st::solve_threshold(alpha, 30, 1e-5).x_eps;
      for (double f : {1.0, 2.0, 8.0, 40.0}) {
        const double x = x_eps * f;
        const st::CertifiedValue s = st::cdf_series(x, alpha, 0.0, 30);
        const st::CertifiedValue q = st::cdf_integral(x, alpha, 0.0);
        const double diff = std::fabs(s.value - q.value);
        worst = std::max(worst, diff);
        ok = ok && diff <= 1e-5 + s.bound + q.bound;
      }
    }
    checks.push_back({"series/quadrature overlap agreement", ok,
                      "worst |diff| " + st::format_full(worst)});
  }

  {
    const st::CertifiedValue q = st::cdf_integral(1.0, 2.0, 0.0);
    const double diff = std::fabs(q.value - 0.76024993890652327);
    checks.push_back({"gaussian quadrature point", diff <= 1e-9,
                      "|diff| " + st::format_full(diff)});
  }

  {
    const int grid[5] = {3, 10, 30, 60, 90};
    const auto seq_07 = st::threshold_limit_behavior(0.7, 1e-5, grid);
    const auto seq_13 = st::threshold_limit_behavior(1.3, 1e-5, grid);
    bool ok = true;
    for (int i = 1; i < 5; ++i) ok = ok && seq_07[i].second < seq_07[i - 1].second;
    ok = ok && seq_13[1].second < seq_13[0].second &&
         seq_13[2].second < seq_13[1].second &&
         seq_13[3].second > seq_13[2].second && seq_13[4].second > seq_13[3].second;
    checks.push_back({"threshold limit trichotomy", ok, ""});
  }

  bool all_ok = true;
  for (const auto& c : checks) {
    std::cout << (c.ok ? "ok   " : "FAIL ") << c.name;
    if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
    std::cout << '\n';
    all_ok = all_ok && c.ok;
  }
  return all_ok ? kExitOk : kExitNumerical;
}

int run(int argc, char** argv) {
  CLI::App app{"Certified evaluation of strictly stable distribution functions"};
  app.require_subcommand(1);

  double alpha = 1.0, theta = 0.0, lambda = 1.0, x = 0.0;
  int n_terms = 30;
  double epsilon = 1e-5;

  auto add_param_flags = [&](CLI::App* cmd, bool with_x) {
    cmd->add_option("--alpha", alpha, "characteristic exponent in (0,2]")->required();
    cmd->add_option("--theta", theta, "skewness, |theta| <= min(1, 2/alpha-1)");
    cmd->add_option("--lambda", lambda, "scale > 0");
    if (with_x) cmd->add_option("--x", x, "evaluation point")->required();
    cmd->add_option("--n-terms", n_terms, "series length N");
    cmd->add_option("--eps", epsilon, "certification accuracy");
  };

  CLI::App* cmd_cdf = app.add_subcommand("cdf", "evaluate the distribution function");
  add_param_flags(cmd_cdf, true);

  CLI::App* cmd_pdf = app.add_subcommand("pdf-tail", "evaluate the tail density");
  add_param_flags(cmd_pdf, true);

  CLI::App* cmd_thr = app.add_subcommand("threshold", "solve the certification threshold x_eps^N");
  std::string convention;
  cmd_thr->add_option("--alpha", alpha)->required();
  cmd_thr->add_option("--n", n_terms, "series length N");
  cmd_thr->add_option("--eps", epsilon, "accuracy level");
  cmd_thr->add_option("--convention", convention, "denominator convention: pi | alpha");

  CLI::App* cmd_errmap = app.add_subcommand(
      "errmap", "CSV of series error vs reference over a grid, one block per N");
  double x_min = 0.1, x_max = 100.0;
  int points = 50;
  std::string spacing = "log";
  std::vector<int> n_list;
  cmd_errmap->add_option("--alpha", alpha)->required();
  cmd_errmap->add_option("--theta", theta);
  cmd_errmap->add_option("--x-min", x_min);
  cmd_errmap->add_option("--x-max", x_max);
  cmd_errmap->add_option("--points", points);
  cmd_errmap->add_option("--spacing", spacing, "log | linear");
  cmd_errmap->add_option("--n-list", n_list, "series lengths, e.g. 3 10 30")->required();
  cmd_errmap->add_option("--eps", epsilon);

  CLI::App* cmd_table = app.add_subcommand(
      "table", "series vs quadrature cdf values over a grid (CSV or JSON)");
  std::vector<double> alpha_list;
  std::string format = "csv";
  cmd_table->add_option("--alpha-list", alpha_list, "alpha values")->required();
  cmd_table->add_option("--theta", theta);
  cmd_table->add_option("--x-min", x_min);
  cmd_table->add_option("--x-max", x_max);
  cmd_table->add_option("--points", points);
  cmd_table->add_option("--spacing", spacing, "log | linear");
  cmd_table->add_option("--format", format, "csv | json");

  CLI::App* cmd_self = app.add_subcommand("selfcheck", "run the invariant suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  st::EvalPolicy policy;
  policy.n_terms = n_terms;
  policy.epsilon = epsilon;

  if (cmd_cdf->parsed()) {
    print_report(st::cdf(st::validate(alpha, theta, lambda), x, policy));
  } else if (cmd_pdf->parsed()) {
    print_report(st::pdf_tail(st::validate(alpha, theta, lambda), x, policy));
  } else if (cmd_thr->parsed()) {
    if (convention.empty()) {
      print_threshold(st::solve_threshold(alpha, n_terms, epsilon,
                                          st::DenominatorConvention::PiFactorial));
      print_threshold(st::solve_threshold(alpha, n_terms, epsilon,
                                          st::DenominatorConvention::AlphaFactorial));
    } else if (convention == "pi" || convention == "alpha") {
      print_threshold(st::solve_threshold(
          alpha, n_terms, epsilon,
          convention == "pi" ? st::DenominatorConvention::PiFactorial
                             : st::DenominatorConvention::AlphaFactorial));
    } else {
      throw UsageError("unknown convention '" + convention + "'");
    }
  } else if (cmd_errmap->parsed()) {
    const st::GridSpec grid = parse_grid(x_min, x_max, points, spacing);
    if (n_list.empty()) throw UsageError("--n-list must not be empty");
    const auto rows = st::errmap_rows(alpha, theta, grid, n_list, epsilon);
    st::write_errmap_csv(std::cout, rows);
  } else if (cmd_table->parsed()) {
    const st::GridSpec grid = parse_grid(x_min, x_max, points, spacing);
    const auto rows = st::table_rows(alpha_list, theta, grid, policy);
    if (format == "json") {
      st::write_table_json(std::cout, rows);
    } else if (format == "csv") {
      st::write_table_csv(std::cout, rows);
    } else {
      throw UsageError("unknown format '" + format + "'");
    }
    for (double a : alpha_list) {
      if (auto onset = st::divergence_onset(rows, a)) {
        std::cerr << "divergence onset for alpha=" << a << ": x=" << *onset << '\n';
      }
    }
  } else if (cmd_self->parsed()) {
    return run_selfcheck();
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const st::DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const st::ContractError& e) {
    std::cerr << "contract error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const st::QuadratureFailure& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const st::BracketError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const st::OracleAccuracyError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const st::OutOfValidatedRange& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
}
