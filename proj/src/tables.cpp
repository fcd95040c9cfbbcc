#include "stabletail/tables.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include <nlohmann/json.hpp>

#include "stabletail/closed_forms.hpp"
#include "stabletail/errors.hpp"

namespace stabletail {

namespace {
constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
constexpr double kDivergenceLevel = 1e-3;
}  // namespace

std::vector<double> make_grid(const GridSpec& grid) {
  if (!(grid.x_min < grid.x_max)) throw DomainError("GridSpec: x_min < x_max required");
  if (grid.points < 2) throw DomainError("GridSpec: points >= 2 required");
  if (grid.spacing == Spacing::Log && !(grid.x_min > 0.0)) {
    throw DomainError("GridSpec: log spacing requires x_min > 0");
  }
  std::vector<double> xs(grid.points);
  if (grid.spacing == Spacing::Linear) {
    const double h = (grid.x_max - grid.x_min) / (grid.points - 1);
    for (int i = 0; i < grid.points; ++i) xs[i] = grid.x_min + i * h;
  } else {
    const double l0 = std::log(grid.x_min);
    const double h = (std::log(grid.x_max) - l0) / (grid.points - 1);
    for (int i = 0; i < grid.points; ++i) xs[i] = std::exp(l0 + i * h);
  }
  xs.front() = grid.x_min;
  xs.back() = grid.x_max;
  return xs;
}

std::string format_full(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<ErrmapRow> errmap_rows(double alpha, double theta, const GridSpec& grid,
                                   std::span<const int> n_list, double epsilon) {
  if (n_list.empty()) throw DomainError("errmap: empty n_terms list");
  validate(alpha, theta, 1.0);
  const std::vector<double> xs = make_grid(grid);
  std::vector<ErrmapRow> rows;
  rows.reserve(xs.size() * n_list.size());
  for (int n : n_list) {
    const double threshold = solve_threshold(alpha, n, epsilon).x_eps;
    for (double x : xs) {
      ErrmapRow row{};
      row.x = x;
      row.n_terms = n;
      row.threshold = threshold;
      const CertifiedValue sv = cdf_series(x, alpha, theta, n);
      row.series_value = sv.value;
      row.remainder_bound = sv.bound;
      if (alpha == 1.0) {
        row.reference_value = cdf_alpha1(x, theta);
      } else {
        try {
          row.reference_value = cdf_integral(x, alpha, theta).value;
        } catch (const QuadratureFailure&) {
          row.reference_value = kNan;
        }
      }
      row.abs_error = std::fabs(row.series_value - row.reference_value);
      rows.push_back(row);
    }
  }
  return rows;
}

void write_errmap_csv(std::ostream& os, std::span<const ErrmapRow> rows) {
  os << "x,n_terms,series_value,reference_value,abs_error,remainder_bound,threshold\n";
  for (const auto& r : rows) {
    os << format_full(r.x) << ',' << r.n_terms << ',' << format_full(r.series_value)
       << ',' << format_full(r.reference_value) << ',' << format_full(r.abs_error)
       << ',' << format_full(r.remainder_bound) << ',' << format_full(r.threshold)
       << '\n';
  }
}

std::vector<TableRow> table_rows(std::span<const double> alphas, double theta,
                                 const GridSpec& grid, const EvalPolicy& policy) {
  const std::vector<double> xs = make_grid(grid);
  std::vector<TableRow> rows;
  rows.reserve(xs.size() * alphas.size());
  for (double alpha : alphas) {
    validate(alpha, theta, 1.0);
    const double threshold =
        alpha == 1.0
            ? 1.0
            : solve_threshold(alpha, policy.n_terms, policy.epsilon).x_eps;
    for (double x : xs) {
      TableRow row{};
      row.alpha = alpha;
      row.x = x;
      const CertifiedValue sv = cdf_series(x, alpha, theta, policy.n_terms);
      row.series_cdf = sv.value;
      row.series_bound = sv.bound;
      row.series_certified = std::fabs(x) >= threshold && sv.bound <= policy.epsilon;
      if (alpha == 1.0) {
        row.quad_cdf = cdf_alpha1(x, theta);
        row.quad_estimate = 0.0;
        row.quad_flagged = false;
      } else {
        try {
          const CertifiedValue qv = cdf_integral(x, alpha, theta, policy.quad_spec);
          row.quad_cdf = qv.value;
          row.quad_estimate = qv.bound;
          row.quad_flagged = !qv.warnings.empty();
        } catch (const QuadratureFailure&) {
          row.quad_cdf = kNan;
          row.quad_estimate = kNan;
          row.quad_flagged = true;
        }
      }
      row.tail_series = 1.0 - row.series_cdf;
      row.tail_quad = 1.0 - row.quad_cdf;
      row.tail_rel_dev =
          std::fabs(row.tail_quad - row.tail_series) /
          std::max(std::fabs(row.tail_series), std::numeric_limits<double>::min());
      // a deviation indicts the quadrature only where the series column is
      // certified; below the threshold the series is the column expected to
      // run away and the quadrature is the trusted route
      row.diverged = row.series_certified &&
                     (row.quad_flagged || !(row.tail_rel_dev <= kDivergenceLevel));
      rows.push_back(row);
    }
  }
  return rows;
}

void write_table_csv(std::ostream& os, std::span<const TableRow> rows) {
  os << "alpha,x,series_cdf,series_bound,series_certified,quad_cdf,quad_estimate,"
        "quad_flagged,tail_series,tail_quad,tail_rel_dev,diverged\n";
  for (const auto& r : rows) {
    os << format_full(r.alpha) << ',' << format_full(r.x) << ','
       << format_full(r.series_cdf) << ',' << format_full(r.series_bound) << ','
       << (r.series_certified ? 1 : 0) << ',' << format_full(r.quad_cdf) << ','
       << format_full(r.quad_estimate) << ',' << (r.quad_flagged ? 1 : 0) << ','
       << format_full(r.tail_series) << ',' << format_full(r.tail_quad) << ','
       << format_full(r.tail_rel_dev) << ',' << (r.diverged ? 1 : 0) << '\n';
  }
}

void write_table_json(std::ostream& os, std::span<const TableRow> rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json j;
    j["alpha"] = r.alpha;
    j["x"] = r.x;
    j["series_cdf"] = r.series_cdf;
    j["series_bound"] = r.series_bound;
    j["series_certified"] = r.series_certified;
    if (std::isnan(r.quad_cdf)) {
      j["quad_cdf"] = nullptr;
      j["quad_estimate"] = nullptr;
    } else {
      j["quad_cdf"] = r.quad_cdf;
      j["quad_estimate"] = r.quad_estimate;
    }
    j["quad_flagged"] = r.quad_flagged;
    j["tail_series"] = r.tail_series;
    j["tail_quad"] = std::isnan(r.tail_quad) ? nlohmann::json() : nlohmann::json(r.tail_quad);
    j["tail_rel_dev"] =
        std::isnan(r.tail_rel_dev) ? nlohmann::json() : nlohmann::json(r.tail_rel_dev);
    j["diverged"] = r.diverged;
    out.push_back(std::move(j));
  }
  os << out.dump(2) << '\n';
}

std::optional<double> divergence_onset(std::span<const TableRow> rows, double alpha) {
  for (const auto& r : rows) {
    if (r.alpha == alpha && r.diverged) return r.x;
  }
  return std::nullopt;
}

}  // namespace stabletail
