#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "stabletail/evaluator.hpp"

namespace stabletail {

enum class Spacing { Linear, Log };

struct GridSpec {
  double x_min;
  double x_max;
  int points;
  Spacing spacing = Spacing::Log;
};

/// Validates the grid invariants (x_min < x_max, points >= 2, log spacing
/// needs x_min > 0) and materializes the coordinates.
std::vector<double> make_grid(const GridSpec& grid);

/// Shortest decimal form that round-trips a binary64 (17 significant digits).
std::string format_full(double v);

/// One row of the absolute-error map: the series value against a reference
/// (generalized-Cauchy closed form for alpha = 1, integral representation
/// otherwise) together with the proved remainder bound and the certification
/// threshold for that N.
struct ErrmapRow {
  double x;
  int n_terms;
  double series_value;
  double reference_value;  // NaN when the reference itself fails
  double abs_error;
  double remainder_bound;
  double threshold;
};

std::vector<ErrmapRow> errmap_rows(double alpha, double theta, const GridSpec& grid,
                                   std::span<const int> n_list, double epsilon);

void write_errmap_csv(std::ostream& os, std::span<const ErrmapRow> rows);

/// One row of the series-vs-quadrature comparison table (N = 30, eps = 1e-5).
/// tail_* columns hold the upper-tail complement 1 - G, the quantity in which
/// the two routes visibly diverge once the quadrature stops resolving the
/// integrand transition; divergence is declared when the quadrature row is
/// flagged or the relative tail deviation exceeds 1e-3.
struct TableRow {
  double alpha;
  double x;
  double series_cdf;
  double series_bound;
  bool series_certified;  // |x| beyond x_eps^30
  double quad_cdf;        // NaN when quadrature raised a failure
  double quad_estimate;
  bool quad_flagged;      // failure or suspect-value diagnostic
  double tail_series;
  double tail_quad;
  double tail_rel_dev;
  bool diverged;
};

std::vector<TableRow> table_rows(std::span<const double> alphas, double theta,
                                 const GridSpec& grid,
                                 const EvalPolicy& policy = {});

void write_table_csv(std::ostream& os, std::span<const TableRow> rows);
void write_table_json(std::ostream& os, std::span<const TableRow> rows);

/// First grid x at which the quadrature column diverges from the series
/// column for the given alpha, if any.
std::optional<double> divergence_onset(std::span<const TableRow> rows, double alpha);

}  // namespace stabletail
