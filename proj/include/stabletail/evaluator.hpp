#pragma once

#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "stabletail/params.hpp"
#include "stabletail/quadrature.hpp"
#include "stabletail/tail_series.hpp"
#include "stabletail/threshold.hpp"

namespace stabletail {

/// Knobs of the hybrid dispatcher: N = 30 summands and certification level
/// epsilon = 1e-5 by default.
struct EvalPolicy {
  int n_terms = 30;
  double epsilon = 1e-5;
  QuadratureSpec quad_spec{};
  double small_x_warning_threshold = 1e-4;  // in standardized units
};

/// Per-point evaluation record. bound_or_estimate is a proved bound when
/// bound_is_rigorous is set (series and closed-form branches) and a
/// quadrature error estimate otherwise.
struct EvalReport {
  double x = 0.0;
  StableParams params{};
  double value = 0.0;
  double bound_or_estimate = 0.0;
  bool bound_is_rigorous = false;
  Method method = Method::SeriesTail;
  std::optional<double> threshold_used;
  std::vector<std::string> warnings;
};

/// Threshold solutions cached per (alpha, N, epsilon, convention/kind).
/// Safe for concurrent readers; writes are serialized.
class ThresholdCache {
public:
  ThresholdResult cdf_threshold(double alpha, int n_terms, double epsilon,
                                DenominatorConvention convention =
                                    DenominatorConvention::PiFactorial);
  ThresholdResult pdf_threshold(double alpha, int n_terms, double epsilon);

private:
  struct Key {
    double alpha;
    int n_terms;
    double epsilon;
    int kind;  // convention for cdf entries, 2 for pdf entries
    auto operator<=>(const Key&) const = default;
  };
  ThresholdResult lookup_or_solve(const Key& key);

  std::map<Key, ThresholdResult> cache_;
  mutable std::shared_mutex mutex_;
};

/// Process-wide cache used by cdf()/pdf_tail().
ThresholdCache& threshold_cache();

/// Hybrid cdf evaluation. Routing order:
///   1. x = 0            -> closed form (1-theta)/2, exact
///   2. alpha = 1        -> generalized-Cauchy closed form, exact
///   3. theta* = +-1     -> quadrature only (series theorems exclude it)
///   4. |x_std| >= x_eps -> certified tail series, rigorous bound <= epsilon
///   5. otherwise        -> integral representation, estimated bound
/// A warning is attached when |x_std| falls below the small-x threshold
/// (that regime belongs to the companion small-x expansion, out of scope
/// here, and is served by quadrature alone).
EvalReport cdf(const StableParams& params, double x, const EvalPolicy& policy = {});

/// Tail pdf evaluation: alpha = 1 delegates to the closed-form density;
/// otherwise the query must lie beyond the pdf threshold (the x at which the
/// pdf remainder bound equals epsilon) or OutOfValidatedRange is thrown --
/// no mid-range pdf path exists in this artifact.
EvalReport pdf_tail(const StableParams& params, double x, const EvalPolicy& policy = {});

}  // namespace stabletail
