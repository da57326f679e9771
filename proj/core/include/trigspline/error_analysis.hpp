#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "trigspline/source_function.hpp"
#include "trigspline/spline.hpp"

namespace trigspline {

/// Sup-norm deviation of the spline from the rescaled source, normalized by
/// the source's sup norm. absolute_fallback is set when the source vanishes
/// on the whole evaluation grid and the raw sup error is reported instead.
struct ArcError {
  double value = 0.0;
  bool absolute_fallback = false;
};

/// Error over the original data arc [0, (N-1)h], sampled on `dense`
/// equispaced points (dense >= 101). The reference is f rescaled from
/// [0, 2pi] onto the arc.
ArcError relative_error(const TrigSpline& spline, const SourceFunction& f,
                        int original_count, int dense = 2001);

/// Same metric over the whole circle [0, 2pi] (the rescaled reference is
/// extended past the arc by the same formula); reported alongside the arc
/// error for the no-phantom baseline.
ArcError relative_error_full(const TrigSpline& spline, const SourceFunction& f,
                             int original_count, int dense = 2001);

/// One table row: the k = 0 baseline against the p in {0,1,2} phantom
/// variants with divided-difference boundary derivatives.
struct ErrorReport {
  std::string function_id;
  int original_count = 0;  // N
  int phantom_pairs = 0;   // k
  int order = 3;           // r
  double baseline_arc = 0.0;
  double baseline_full = 0.0;
  bool baseline_absolute = false;
  std::array<double, 3> variant_errors{};     // indexed by p
  std::array<double, 3> reduction_factors{};  // baseline_arc / variant
};

std::vector<ErrorReport> run_table(const SourceFunction& f, int original_count,
                                   std::span<const int> phantom_pair_counts, int order,
                                   int dense = 2001);

std::string render_table_markdown(std::span<const ErrorReport> reports);
std::string render_table_csv(std::span<const ErrorReport> reports);
std::string render_table_json(std::span<const ErrorReport> reports);

/// Fig-style curve data over [0, 2pi]: t, S(t) and, when a reference is
/// given, the rescaled source and |S - ref|.
struct Curve {
  std::vector<double> t;
  std::vector<double> spline;
  std::vector<double> reference;  // empty when no source
  std::vector<double> abs_error;  // empty when no source
  bool has_reference = false;
};

Curve emit_curve(const TrigSpline& spline, const SourceFunction* f, int original_count,
                 int dense = 2001);

std::string render_curve_csv(const Curve& curve);

}  // namespace trigspline
