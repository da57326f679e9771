#pragma once

#include <functional>
#include <span>
#include <vector>

#include "trigspline/source_function.hpp"

namespace trigspline {

/// Derivative-free search over the 2k phantom values on a resolution
/// lattice anchored at the initial (Hermite-derived) point.
struct SearchSpec {
  double resolution = 0.01;
  std::vector<double> initial;
  std::vector<double> box_halfwidth;  // per coordinate, same length as initial
  int max_sweeps = 200;
  std::function<double(std::span<const double>)> objective;
};

struct OptimizeResult {
  std::vector<double> best_values;
  double best_error = 0.0;
  long evaluations = 0;
};

/// Cyclic coordinate descent: per coordinate, greedy +-resolution line walks
/// while the objective strictly improves; sweeps end when a full pass accepts
/// nothing. Deterministic (fixed coordinate order, incumbent kept on ties);
/// the result is never worse than the initial point and is lattice-locally
/// optimal at termination.
///
/// The descent runs as a binary cascade: stages at resolution * 2^D, ..,
/// 2 * resolution, resolution, each starting from the previous endpoint
/// (D picked so the coarsest step is about a quarter of the widest box
/// halfwidth). Halving the resolution extends the identical stage ladder by
/// one stage, so a finer search never ends worse than a coarser one; a plain
/// single-resolution walk has no such guarantee on these sup-norm objectives.
OptimizeResult optimize_phantom(const SearchSpec& spec);

/// Objective for the phantom-value search: place N samples of f on the
/// circle with k pairs, write the candidate values into the phantom slots,
/// build an order-r spline and return its relative error on the data arc.
std::function<double(std::span<const double>)> make_phantom_objective(
    const SourceFunction& f, int original_count, int pairs, int order, int dense = 2001);

}  // namespace trigspline
