#pragma once

#include <span>
#include <vector>

#include "trigspline/grid.hpp"
#include "trigspline/hermite.hpp"
#include "trigspline/source_function.hpp"

namespace trigspline {

enum class DerivativeSource { exact, divided_difference, explicit_values };
enum class Side { left, right };

struct PhantomConfig {
  int pairs = 1;        // k, number of phantom node pairs
  int match_order = 0;  // p, derivatives matched at both arc ends (0..2)
  DerivativeSource source = DerivativeSource::divided_difference;
  std::vector<double> explicit_values;  // 2k values when source == explicit_values
};

/// Boundary derivative estimates f', .., f^(p) at the data-arc end, in the
/// circle variable. divided_difference uses second-order one-sided stencils
/// on the grid values with step h; exact uses the source's derivative
/// evaluators, chain-rule scaled by 2pi / ((N-1)h) per order.
std::vector<double> boundary_derivatives(std::span<const double> original, double step,
                                         int order, Side side, DerivativeSource source,
                                         const SourceFunction* f = nullptr);

/// The phantom function for a placed (unfilled) sample set: lambda matches
/// the last original value at (N-1)h and the first original value at 2pi
/// (periodic closure), with match_order derivatives at both ends.
HermiteBlend phantom_blend(const SampleSet& samples, const PhantomConfig& config,
                           const SourceFunction* f = nullptr);

/// Fill the 2k phantom slots with lambda(tau_i) (or with the explicit values
/// verbatim) and return the completed sample set.
SampleSet fill_phantom(const SampleSet& samples, const PhantomConfig& config,
                       const SourceFunction* f = nullptr);

}  // namespace trigspline
