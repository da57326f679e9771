#include "trigspline/phantom.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace trigspline {

namespace {

void check_match_order(int order) {
  if (order < 0 || order > 2)
    throw std::invalid_argument("match order must be 0, 1 or 2, got " + std::to_string(order));
}

}  // namespace

std::vector<double> boundary_derivatives(std::span<const double> original, double step,
                                         int order, Side side, DerivativeSource source,
                                         const SourceFunction* f) {
  check_match_order(order);
  const int n = static_cast<int>(original.size());
  std::vector<double> out;
  if (order == 0) return out;

  if (source == DerivativeSource::exact) {
    if (f == nullptr || !f->has_derivatives(order))
      throw std::invalid_argument("exact derivative source needs evaluators up to order " +
                                  std::to_string(order));
    // The data arc carries f rescaled from [0, 2pi]; circle-variable
    // derivatives pick up 2pi/arc per order.
    const double scale = kTwoPi / ((n - 1) * step);
    const double t = (side == Side::right) ? kTwoPi : 0.0;
    out.push_back(f->first_derivative(t) * scale);
    if (order >= 2) out.push_back(f->second_derivative(t) * scale * scale);
    return out;
  }
  if (source != DerivativeSource::divided_difference)
    throw std::invalid_argument("boundary derivatives need an exact or divided-difference source");

  if (n < order + 2)
    throw std::invalid_argument("divided differences of order " + std::to_string(order) +
                                " need at least " + std::to_string(order + 2) +
                                " samples, got " + std::to_string(n));
  auto y = [&](int i) {
    return side == Side::left ? original[static_cast<size_t>(i)]
                              : original[static_cast<size_t>(n - 1 - i)];
  };
  const double sgn = (side == Side::left) ? 1.0 : -1.0;
  out.push_back(sgn * (-3.0 * y(0) + 4.0 * y(1) - y(2)) / (2.0 * step));
  if (order >= 2)
    out.push_back((2.0 * y(0) - 5.0 * y(1) + 4.0 * y(2) - y(3)) / (step * step));
  return out;
}

HermiteBlend phantom_blend(const SampleSet& samples, const PhantomConfig& config,
                           const SourceFunction* f) {
  if (config.source == DerivativeSource::explicit_values)
    throw std::invalid_argument("explicit phantom values bypass the phantom function");
  check_match_order(config.match_order);
  const auto original = samples.original_values();
  const double h = samples.grid().step();
  const auto end_derivs = boundary_derivatives(original, h, config.match_order, Side::right,
                                               config.source, f);
  const auto start_derivs = boundary_derivatives(original, h, config.match_order, Side::left,
                                                 config.source, f);
  return build_blend(original.back(), original.front(), end_derivs, start_derivs,
                     samples.data_arc_end(), kTwoPi);
}

SampleSet fill_phantom(const SampleSet& samples, const PhantomConfig& config,
                       const SourceFunction* f) {
  const int n = samples.original_count();
  const int m = samples.grid().node_count();
  if (samples.phantom_count() != 2 * config.pairs)
    throw std::invalid_argument("sample set has " + std::to_string(samples.phantom_count()) +
                                " phantom slots but the config expects " +
                                std::to_string(2 * config.pairs));

  std::vector<double> values(samples.values().begin(), samples.values().end());
  if (config.source == DerivativeSource::explicit_values) {
    if (static_cast<int>(config.explicit_values.size()) != 2 * config.pairs)
      throw std::invalid_argument("expected " + std::to_string(2 * config.pairs) +
                                  " explicit phantom values, got " +
                                  std::to_string(config.explicit_values.size()));
    for (int i = n; i < m; ++i)
      values[static_cast<size_t>(i)] = config.explicit_values[static_cast<size_t>(i - n)];
  } else {
    const HermiteBlend lambda = phantom_blend(samples, config, f);
    for (int i = n; i < m; ++i)
      values[static_cast<size_t>(i)] = lambda.value(samples.grid().node(i));
  }
  return SampleSet(samples.grid(), std::move(values), n);
}

}  // namespace trigspline
