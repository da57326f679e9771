#include "trigspline/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "trigspline/error_analysis.hpp"
#include "trigspline/phantom.hpp"

namespace trigspline {

OptimizeResult optimize_phantom(const SearchSpec& spec) {
  if (!(spec.resolution > 0.0)) throw std::invalid_argument("resolution must be positive");
  if (spec.initial.empty()) throw std::invalid_argument("initial point is empty");
  if (spec.box_halfwidth.size() != spec.initial.size())
    throw std::invalid_argument("box halfwidths must match the initial point's dimension");
  if (spec.max_sweeps < 1) throw std::invalid_argument("max_sweeps must be >= 1");
  if (!spec.objective) throw std::invalid_argument("objective is not set");

  const size_t dim = spec.initial.size();
  std::vector<double> x = spec.initial;
  double fx = spec.objective(x);
  long evals = 1;
  if (!std::isfinite(fx))
    throw std::invalid_argument("objective is not finite at the initial point");

  std::vector<double> lo(dim), hi(dim);
  for (size_t c = 0; c < dim; ++c) {
    if (!(spec.box_halfwidth[c] >= 0.0))
      throw std::invalid_argument("box halfwidth must be nonnegative");
    lo[c] = spec.initial[c] - spec.box_halfwidth[c];
    hi[c] = spec.initial[c] + spec.box_halfwidth[c];
  }

  double max_halfwidth = 0.0;
  for (double w : spec.box_halfwidth) max_halfwidth = std::max(max_halfwidth, w);
  int ladder = 0;
  while (spec.resolution * std::ldexp(1.0, ladder + 1) <= 0.25 * max_halfwidth) ++ladder;

  std::vector<double> cand = x;
  for (int stage = ladder; stage >= 0; --stage) {
    const double step = spec.resolution * std::ldexp(1.0, stage);
    for (int sweep = 0; sweep < spec.max_sweeps; ++sweep) {
      bool improved = false;
      for (size_t c = 0; c < dim; ++c) {
        for (double delta : {step, -step}) {
          bool moved = false;
          for (;;) {
            cand = x;
            cand[c] = x[c] + delta;
            if (cand[c] < lo[c] || cand[c] > hi[c]) break;
            const double fc = spec.objective(cand);
            ++evals;
            if (!(fc < fx)) break;  // ties keep the incumbent
            x[c] = cand[c];
            fx = fc;
            moved = true;
            improved = true;
          }
          // After a successful walk the opposite neighbor is the point we
          // just left, already known worse.
          if (moved) break;
        }
      }
      if (!improved) break;
    }
  }
  return {std::move(x), fx, evals};
}

std::function<double(std::span<const double>)> make_phantom_objective(
    const SourceFunction& f, int original_count, int pairs, int order, int dense) {
  auto data = sample_source(f, original_count);
  return [f, data = std::move(data), original_count, pairs, order,
          dense](std::span<const double> phantom_values) {
    PhantomConfig cfg;
    cfg.pairs = pairs;
    cfg.source = DerivativeSource::explicit_values;
    cfg.explicit_values.assign(phantom_values.begin(), phantom_values.end());
    const SampleSet filled = fill_phantom(place_on_circle(data, pairs), cfg);
    return relative_error(build_spline(filled, order), f, original_count, dense).value;
  };
}

}  // namespace trigspline
