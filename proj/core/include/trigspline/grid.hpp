#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "trigspline/clausen.hpp"
#include "trigspline/source_function.hpp"

namespace trigspline {

/// M equally spaced nodes tau_i = i*h on [0, 2pi), h = 2pi/M, M odd.
class CircleGrid {
public:
  explicit CircleGrid(int node_count);

  int node_count() const { return node_count_; }
  double step() const { return step_; }
  double node(int i) const { return i * step_; }  // i in [0, node_count)

private:
  int node_count_;
  double step_;
};

CircleGrid make_grid(int node_count);

/// Values attached to a CircleGrid. The first original_count entries are
/// original data; the remaining slots belong to the phantom arc and may be
/// unfilled (NaN) until fill_phantom writes them.
class SampleSet {
public:
  SampleSet(CircleGrid grid, std::vector<double> values, int original_count);

  const CircleGrid& grid() const { return grid_; }
  std::span<const double> values() const { return values_; }
  double value(int i) const { return values_[static_cast<size_t>(i)]; }
  int original_count() const { return original_count_; }
  int phantom_count() const { return grid_.node_count() - original_count_; }
  std::span<const double> original_values() const {
    return std::span<const double>(values_).first(static_cast<size_t>(original_count_));
  }

  bool complete() const;

  /// Right end of the original data arc, (N-1)*h.
  double data_arc_end() const { return grid_.node(original_count_ - 1); }

private:
  CircleGrid grid_;
  std::vector<double> values_;
  int original_count_;
};

/// Map N original values onto the first N nodes of an (N + 2k)-node grid.
/// The 2k phantom slots are left unfilled. Requires N >= 3, k >= 0, N + 2k odd.
SampleSet place_on_circle(std::span<const double> original, int phantom_pairs);

/// Evaluate f at x_i = 2pi*i/(n-1), i = 0..n-1 (both interval endpoints
/// sampled). Throws if any value is non-finite, naming the node.
std::vector<double> sample_source(const SourceFunction& f, int n);

/// One value per line; lines starting with '#' and blank lines are skipped.
/// `context` names the source (file path) in error messages.
std::vector<double> read_samples_csv(std::istream& in, const std::string& context);

}  // namespace trigspline
