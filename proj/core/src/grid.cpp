#include "trigspline/grid.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <stdexcept>

namespace trigspline {

CircleGrid::CircleGrid(int node_count) : node_count_(node_count) {
  if (node_count < 3)
    throw std::invalid_argument("circle grid needs at least 3 nodes, got " +
                                std::to_string(node_count));
  if (node_count % 2 == 0)
    throw std::invalid_argument("circle grid needs an odd node count, got " +
                                std::to_string(node_count));
  step_ = kTwoPi / node_count;
}

CircleGrid make_grid(int node_count) { return CircleGrid(node_count); }

SampleSet::SampleSet(CircleGrid grid, std::vector<double> values, int original_count)
    : grid_(grid), values_(std::move(values)), original_count_(original_count) {
  const int m = grid_.node_count();
  if (static_cast<int>(values_.size()) != m)
    throw std::invalid_argument("sample set needs " + std::to_string(m) + " values, got " +
                                std::to_string(values_.size()));
  if (original_count_ < 1 || original_count_ > m)
    throw std::invalid_argument("original_count " + std::to_string(original_count_) +
                                " out of range for " + std::to_string(m) + " nodes");
  if ((m - original_count_) % 2 != 0)
    throw std::invalid_argument("phantom slot count must be even, got " +
                                std::to_string(m - original_count_));
  for (int i = 0; i < original_count_; ++i)
    if (!std::isfinite(values_[static_cast<size_t>(i)]))
      throw std::invalid_argument("original sample " + std::to_string(i) + " is not finite");
}

bool SampleSet::complete() const {
  for (double v : values_)
    if (!std::isfinite(v)) return false;
  return true;
}

SampleSet place_on_circle(std::span<const double> original, int phantom_pairs) {
  const int n = static_cast<int>(original.size());
  if (n < 3)
    throw std::invalid_argument("need at least 3 original samples, got " + std::to_string(n));
  if (phantom_pairs < 0)
    throw std::invalid_argument("phantom pair count must be nonnegative");
  const int m = n + 2 * phantom_pairs;
  if (m % 2 == 0)
    throw std::invalid_argument("N + 2k must be odd; got N = " + std::to_string(n) +
                                ", k = " + std::to_string(phantom_pairs));
  std::vector<double> values(original.begin(), original.end());
  values.resize(static_cast<size_t>(m), std::numeric_limits<double>::quiet_NaN());
  return SampleSet(CircleGrid(m), std::move(values), n);
}

std::vector<double> sample_source(const SourceFunction& f, int n) {
  if (n < 2) throw std::invalid_argument("need at least 2 samples, got " + std::to_string(n));
  std::vector<double> out(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double x = kTwoPi * (static_cast<double>(i) / (n - 1));
    const double y = f.value(x);
    if (!std::isfinite(y))
      throw std::runtime_error("source '" + f.id + "' is not finite at node " +
                               std::to_string(i) + " (t = " + std::to_string(x) + ")");
    out[static_cast<size_t>(i)] = y;
  }
  return out;
}

std::vector<double> read_samples_csv(std::istream& in, const std::string& context) {
  std::vector<double> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    size_t e = line.find_last_not_of(" \t\r");
    std::string_view body(line.data() + b, e - b + 1);
    if (body.front() == '#') continue;
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
    if (ec != std::errc() || ptr != body.data() + body.size())
      throw std::runtime_error(context + ":" + std::to_string(line_no) + ": cannot parse '" +
                               std::string(body) + "' as a number");
    if (!std::isfinite(v))
      throw std::runtime_error(context + ":" + std::to_string(line_no) +
                               ": sample value is not finite");
    out.push_back(v);
  }
  return out;
}

}  // namespace trigspline
