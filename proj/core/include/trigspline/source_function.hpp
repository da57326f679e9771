#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace trigspline {

/// A reference function on [0, 2pi] with optional derivative evaluators.
/// smoothness_class documents the differentiability order the function is
/// used to represent in the error tables.
struct SourceFunction {
  std::string id;
  std::function<double(double)> value;
  std::function<double(double)> first_derivative;   // may be empty
  std::function<double(double)> second_derivative;  // may be empty
  int smoothness_class = 3;

  bool has_derivatives(int order) const {
    if (order >= 1 && !first_derivative) return false;
    if (order >= 2 && !second_derivative) return false;
    return order <= 2;
  }
};

/// Builtin registry: ramp (t + 1), sine75 (sin 0.75t), exp02 (0.02 e^t) and
/// ramp_integer (samples to the integers 1..n; needs the sample count).
SourceFunction builtin_source(std::string_view id, int sample_count = 0);
const std::vector<std::string>& builtin_source_ids();

}  // namespace trigspline
