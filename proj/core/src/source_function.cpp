#include "trigspline/source_function.hpp"

#include <cmath>
#include <stdexcept>

#include "trigspline/clausen.hpp"

namespace trigspline {

const std::vector<std::string>& builtin_source_ids() {
  static const std::vector<std::string> ids = {"ramp", "ramp_integer", "sine75", "exp02"};
  return ids;
}

SourceFunction builtin_source(std::string_view id, int sample_count) {
  SourceFunction f;
  f.id = std::string(id);
  if (id == "ramp") {
    f.value = [](double t) { return t + 1.0; };
    f.first_derivative = [](double) { return 1.0; };
    f.second_derivative = [](double) { return 0.0; };
  } else if (id == "ramp_integer") {
    // Samples to 1, 2, ..., n on the n-point grid over [0, 2pi].
    if (sample_count < 2)
      throw std::invalid_argument("ramp_integer needs the sample count (>= 2)");
    const double slope = (sample_count - 1) / kTwoPi;
    f.value = [slope](double t) { return 1.0 + slope * t; };
    f.first_derivative = [slope](double) { return slope; };
    f.second_derivative = [](double) { return 0.0; };
  } else if (id == "sine75") {
    f.value = [](double t) { return std::sin(0.75 * t); };
    f.first_derivative = [](double t) { return 0.75 * std::cos(0.75 * t); };
    f.second_derivative = [](double t) { return -0.5625 * std::sin(0.75 * t); };
  } else if (id == "exp02") {
    f.value = [](double t) { return 0.02 * std::exp(t); };
    f.first_derivative = [](double t) { return 0.02 * std::exp(t); };
    f.second_derivative = [](double t) { return 0.02 * std::exp(t); };
  } else {
    throw std::invalid_argument("unknown builtin function '" + std::string(id) +
                                "' (known: ramp, ramp_integer, sine75, exp02)");
  }
  return f;
}

}  // namespace trigspline
