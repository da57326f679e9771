#include "trigspline/fourier.hpp"

#include <cmath>
#include <stdexcept>

namespace trigspline {

FourierCoefficients dft_odd(const SampleSet& samples) {
  if (!samples.complete())
    throw std::invalid_argument("sample set has unfilled phantom slots; fill them first");
  const int m = samples.grid().node_count();
  const int n = (m - 1) / 2;
  FourierCoefficients c;
  c.grid_size = m;
  c.a.assign(static_cast<size_t>(n) + 1, 0.0);
  c.b.assign(static_cast<size_t>(n) + 1, 0.0);
  for (int j = 0; j <= n; ++j) {
    double sa = 0.0, sb = 0.0;
    for (int i = 0; i < m; ++i) {
      const double phase = j * samples.grid().node(i);
      sa += samples.value(i) * std::cos(phase);
      sb += samples.value(i) * std::sin(phase);
    }
    c.a[static_cast<size_t>(j)] = 2.0 * sa / m;
    if (j > 0) c.b[static_cast<size_t>(j)] = 2.0 * sb / m;
  }
  return c;
}

double trig_polynomial_value(const FourierCoefficients& c, double t) {
  double acc = 0.5 * c.a[0];
  for (int j = 1; j <= c.harmonic_count(); ++j) {
    acc += c.a[static_cast<size_t>(j)] * std::cos(j * t) +
           c.b[static_cast<size_t>(j)] * std::sin(j * t);
  }
  return acc;
}

}  // namespace trigspline
