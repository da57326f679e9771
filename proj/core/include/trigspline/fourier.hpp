#pragma once

#include <vector>

#include "trigspline/grid.hpp"

namespace trigspline {

/// Discrete Fourier coefficients of an odd-size sample set:
///   a_j = (2/M) sum_i y_i cos(j tau_i), j = 0..n,
///   b_j = (2/M) sum_i y_i sin(j tau_i), j = 1..n,  n = (M-1)/2.
/// b[0] is kept as 0 so a[j]/b[j] index the same harmonic.
struct FourierCoefficients {
  std::vector<double> a;  // size n+1
  std::vector<double> b;  // size n+1, b[0] == 0
  int grid_size = 0;      // M

  int harmonic_count() const { return (grid_size - 1) / 2; }
};

FourierCoefficients dft_odd(const SampleSet& samples);

/// The interpolating trigonometric polynomial
///   T(t) = a_0/2 + sum_j (a_j cos jt + b_j sin jt).
double trig_polynomial_value(const FourierCoefficients& c, double t);

}  // namespace trigspline
