#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "trigspline/clausen.hpp"
#include "trigspline/fourier.hpp"
#include "trigspline/grid.hpp"

namespace trigspline {

/// Truncated convergence factor
///   H_j(m_max) = sum_{m=0}^{m_max} [ (m*M + j)^-(r+1) + ((m+1)*M - j)^-(r+1) ].
/// Requires 1 <= j <= (M-1)/2.
double alias_factor(int harmonic, int grid_size, int order, std::int64_t truncation);

/// Periodic trigonometric interpolation spline of order r. Each base
/// harmonic j of the interpolating trigonometric polynomial is extended
/// with its alias harmonics m*M + j and (m+1)*M - j, weighted by
/// mu^-(r+1) and normalized by H_j, which preserves the node values and
/// yields a C^(r-1) interpolant:
///
///   S_r(t) = a_0/2 + sum_j (1/H_j) sum_m [
///              a_j ( cos((mM+j)t)/(mM+j)^(r+1) + cos(((m+1)M-j)t)/((m+1)M-j)^(r+1) )
///            + b_j ( sin((mM+j)t)/(mM+j)^(r+1) - sin(((m+1)M-j)t)/((m+1)M-j)^(r+1) ) ].
///
/// Evaluation picks one of two routes at build time:
///  - literal truncated summation with m <= truncation_depth (always valid,
///    cost grows as the tail tolerance shrinks);
///  - for even r+1 the alias-class sums collapse to Bernoulli-polynomial
///    form: S(t) = a_0/2 + (2/M) sum_l K_l * Sl(r+1, t + 2pi*l/M), an exact
///    summation of the full series at O(M) per point. Used whenever its
///    round-off (amplified by 1/min_j H_j) stays below the node-exactness
///    budget; this is what makes order 1 feasible, where the literal route
///    would need m_max ~ 1/(4*tail_tolerance).
class TrigSpline {
public:
  int order() const { return order_; }
  const CircleGrid& grid() const { return grid_; }
  const FourierCoefficients& coefficients() const { return coeffs_; }

  /// H_j for j = 1..n (exact limits on the closed route, truncated sums
  /// on the literal route; either way within tail_tolerance of the limit).
  std::span<const double> alias_factors() const {
    return std::span<const double>(alias_factors_).subspan(1);
  }
  double alias_factor_at(int harmonic) const;

  std::int64_t truncation_depth() const { return truncation_depth_; }
  double tail_tolerance() const { return tail_tolerance_; }
  bool uses_closed_form() const { return closed_form_; }

  double value(double t) const;
  /// q-th derivative, 0 <= q <= order-1 (q = 0 is value).
  double derivative(double t, int q) const;

  /// Spectral weight (mM+j)^-(r+1) / H_j attached to alias level m of
  /// harmonic j; the amplitude pair at harmonic mM+j is (a_j, b_j) times this.
  double alias_weight(int harmonic, std::int64_t level) const;

private:
  friend TrigSpline build_spline(const SampleSet&, int, double);
  TrigSpline() = default;

  double value_direct(double u) const;
  double derivative_direct(double u, int q) const;

  int order_ = 0;
  CircleGrid grid_{3};
  FourierCoefficients coeffs_;
  std::vector<double> alias_factors_;  // index j, [0] unused
  std::int64_t truncation_depth_ = 0;
  double tail_tolerance_ = 0.0;

  bool closed_form_ = false;
  std::vector<long double> kernel_weights_;  // K_l, l = 0..M-1
  std::vector<ClausenSum> kernel_tables_;    // d^q Sl(r+1, .), q = 0..order-1
};

/// Build S_r from a complete sample set. tail_tolerance bounds the relative
/// neglected tail of every H_j (and with it the node-exactness defect).
TrigSpline build_spline(const SampleSet& samples, int order, double tail_tolerance = 1e-10);

}  // namespace trigspline
