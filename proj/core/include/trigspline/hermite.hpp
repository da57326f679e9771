#pragma once

#include <span>
#include <vector>

namespace trigspline {

/// Two-point Hermite polynomial lambda(t) on the phantom arc
/// [left_end, right_end], matching a value and the derivatives 1..p at both
/// ends. Stored as monomial coefficients in the local variable s = t - left_end,
/// degree <= 2p+1.
class HermiteBlend {
public:
  HermiteBlend(double left_end, double right_end, int match_order,
               std::vector<double> coefficients);

  double left_end() const { return left_end_; }
  double right_end() const { return right_end_; }
  int match_order() const { return match_order_; }
  std::span<const double> coefficients() const { return coeff_; }

  double value(double t) const;
  double derivative(double t, int q) const;

private:
  double left_end_;
  double right_end_;
  int match_order_;
  std::vector<double> coeff_;
};

/// Solve the confluent two-point system via Newton divided differences with
/// repeated nodes. end_derivatives/start_derivatives hold lambda', ..,
/// lambda^(p) targets at left_end and right_end respectively (equal length p).
HermiteBlend build_blend(double end_value, double start_value,
                         std::span<const double> end_derivatives,
                         std::span<const double> start_derivatives,
                         double left_end, double right_end);

}  // namespace trigspline
