#include "trigspline/hermite.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace trigspline {

HermiteBlend::HermiteBlend(double left_end, double right_end, int match_order,
                           std::vector<double> coefficients)
    : left_end_(left_end),
      right_end_(right_end),
      match_order_(match_order),
      coeff_(std::move(coefficients)) {}

double HermiteBlend::value(double t) const {
  const double s = t - left_end_;
  double acc = 0.0;
  for (size_t k = coeff_.size(); k-- > 0;) acc = acc * s + coeff_[k];
  return acc;
}

double HermiteBlend::derivative(double t, int q) const {
  if (q < 0) throw std::invalid_argument("derivative order must be >= 0");
  if (q == 0) return value(t);
  const double s = t - left_end_;
  double acc = 0.0;
  for (size_t k = coeff_.size(); k-- > static_cast<size_t>(q);) {
    double factor = 1.0;
    for (size_t i = 0; i < static_cast<size_t>(q); ++i) factor *= static_cast<double>(k - i);
    acc = acc * s + factor * coeff_[k];
  }
  return acc;
}

HermiteBlend build_blend(double end_value, double start_value,
                         std::span<const double> end_derivatives,
                         std::span<const double> start_derivatives,
                         double left_end, double right_end) {
  if (end_derivatives.size() != start_derivatives.size())
    throw std::invalid_argument("endpoint derivative lists must have equal length");
  const double arc = right_end - left_end;
  if (!(arc >= 1e-12))
    throw std::invalid_argument("degenerate phantom arc: length " + std::to_string(arc));

  const int p = static_cast<int>(end_derivatives.size());
  const int dim = 2 * p + 2;

  // Confluent nodes in the local variable: p+1 copies of 0, p+1 copies of arc.
  std::vector<double> z(static_cast<size_t>(dim));
  for (int i = 0; i <= p; ++i) {
    z[static_cast<size_t>(i)] = 0.0;
    z[static_cast<size_t>(p + 1 + i)] = arc;
  }
  auto target = [&](int node, int q) -> double {
    const bool left = node <= p;
    if (q == 0) return left ? end_value : start_value;
    return left ? end_derivatives[static_cast<size_t>(q - 1)]
                : start_derivatives[static_cast<size_t>(q - 1)];
  };

  // Divided-difference triangle with repeated nodes: equal arguments take
  // target^(q)/q!.
  std::vector<double> col(static_cast<size_t>(dim));
  std::vector<double> newton(static_cast<size_t>(dim));
  for (int i = 0; i < dim; ++i) col[static_cast<size_t>(i)] = target(i, 0);
  newton[0] = col[0];
  double factorial = 1.0;
  for (int q = 1; q < dim; ++q) {
    factorial *= q;
    for (int i = 0; i + q < dim; ++i) {
      const double zl = z[static_cast<size_t>(i)], zr = z[static_cast<size_t>(i + q)];
      if (zl == zr)
        col[static_cast<size_t>(i)] = target(i, q) / factorial;
      else
        col[static_cast<size_t>(i)] =
            (col[static_cast<size_t>(i + 1)] - col[static_cast<size_t>(i)]) / (zr - zl);
    }
    newton[static_cast<size_t>(q)] = col[0];
  }

  // Expand the Newton form to monomial coefficients in s:
  //   P = n_{d-1}; for q = d-2..0: P = P*(s - z_q) + n_q.
  std::vector<double> coeff(static_cast<size_t>(dim), 0.0);
  coeff[0] = newton[static_cast<size_t>(dim - 1)];
  for (int q = dim - 2; q >= 0; --q) {
    for (size_t k = coeff.size() - 1; k > 0; --k)
      coeff[k] = coeff[k - 1] - z[static_cast<size_t>(q)] * coeff[k];
    coeff[0] = newton[static_cast<size_t>(q)] - z[static_cast<size_t>(q)] * coeff[0];
  }
  return HermiteBlend(left_end, right_end, p, std::move(coeff));
}

}  // namespace trigspline
