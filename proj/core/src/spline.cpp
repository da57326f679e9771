#include "trigspline/spline.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>

namespace trigspline {

namespace {

// Integral bound for the neglected tail: sum_{m > m0} 2/(mM)^s <= bound(m0).
double tail_bound(std::int64_t m0, int grid_size, int s) {
  if (m0 < 1) return std::numeric_limits<double>::infinity();
  return 2.0 / ((s - 1) * std::pow(static_cast<double>(grid_size), s) *
                std::pow(static_cast<double>(m0), s - 1));
}

// d^q/dt^q of cos(mu t) and sin(mu t), without the mu^q factor.
double dq_cos(double c, double s, int q) {
  switch (q & 3) {
    case 0: return c;
    case 1: return -s;
    case 2: return -c;
    default: return s;
  }
}
double dq_sin(double c, double s, int q) {
  switch (q & 3) {
    case 0: return s;
    case 1: return c;
    case 2: return -s;
    default: return -c;
  }
}

constexpr double kLongDoubleEps = 1.1e-19;
constexpr double kKernelErrorBudget = 5e-11;
constexpr std::int64_t kDirectDepthCap = 2'000'000;

}  // namespace

double alias_factor(int harmonic, int grid_size, int order, std::int64_t truncation) {
  const int n = (grid_size - 1) / 2;
  if (grid_size < 3 || grid_size % 2 == 0)
    throw std::invalid_argument("alias_factor needs an odd grid size >= 3");
  if (harmonic < 1 || harmonic > n)
    throw std::invalid_argument("harmonic " + std::to_string(harmonic) +
                                " out of range 1.." + std::to_string(n));
  if (order < 1) throw std::invalid_argument("spline order must be >= 1");
  if (truncation < 0) throw std::invalid_argument("truncation depth must be >= 0");
  const double s = -(order + 1.0);
  long double acc = 0.0L;
  for (std::int64_t m = 0; m <= truncation; ++m) {
    acc += std::pow(static_cast<double>(m) * grid_size + harmonic, s);
    acc += std::pow(static_cast<double>(m + 1) * grid_size - harmonic, s);
  }
  return static_cast<double>(acc);
}

TrigSpline build_spline(const SampleSet& samples, int order, double tail_tolerance) {
  if (order < 1) throw std::invalid_argument("spline order must be >= 1");
  if (!(tail_tolerance > 0.0))
    throw std::invalid_argument("tail tolerance must be positive");

  TrigSpline sp;
  sp.order_ = order;
  sp.grid_ = samples.grid();
  sp.coeffs_ = dft_odd(samples);
  sp.tail_tolerance_ = tail_tolerance;

  const int m = sp.grid_.node_count();
  const int n = sp.coeffs_.harmonic_count();
  const int s = order + 1;
  sp.alias_factors_.assign(static_cast<size_t>(n) + 1, 0.0);

  if (s % 2 == 0) {
    // Closed route candidate: H_j = (2/M) sum_l cos(2pi l j / M) Sl(s, 2pi l / M)
    // (the alias-class sum at t = 0), exact rather than truncated.
    const ClausenSum base = ClausenSum::cosine(s);
    std::vector<long double> g(static_cast<size_t>(m));
    for (int l = 0; l < m; ++l) g[static_cast<size_t>(l)] = base(sp.grid_.node(l));
    double h_min = std::numeric_limits<double>::infinity();
    for (int j = 1; j <= n; ++j) {
      long double acc = 0.0L;
      for (int l = 0; l < m; ++l)
        acc += std::cos(j * sp.grid_.node(l)) * g[static_cast<size_t>(l)];
      const double hj = static_cast<double>(2.0L * acc / m);
      sp.alias_factors_[static_cast<size_t>(j)] = hj;
      h_min = std::min(h_min, hj);
    }
    // Cancellation in the kernel sums grows like 1/h_min; accept the closed
    // route only while the predicted round-off stays inside the node budget.
    const double kappa = (h_min > 0.0)
                             ? kLongDoubleEps * (1070.0 * s + m) / h_min
                             : std::numeric_limits<double>::infinity();
    if (kappa <= kKernelErrorBudget) {
      sp.closed_form_ = true;
      // Depth at which the literal truncation would meet the tail bound.
      const double need = std::pow(
          2.0 / ((s - 1) * std::pow(static_cast<double>(m), s) * tail_tolerance * h_min),
          1.0 / (s - 1));
      sp.truncation_depth_ = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(need)));
      sp.kernel_weights_.assign(static_cast<size_t>(m), 0.0L);
      for (int l = 0; l < m; ++l) {
        long double acc = 0.0L;
        for (int j = 1; j <= n; ++j) {
          const double phase = j * sp.grid_.node(l);
          acc += (static_cast<long double>(sp.coeffs_.a[static_cast<size_t>(j)]) * std::cos(phase) -
                  static_cast<long double>(sp.coeffs_.b[static_cast<size_t>(j)]) * std::sin(phase)) /
                 static_cast<long double>(sp.alias_factors_[static_cast<size_t>(j)]);
        }
        sp.kernel_weights_[static_cast<size_t>(l)] = acc;
      }
      // d^q Sl(s, .) = mu^(q-s)-weighted series; parity alternates cos/sin.
      sp.kernel_tables_.reserve(static_cast<size_t>(order));
      for (int q = 0; q < order; ++q) {
        ClausenSum table = (q % 2 == 0) ? ClausenSum::cosine(s - q) : ClausenSum::sine(s - q);
        if ((q & 3) == 1 || (q & 3) == 2) table.negate();
        sp.kernel_tables_.push_back(std::move(table));
      }
      return sp;
    }
  }

  // Literal truncated summation; H_j accumulated to the same depth the
  // evaluator sums, which keeps node exactness exact by construction.
  std::vector<long double> h(static_cast<size_t>(n) + 1, 0.0L);
  std::int64_t depth = 0;
  const double sd = -static_cast<double>(s);
  for (;; ++depth) {
    if (depth > kDirectDepthCap) {
      char tol[32];
      std::snprintf(tol, sizeof tol, "%g", tail_tolerance);
      throw std::domain_error(
          std::string("tail tolerance ") + tol + " needs more than " +
          std::to_string(kDirectDepthCap) +
          " alias levels for order " + std::to_string(order) + " on " + std::to_string(m) +
          " nodes; use an odd order or a looser tolerance");
    }
    long double h_min = std::numeric_limits<long double>::infinity();
    for (int j = 1; j <= n; ++j) {
      h[static_cast<size_t>(j)] +=
          std::pow(static_cast<double>(depth) * m + j, sd) +
          std::pow(static_cast<double>(depth + 1) * m - j, sd);
      h_min = std::min(h_min, h[static_cast<size_t>(j)]);
    }
    if (tail_bound(depth, m, s) < tail_tolerance * static_cast<double>(h_min)) break;
  }
  for (int j = 1; j <= n; ++j)
    sp.alias_factors_[static_cast<size_t>(j)] = static_cast<double>(h[static_cast<size_t>(j)]);
  sp.truncation_depth_ = depth;
  return sp;
}

double TrigSpline::alias_factor_at(int harmonic) const {
  const int n = coeffs_.harmonic_count();
  if (harmonic < 1 || harmonic > n)
    throw std::invalid_argument("harmonic " + std::to_string(harmonic) +
                                " out of range 1.." + std::to_string(n));
  return alias_factors_[static_cast<size_t>(harmonic)];
}

double TrigSpline::alias_weight(int harmonic, std::int64_t level) const {
  const double hj = alias_factor_at(harmonic);
  if (level < 0) throw std::invalid_argument("alias level must be >= 0");
  const double mu = static_cast<double>(level) * grid_.node_count() + harmonic;
  return std::pow(mu, -(order_ + 1.0)) / hj;
}

double TrigSpline::value(double t) const {
  const double u = reduce_two_pi(t);
  if (closed_form_) {
    long double acc = 0.0L;
    const auto& table = kernel_tables_.front();
    for (int l = 0; l < grid_.node_count(); ++l) {
      double theta = u + grid_.node(l);
      if (theta >= kTwoPi) theta -= kTwoPi;
      acc += kernel_weights_[static_cast<size_t>(l)] * static_cast<long double>(table(theta));
    }
    return 0.5 * coeffs_.a[0] + static_cast<double>(2.0L * acc / grid_.node_count());
  }
  return value_direct(u);
}

double TrigSpline::derivative(double t, int q) const {
  if (q < 0 || q >= order_)
    throw std::invalid_argument("derivative order " + std::to_string(q) +
                                " outside the guaranteed-continuous range 0.." +
                                std::to_string(order_ - 1));
  if (q == 0) return value(t);
  const double u = reduce_two_pi(t);
  if (closed_form_) {
    long double acc = 0.0L;
    const auto& table = kernel_tables_[static_cast<size_t>(q)];
    for (int l = 0; l < grid_.node_count(); ++l) {
      double theta = u + grid_.node(l);
      if (theta >= kTwoPi) theta -= kTwoPi;
      acc += kernel_weights_[static_cast<size_t>(l)] * static_cast<long double>(table(theta));
    }
    return static_cast<double>(2.0L * acc / grid_.node_count());
  }
  return derivative_direct(u, q);
}

double TrigSpline::value_direct(double u) const {
  const int m = grid_.node_count();
  const int n = coeffs_.harmonic_count();
  const double sd = -(order_ + 1.0);
  long double acc = 0.0L;
  for (int j = 1; j <= n; ++j) {
    const double aj = coeffs_.a[static_cast<size_t>(j)];
    const double bj = coeffs_.b[static_cast<size_t>(j)];
    long double sum = 0.0L;
    for (std::int64_t lvl = 0; lvl <= truncation_depth_; ++lvl) {
      const double mu1 = static_cast<double>(lvl) * m + j;
      const double mu2 = static_cast<double>(lvl + 1) * m - j;
      const double w1 = std::pow(mu1, sd);
      const double w2 = std::pow(mu2, sd);
      sum += aj * (w1 * std::cos(mu1 * u) + w2 * std::cos(mu2 * u)) +
             bj * (w1 * std::sin(mu1 * u) - w2 * std::sin(mu2 * u));
    }
    acc += sum / static_cast<long double>(alias_factors_[static_cast<size_t>(j)]);
  }
  return 0.5 * coeffs_.a[0] + static_cast<double>(acc);
}

double TrigSpline::derivative_direct(double u, int q) const {
  const int m = grid_.node_count();
  const int n = coeffs_.harmonic_count();
  const double sd = -(order_ + 1.0);
  long double acc = 0.0L;
  for (int j = 1; j <= n; ++j) {
    const double aj = coeffs_.a[static_cast<size_t>(j)];
    const double bj = coeffs_.b[static_cast<size_t>(j)];
    long double sum = 0.0L;
    for (std::int64_t lvl = 0; lvl <= truncation_depth_; ++lvl) {
      const double mu1 = static_cast<double>(lvl) * m + j;
      const double mu2 = static_cast<double>(lvl + 1) * m - j;
      const double w1 = std::pow(mu1, sd) * std::pow(mu1, q);
      const double w2 = std::pow(mu2, sd) * std::pow(mu2, q);
      const double c1 = std::cos(mu1 * u), s1 = std::sin(mu1 * u);
      const double c2 = std::cos(mu2 * u), s2 = std::sin(mu2 * u);
      sum += aj * (w1 * dq_cos(c1, s1, q) + w2 * dq_cos(c2, s2, q)) +
             bj * (w1 * dq_sin(c1, s1, q) - w2 * dq_sin(c2, s2, q));
    }
    acc += sum / static_cast<long double>(alias_factors_[static_cast<size_t>(j)]);
  }
  return static_cast<double>(acc);
}

}  // namespace trigspline
