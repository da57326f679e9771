#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "trigspline/spline.hpp"

using namespace trigspline;

namespace {

std::vector<double> ramp_values(int n) {
  std::vector<double> y(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) y[(size_t)i] = i + 1.0;
  return y;
}

std::vector<double> random_values(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(-3.0, 3.0);
  std::vector<double> y(static_cast<size_t>(n));
  for (auto& v : y) v = dist(rng);
  return y;
}

// The spline series summed literally, term by term, independent of the
// library's evaluator; depth chosen by the caller.
double literal_series(const FourierCoefficients& c, int order, double t, long long depth) {
  const int m = c.grid_size;
  const int n = c.harmonic_count();
  const double s = order + 1.0;
  long double acc = 0.5L * c.a[0];
  for (int j = 1; j <= n; ++j) {
    const long double h = oracles::alias_factor_brute(j, m, order, depth);
    long double sum = 0.0L;
    for (long long lvl = 0; lvl <= depth; ++lvl) {
      const double mu1 = static_cast<double>(lvl) * m + j;
      const double mu2 = static_cast<double>(lvl + 1) * m - j;
      const double w1 = std::pow(mu1, -s), w2 = std::pow(mu2, -s);
      sum += c.a[(size_t)j] * (w1 * std::cos(mu1 * t) + w2 * std::cos(mu2 * t)) +
             c.b[(size_t)j] * (w1 * std::sin(mu1 * t) - w2 * std::sin(mu2 * t));
    }
    acc += sum / h;
  }
  return static_cast<double>(acc);
}

}  // namespace

TEST_CASE("alias_factor definition and oracle") {
  SUBCASE("single-level closed form") {
    for (int j : {1, 2, 4})
      for (int r : {1, 3, 5}) {
        const double expect = std::pow(j, -(r + 1.0)) + std::pow(9.0 - j, -(r + 1.0));
        CHECK(alias_factor(j, 9, r, 0) == doctest::Approx(expect).epsilon(1e-15));
      }
  }
  SUBCASE("reflection identity at j=1, M=3, r=1") {
    const double exact = 4.0 * std::numbers::pi * std::numbers::pi / 27.0;
    CHECK(alias_factor(1, 3, 1, 1000000) == doctest::Approx(exact).epsilon(1e-6));
    // independent descending brute-force sum agrees much tighter
    const double brute = (double)oracles::alias_factor_brute(1, 3, 1, 1000000);
    CHECK(alias_factor(1, 3, 1, 1000000) == doctest::Approx(brute).epsilon(1e-12));
  }
  SUBCASE("tail decays like M^-4 for r=3") {
    // neglected levels contribute ~(M+j)^-4 relative to j^-4 + (M-j)^-4
    const double gap1 = std::abs(alias_factor(1, 9, 3, 0) - alias_factor(1, 9, 3, 50)) /
                        alias_factor(1, 9, 3, 50);
    CHECK(gap1 < 1.5e-4);
    const double gap4 = std::abs(alias_factor(4, 9, 3, 0) - alias_factor(4, 9, 3, 50)) /
                        alias_factor(4, 9, 3, 50);
    CHECK(gap4 < 2e-2);
    CHECK(gap4 > gap1);  // the factor shrinks with distance from the fold
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(alias_factor(0, 9, 3, 10), std::invalid_argument);
    CHECK_THROWS_AS(alias_factor(5, 9, 3, 10), std::invalid_argument);
    CHECK_THROWS_AS(alias_factor(1, 8, 3, 10), std::invalid_argument);
    CHECK_THROWS_AS(alias_factor(1, 9, 0, 10), std::invalid_argument);
    CHECK_THROWS_AS(alias_factor(1, 9, 3, -1), std::invalid_argument);
  }
}

TEST_CASE("node exactness across orders and routes") {
  for (int m : {9, 11}) {
    const auto y = random_values(m, 42u + m);
    const SampleSet samples(make_grid(m), y, m);
    double max_abs = 0.0;
    for (double v : y) max_abs = std::max(max_abs, std::abs(v));
    for (int r : {1, 2, 3, 5}) {
      const TrigSpline sp = build_spline(samples, r);
      double worst = 0.0;
      for (int i = 0; i < m; ++i)
        worst = std::max(worst, std::abs(sp.value(samples.grid().node(i)) - y[(size_t)i]));
      CHECK_MESSAGE(worst <= 1e-9 * (1.0 + max_abs), "r=", r, " m=", m, " residual=", worst);
    }
  }
}

TEST_CASE("evaluation routes agree") {
  const auto y = random_values(11, 7);
  const SampleSet samples(make_grid(11), y, 11);
  const auto c = dft_odd(samples);
  SUBCASE("r=3 and r=5 against a deep literal sum") {
    for (int r : {3, 5}) {
      const TrigSpline sp = build_spline(samples, r);
      CHECK(sp.uses_closed_form());
      for (double t : {0.13, 1.7, 3.9, 5.2})
        CHECK(sp.value(t) == doctest::Approx(literal_series(c, r, t, 20000)).epsilon(1e-10));
    }
  }
  SUBCASE("r=1 against a literal sum (tail limits the comparison)") {
    const TrigSpline sp = build_spline(samples, 1);
    CHECK(sp.uses_closed_form());
    for (double t : {0.13, 1.7, 3.9})
      CHECK(std::abs(sp.value(t) - literal_series(c, 1, t, 400000)) < 2e-5);
  }
}

TEST_CASE("constant samples give a constant spline") {
  const SampleSet samples(make_grid(9), std::vector<double>(9, 4.5), 9);
  for (int r : {1, 3}) {
    const TrigSpline sp = build_spline(samples, r);
    for (double t = 0.0; t < kTwoPi; t += 0.31) CHECK(sp.value(t) == doctest::Approx(4.5).epsilon(1e-13));
    if (r > 1) CHECK(std::abs(sp.derivative(1.0, 1)) < 1e-12);
  }
}

TEST_CASE("cosine samples stay within the alias-weight bound") {
  const CircleGrid g = make_grid(9);
  std::vector<double> y(9);
  for (int i = 0; i < 9; ++i) y[(size_t)i] = std::cos(g.node(i));
  const TrigSpline sp = build_spline(SampleSet(g, y, 9), 3);
  double worst = 0.0;
  for (int i = 0; i < 2000; ++i) {
    const double t = kTwoPi * i / 2000.0;
    worst = std::max(worst, std::abs(sp.value(t) - std::cos(t)));
  }
  CHECK(worst < 3e-3);
}

TEST_CASE("integer ramp interpolates the example values") {
  const SampleSet samples(make_grid(9), ramp_values(9), 9);
  const TrigSpline sp = build_spline(samples, 3);
  for (int i = 0; i < 9; ++i)
    CHECK(sp.value(samples.grid().node(i)) == doctest::Approx(i + 1.0).epsilon(1e-12));
  // the seam excursion dwarfs the mid-arc error (the phantom method's target)
  const double mid = std::abs(sp.value(samples.grid().node(4) + 0.3) - 5.0 - 0.3 / samples.grid().step());
  double seam = 0.0;
  for (double t = kTwoPi - 0.6; t < kTwoPi; t += 0.01)
    seam = std::max(seam, std::abs(sp.value(t)));
  CHECK(seam > 5.0 * mid);
}

TEST_CASE("periodicity after argument reduction") {
  const auto y = random_values(9, 11);
  const TrigSpline sp = build_spline(SampleSet(make_grid(9), y, 9), 3);
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> dist(-20.0, 20.0);
  for (int i = 0; i < 100; ++i) {
    const double t = dist(rng);
    CHECK(sp.value(t + kTwoPi) == doctest::Approx(sp.value(t)).epsilon(1e-10));
  }
}

TEST_CASE("high order converges to the trigonometric polynomial") {
  const SampleSet samples(make_grid(9), ramp_values(9), 9);
  const auto c = dft_odd(samples);
  double prev = std::numeric_limits<double>::infinity();
  for (int r : {3, 7, 15, 31, 51}) {
    const TrigSpline sp = build_spline(samples, r);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const double t = kTwoPi * i / 1000.0;
      worst = std::max(worst, std::abs(sp.value(t) - trig_polynomial_value(c, t)));
    }
    CHECK(worst <= prev);
    prev = worst;
    if (r == 51) CHECK(worst < 1e-4);
  }
}

TEST_CASE("derivatives") {
  const auto y = random_values(11, 19);
  const SampleSet samples(make_grid(11), y, 11);
  const TrigSpline sp = build_spline(samples, 3);

  SUBCASE("q = 0 is the value itself") {
    for (double t : {0.2, 2.7, 5.1}) CHECK(sp.derivative(t, 0) == sp.value(t));
  }
  SUBCASE("first derivative matches central differences") {
    std::mt19937 rng(29);
    std::uniform_real_distribution<double> dist(0.0, kTwoPi);
    for (int i = 0; i < 20; ++i) {
      const double t = dist(rng);
      const double fd = oracles::central_difference([&](double x) { return sp.value(x); }, t);
      CHECK(sp.derivative(t, 1) == doctest::Approx(fd).epsilon(1e-5));
    }
  }
  SUBCASE("second derivative matches differenced first derivative") {
    for (double t : {0.9, 3.3, 5.8}) {
      const double fd =
          oracles::central_difference([&](double x) { return sp.derivative(x, 1); }, t);
      CHECK(sp.derivative(t, 2) == doctest::Approx(fd).epsilon(1e-5));
    }
  }
  SUBCASE("orders at and past r are refused") {
    CHECK_THROWS_AS(sp.derivative(1.0, 3), std::invalid_argument);
    CHECK_THROWS_AS(sp.derivative(1.0, -1), std::invalid_argument);
    const TrigSpline s1 = build_spline(samples, 1);
    CHECK_THROWS_AS(s1.derivative(1.0, 1), std::invalid_argument);
  }
  SUBCASE("literal route derivatives agree with the closed route") {
    const TrigSpline s2 = build_spline(samples, 2);  // literal (odd series index)
    CHECK_FALSE(s2.uses_closed_form());
    for (double t : {0.4, 2.1}) {
      const double fd =
          oracles::central_difference([&](double x) { return s2.value(x); }, t);
      CHECK(s2.derivative(t, 1) == doctest::Approx(fd).epsilon(1e-5));
    }
  }
}

TEST_CASE("seam continuity of the derivatives") {
  const auto y = random_values(9, 31);
  const SampleSet samples(make_grid(9), y, 9);
  double scale = 0.0;
  for (double v : y) scale = std::max(scale, std::abs(v));
  for (int r : {3, 5}) {
    const TrigSpline sp = build_spline(samples, r);
    for (int q = 0; q < r; ++q) {
      const double gap =
          std::abs(sp.derivative(0.0, q) - sp.derivative(kTwoPi - 1e-10, q));
      CHECK_MESSAGE(gap <= 1e-8 * (1.0 + scale) * std::pow(10.0, q), "r=", r, " q=", q);
    }
  }
}

TEST_CASE("linearity in the samples") {
  const auto u = random_values(9, 101);
  const auto v = random_values(9, 102);
  const double alpha = 1.37;
  std::vector<double> w(9);
  for (int i = 0; i < 9; ++i) w[(size_t)i] = alpha * u[(size_t)i] + v[(size_t)i];
  const CircleGrid g = make_grid(9);
  const TrigSpline su = build_spline(SampleSet(g, u, 9), 3);
  const TrigSpline sv = build_spline(SampleSet(g, v, 9), 3);
  const TrigSpline sw = build_spline(SampleSet(g, w, 9), 3);
  std::mt19937 rng(55);
  std::uniform_real_distribution<double> dist(0.0, kTwoPi);
  for (int i = 0; i < 50; ++i) {
    const double t = dist(rng);
    const double combo = alpha * su.value(t) + sv.value(t);
    CHECK(sw.value(t) == doctest::Approx(combo).epsilon(1e-10));
  }
}

TEST_CASE("alias weights follow the power law") {
  const SampleSet samples(make_grid(9), ramp_values(9), 9);
  for (int r : {1, 3, 5}) {
    const TrigSpline sp = build_spline(samples, r);
    for (int j = 1; j <= 4; ++j) {
      CHECK(sp.alias_factor_at(j) > 0.0);
      for (int lvl = 1; lvl <= 5; ++lvl) {
        const double ratio = sp.alias_weight(j, lvl) / sp.alias_weight(j, 0);
        const double mu = 9.0 * lvl + j;
        CHECK(ratio == doctest::Approx(std::pow(j / mu, r + 1.0)).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("alias factors sit within the tail tolerance of their limit") {
  const SampleSet samples(make_grid(9), ramp_values(9), 9);
  const long long levels = 4000000;
  for (int r : {1, 2, 3}) {
    const TrigSpline sp = build_spline(samples, r, 1e-8);
    // the brute-force reference is itself truncated; allow for its tail
    const double brute_tail =
        2.0 / (r * std::pow(9.0, r + 1.0) * std::pow((double)levels, (double)r));
    for (int j = 1; j <= 4; ++j) {
      const double limit = (double)oracles::alias_factor_brute(j, 9, r, levels);
      CHECK(std::abs(sp.alias_factor_at(j) - limit) <= 1e-8 * limit + 1.05 * brute_tail);
    }
  }
}

TEST_CASE("build preconditions") {
  const SampleSet samples(make_grid(9), ramp_values(9), 9);
  CHECK_THROWS_AS(build_spline(samples, 0), std::invalid_argument);
  CHECK_THROWS_AS(build_spline(samples, 3, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(build_spline(samples, 3, -1e-9), std::invalid_argument);
  const SampleSet unfilled = place_on_circle(ramp_values(9), 1);
  CHECK_THROWS_AS(build_spline(unfilled, 3), std::invalid_argument);
}
