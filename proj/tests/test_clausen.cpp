#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <numbers>

#include "trigspline/clausen.hpp"

using namespace trigspline;

namespace {

// Direct long-double summation, smallest terms first.
long double brute_cos(int s, double theta, long terms) {
  long double acc = 0.0L;
  for (long mu = terms; mu >= 1; --mu)
    acc += cosl(mu * static_cast<long double>(theta)) / powl(static_cast<long double>(mu), s);
  return acc;
}
long double brute_sin(int s, double theta, long terms) {
  long double acc = 0.0L;
  for (long mu = terms; mu >= 1; --mu)
    acc += sinl(mu * static_cast<long double>(theta)) / powl(static_cast<long double>(mu), s);
  return acc;
}

}  // namespace

TEST_CASE("reduce_two_pi") {
  CHECK(reduce_two_pi(0.0) == 0.0);
  CHECK(reduce_two_pi(kTwoPi) == 0.0);
  CHECK(reduce_two_pi(1.5) == 1.5);
  CHECK(reduce_two_pi(-1e-18) >= 0.0);
  CHECK(reduce_two_pi(-1e-18) < kTwoPi);
  CHECK(reduce_two_pi(2.0 + 6 * kTwoPi) == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(reduce_two_pi(-3.0) == doctest::Approx(kTwoPi - 3.0).epsilon(1e-15));
  CHECK(std::isnan(reduce_two_pi(std::numeric_limits<double>::quiet_NaN())));
}

TEST_CASE("index 2 matches the classical quadratic") {
  // sum cos(m theta)/m^2 = theta^2/4 - pi*theta/2 + pi^2/6 on [0, 2pi]
  const ClausenSum g2 = ClausenSum::cosine(2);
  for (double th = 0.0; th < kTwoPi; th += 0.089) {
    const double exact =
        th * th / 4.0 - std::numbers::pi * th / 2.0 + std::numbers::pi * std::numbers::pi / 6.0;
    CHECK(g2(th) == doctest::Approx(exact).epsilon(1e-13));
  }
  CHECK(g2(0.0) == doctest::Approx(std::numbers::pi * std::numbers::pi / 6).epsilon(1e-15));
}

TEST_CASE("cosine sums match direct summation") {
  for (int s : {4, 6, 8, 12, 18, 34, 52}) {
    const ClausenSum g = ClausenSum::cosine(s);
    for (double th : {0.05, 0.7, 2.0, 3.14, 4.5, 6.2}) {
      const double ref = static_cast<double>(brute_cos(s, th, 100000));
      CHECK_MESSAGE(std::abs(g(th) - ref) < 1e-12, "s=", s, " theta=", th);
    }
    CHECK(g(0.0) == doctest::Approx(std::riemann_zeta(double(s))).epsilon(1e-14));
  }
}

TEST_CASE("sine sums match direct summation") {
  for (int s : {3, 5, 7, 17, 51}) {
    const ClausenSum g = ClausenSum::sine(s);
    for (double th : {0.05, 0.7, 2.0, 4.5, 6.2}) {
      const double ref = static_cast<double>(brute_sin(s, th, 100000));
      CHECK_MESSAGE(std::abs(g(th) - ref) < 1e-12, "s=", s, " theta=", th);
    }
    CHECK(g(0.0) == 0.0);
  }
}

TEST_CASE("parity symmetries about pi") {
  const ClausenSum gc = ClausenSum::cosine(4);
  const ClausenSum gs = ClausenSum::sine(5);
  for (double th : {0.3, 1.1, 2.9}) {
    CHECK(gc(kTwoPi - th) == doctest::Approx(gc(th)).epsilon(1e-13));
    CHECK(gs(kTwoPi - th) == doctest::Approx(-gs(th)).epsilon(1e-13));
  }
}

TEST_CASE("periodicity") {
  const ClausenSum g = ClausenSum::cosine(4);
  for (double th : {0.4, 2.2, 5.5})
    CHECK(g(th + kTwoPi) == doctest::Approx(g(th)).epsilon(1e-13));
}

TEST_CASE("parity preconditions") {
  CHECK_THROWS_AS(ClausenSum::cosine(3), std::invalid_argument);
  CHECK_THROWS_AS(ClausenSum::cosine(0), std::invalid_argument);
  CHECK_THROWS_AS(ClausenSum::sine(2), std::invalid_argument);
  CHECK_THROWS_AS(ClausenSum::sine(1), std::invalid_argument);
  CHECK_THROWS_AS(clausen_cos(5, 1.0), std::invalid_argument);
  CHECK_NOTHROW(clausen_sin(3, 1.0));
}

TEST_CASE("negate flips the sum") {
  ClausenSum g = ClausenSum::cosine(4);
  const double before = g(1.3);
  g.negate();
  CHECK(g(1.3) == -before);
}
