#include "trigspline/clausen.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace trigspline {

namespace {

constexpr long double kTwoPiL = 2.0L * std::numbers::pi_v<long double>;

// zeta(s) for integer s >= 0 as needed by the Bernoulli coefficients.
// Small arguments come from a once-built table; spline construction asks for
// the same handful of values over and over.
long double zeta_int(int s) {
  if (s == 0) return -0.5L;
  static const std::vector<long double> table = [] {
    std::vector<long double> t(257, 0.0L);
    for (int d = 2; d < 257; ++d)
      t[static_cast<size_t>(d)] =
          static_cast<long double>(std::riemann_zeta(static_cast<double>(d)));
    return t;
  }();
  if (s < static_cast<int>(table.size())) return table[static_cast<size_t>(s)];
  return static_cast<long double>(std::riemann_zeta(static_cast<double>(s)));
}

}  // namespace

double reduce_two_pi(double t) {
  double u = std::fmod(t, kTwoPi);
  if (u < 0.0) u += kTwoPi;
  if (u >= kTwoPi) u = 0.0;  // u + 2pi can round up to exactly 2pi
  return u;
}

ClausenSum::ClausenSum(int s, bool cosine) : index_(s), cosine_(cosine) {
  if (cosine && (s < 2 || s % 2 != 0))
    throw std::invalid_argument("ClausenSum::cosine requires an even index >= 2, got " +
                                std::to_string(s));
  if (!cosine && (s < 3 || s % 2 != 1))
    throw std::invalid_argument("ClausenSum::sine requires an odd index >= 3, got " +
                                std::to_string(s));

  // sum = sigma * P_s(theta/2pi) with P_s(x) = (2pi)^s/(2*s!) * B_s(x) and
  // sigma = (-1)^(floor(s/2)+1). Coefficient of x^k in P_s, written with
  // B_d = (-1)^(d/2+1) * 2*d!*zeta(d)/(2pi)^d for even d (and B_1 = -1/2):
  //   c_k = (-1)^(d/2+1) * zeta(d) * (2pi)^k / k!,  d = s - k even,
  //   c_{s-1} = -(pi/2) * (2pi)^(s-1) / (s-1)!.
  const long double sigma = ((s / 2) % 2 == 0) ? -1.0L : 1.0L;
  coeff_.assign(static_cast<size_t>(s) + 1, 0.0L);
  long double tk = 1.0L;  // (2pi)^k / k!
  for (int k = 0; k <= s; ++k) {
    const int d = s - k;
    long double c = 0.0L;
    if (d == 1) {
      c = -(std::numbers::pi_v<long double> / 2.0L) * tk;
    } else if (d % 2 == 0) {
      const long double sign = ((d / 2) % 2 == 0) ? -1.0L : 1.0L;
      c = sign * zeta_int(d) * tk;
    }
    coeff_[static_cast<size_t>(k)] = sigma * c;
    tk *= kTwoPiL / static_cast<long double>(k + 1);
  }
}

ClausenSum ClausenSum::cosine(int s) { return ClausenSum(s, true); }
ClausenSum ClausenSum::sine(int s) { return ClausenSum(s, false); }

void ClausenSum::negate() {
  for (auto& c : coeff_) c = -c;
}

double ClausenSum::operator()(double theta) const {
  const long double x = static_cast<long double>(reduce_two_pi(theta)) / kTwoPiL;
  long double acc = 0.0L;
  for (size_t k = coeff_.size(); k-- > 0;) acc = acc * x + coeff_[k];
  return static_cast<double>(acc);
}

double clausen_cos(int s, double theta) { return ClausenSum::cosine(s)(theta); }
double clausen_sin(int s, double theta) { return ClausenSum::sine(s)(theta); }

}  // namespace trigspline
