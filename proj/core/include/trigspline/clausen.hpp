#pragma once

#include <vector>

namespace trigspline {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Reduce t to [0, 2*pi). Exact for finite t (fmod is exact); NaN passes through.
double reduce_two_pi(double t);

/// Clausen-type harmonic sums
///
///   cosine kind:  Sl(s, theta) = sum_{m>=1} cos(m*theta) / m^s,   s even, s >= 2
///   sine kind:    Sl(s, theta) = sum_{m>=1} sin(m*theta) / m^s,   s odd,  s >= 3
///
/// For these parities the sum is the Fourier expansion of a Bernoulli
/// polynomial, so it collapses to a degree-s polynomial in theta/2pi.
/// The normalized monomial coefficients are all O(exp(2*pi)), which keeps
/// Horner evaluation stable for every s (checked against direct summation
/// in the tests). Evaluation accumulates in long double because callers
/// divide by alias factors as small as ~1e-7.
class ClausenSum {
public:
  static ClausenSum cosine(int s);
  static ClausenSum sine(int s);

  double operator()(double theta) const;

  int index() const { return index_; }
  bool is_cosine() const { return cosine_; }

  /// Flip the sign of the whole sum (used for derivative tables).
  void negate();

private:
  ClausenSum(int s, bool cosine);

  int index_ = 0;
  bool cosine_ = true;
  std::vector<long double> coeff_;  // monomial coefficients in x = theta/2pi
};

/// One-off evaluations (tables are rebuilt per call; hot paths keep a ClausenSum).
double clausen_cos(int s, double theta);
double clausen_sin(int s, double theta);

}  // namespace trigspline
