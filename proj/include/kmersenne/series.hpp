#pragma once

#include <cstdint>
#include <vector>

#include "kmersenne/gaussian_dyadic.hpp"
#include "kmersenne/polynomial.hpp"

namespace kmersenne {

/// Prefix of the formal power series of numerator/denominator.
/// Invariant: (sum_j coefficients[j] z^j) * denominator == numerator through
/// every computed order (see convolution_holds).
struct RationalSeries {
  GaussianPolynomial numerator;
  GaussianPolynomial denominator;
  std::vector<GaussianDyadic> coefficients;
};

/// First `count` power-series coefficients of num/den by exact long division.
/// The denominator's constant term must be a dyadic unit (+-2^j or +-i*2^j);
/// in particular a zero constant term is rejected.
RationalSeries expand_rational_series(const GaussianPolynomial& num,
                                      const GaussianPolynomial& den,
                                      std::uint64_t count);

/// Re-checks the defining convolution identity order by order.
bool convolution_holds(const RationalSeries& series);

// The generating functions realized in this library:
//   sum M_n x^n  = x / (1 - 3x + 2x^2)
//   sum GM_n z^n = (z + i(3z/2 - 1/2)) / (1 - 3z + 2z^2)
GaussianPolynomial mersenne_genfunc_numerator();
GaussianPolynomial gaussian_mersenne_genfunc_numerator();
GaussianPolynomial genfunc_denominator();

}  // namespace kmersenne
