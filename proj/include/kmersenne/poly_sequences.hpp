#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "kmersenne/gaussian_dyadic.hpp"
#include "kmersenne/polynomial.hpp"

namespace kmersenne {

/// Index cap for the polynomial recurrences: coefficients grow like 3^n, so
/// this keeps a single polynomial in the low megabytes.
inline constexpr std::uint64_t kMaxPolyIndex = 512;

/// n-th Mersenne polynomial from M_{j+2}(x) = 3x M_{j+1}(x) - 2 M_j(x),
/// seeds M_0 = 0, M_1 = 1. Degree n-1 and leading coefficient 3^(n-1)
/// for n >= 1.
IntPolynomial mersenne_poly(std::uint64_t n);

/// (M_n(x), M_{n+1}(x)) in one recurrence pass.
std::pair<IntPolynomial, IntPolynomial> mersenne_poly_pair(std::uint64_t n);

/// M_n^(k)(x) = M_s^(k-r)(x) * M_{s+1}^r(x) with n = sk + r.
IntPolynomial k_mersenne_poly(std::uint64_t n, std::uint64_t k);

/// n-th Gaussian Mersenne polynomial (same recurrence, seeds -i/2 and 1).
/// For n >= 2 equals M_n(x) + i M_{n-1}(x) coefficientwise.
GaussianPolynomial gaussian_mersenne_poly(std::uint64_t n);

std::pair<GaussianPolynomial, GaussianPolynomial> gaussian_mersenne_poly_pair(std::uint64_t n);

/// GM_n^(k)(x) = GM_s^(k-r)(x) * GM_{s+1}^r(x) with n = sk + r.
GaussianPolynomial k_gaussian_mersenne_poly(std::uint64_t n, std::uint64_t k);

std::vector<IntPolynomial> mersenne_poly_stream(std::uint64_t count, std::uint64_t k = 1);
std::vector<GaussianPolynomial> gaussian_mersenne_poly_stream(std::uint64_t count, std::uint64_t k = 1);

/// Floating-point roots of lambda^2 - 3*x0*lambda + 2 = 0 at a sample point.
/// Invariants: lambda1 >= lambda2, lambda1*lambda2 == 2 and
/// lambda1 + lambda2 == 3*x0 to rounding.
struct QuadraticRoots {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
};

/// Requires 9*x0^2 - 8 > 0 (real, distinct roots).
QuadraticRoots quadratic_roots(double x0);

struct BinetCheck {
  bool passed = false;
  double mersenne_error = 0.0;   // relative; absolute when the exact value is 0
  double gaussian_error = 0.0;
  QuadraticRoots roots;
};

/// Numeric validation of the closed-form (root-power) expressions for
/// M_n(x0) and GM_n(x0) against exact recurrence evaluation. x0 must be a
/// real dyadic sample with 9*x0^2 - 8 > 0; the comparison happens in double
/// precision against the exactly-evaluated polynomial.
BinetCheck binet_numeric_check(std::uint64_t n, const GaussianDyadic& x0, double tol);

}  // namespace kmersenne
