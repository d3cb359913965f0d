#pragma once

#include <complex>
#include <cstdint>
#include <optional>

#include "kmersenne/integer.hpp"

namespace kmersenne {

/// Exact Gaussian dyadic rational: (re_num + im_num*i) / 2^exp2.
///
/// Canonical form: exp2 == 0, or re_num and im_num are not both even. Zero is
/// always stored as (0, 0, 0). Canonical representatives are unique, so
/// equality is plain member comparison. Every operation returns a canonical
/// value; instances are immutable after construction.
///
/// Dyadic (power-of-two) denominators are the whole value domain needed here:
/// the Gaussian Mersenne seed is -i/2 and every non-integer entry in the
/// generalized tables is one of its powers.
class GaussianDyadic {
 public:
  GaussianDyadic() = default;
  GaussianDyadic(long long re) : re_(re) {}  // NOLINT: deliberate embedding
  GaussianDyadic(Integer re) : re_(std::move(re)) {}  // NOLINT: Z embeds
  GaussianDyadic(Integer re, Integer im, std::int64_t exp2 = 0);

  const Integer& re_num() const { return re_; }
  const Integer& im_num() const { return im_; }
  std::int64_t exp2() const { return exp2_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }
  /// True when the value lies in Z[i] (denominator 1).
  bool is_gaussian_integer() const { return exp2_ == 0; }

  GaussianDyadic operator-() const;
  friend GaussianDyadic operator+(const GaussianDyadic& a, const GaussianDyadic& b);
  friend GaussianDyadic operator-(const GaussianDyadic& a, const GaussianDyadic& b);
  friend GaussianDyadic operator*(const GaussianDyadic& a, const GaussianDyadic& b);

  GaussianDyadic& operator+=(const GaussianDyadic& o) { return *this = *this + o; }
  GaussianDyadic& operator-=(const GaussianDyadic& o) { return *this = *this - o; }
  GaussianDyadic& operator*=(const GaussianDyadic& o) { return *this = *this * o; }

  friend bool operator==(const GaussianDyadic&, const GaussianDyadic&) = default;

  /// Nearest double-precision complex value (exact when it fits).
  std::complex<double> to_complex() const;

 private:
  Integer re_{};
  Integer im_{};
  std::int64_t exp2_ = 0;

  void normalize();
};

/// Canonical representative of (re + im*i)/2^exp2. Rejects exp2 < 0.
GaussianDyadic gd_normalize(Integer re, Integer im, std::int64_t exp2);

/// base^e by repeated squaring; base^0 == 1 for every base including 0.
GaussianDyadic pow(const GaussianDyadic& base, std::uint64_t e);

/// 2^j as an exact dyadic; j may be negative.
GaussianDyadic dyadic_pow2(std::int64_t j);

/// Exact inverse when v is a dyadic unit, i.e. u * 2^j with u in {1,-1,i,-i};
/// nullopt otherwise. These are exactly the invertible elements of the ring.
std::optional<GaussianDyadic> unit_inverse(const GaussianDyadic& v);

/// The exact binary value of a finite double (every finite double is dyadic).
GaussianDyadic dyadic_from_double(double x);

}  // namespace kmersenne
