#include "kmersenne/gaussian_dyadic.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace kmersenne {

GaussianDyadic::GaussianDyadic(Integer re, Integer im, std::int64_t exp2)
    : re_(std::move(re)), im_(std::move(im)), exp2_(exp2) {
  if (exp2 < 0) throw std::invalid_argument("GaussianDyadic: exp2 must be non-negative");
  normalize();
}

void GaussianDyadic::normalize() {
  if (re_ == 0 && im_ == 0) {
    exp2_ = 0;
    return;
  }
  if (exp2_ == 0) return;
  std::uint64_t t = static_cast<std::uint64_t>(exp2_);
  if (re_ != 0) t = std::min(t, trailing_zero_bits(re_));
  if (im_ != 0 && t != 0) t = std::min(t, trailing_zero_bits(im_));
  if (t == 0) return;
  re_ = shift_right_exact(re_, t);
  im_ = shift_right_exact(im_, t);
  exp2_ -= static_cast<std::int64_t>(t);
}

GaussianDyadic GaussianDyadic::operator-() const {
  GaussianDyadic r;
  r.re_ = -re_;
  r.im_ = -im_;
  r.exp2_ = exp2_;  // negation preserves canonicity
  return r;
}

GaussianDyadic operator+(const GaussianDyadic& a, const GaussianDyadic& b) {
  const std::int64_t m = std::max(a.exp2_, b.exp2_);
  const Integer fa = pow2(static_cast<std::uint64_t>(m - a.exp2_));
  const Integer fb = pow2(static_cast<std::uint64_t>(m - b.exp2_));
  return GaussianDyadic(a.re_ * fa + b.re_ * fb, a.im_ * fa + b.im_ * fb, m);
}

GaussianDyadic operator-(const GaussianDyadic& a, const GaussianDyadic& b) {
  return a + (-b);
}

GaussianDyadic operator*(const GaussianDyadic& a, const GaussianDyadic& b) {
  // (x + yi)(u + vi) with i^2 = -1; denominator exponents add.
  return GaussianDyadic(a.re_ * b.re_ - a.im_ * b.im_,
                        a.re_ * b.im_ + a.im_ * b.re_,
                        a.exp2_ + b.exp2_);
}

std::complex<double> GaussianDyadic::to_complex() const {
  const double scale = std::ldexp(1.0, -static_cast<int>(exp2_));
  return {re_.convert_to<double>() * scale, im_.convert_to<double>() * scale};
}

GaussianDyadic gd_normalize(Integer re, Integer im, std::int64_t exp2) {
  return GaussianDyadic(std::move(re), std::move(im), exp2);
}

GaussianDyadic pow(const GaussianDyadic& base, std::uint64_t e) {
  GaussianDyadic acc(1);
  GaussianDyadic b = base;
  while (e != 0) {
    if (e & 1u) acc *= b;
    e >>= 1;
    if (e != 0) b *= b;
  }
  return acc;
}

GaussianDyadic dyadic_pow2(std::int64_t j) {
  if (j >= 0) return GaussianDyadic(pow2(static_cast<std::uint64_t>(j)));
  return GaussianDyadic(Integer(1), Integer(0), -j);
}

std::optional<GaussianDyadic> unit_inverse(const GaussianDyadic& v) {
  const bool real_axis = v.im_num() == 0 && v.re_num() != 0;
  const bool imag_axis = v.re_num() == 0 && v.im_num() != 0;
  if (!real_axis && !imag_axis) return std::nullopt;

  const Integer& n = real_axis ? v.re_num() : v.im_num();
  const Integer mag = boost::multiprecision::abs(n);
  const auto low = trailing_zero_bits(mag);
  if (mag != pow2(low)) return std::nullopt;  // numerator must be +-2^m

  // v = u * 2^(m - exp2) with u a fourth root of unity; invert both factors.
  const std::int64_t j = v.exp2() - static_cast<std::int64_t>(low);
  const bool negative = n < 0;
  GaussianDyadic unit_inv = real_axis
                                ? GaussianDyadic(negative ? -1 : 1)
                                : GaussianDyadic(Integer(0), negative ? 1 : -1);
  return unit_inv * dyadic_pow2(j);
}

GaussianDyadic dyadic_from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("dyadic_from_double: value must be finite");
  if (x == 0.0) return GaussianDyadic();
  int e = 0;
  const double m = std::frexp(x, &e);
  const auto mant = static_cast<long long>(std::ldexp(m, 53));  // exact: <= 53 mantissa bits
  const std::int64_t shift = static_cast<std::int64_t>(e) - 53;
  if (shift >= 0) return GaussianDyadic(Integer(mant) * pow2(static_cast<std::uint64_t>(shift)));
  return GaussianDyadic(Integer(mant), Integer(0), -shift);
}

}  // namespace kmersenne
