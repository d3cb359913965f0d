#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kmersenne/gaussian_dyadic.hpp"
#include "kmersenne/integer.hpp"

namespace kmersenne {

/// Dense univariate polynomial over an exact coefficient ring T.
///
/// Coefficients are stored ascending (index j = coefficient of x^j) with no
/// trailing zeros; the zero polynomial is the empty list and its degree is a
/// distinguished nullopt, never -1-as-a-number. T needs value semantics,
/// T{} == additive zero, and exact +, -, *, ==.
template <typename T>
class Polynomial {
 public:
  Polynomial() = default;

  explicit Polynomial(T constant) {
    if (!(constant == T{})) coeffs_.push_back(std::move(constant));
  }

  static Polynomial from_coefficients(std::vector<T> ascending) {
    Polynomial p;
    p.coeffs_ = std::move(ascending);
    p.trim();
    return p;
  }

  const std::vector<T>& coefficients() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }

  std::optional<std::size_t> degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }

  /// Coefficient of x^j; zero beyond the degree.
  T coefficient(std::size_t j) const {
    return j < coeffs_.size() ? coeffs_[j] : T{};
  }

  const T& leading_coefficient() const {
    if (coeffs_.empty()) throw std::logic_error("leading_coefficient of zero polynomial");
    return coeffs_.back();
  }

  /// Horner evaluation at an exact point.
  T operator()(const T& point) const {
    T acc{};
    for (std::size_t j = coeffs_.size(); j-- > 0;) acc = acc * point + coeffs_[j];
    return acc;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = T{} - c;
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<T> out(std::max(a.coeffs_.size(), b.coeffs_.size()), T{});
    for (std::size_t j = 0; j < out.size(); ++j) {
      if (j < a.coeffs_.size()) out[j] = out[j] + a.coeffs_[j];
      if (j < b.coeffs_.size()) out[j] = out[j] + b.coeffs_[j];
    }
    return from_coefficients(std::move(out));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a + (-b);
  }

  /// Schoolbook product; the degrees in play never justify anything fancier.
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial{};
    std::vector<T> out(a.coeffs_.size() + b.coeffs_.size() - 1, T{});
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
    return from_coefficients(std::move(out));
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  /// Scalar multiple.
  Polynomial scaled(const T& c) const {
    std::vector<T> out = coeffs_;
    for (auto& v : out) v = v * c;
    return from_coefficients(std::move(out));
  }

  /// Multiplication by x^j (degree shift).
  Polynomial times_x(std::size_t j = 1) const {
    if (is_zero() || j == 0) return j == 0 ? *this : Polynomial{};
    std::vector<T> out(coeffs_.size() + j, T{});
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i + j] = coeffs_[i];
    return from_coefficients(std::move(out));
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<T> coeffs_;

  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == T{}) coeffs_.pop_back();
  }
};

template <typename T>
Polynomial<T> pow(const Polynomial<T>& base, std::uint64_t e) {
  Polynomial<T> acc{T{1}};
  Polynomial<T> b = base;
  while (e != 0) {
    if (e & 1u) acc *= b;
    e >>= 1;
    if (e != 0) b *= b;
  }
  return acc;
}

using IntPolynomial = Polynomial<Integer>;
using GaussianPolynomial = Polynomial<GaussianDyadic>;

// Exact embeddings: Z -> Z[i,1/2] -> (Z[i,1/2])[x]. These commute with all
// ring operations, so integers and Gaussian numbers can ride in a
// GaussianPolynomial as degree-0 values (the universal residual carrier).
inline GaussianDyadic to_dyadic(const Integer& n) { return GaussianDyadic(n); }

inline GaussianPolynomial to_gaussian(const GaussianDyadic& v) {
  return GaussianPolynomial{v};
}

inline GaussianPolynomial to_gaussian(const Integer& n) {
  return GaussianPolynomial{GaussianDyadic(n)};
}

inline GaussianPolynomial to_gaussian(const IntPolynomial& p) {
  std::vector<GaussianDyadic> coeffs;
  coeffs.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) coeffs.emplace_back(c);
  return GaussianPolynomial::from_coefficients(std::move(coeffs));
}

/// Exact evaluation of an integer polynomial at a Gaussian dyadic point.
inline GaussianDyadic eval_at(const IntPolynomial& p, const GaussianDyadic& x0) {
  return to_gaussian(p)(x0);
}

}  // namespace kmersenne
