#include "kmersenne/series.hpp"

#include <stdexcept>

namespace kmersenne {

RationalSeries expand_rational_series(const GaussianPolynomial& num,
                                      const GaussianPolynomial& den,
                                      std::uint64_t count) {
  if (count == 0) throw std::invalid_argument("series count must be >= 1");
  const auto inv = unit_inverse(den.coefficient(0));
  if (!inv)
    throw std::invalid_argument(
        "series denominator needs a dyadic-unit constant term (+-2^j or +-i*2^j)");

  RationalSeries series{num, den, {}};
  series.coefficients.reserve(count);
  const std::size_t den_degree = den.degree().value();  // nonzero: unit constant term
  for (std::uint64_t j = 0; j < count; ++j) {
    GaussianDyadic acc = num.coefficient(j);
    const std::size_t reach = std::min<std::size_t>(j, den_degree);
    for (std::size_t t = 1; t <= reach; ++t)
      acc -= den.coefficient(t) * series.coefficients[j - t];
    series.coefficients.push_back(acc * *inv);
  }
  return series;
}

bool convolution_holds(const RationalSeries& series) {
  if (series.denominator.is_zero()) return false;
  const std::size_t den_degree = series.denominator.degree().value();
  for (std::size_t j = 0; j < series.coefficients.size(); ++j) {
    GaussianDyadic acc;
    for (std::size_t t = 0; t <= std::min(j, den_degree); ++t)
      acc += series.denominator.coefficient(t) * series.coefficients[j - t];
    if (!(acc == series.numerator.coefficient(j))) return false;
  }
  return true;
}

GaussianPolynomial mersenne_genfunc_numerator() {
  return GaussianPolynomial::from_coefficients({GaussianDyadic(0), GaussianDyadic(1)});
}

GaussianPolynomial gaussian_mersenne_genfunc_numerator() {
  // -i/2 + (1 + 3i/2) z
  return GaussianPolynomial::from_coefficients(
      {GaussianDyadic(Integer(0), Integer(-1), 1), GaussianDyadic(Integer(2), Integer(3), 1)});
}

GaussianPolynomial genfunc_denominator() {
  return GaussianPolynomial::from_coefficients(
      {GaussianDyadic(1), GaussianDyadic(-3), GaussianDyadic(2)});
}

}  // namespace kmersenne
