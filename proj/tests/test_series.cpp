#include <doctest.h>

#include "kmersenne/format.hpp"
#include "kmersenne/sequences.hpp"
#include "kmersenne/series.hpp"

using namespace kmersenne;

namespace {

GaussianDyadic gd(long long re, long long im = 0, std::int64_t exp2 = 0) {
  return GaussianDyadic(Integer(re), Integer(im), exp2);
}

GaussianPolynomial gp(std::vector<GaussianDyadic> ascending) {
  return GaussianPolynomial::from_coefficients(std::move(ascending));
}

}  // namespace

TEST_SUITE("series") {

TEST_CASE("x/(1-3x+2x^2) expands to the mersenne numbers") {
  const RationalSeries s =
      expand_rational_series(mersenne_genfunc_numerator(), genfunc_denominator(), 6);
  CHECK(s.coefficients ==
        std::vector<GaussianDyadic>{gd(0), gd(1), gd(3), gd(7), gd(15), gd(31)});
  CHECK(convolution_holds(s));
}

TEST_CASE("trivial series 1/1") {
  const RationalSeries s = expand_rational_series(gp({gd(1)}), gp({gd(1)}), 4);
  CHECK(s.coefficients == std::vector<GaussianDyadic>{gd(1), gd(0), gd(0), gd(0)});
  CHECK(convolution_holds(s));
}

TEST_CASE("gaussian numerator expands to the gaussian mersenne numbers") {
  const RationalSeries s =
      expand_rational_series(gaussian_mersenne_genfunc_numerator(), genfunc_denominator(), 4);
  CHECK(s.coefficients ==
        std::vector<GaussianDyadic>{gd(0, -1, 1), gd(1), gd(3, 1), gd(7, 3)});
  CHECK(convolution_holds(s));
}

TEST_CASE("long prefixes agree with the recurrence streams") {
  const auto m = expand_rational_series(mersenne_genfunc_numerator(), genfunc_denominator(), 64);
  const auto m_seq = mersenne_stream(64);
  for (std::size_t j = 0; j < 64; ++j) CHECK(m.coefficients[j] == GaussianDyadic(m_seq[j]));
  CHECK(convolution_holds(m));

  const auto g = expand_rational_series(gaussian_mersenne_genfunc_numerator(),
                                        genfunc_denominator(), 64);
  const auto g_seq = gaussian_mersenne_stream(64);
  for (std::size_t j = 0; j < 64; ++j) CHECK(g.coefficients[j] == g_seq[j]);
  CHECK(convolution_holds(g));
}

TEST_CASE("dyadic-unit constant terms divide exactly") {
  // 1 / (-i/2 + z) = 2i + 4z + ... : coefficients stay dyadic
  const RationalSeries s = expand_rational_series(gp({gd(1)}), gp({gd(0, -1, 1), gd(1)}), 5);
  CHECK(convolution_holds(s));
  CHECK(s.coefficients[0] == gd(0, 2));
}

TEST_CASE("rejects non-unit constant terms") {
  CHECK_THROWS_AS(expand_rational_series(gp({gd(1)}), gp({gd(0), gd(1)}), 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(expand_rational_series(gp({gd(1)}), gp({gd(3)}), 3), std::invalid_argument);
  CHECK_THROWS_AS(expand_rational_series(gp({gd(1)}), gp({gd(1)}), 0), std::invalid_argument);
}

}  // TEST_SUITE
