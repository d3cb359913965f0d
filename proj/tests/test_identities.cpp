#include <doctest.h>

#include "kmersenne/format.hpp"
#include "kmersenne/identities.hpp"

using namespace kmersenne;

namespace {

GaussianDyadic gd(long long re, long long im = 0, std::int64_t exp2 = 0) {
  return GaussianDyadic(Integer(re), Integer(im), exp2);
}

GaussianPolynomial gp(std::vector<GaussianDyadic> ascending) {
  return GaussianPolynomial::from_coefficients(std::move(ascending));
}

GaussianPolynomial scalar(long long re, long long im = 0, std::int64_t exp2 = 0) {
  return to_gaussian(gd(re, im, exp2));
}

}  // namespace

TEST_SUITE("identities") {

TEST_CASE("cassini fixed points") {
  const IdentityReport m4 = check_cassini(Family::M, 4);
  CHECK(m4.holds);
  CHECK(m4.lhs == scalar(8));  // 15^2 - 31*7 = 2^3
  CHECK(m4.rhs == scalar(8));

  const IdentityReport gm1 = check_cassini(Family::GM, 1);
  CHECK(gm1.holds);
  CHECK(gm1.lhs == scalar(-1, -3, 1));  // -1/2 - 3i/2, the dyadic n=1 case

  const IdentityReport gmp1 = check_cassini(Family::GMP, 1);
  CHECK(gmp1.holds);
  CHECK(gmp1.rhs == gp({gd(-1, 0, 1), gd(0, -3, 1)}));  // -1/2 - i(3x/2)

  const IdentityReport mp3 = check_cassini(Family::MP, 3);
  CHECK(mp3.holds);
  CHECK(mp3.rhs == scalar(4));

  CHECK_THROWS_AS(check_cassini(Family::M, 0), std::invalid_argument);
}

TEST_CASE("cassini grids") {
  for (Family f : {Family::M, Family::GM}) CHECK(run_cassini_suite(f, 256).ok());
  for (Family f : {Family::MP, Family::GMP}) CHECK(run_cassini_suite(f, 48).ok());
}

TEST_CASE("catalan fixed points and grid") {
  const IdentityReport c21 = check_catalan_gaussian(2, 1);
  CHECK(c21.holds);
  CHECK(c21.lhs == scalar(-1, -3));  // GM_3*GM_1 - GM_2^2

  // n = m keeps the 2^(n-m-1) term dyadic: at (3,3) both sides are -49/2 - 147i/2
  const IdentityReport c33 = check_catalan_gaussian(3, 3);
  CHECK(c33.holds);
  CHECK(c33.lhs == scalar(-49, -147, 1));

  // m = 1 reduces to Cassini's right-hand side
  for (std::uint64_t n = 1; n <= 32; ++n)
    CHECK(check_catalan_gaussian(n, 1).rhs == check_cassini(Family::GM, n).rhs);

  CHECK(run_catalan_suite(64).ok());
  CHECK_THROWS_AS(check_catalan_gaussian(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(check_catalan_gaussian(2, 0), std::invalid_argument);
}

TEST_CASE("docagne fixed points, grid, antisymmetry") {
  const IdentityReport d21 = check_docagne_gaussian(2, 1);
  CHECK(d21.holds);
  CHECK(d21.lhs == scalar(1, 3));

  const IdentityReport d32 = check_docagne_gaussian(3, 2);
  CHECK(d32.holds);
  CHECK(d32.lhs == scalar(2, 6));

  for (std::uint64_t n = 1; n <= 16; ++n) CHECK(check_docagne_gaussian(n, n).lhs.is_zero());

  for (std::uint64_t n = 1; n <= 16; ++n)
    for (std::uint64_t m = 1; m <= 16; ++m) {
      const IdentityReport fwd = check_docagne_gaussian(n, m);
      const IdentityReport rev = check_docagne_gaussian(m, n);
      CHECK(fwd.lhs == -rev.lhs);
      CHECK(fwd.rhs == -rev.rhs);
    }

  CHECK(run_docagne_suite(64, 64).ok());
}

TEST_CASE("generalized cassini fixed points") {
  const IdentityReport m221 = check_k_cassini(Family::M, 2, 2, 1);
  CHECK(m221.holds);
  CHECK(m221.lhs == scalar(-18));  // 21*3 - 9^2 = -2 * 3^2 * ... = -2^1 * M_2^2
  CHECK(m221.rhs == scalar(-18));

  CHECK(check_k_cassini(Family::M, 2, 2, 2).lhs.is_zero());
  CHECK(check_k_cassini(Family::M, 2, 2, 2).rhs.is_zero());

  const IdentityReport g221 = check_k_cassini(Family::GM, 2, 2, 1);
  CHECK(g221.holds);
  CHECK(g221.rhs == scalar(-10, 30));  // (8+6i)(1+3i)

  CHECK_THROWS_AS(check_k_cassini(Family::M, 1, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(check_k_cassini(Family::M, 2, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(check_k_cassini(Family::M, 2, 2, 3), std::domain_error);
}

TEST_CASE("generalized cassini case split over a compact grid") {
  for (Family f : {Family::M, Family::GM, Family::MP, Family::GMP})
    for (std::uint64_t k = 2; k <= 4; ++k)
      for (std::uint64_t n = 2; n <= 6; ++n)
        for (std::uint64_t a = 0; a <= k; ++a) {
          const IdentityReport r = check_k_cassini(f, n, k, a);
          CHECK(r.holds);
          CHECK(r.rhs.is_zero() == (a != 1));
        }
}

TEST_CASE("shift fixed points and grid") {
  const IdentityReport s12 = check_shift(Family::M, 1, 2);
  CHECK(s12.holds);
  CHECK(s12.lhs == scalar(3));

  const IdentityReport sp12 = check_shift(Family::MP, 1, 2);
  CHECK(sp12.holds);
  CHECK(sp12.lhs == gp({gd(0), gd(3)}));  // M_3^(2)(x) = 3x

  const IdentityReport sg22 = check_shift(Family::GM, 2, 2);
  CHECK(sg22.holds);
  CHECK(sg22.lhs == scalar(18, 16));

  for (Family f : {Family::M, Family::GM, Family::MP, Family::GMP})
    for (std::uint64_t s = 1; s <= 4; ++s) CHECK(run_shift_suite(f, 12, s).ok());

  CHECK_THROWS_AS(check_shift(Family::M, 0, 2), std::invalid_argument);
}

TEST_CASE("difference fixed points and grid") {
  const IdentityReport d13 = check_difference(Family::M, 1, 3);
  CHECK(d13.holds);
  CHECK(d13.lhs == scalar(26));  // M_2^3 - M_1^3 = M_6^(3) - M_3^(3)

  const IdentityReport d0k = check_difference(Family::M, 0, 5);
  CHECK(d0k.holds);
  CHECK(d0k.lhs == scalar(1));  // seeds 0 and 1

  const IdentityReport g12 = check_difference(Family::GM, 1, 2);
  CHECK(g12.holds);
  CHECK(g12.lhs == scalar(7, 6));

  for (Family f : {Family::M, Family::GM, Family::MP, Family::GMP})
    CHECK(run_difference_suite(f, 8, 8).ok());
}

TEST_CASE("two-index fixed points and grid") {
  const IdentityReport t21 = check_two_index(Family::M, 2, 1);
  CHECK(t21.holds);
  CHECK(t21.lhs == scalar(2));  // M_4^(2) - M_3 M_1 = 2^1

  const IdentityReport t11 = check_two_index(Family::M, 1, 1);
  CHECK(t11.holds);
  CHECK(t11.lhs == scalar(1));  // seed-dominated case, 2^0

  // Gaussian cases carry the Cassini-consistent dyadic right side.
  const IdentityReport g21 = check_two_index(Family::GM, 2, 1);
  CHECK(g21.holds);
  CHECK(g21.lhs == scalar(1, 3));
  CHECK(g21.rhs == scalar(1, 3));

  const IdentityReport g11 = check_two_index(Family::GM, 1, 1);
  CHECK(g11.holds);
  CHECK(g11.lhs == scalar(1, 3, 1));  // 1/2 + 3i/2

  const IdentityReport gp11 = check_two_index(Family::GMP, 1, 1);
  CHECK(gp11.holds);
  CHECK(gp11.rhs == gp({gd(1, 0, 1), gd(0, 3, 1)}));  // 1/2 + i(3x/2)

  for (Family f : {Family::M, Family::GM, Family::MP, Family::GMP})
    CHECK(run_two_index_suite(f, 12, 12).ok());

  CHECK_THROWS_AS(check_two_index(Family::M, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(check_two_index(Family::M, 0, 0), std::invalid_argument);
}

TEST_CASE("generating function checks") {
  CHECK(check_genfunc(Family::M, 64).holds);
  CHECK(check_genfunc(Family::GM, 64).holds);
  CHECK(check_genfunc(Family::M, 1).holds);  // single coefficient M_0 = 0
  CHECK(run_genfunc_suite(Family::GM, 64).ok());
  CHECK_THROWS_AS(check_genfunc(Family::MP, 8), std::invalid_argument);
  CHECK_THROWS_AS(check_genfunc(Family::M, 0), std::invalid_argument);
}

TEST_CASE("reports carry exact residuals") {
  const IdentityReport r = check_cassini(Family::GM, 3);
  CHECK(r.residual().is_zero());
  CHECK(r.identity == "cassini");
  REQUIRE(r.params.size() == 1);
  CHECK(r.params[0].first == "n");
  CHECK(r.params[0].second == 3);
  CHECK(!r.orientation.empty());
}

TEST_CASE("exit-code mapping flags any failed cell") {
  SuiteResult good{"cassini", "M", 4, 4, {}};
  CHECK(verify_exit_code({good}) == 0);

  IdentityReport fake;
  fake.identity = "cassini";
  fake.lhs = scalar(1);
  fake.rhs = scalar(2);
  fake.holds = false;
  SuiteResult bad{"cassini", "M", 4, 3, {fake}};
  CHECK(verify_exit_code({good, bad}) == 1);
  CHECK(!bad.ok());
}

}  // TEST_SUITE
