#include <doctest.h>

#include <random>

#include "kmersenne/format.hpp"
#include "kmersenne/json_io.hpp"
#include "kmersenne/poly_sequences.hpp"
#include "kmersenne/tables.hpp"

using namespace kmersenne;

namespace {

GaussianDyadic gd(long long re, long long im = 0, std::int64_t exp2 = 0) {
  return GaussianDyadic(Integer(re), Integer(im), exp2);
}

std::mt19937_64 rng(777);

GaussianDyadic random_dyadic() {
  std::uniform_int_distribution<long long> num(-999, 999);
  std::uniform_int_distribution<std::int64_t> den(0, 8);
  return gd(num(rng), num(rng), den(rng));
}

}  // namespace

TEST_SUITE("format") {

TEST_CASE("scalar rendering follows the usual table style") {
  CHECK(to_string(gd(0)) == "0");
  CHECK(to_string(gd(31)) == "31");
  CHECK(to_string(gd(-7)) == "-7");
  CHECK(to_string(gd(3, 1)) == "3+i");
  CHECK(to_string(gd(7, -3)) == "7-3i");
  CHECK(to_string(gd(18, 16)) == "18+16i");
  CHECK(to_string(gd(0, -1, 1)) == "-i/2");
  CHECK(to_string(gd(-1, 0, 2)) == "-1/4");
  CHECK(to_string(gd(0, 1, 3)) == "i/8");
  CHECK(to_string(gd(1, 0, 4)) == "1/16");
  CHECK(to_string(gd(0, -1, 5)) == "-i/32");
  CHECK(to_string(gd(-1, -3, 1)) == "(-1-3i)/2");
  CHECK(to_string(gd(0, 5)) == "5i");
}

TEST_CASE("polynomial rendering") {
  CHECK(to_string(mersenne_poly(5)) == "81x^4-54x^2+4");
  CHECK(to_string(mersenne_poly(0)) == "0");
  CHECK(to_string(mersenne_poly(1)) == "1");
  CHECK(to_string(mersenne_poly(2)) == "3x");
  CHECK(to_string(gaussian_mersenne_poly(2)) == "3x+i");
  CHECK(to_string(gaussian_mersenne_poly(3)) == "9x^2-2+i(3x)");
  CHECK(to_string(gaussian_mersenne_poly(4)) == "27x^3-12x+i(9x^2-2)");
  CHECK(to_string(k_gaussian_mersenne_poly(4, 2)) == "9x^2-1+i(6x)");
  CHECK(to_string(gaussian_mersenne_poly(0)) == "-i/2");
  // dyadic coefficients render with their denominators
  const auto half_line = GaussianPolynomial::from_coefficients({gd(-1, 0, 1), gd(0, -3, 1)});
  CHECK(to_string(half_line) == "-1/2-i(3x/2)");
}

TEST_CASE("family names round trip") {
  for (Family f : {Family::M, Family::GM, Family::MP, Family::GMP})
    CHECK(family_from_string(family_name(f)) == f);
  CHECK_THROWS_AS(family_from_string("bogus"), std::invalid_argument);
}

}  // TEST_SUITE

TEST_SUITE("json") {

TEST_CASE("dyadic round trip") {
  for (int trial = 0; trial < 200; ++trial) {
    const GaussianDyadic v = random_dyadic();
    CHECK(dyadic_from_json(value_to_json(v)) == v);
  }
  const nlohmann::json j = value_to_json(gd(0, -1, 1));
  CHECK(j.at("re") == "0");
  CHECK(j.at("im") == "-1");
  CHECK(j.at("exp2") == 1);
}

TEST_CASE("polynomial round trip") {
  for (std::uint64_t n = 0; n <= 12; ++n) {
    const GaussianPolynomial p = gaussian_mersenne_poly(n);
    CHECK(value_from_json(value_to_json(p)) == p);
  }
  const GaussianPolynomial zero;
  CHECK(value_from_json(value_to_json(zero)) == zero);
}

TEST_CASE("big integers travel as decimal strings") {
  const GaussianDyadic big(ipow(Integer(10), 50) + 7);
  const nlohmann::json j = value_to_json(big);
  CHECK(j.at("re").get<std::string>().size() == 51);
  CHECK(dyadic_from_json(j) == big);
}

TEST_CASE("term records use the dyadic form for number families") {
  const auto rec = term_record(Family::GM, 3, 5, to_gaussian(gd(-1, 0, 2)));
  CHECK(rec.at("family") == "GM");
  CHECK(rec.at("value").contains("re"));
  const auto poly_rec = term_record(Family::MP, 4, 1, to_gaussian(mersenne_poly(4)));
  CHECK(poly_rec.at("value").contains("coeffs"));
}

TEST_CASE("reports serialize with exact sides") {
  const auto j = report_to_json(check_cassini(Family::GM, 1));
  CHECK(j.at("holds") == true);
  CHECK(value_from_json(j.at("lhs")) == value_from_json(j.at("rhs")));
}

TEST_CASE("malformed values are rejected") {
  CHECK_THROWS_AS(dyadic_from_json(nlohmann::json{{"re", "1"}}), std::invalid_argument);
  CHECK_THROWS_AS(dyadic_from_json(nlohmann::json::array()), std::invalid_argument);
}

}  // TEST_SUITE

TEST_SUITE("tables") {

TEST_CASE("table family mapping and validation") {
  CHECK(table_family(1) == Family::M);
  CHECK(table_family(4) == Family::GMP);
  CHECK_THROWS_AS(table_family(5), std::invalid_argument);
  CHECK_THROWS_AS(table_cells(0, 5, 5), std::invalid_argument);
}

TEST_CASE("default grid shape and flagged cells") {
  const auto cells = table_cells(3, 5, 5);
  CHECK(cells.size() == 30);
  std::size_t flagged = 0;
  for (const auto& cell : cells)
    if (!cell.note.empty()) {
      ++flagged;
      CHECK(cell.n == 3);
      CHECK(cell.k == 5);
      CHECK(cell.value == to_gaussian(gd(-1, 0, 2)));
    }
  CHECK(flagged == 1);

  const auto poly_cells = table_cells(4, 5, 5);
  std::size_t poly_flagged = 0;
  for (const auto& cell : poly_cells)
    if (!cell.note.empty()) ++poly_flagged;
  CHECK(poly_flagged == 2);  // the (3,5) misprint twin and the (5,2) product
}

}  // TEST_SUITE
