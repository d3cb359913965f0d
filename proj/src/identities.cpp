#include "kmersenne/identities.hpp"

#include <stdexcept>

#include "kmersenne/poly_sequences.hpp"

namespace kmersenne {

namespace {

using Params = std::vector<std::pair<std::string, std::int64_t>>;

IdentityReport make_report(std::string identity, Params params, std::string orientation,
                           GaussianPolynomial lhs, GaussianPolynomial rhs) {
  IdentityReport report{std::move(identity), std::move(params), std::move(orientation),
                        std::move(lhs), std::move(rhs), false};
  report.holds = report.lhs == report.rhs;
  return report;
}

bool is_polynomial_family(Family f) { return f == Family::MP || f == Family::GMP; }
bool is_gaussian_family(Family f) { return f == Family::GM || f == Family::GMP; }

const char* family_symbol(Family f) {
  switch (f) {
    case Family::M: return "M";
    case Family::GM: return "GM";
    case Family::MP: return "M(x)";
    case Family::GMP: return "GM(x)";
  }
  return "?";
}

GaussianDyadic imag_unit() { return GaussianDyadic(Integer(0), Integer(1)); }

/// re + i*im from two real dyadics.
GaussianDyadic gd_complex(const GaussianDyadic& re, const GaussianDyadic& im) {
  return re + imag_unit() * im;
}

/// Degree-<=1 polynomial c0 + c1*x.
GaussianPolynomial linear(const GaussianDyadic& c0, const GaussianDyadic& c1) {
  return GaussianPolynomial::from_coefficients({c0, c1});
}

std::int64_t as_signed(std::uint64_t v) { return static_cast<std::int64_t>(v); }

}  // namespace

GaussianPolynomial family_term(Family family, std::uint64_t n, std::uint64_t k) {
  switch (family) {
    case Family::M: return to_gaussian(k_mersenne(n, k));
    case Family::GM: return to_gaussian(k_gaussian_mersenne(n, k));
    case Family::MP: return to_gaussian(k_mersenne_poly(n, k));
    case Family::GMP: return k_gaussian_mersenne_poly(n, k);
  }
  throw std::invalid_argument("unknown family");
}

IdentityReport check_cassini(Family family, std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("cassini: n must be >= 1");
  const Params params{{"n", as_signed(n)}};
  const std::string sym = family_symbol(family);

  if (!is_gaussian_family(family)) {
    // T_n^2 - T_{n+1} T_{n-1} = 2^(n-1)
    GaussianPolynomial tn = family_term(family, n);
    GaussianPolynomial lhs = tn * tn - family_term(family, n + 1) * family_term(family, n - 1);
    GaussianPolynomial rhs = to_gaussian(pow2(n - 1));
    return make_report("cassini", params, sym + "(n)^2 - " + sym + "(n+1)*" + sym + "(n-1)",
                       std::move(lhs), std::move(rhs));
  }

  // GM_{n+1} GM_{n-1} - GM_n^2 = (2^(n-2) - 2^(n-1)) - i*3*2^(n-2),
  // with 3x*2^(n-2) in the imaginary part for the polynomial family.
  GaussianPolynomial tn = family_term(family, n);
  GaussianPolynomial lhs = family_term(family, n + 1) * family_term(family, n - 1) - tn * tn;
  const GaussianDyadic quarter_scale = dyadic_pow2(as_signed(n) - 2);
  const GaussianDyadic re = quarter_scale - dyadic_pow2(as_signed(n) - 1);
  const GaussianDyadic im_scale = GaussianDyadic(-3) * quarter_scale;
  GaussianPolynomial rhs = family == Family::GM
                               ? to_gaussian(gd_complex(re, im_scale))
                               : linear(re, imag_unit() * im_scale);
  return make_report("cassini", params, sym + "(n+1)*" + sym + "(n-1) - " + sym + "(n)^2",
                     std::move(lhs), std::move(rhs));
}

IdentityReport check_catalan_gaussian(std::uint64_t n, std::uint64_t m) {
  if (m < 1) throw std::invalid_argument("catalan: m must be >= 1");
  if (m > n) throw std::invalid_argument("catalan: requires n >= m (negative index otherwise)");
  const GaussianDyadic gm_n = gaussian_mersenne(n);
  GaussianPolynomial lhs =
      to_gaussian(gaussian_mersenne(n + m) * gaussian_mersenne(n - m) - gm_n * gm_n);

  const std::int64_t sn = as_signed(n);
  const std::int64_t sm = as_signed(m);
  const GaussianDyadic re = (dyadic_pow2(sn) - dyadic_pow2(sn + sm - 1)) +
                            (dyadic_pow2(sn - sm - 1) - dyadic_pow2(sn - sm));
  const GaussianDyadic im =
      GaussianDyadic(3) * (dyadic_pow2(sn) - dyadic_pow2(sn + sm - 1) - dyadic_pow2(sn - sm - 1));
  return make_report("catalan", {{"n", sn}, {"m", sm}},
                     "GM(n+m)*GM(n-m) - GM(n)^2", std::move(lhs),
                     to_gaussian(gd_complex(re, im)));
}

IdentityReport check_docagne_gaussian(std::uint64_t n, std::uint64_t m) {
  if (n < 1 || m < 1) throw std::invalid_argument("docagne: n and m must be >= 1");
  GaussianPolynomial lhs = to_gaussian(gaussian_mersenne(m + 1) * gaussian_mersenne(n) -
                                       gaussian_mersenne(m) * gaussian_mersenne(n + 1));
  const GaussianDyadic d = dyadic_pow2(as_signed(n) - 1) - dyadic_pow2(as_signed(m) - 1);
  return make_report("docagne", {{"n", as_signed(n)}, {"m", as_signed(m)}},
                     "GM(m+1)*GM(n) - GM(m)*GM(n+1)", std::move(lhs),
                     to_gaussian(gd_complex(d, GaussianDyadic(3) * d)));
}

IdentityReport check_k_cassini(Family family, std::uint64_t n, std::uint64_t k, std::uint64_t a) {
  if (n < 2 || k < 2) throw std::invalid_argument("k-cassini: requires n, k >= 2");
  if (a > k) throw std::domain_error("k-cassini: offset a must lie in [0, k]");
  const Params params{{"n", as_signed(n)}, {"k", as_signed(k)}, {"a", as_signed(a)}};
  const std::string sym = family_symbol(family);
  const std::uint64_t hi = n * k + a;

  GaussianPolynomial t_hi = family_term(family, hi, k);
  GaussianPolynomial t_mid = family_term(family, hi - 1, k);
  GaussianPolynomial t_lo = family_term(family, hi - 2, k);

  if (!is_gaussian_family(family)) {
    // T^(k)_{nk+a} T^(k)_{nk+a-2} - (T^(k)_{nk+a-1})^2; -2^(n-1) T_n^(2k-2) at a == 1.
    GaussianPolynomial lhs = t_hi * t_lo - t_mid * t_mid;
    GaussianPolynomial rhs;
    if (a == 1) {
      rhs = -(to_gaussian(pow2(n - 1)) * pow(family_term(family, n), 2 * k - 2));
    }
    return make_report(
        "k-cassini", params,
        sym + "[nk+a]*" + sym + "[nk+a-2] - " + sym + "[nk+a-1]^2", std::move(lhs), std::move(rhs));
  }

  // (GM^(k)_{nk+a-1})^2 - GM^(k)_{nk+a} GM^(k)_{nk+a-2};
  // GM_n^(2k-2) * ((2^(n-1) - 2^(n-2)) + i*3*2^(n-2)) at a == 1 (3x form for GMP).
  GaussianPolynomial lhs = t_mid * t_mid - t_hi * t_lo;
  GaussianPolynomial rhs;
  if (a == 1) {
    const GaussianDyadic quarter_scale = dyadic_pow2(as_signed(n) - 2);
    const GaussianDyadic re = dyadic_pow2(as_signed(n) - 1) - quarter_scale;
    const GaussianDyadic im_scale = GaussianDyadic(3) * quarter_scale;
    GaussianPolynomial bracket = family == Family::GM
                                     ? to_gaussian(gd_complex(re, im_scale))
                                     : linear(re, imag_unit() * im_scale);
    rhs = pow(family_term(family, n), 2 * k - 2) * bracket;
  }
  return make_report(
      "k-cassini", params,
      sym + "[nk+a-1]^2 - " + sym + "[nk+a]*" + sym + "[nk+a-2]", std::move(lhs), std::move(rhs));
}

IdentityReport check_shift(Family family, std::uint64_t n, std::uint64_t s) {
  if (n < 1 || s < 1) throw std::invalid_argument("shift: requires n, s >= 1");
  const std::string sym = family_symbol(family);
  const std::uint64_t base = s * n;

  GaussianPolynomial lhs = family_term(family, base + 1, s);
  GaussianPolynomial multiplier = is_polynomial_family(family)
                                      ? linear(GaussianDyadic(0), GaussianDyadic(3))
                                      : to_gaussian(GaussianDyadic(3));
  GaussianPolynomial rhs = multiplier * family_term(family, base, s) -
                           to_gaussian(GaussianDyadic(2)) * family_term(family, base - 1, s);
  const char* mult_sym = is_polynomial_family(family) ? "3x*" : "3*";
  return make_report("shift", {{"n", as_signed(n)}, {"s", as_signed(s)}},
                     sym + "[sn+1] = " + mult_sym + sym + "[sn] - 2*" + sym + "[sn-1]",
                     std::move(lhs), std::move(rhs));
}

IdentityReport check_difference(Family family, std::uint64_t s, std::uint64_t k) {
  if (k < 1) throw std::invalid_argument("difference: requires k >= 1");
  const std::string sym = family_symbol(family);
  GaussianPolynomial lhs =
      pow(family_term(family, s + 1), k) - pow(family_term(family, s), k);
  GaussianPolynomial rhs =
      family_term(family, s * k + k, k) - family_term(family, s * k, k);
  return make_report("difference", {{"s", as_signed(s)}, {"k", as_signed(k)}},
                     sym + "[s+1]^k - " + sym + "[s]^k = " + sym + "[sk+k] - " + sym + "[sk]",
                     std::move(lhs), std::move(rhs));
}

IdentityReport check_two_index(Family family, std::uint64_t n, std::uint64_t m) {
  if (n + m <= 1) throw std::invalid_argument("two-index: requires n + m > 1");
  const std::string sym = family_symbol(family);
  const std::uint64_t p = n + m;

  GaussianPolynomial lhs = family_term(family, 2 * (p - 1), 2) -
                           family_term(family, p) * family_term(family, p - 2);
  GaussianPolynomial rhs;
  if (!is_gaussian_family(family)) {
    rhs = to_gaussian(pow2(p - 2));
  } else {
    // Cassini at index n+m-1, so the dyadic exponents are n+m-2 and n+m-3
    // (exact half-integers when n+m = 2).
    const GaussianDyadic eighth_scale = dyadic_pow2(as_signed(p) - 3);
    const GaussianDyadic re = dyadic_pow2(as_signed(p) - 2) - eighth_scale;
    const GaussianDyadic im_scale = GaussianDyadic(3) * eighth_scale;
    rhs = family == Family::GM ? to_gaussian(gd_complex(re, im_scale))
                               : linear(re, imag_unit() * im_scale);
  }
  return make_report("two-index", {{"n", as_signed(n)}, {"m", as_signed(m)}},
                     sym + "[2(n+m-1)]^(2) - " + sym + "[n+m]*" + sym + "[n+m-2]",
                     std::move(lhs), std::move(rhs));
}

IdentityReport check_genfunc(Family family, std::uint64_t count) {
  if (family != Family::M && family != Family::GM)
    throw std::invalid_argument("genfunc: only the number families have a generating function here");
  if (count < 1) throw std::invalid_argument("genfunc: count must be >= 1");

  const GaussianPolynomial num = family == Family::M ? mersenne_genfunc_numerator()
                                                     : gaussian_mersenne_genfunc_numerator();
  const RationalSeries series = expand_rational_series(num, genfunc_denominator(), count);
  GaussianPolynomial lhs = GaussianPolynomial::from_coefficients(series.coefficients);

  std::vector<GaussianDyadic> sequence;
  sequence.reserve(count);
  if (family == Family::M) {
    for (const auto& v : mersenne_stream(count)) sequence.emplace_back(v);
  } else {
    sequence = gaussian_mersenne_stream(count);
  }
  GaussianPolynomial rhs = GaussianPolynomial::from_coefficients(std::move(sequence));

  return make_report("genfunc",
                     {{"count", as_signed(count)}},
                     family == Family::M ? "series coefficients of x/(1-3x+2x^2)"
                                         : "series coefficients of (z+i(3z/2-1/2))/(1-3z+2z^2)",
                     std::move(lhs), std::move(rhs));
}

namespace {

std::string family_label(Family f) {
  switch (f) {
    case Family::M: return "M";
    case Family::GM: return "GM";
    case Family::MP: return "MP";
    case Family::GMP: return "GMP";
  }
  return "?";
}

struct SuiteBuilder {
  SuiteResult result;

  explicit SuiteBuilder(std::string suite, std::string family = "") {
    result.suite = std::move(suite);
    result.family = std::move(family);
  }

  void add(IdentityReport report) {
    ++result.cells;
    if (report.holds) {
      ++result.passed;
    } else {
      result.failures.push_back(std::move(report));
    }
  }
};

}  // namespace

SuiteResult run_cassini_suite(Family family, std::uint64_t n_max) {
  SuiteBuilder suite("cassini", family_label(family));
  for (std::uint64_t n = 1; n <= n_max; ++n) suite.add(check_cassini(family, n));
  return suite.result;
}

SuiteResult run_catalan_suite(std::uint64_t n_max) {
  SuiteBuilder suite("catalan", "GM");
  for (std::uint64_t n = 1; n <= n_max; ++n)
    for (std::uint64_t m = 1; m <= n; ++m) suite.add(check_catalan_gaussian(n, m));
  return suite.result;
}

SuiteResult run_docagne_suite(std::uint64_t n_max, std::uint64_t m_max) {
  SuiteBuilder suite("docagne", "GM");
  for (std::uint64_t n = 1; n <= n_max; ++n)
    for (std::uint64_t m = 1; m <= m_max; ++m) suite.add(check_docagne_gaussian(n, m));
  return suite.result;
}

SuiteResult run_k_cassini_suite(Family family, std::uint64_t n_max, std::uint64_t k_max) {
  SuiteBuilder suite("k-cassini", family_label(family));
  for (std::uint64_t k = 2; k <= k_max; ++k)
    for (std::uint64_t n = 2; n <= n_max; ++n)
      for (std::uint64_t a = 0; a <= k; ++a) suite.add(check_k_cassini(family, n, k, a));
  return suite.result;
}

SuiteResult run_shift_suite(Family family, std::uint64_t n_max, std::uint64_t s_max) {
  SuiteBuilder suite("shift", family_label(family));
  for (std::uint64_t s = 1; s <= s_max; ++s)
    for (std::uint64_t n = 1; n <= n_max; ++n) suite.add(check_shift(family, n, s));
  return suite.result;
}

SuiteResult run_difference_suite(Family family, std::uint64_t s_max, std::uint64_t k_max) {
  SuiteBuilder suite("difference", family_label(family));
  for (std::uint64_t s = 0; s <= s_max; ++s)
    for (std::uint64_t k = 1; k <= k_max; ++k) suite.add(check_difference(family, s, k));
  return suite.result;
}

SuiteResult run_two_index_suite(Family family, std::uint64_t n_max, std::uint64_t m_max) {
  SuiteBuilder suite("two-index", family_label(family));
  for (std::uint64_t n = 0; n <= n_max; ++n)
    for (std::uint64_t m = 0; m <= m_max; ++m) {
      if (n + m <= 1) continue;
      suite.add(check_two_index(family, n, m));
    }
  return suite.result;
}

SuiteResult run_genfunc_suite(Family family, std::uint64_t count) {
  SuiteBuilder suite("genfunc", family_label(family));
  suite.add(check_genfunc(family, count));
  return suite.result;
}

int verify_exit_code(const std::vector<SuiteResult>& results) {
  for (const auto& r : results)
    if (!r.failures.empty() || r.passed != r.cells) return 1;
  return 0;
}

}  // namespace kmersenne
