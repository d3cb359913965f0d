#include "kmersenne/poly_sequences.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "kmersenne/sequences.hpp"

namespace kmersenne {

namespace {

void check_poly_index(std::uint64_t n) {
  if (n > kMaxPolyIndex)
    throw std::domain_error("polynomial index exceeds the desk-scale cap (512)");
}

void check_k(std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("family parameter k must be >= 1");
}

IntPolynomial step_int(const IntPolynomial& a, const IntPolynomial& b) {
  return b.times_x().scaled(Integer(3)) - a.scaled(Integer(2));
}

GaussianPolynomial step_gaussian(const GaussianPolynomial& a, const GaussianPolynomial& b) {
  return b.times_x().scaled(GaussianDyadic(3)) - a.scaled(GaussianDyadic(2));
}

}  // namespace

std::pair<IntPolynomial, IntPolynomial> mersenne_poly_pair(std::uint64_t n) {
  check_poly_index(n);
  IntPolynomial a;                        // M_0 = 0
  IntPolynomial b{Integer(1)};            // M_1 = 1
  for (std::uint64_t j = 0; j < n; ++j) {
    IntPolynomial following = step_int(a, b);
    a = std::move(b);
    b = std::move(following);
  }
  return {std::move(a), std::move(b)};
}

IntPolynomial mersenne_poly(std::uint64_t n) { return mersenne_poly_pair(n).first; }

IntPolynomial k_mersenne_poly(std::uint64_t n, std::uint64_t k) {
  check_k(k);
  const auto [s, r] = decompose(n, k);
  const auto [ms, ms1] = mersenne_poly_pair(s);
  return pow(ms, k - r) * pow(ms1, r);
}

std::pair<GaussianPolynomial, GaussianPolynomial> gaussian_mersenne_poly_pair(std::uint64_t n) {
  check_poly_index(n);
  GaussianPolynomial a{GaussianDyadic(Integer(0), Integer(-1), 1)};  // GM_0 = -i/2
  GaussianPolynomial b{GaussianDyadic(1)};                           // GM_1 = 1
  for (std::uint64_t j = 0; j < n; ++j) {
    GaussianPolynomial following = step_gaussian(a, b);
    a = std::move(b);
    b = std::move(following);
  }
  return {std::move(a), std::move(b)};
}

GaussianPolynomial gaussian_mersenne_poly(std::uint64_t n) {
  return gaussian_mersenne_poly_pair(n).first;
}

GaussianPolynomial k_gaussian_mersenne_poly(std::uint64_t n, std::uint64_t k) {
  check_k(k);
  const auto [s, r] = decompose(n, k);
  const auto [gs, gs1] = gaussian_mersenne_poly_pair(s);
  return pow(gs, k - r) * pow(gs1, r);
}

namespace {

template <typename P, typename Step, typename Pow>
std::vector<P> poly_stream(std::uint64_t count, std::uint64_t k, P base, P base_succ,
                           Step step, Pow power) {
  if (count == 0) throw std::invalid_argument("stream count must be >= 1");
  std::vector<P> out;
  out.reserve(count);
  if (k == 1) {
    for (std::uint64_t n = 0; n < count; ++n) {
      out.push_back(base);
      P following = step(base, base_succ);
      base = std::move(base_succ);
      base_succ = std::move(following);
    }
    return out;
  }
  std::uint64_t s_current = 0;
  for (std::uint64_t n = 0; n < count; ++n) {
    const auto [s, r] = decompose(n, k);
    while (s_current < s) {
      P following = step(base, base_succ);
      base = std::move(base_succ);
      base_succ = std::move(following);
      ++s_current;
    }
    out.push_back(power(base, k - r) * power(base_succ, r));
  }
  return out;
}

}  // namespace

std::vector<IntPolynomial> mersenne_poly_stream(std::uint64_t count, std::uint64_t k) {
  check_k(k);
  check_poly_index(count == 0 ? 0 : (count - 1) / k + 1);
  return poly_stream<IntPolynomial>(
      count, k, IntPolynomial{}, IntPolynomial{Integer(1)},
      [](const IntPolynomial& a, const IntPolynomial& b) { return step_int(a, b); },
      [](const IntPolynomial& b, std::uint64_t e) { return pow(b, e); });
}

std::vector<GaussianPolynomial> gaussian_mersenne_poly_stream(std::uint64_t count, std::uint64_t k) {
  check_k(k);
  check_poly_index(count == 0 ? 0 : (count - 1) / k + 1);
  return poly_stream<GaussianPolynomial>(
      count, k, GaussianPolynomial{GaussianDyadic(Integer(0), Integer(-1), 1)},
      GaussianPolynomial{GaussianDyadic(1)},
      [](const GaussianPolynomial& a, const GaussianPolynomial& b) { return step_gaussian(a, b); },
      [](const GaussianPolynomial& b, std::uint64_t e) { return pow(b, e); });
}

QuadraticRoots quadratic_roots(double x0) {
  const double disc = 9.0 * x0 * x0 - 8.0;
  if (!(disc > 0.0))
    throw std::domain_error("quadratic_roots: 9*x0^2 - 8 must be positive");
  const double s = std::sqrt(disc);
  QuadraticRoots roots;
  if (x0 >= 0.0) {
    // (3x + s)/2 is the well-conditioned root here; recover the other from
    // the exact product lambda1*lambda2 = 2 to avoid cancellation.
    roots.lambda1 = (3.0 * x0 + s) / 2.0;
    roots.lambda2 = 2.0 / roots.lambda1;
  } else {
    roots.lambda2 = (3.0 * x0 - s) / 2.0;
    roots.lambda1 = 2.0 / roots.lambda2;
  }
  return roots;
}

namespace {

double root_power_ratio(const QuadraticRoots& r, double exponent) {
  return (std::pow(r.lambda1, exponent) - std::pow(r.lambda2, exponent)) /
         (r.lambda1 - r.lambda2);
}

double relative_error(std::complex<double> numeric, std::complex<double> exact) {
  const double diff = std::abs(numeric - exact);
  const double scale = std::abs(exact);
  return scale > 0.0 ? diff / scale : diff;
}

}  // namespace

BinetCheck binet_numeric_check(std::uint64_t n, const GaussianDyadic& x0, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("binet_numeric_check: tol must be positive");
  if (!x0.is_real()) throw std::invalid_argument("binet_numeric_check: x0 must be real");
  // Exact discriminant sign check before any floating point happens.
  const GaussianDyadic disc = GaussianDyadic(9) * x0 * x0 - GaussianDyadic(8);
  if (disc.re_num() <= 0)
    throw std::domain_error("binet_numeric_check: 9*x0^2 - 8 must be positive");

  BinetCheck result;
  const double xd = x0.to_complex().real();
  result.roots = quadratic_roots(xd);

  const double m_numeric = root_power_ratio(result.roots, static_cast<double>(n));
  const std::complex<double> gm_numeric(
      m_numeric, root_power_ratio(result.roots, static_cast<double>(n) - 1.0));

  const std::complex<double> m_exact = eval_at(mersenne_poly(n), x0).to_complex();
  const std::complex<double> gm_exact = gaussian_mersenne_poly(n)(x0).to_complex();

  result.mersenne_error = relative_error({m_numeric, 0.0}, m_exact);
  result.gaussian_error = relative_error(gm_numeric, gm_exact);
  result.passed = result.mersenne_error < tol && result.gaussian_error < tol;
  return result;
}

}  // namespace kmersenne
