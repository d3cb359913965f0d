#include "kmersenne/sequences.hpp"

#include <stdexcept>

#include "kmersenne/poly_sequences.hpp"

namespace kmersenne {

namespace {

void check_index(std::uint64_t n) {
  if (n > kMaxIndex) throw std::domain_error("sequence index exceeds the 2^32 cap");
}

void check_k(std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("family parameter k must be >= 1");
}

}  // namespace

Decomposition decompose(std::uint64_t n, std::uint64_t k) {
  check_k(k);
  return {n / k, n % k};
}

Integer mersenne(std::uint64_t n) {
  check_index(n);
  return pow2(n) - 1;
}

Integer mersenne_oracle(std::uint64_t n) {
  check_index(n);
  MersenneCursor cursor;
  Integer value;
  for (std::uint64_t j = 0; j <= n; ++j) value = cursor.next();
  return value;
}

Integer k_mersenne(std::uint64_t n, std::uint64_t k) {
  check_index(n);
  const auto [s, r] = decompose(n, k);
  return ipow(mersenne(s), k - r) * ipow(mersenne(s + 1), r);
}

GaussianDyadic gaussian_mersenne(std::uint64_t n) {
  check_index(n);
  // (2^n - 1) + i(2^(n-1) - 1); at n = 0 the imaginary part is the exact
  // dyadic -1/2, which is precisely the recurrence seed.
  const GaussianDyadic re = dyadic_pow2(static_cast<std::int64_t>(n)) - GaussianDyadic(1);
  const GaussianDyadic im = dyadic_pow2(static_cast<std::int64_t>(n) - 1) - GaussianDyadic(1);
  return re + GaussianDyadic(Integer(0), Integer(1)) * im;
}

GaussianDyadic gaussian_mersenne_oracle(std::uint64_t n) {
  check_index(n);
  GaussianMersenneCursor cursor;
  GaussianDyadic value;
  for (std::uint64_t j = 0; j <= n; ++j) value = cursor.next();
  return value;
}

GaussianDyadic k_gaussian_mersenne(std::uint64_t n, std::uint64_t k) {
  check_index(n);
  const auto [s, r] = decompose(n, k);
  return pow(gaussian_mersenne(s), k - r) * pow(gaussian_mersenne(s + 1), r);
}

Integer MersenneCursor::next() {
  Integer out = curr_;
  Integer following = 3 * succ_ - 2 * curr_;
  curr_ = std::move(succ_);
  succ_ = std::move(following);
  return out;
}

GaussianMersenneCursor::GaussianMersenneCursor()
    : curr_(Integer(0), Integer(-1), 1), succ_(1) {}

GaussianDyadic GaussianMersenneCursor::next() {
  GaussianDyadic out = curr_;
  GaussianDyadic following = GaussianDyadic(3) * succ_ - GaussianDyadic(2) * curr_;
  curr_ = std::move(succ_);
  succ_ = std::move(following);
  return out;
}

namespace {

// Shared shape of the k >= 2 streams: walk the base pair (T_s, T_{s+1})
// forward one block at a time and emit T_s^(k-r) * T_{s+1}^r.
template <typename T, typename Step, typename Pow>
std::vector<T> stream_by_relation(std::uint64_t count, std::uint64_t k,
                                  T base, T base_succ, Step step, Pow power) {
  std::vector<T> out;
  out.reserve(count);
  std::uint64_t s_current = 0;
  for (std::uint64_t n = 0; n < count; ++n) {
    const auto [s, r] = decompose(n, k);
    while (s_current < s) {
      T following = step(base, base_succ);
      base = std::move(base_succ);
      base_succ = std::move(following);
      ++s_current;
    }
    out.push_back(power(base, k - r) * power(base_succ, r));
  }
  return out;
}

}  // namespace

std::vector<Integer> mersenne_stream(std::uint64_t count, std::uint64_t k) {
  check_k(k);
  if (count == 0) throw std::invalid_argument("stream count must be >= 1");
  check_index(count - 1);
  if (k == 1) {
    std::vector<Integer> out;
    out.reserve(count);
    MersenneCursor cursor;
    for (std::uint64_t j = 0; j < count; ++j) out.push_back(cursor.next());
    return out;
  }
  return stream_by_relation<Integer>(
      count, k, Integer(0), Integer(1),
      [](const Integer& a, const Integer& b) { return Integer(3 * b - 2 * a); },
      [](const Integer& b, std::uint64_t e) { return ipow(b, e); });
}

std::vector<GaussianDyadic> gaussian_mersenne_stream(std::uint64_t count, std::uint64_t k) {
  check_k(k);
  if (count == 0) throw std::invalid_argument("stream count must be >= 1");
  check_index(count - 1);
  if (k == 1) {
    std::vector<GaussianDyadic> out;
    out.reserve(count);
    GaussianMersenneCursor cursor;
    for (std::uint64_t j = 0; j < count; ++j) out.push_back(cursor.next());
    return out;
  }
  return stream_by_relation<GaussianDyadic>(
      count, k, GaussianDyadic(Integer(0), Integer(-1), 1), GaussianDyadic(1),
      [](const GaussianDyadic& a, const GaussianDyadic& b) {
        return GaussianDyadic(3) * b - GaussianDyadic(2) * a;
      },
      [](const GaussianDyadic& b, std::uint64_t e) { return pow(b, e); });
}

std::vector<GaussianPolynomial> seq_stream(Family family, std::uint64_t count, std::uint64_t k) {
  std::vector<GaussianPolynomial> out;
  out.reserve(count);
  switch (family) {
    case Family::M:
      for (const auto& v : mersenne_stream(count, k)) out.push_back(to_gaussian(v));
      break;
    case Family::GM:
      for (const auto& v : gaussian_mersenne_stream(count, k)) out.push_back(to_gaussian(v));
      break;
    case Family::MP:
      for (const auto& v : mersenne_poly_stream(count, k)) out.push_back(to_gaussian(v));
      break;
    case Family::GMP:
      for (auto& v : gaussian_mersenne_poly_stream(count, k)) out.push_back(std::move(v));
      break;
  }
  return out;
}

}  // namespace kmersenne
