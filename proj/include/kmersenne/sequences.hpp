#pragma once

#include <cstdint>
#include <vector>

#include "kmersenne/gaussian_dyadic.hpp"
#include "kmersenne/integer.hpp"
#include "kmersenne/polynomial.hpp"

namespace kmersenne {

/// The four parallel sequence families.
///   M   Mersenne numbers               M_n = 2^n - 1
///   GM  Gaussian Mersenne numbers      GM_n = (2^n - 1) + i(2^(n-1) - 1)
///   MP  Mersenne polynomials           M_{n+2}(x) = 3x M_{n+1}(x) - 2 M_n(x)
///   GMP Gaussian Mersenne polynomials  same recurrence, seeds -i/2, 1
enum class Family { M, GM, MP, GMP };

/// Index cap for the number families. Big-int shifts are cheap but a runaway
/// index would still allocate gigabytes.
inline constexpr std::uint64_t kMaxIndex = std::uint64_t(1) << 32;

/// The unique split n = s*k + r with 0 <= r < k.
struct Decomposition {
  std::uint64_t s = 0;
  std::uint64_t r = 0;
  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Euclidean index split used by every k-generalized family. Rejects k == 0.
Decomposition decompose(std::uint64_t n, std::uint64_t k);

/// 2^n - 1, evaluated directly from the closed form (one big shift).
Integer mersenne(std::uint64_t n);

/// Independent check path: iterate M_{j+2} = 3 M_{j+1} - 2 M_j from 0, 1.
Integer mersenne_oracle(std::uint64_t n);

/// M_n^(k) = M_s^(k-r) * M_{s+1}^r with n = sk + r. k = 1 gives M_n.
Integer k_mersenne(std::uint64_t n, std::uint64_t k);

/// GM_n from the dyadic closed form, including the n = 0 seed -i/2 (where
/// 2^(n-1) - 1 = -1/2 is exact): one code path for all indices.
GaussianDyadic gaussian_mersenne(std::uint64_t n);

/// Recurrence path from seeds GM_0 = -i/2, GM_1 = 1.
GaussianDyadic gaussian_mersenne_oracle(std::uint64_t n);

/// GM_n^(k) = GM_s^(k-r) * GM_{s+1}^r with n = sk + r.
GaussianDyadic k_gaussian_mersenne(std::uint64_t n, std::uint64_t k);

/// Stateful recurrence cursors: next() yields the current term and advances,
/// one ring operation per step. Each caller owns an independent cursor.
class MersenneCursor {
 public:
  Integer next();

 private:
  Integer curr_{0};
  Integer succ_{1};
};

class GaussianMersenneCursor {
 public:
  GaussianMersenneCursor();
  GaussianDyadic next();

 private:
  GaussianDyadic curr_;
  GaussianDyadic succ_;
};

/// First `count` terms of {M_n^(k)}. Recurrence cursor when k == 1 (amortized
/// O(1) big operations per term), relation products otherwise.
std::vector<Integer> mersenne_stream(std::uint64_t count, std::uint64_t k = 1);

/// First `count` terms of {GM_n^(k)}.
std::vector<GaussianDyadic> gaussian_mersenne_stream(std::uint64_t count, std::uint64_t k = 1);

/// Family-dispatching stream over the universal value carrier (numbers embed
/// as degree-0 polynomials). Serves the CLI and other format-agnostic users.
std::vector<GaussianPolynomial> seq_stream(Family family, std::uint64_t count, std::uint64_t k = 1);

}  // namespace kmersenne
