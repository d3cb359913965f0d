#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kmersenne/polynomial.hpp"
#include "kmersenne/sequences.hpp"
#include "kmersenne/series.hpp"

namespace kmersenne {

/// Outcome of one identity check. Both sides are computed independently
/// (lhs from the sequence/polynomial modules, rhs from the identity's closed
/// form) and carried as exact GaussianPolynomial values so a single report
/// shape serves all four families; holds is exact canonical-form equality.
struct IdentityReport {
  std::string identity;
  std::vector<std::pair<std::string, std::int64_t>> params;
  std::string orientation;  // the printed orientation the check used
  GaussianPolynomial lhs;
  GaussianPolynomial rhs;
  bool holds = false;

  GaussianPolynomial residual() const { return lhs - rhs; }
};

/// The k-generalized family term as a universal-carrier value.
GaussianPolynomial family_term(Family family, std::uint64_t n, std::uint64_t k = 1);

/// Cassini: M_n^2 - M_{n+1}M_{n-1} = 2^(n-1) (M, MP) and
/// GM_{n+1}GM_{n-1} - GM_n^2 = (2^(n-2) - 2^(n-1)) - i*3*2^(n-2) (GM; the
/// GMP right side carries 3x in the imaginary part). Orientation follows each
/// family's printed statement. n >= 1; the n = 1 Gaussian cases produce exact
/// half-integers.
IdentityReport check_cassini(Family family, std::uint64_t n);

/// Catalan (Gaussian): GM_{n+m}GM_{n-m} - GM_n^2 against its closed form.
/// Requires n >= m >= 1; m = 1 reduces to Cassini.
IdentityReport check_catalan_gaussian(std::uint64_t n, std::uint64_t m);

/// d'Ocagne (Gaussian): GM_{m+1}GM_n - GM_m GM_{n+1} =
/// (2^(n-1) - 2^(m-1))(1 + 3i). Requires n, m >= 1.
IdentityReport check_docagne_gaussian(std::uint64_t n, std::uint64_t m);

/// Generalized Cassini at indices (nk+a, nk+a-1, nk+a-2): the right side is 0
/// unless a == 1, where it is the 2^(n-1)-scaled power product of the base
/// term. Requires n, k >= 2 and 0 <= a <= k (offsets beyond k would change
/// the decomposition block and are rejected).
IdentityReport check_k_cassini(Family family, std::uint64_t n, std::uint64_t k, std::uint64_t a);

/// Shift: T_{sn+1}^(s) = 3 T_{sn}^(s) - 2 T_{sn-1}^(s) (multiplier 3x for the
/// polynomial families). Requires n, s >= 1.
IdentityReport check_shift(Family family, std::uint64_t n, std::uint64_t s);

/// Difference: T_{s+1}^k - T_s^k = T_{sk+k}^(k) - T_{sk}^(k). Requires k >= 1.
IdentityReport check_difference(Family family, std::uint64_t s, std::uint64_t k);

/// Two-index: T_{2(n+m-1)}^(2) - T_{n+m}T_{n+m-2} equals 2^(n+m-2) for the
/// integer families and (2^(n+m-2) - 2^(n+m-3)) + i*3*2^(n+m-3) (with 3x in
/// the polynomial case) for the Gaussian ones. Requires n + m > 1.
IdentityReport check_two_index(Family family, std::uint64_t n, std::uint64_t m);

/// Generating function check: expands the family's rational generating
/// function and compares the first `count` coefficients with the sequence.
/// Only the number families have one (M, GM).
IdentityReport check_genfunc(Family family, std::uint64_t count);

/// Aggregated grid run of one identity over one family.
struct SuiteResult {
  std::string suite;
  std::string family;
  std::size_t cells = 0;
  std::size_t passed = 0;
  std::vector<IdentityReport> failures;

  bool ok() const { return passed == cells && cells > 0; }
};

SuiteResult run_cassini_suite(Family family, std::uint64_t n_max);
SuiteResult run_catalan_suite(std::uint64_t n_max);
SuiteResult run_docagne_suite(std::uint64_t n_max, std::uint64_t m_max);
SuiteResult run_k_cassini_suite(Family family, std::uint64_t n_max, std::uint64_t k_max);
SuiteResult run_shift_suite(Family family, std::uint64_t n_max, std::uint64_t s_max);
SuiteResult run_difference_suite(Family family, std::uint64_t s_max, std::uint64_t k_max);
SuiteResult run_two_index_suite(Family family, std::uint64_t n_max, std::uint64_t m_max);
SuiteResult run_genfunc_suite(Family family, std::uint64_t count);

/// CI contract: 0 when every cell of every suite holds, 1 otherwise.
int verify_exit_code(const std::vector<SuiteResult>& results);

}  // namespace kmersenne
