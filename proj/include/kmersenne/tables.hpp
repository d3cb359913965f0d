#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kmersenne/polynomial.hpp"
#include "kmersenne/sequences.hpp"

namespace kmersenne {

/// One cell of a reference table, computed from the defining relation.
/// `note` is nonempty on the cells whose commonly circulated printed value is
/// a known typo (the computed value is the relation's, not the misprint).
struct TableCell {
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  GaussianPolynomial value;
  std::string note;
};

/// Table ids follow the usual presentation of these families:
///   1 = M_n^(k), 2 = M_n^(k)(x), 3 = GM_n^(k), 4 = GM_n^(k)(x).
Family table_family(int table_id);

/// Grid with rows n = 0..n_max and columns k = 1..k_max.
/// Rejects table ids outside [1, 4] and empty ranges.
std::vector<TableCell> table_cells(int table_id, std::uint64_t n_max, std::uint64_t k_max);

}  // namespace kmersenne
