#include "kmersenne/tables.hpp"

#include <stdexcept>

#include "kmersenne/identities.hpp"

namespace kmersenne {

namespace {

std::string cell_note(int table_id, std::uint64_t n, std::uint64_t k) {
  if (table_id == 3 && n == 3 && k == 5)
    return "often misprinted as -i/4; the defining product GM_0^2 * GM_1^3 gives -1/4";
  if (table_id == 4 && n == 3 && k == 5)
    return "often misprinted as -i/4; the defining product GM_0(x)^2 * GM_1(x)^3 gives -1/4";
  if (table_id == 4 && n == 5 && k == 2)
    return "often misprinted as (27x^3-3x^2-6x)+i(18x^2-2); "
           "GM_2(x) * GM_3(x) expands to 27x^3-9x+i(18x^2-2)";
  return {};
}

}  // namespace

Family table_family(int table_id) {
  switch (table_id) {
    case 1: return Family::M;
    case 2: return Family::MP;
    case 3: return Family::GM;
    case 4: return Family::GMP;
    default: throw std::invalid_argument("table id must be 1, 2, 3 or 4");
  }
}

std::vector<TableCell> table_cells(int table_id, std::uint64_t n_max, std::uint64_t k_max) {
  const Family family = table_family(table_id);
  if (k_max < 1) throw std::invalid_argument("table: k_max must be >= 1");
  std::vector<TableCell> cells;
  cells.reserve((n_max + 1) * k_max);
  for (std::uint64_t n = 0; n <= n_max; ++n)
    for (std::uint64_t k = 1; k <= k_max; ++k)
      cells.push_back({n, k, family_term(family, n, k), cell_note(table_id, n, k)});
  return cells;
}

}  // namespace kmersenne
