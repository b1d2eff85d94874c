#include "virmod/coset.hpp"

#include <array>
#include <set>
#include <utility>

namespace virmod {

BigRational sugawara_weight(int level, int index) {
  if (level < 1 || index < 0 || index > level)
    throw ContractViolation("sugawara_weight: need 0 <= n <= k, k >= 1");
  const long n = index;
  return BigRational(n * (n + 2), 4L * (level + 2));
}

std::vector<CosetSummand> gko_summands(int ell, int n, int eps) {
  if (ell < 2 || n < 0 || n > ell - 1 || (eps != 0 && eps != 1))
    throw ContractViolation("gko_summands: need l >= 2, 0 <= n <= l-1, eps in {0,1}");
  const auto ambient = sugawara_weight(ell - 1, n) + sugawara_weight(1, eps);
  std::vector<CosetSummand> out;
  for (int j = 0; j <= ell; ++j) {
    if ((j - n - eps) % 2 != 0) continue;
    CosetSummand s;
    s.j = j;
    if (j <= n) {
      s.branch = Branch::First;
      s.label = canonicalize(ell, n + 1, j + 1);
    } else {
      s.branch = Branch::Second;
      s.label = canonicalize(ell, ell - n, ell + 1 - j);
    }
    s.weight = highest_weight(s.label);
    s.depth = sugawara_weight(ell, j) + s.weight - ambient;
    out.push_back(std::move(s));
  }
  return out;
}

GkoReport gko_verify(int ell) {
  if (ell < 2) throw ContractViolation("gko_verify: level must be >= 2");
  GkoReport r;
  r.ell = ell;
  for (int n = 0; n < ell; ++n) {
    for (int eps = 0; eps <= 1; ++eps) {
      GkoCell cell;
      cell.n = n;
      cell.eps = eps;
      cell.summands = gko_summands(ell, n, eps);

      // Index sets are recomputed from the branch tags rather than from j's range.
      std::multiset<int> js;
      std::set<std::pair<int, MinimalLabel>> pairs;
      for (const auto& s : cell.summands) {
        js.insert(s.j);
        const bool in_first = s.j <= n;
        if (in_first != (s.branch == Branch::First)) cell.index_partition = false;

        const auto raw = s.branch == Branch::First ? std::pair{n + 1, s.j + 1}
                                                   : std::pair{ell - n, ell + 1 - s.j};
        if (!(s.label == MinimalLabel{ell, raw.first, raw.second}) || !s.label.is_canonical())
          cell.canonical_labels = false;

        if (!s.depth.is_integer() || s.depth.sign() < 0) cell.integral_depths = false;
        if (!pairs.emplace(s.j, s.label).second) cell.multiplicity_free = false;
      }
      std::multiset<int> expected;
      for (int j = 0; j <= ell; ++j)
        if ((j - n - eps) % 2 == 0) expected.insert(j);
      if (js != expected) cell.index_partition = false;

      r.total += cell.summands.size();
      r.index_partition = r.index_partition && cell.index_partition;
      r.canonical_labels = r.canonical_labels && cell.canonical_labels;
      r.integral_depths = r.integral_depths && cell.integral_depths;
      r.multiplicity_free = r.multiplicity_free && cell.multiplicity_free;
      r.cells.push_back(std::move(cell));
    }
  }
  r.total_count = r.total == static_cast<std::size_t>(ell) * (ell + 1);
  return r;
}

std::vector<Table1Row> table1_check() {
  // (l, largest known prime with a reducible Weyl module at level l, printed 2l^2+l-3)
  static constexpr std::array<std::array<int, 3>, 7> kRows{{
      {2, 3, 7}, {3, 13, 18}, {4, 11, 33}, {5, 23, 52}, {6, 37, 75}, {7, 47, 102}, {8, 53, 133},
  }};
  std::vector<Table1Row> out;
  for (const auto& [ell, p, printed] : kRows) {
    Table1Row row;
    row.ell = ell;
    row.p_max_known = static_cast<std::uint32_t>(p);
    row.bound = bad_prime_bound(ell);
    row.printed_bound = printed;
    row.below_bound = row.p_max_known < row.bound && row.bound == row.printed_bound && is_prime(p);
    out.push_back(row);
  }
  return out;
}

}  // namespace virmod
