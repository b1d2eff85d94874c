#pragma once

// Bookkeeping checks for the GKO decomposition
//   V(lambda_{l-1;n}) ⊗ V(omega_eps) = ⊕_j V(lambda_{l;j}) ⊗ L(c_l, h)
// and the audit of the known reducible-Weyl-module primes.

#include <cstdint>
#include <string>
#include <vector>

#include "virmod/exact.hpp"
#include "virmod/weights.hpp"

namespace virmod {

/// lambda_{l;n} = (l-n) omega_0 + n omega_1.
struct AffineWeight {
  int level = 1;
  int index = 0;
};

/// n(n+2) / (4(k+2)): L_0 eigenvalue on the top of the level-k module V(lambda_{k;n}).
BigRational sugawara_weight(int level, int index);
inline BigRational sugawara_weight(const AffineWeight& w) { return sugawara_weight(w.level, w.index); }

enum class Branch { First, Second };

struct CosetSummand {
  int j = 0;
  MinimalLabel label;
  Branch branch = Branch::First;
  BigRational weight;  // h of the Virasoro factor
  BigRational depth;   // grade of the summand's top inside the tensor product
};

/// Summands for fixed (n, eps), j ascending.
std::vector<CosetSummand> gko_summands(int ell, int n, int eps);

struct GkoCell {
  int n = 0;
  int eps = 0;
  std::vector<CosetSummand> summands;
  bool index_partition = true;
  bool canonical_labels = true;
  bool integral_depths = true;
  bool multiplicity_free = true;
};

struct GkoReport {
  int ell = 2;
  std::vector<GkoCell> cells;
  std::size_t total = 0;
  bool index_partition = true;
  bool canonical_labels = true;
  bool integral_depths = true;
  bool multiplicity_free = true;
  bool total_count = true;

  bool passed() const {
    return index_partition && canonical_labels && integral_depths && multiplicity_free && total_count;
  }
};

GkoReport gko_verify(int ell);

struct Table1Row {
  int ell = 2;
  std::uint32_t p_max_known = 0;
  std::int64_t bound = 0;  // 2l^2 + l - 3
  std::int64_t printed_bound = 0;
  bool below_bound = false;
};

/// Largest known primes with a reducible level-l Weyl module, l = 2..8
/// (from published lists of reducible Weyl modules for affine sl_2).
std::vector<Table1Row> table1_check();

}  // namespace virmod
