#pragma once

// Minimal-series weight arithmetic for c_l = 1 - 6/((l+1)(l+2)), the
// good/bad prime classifier, and the collision sets B_l / G_l.

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "virmod/exact.hpp"
#include "virmod/interval_set.hpp"
#include "virmod/matrix.hpp"

namespace virmod {

/// (l, m, n) naming h_{m,n;l}. Canonical when n <= m.
struct MinimalLabel {
  int ell = 2;
  int m = 1;
  int n = 1;

  bool is_canonical() const { return n <= m; }
  std::string to_string() const { return "(" + std::to_string(m) + "," + std::to_string(n) + ")"; }

  friend bool operator==(const MinimalLabel&, const MinimalLabel&) = default;
  friend auto operator<=>(const MinimalLabel&, const MinimalLabel&) = default;
};

/// 2l^2 + l - 3: every prime above it is good.
std::int64_t bad_prime_bound(int ell);

BigRational central_charge(int ell);

/// ((m(l+2) - n(l+1))^2 - 1) / (4(l+1)(l+2)), reduced.
BigRational highest_weight(int ell, int m, int n);
inline BigRational highest_weight(const MinimalLabel& x) { return highest_weight(x.ell, x.m, x.n); }

/// Unreduced numerator (m(l+2) - n(l+1))^2 - 1.
std::int64_t weight_numerator(int ell, int m, int n);

/// Applies (m, n) -> (l+1-m, l+2-n) when n > m.
MinimalLabel canonicalize(int ell, int m, int n);

/// The l(l+1)/2 canonical labels, ordered by (m, n).
std::vector<MinimalLabel> canonical_labels(int ell);

/// (m + m')(l+2) - (n + n')(l+1)
std::int64_t d_plus(int ell, int m, int n, int m2, int n2);
/// (m - m')(l+2) - (n - n')(l+1)
std::int64_t d_minus(int ell, int m, int n, int m2, int n2);

/// { |d_plus| } over all index tuples, without 0 (0 only arises from
/// symmetry-paired tuples, which name the same weight).
std::set<std::int64_t> b_set_bruteforce(int ell);

/// B_l(a) = [l^2+l+a(l+2), l^2+2l-1+a(l+1)], 0 <= a <= l-1.
Interval b_block(int ell, int a);
/// [1, l^2+l-2] ∪ B_l(0) ∪ ... ∪ B_l(l-1).
IntervalSet b_set_intervals(int ell);

/// Integer difference table with its row/column labels.
struct DMatrix {
  std::vector<std::int64_t> row_labels;  // (m+m')(l+2), increasing
  std::vector<std::int64_t> col_labels;  // (n+n')(l+1), increasing
  DenseMatrix<std::int64_t> entries;     // |col - row|
};

/// The (2l-1) x (l+1) half-table: the left l+1 columns of full_d_matrix.
DMatrix d_matrix(int ell);
/// The full (2l-1) x (2l+1) table over every m+m' and n+n'.
DMatrix full_d_matrix(int ell);

/// G_l(a) = [l^2+l-1+a(l+1), l^2+l-1+a(l+2)], 0 <= a <= l-1.
Interval g_block(int ell, int a);
/// G_l(0) ∪ ... ∪ G_l(l-1).
IntervalSet g_union(int ell);
/// corrected = false: [1, 2l^2+l-3] \ B_l.
/// corrected = true:  [1, 2l^2+2l-3] \ B_l, the range on which g_union matches.
IntervalSet g_set(int ell, bool corrected);

enum class PrimeStatus { Good, Bad };
std::string to_string(PrimeStatus s);

struct LabelResidue {
  MinimalLabel label;
  BigRational weight;
  ModularValue residue;  // empty when undefined mod p
};

struct PrimeClassification {
  int ell = 2;
  std::uint32_t p = 2;
  PrimeStatus status = PrimeStatus::Good;
  std::vector<std::pair<MinimalLabel, MinimalLabel>> collisions;
  std::vector<MinimalLabel> degenerate;
  bool central_charge_defined = true;
  std::vector<LabelResidue> residues;  // empty for p = 2
};

/// p = 2 is Bad by convention. Otherwise labels whose weight is undefined
/// mod p are listed as degenerate and left out of the comparison.
PrimeClassification classify_prime(int ell, std::uint32_t p);

/// Bad primes up to bad_prime_bound(l), ascending.
std::vector<std::uint32_t> bad_primes(int ell);

struct PropHReport {
  int ell = 2;
  std::int64_t window_lo = 0;  // exclusive
  std::int64_t window_hi = 0;  // inclusive
  std::vector<std::pair<std::uint32_t, PrimeStatus>> sampled;
  bool passed = true;
};

/// Classifies every prime in (2l^2+l-3, 2l^2+3l].
PropHReport verify_prop_h(int ell);

struct PropXReport {
  int ell = 2;
  std::set<std::int64_t> missing;  // in brute force, not in intervals
  std::set<std::int64_t> extra;    // in intervals, not in brute force
  std::int64_t max = 0;
  std::int64_t second_max = 0;
  bool passed = true;
};

/// Brute-force B_l against the interval formula, plus its top two values.
PropXReport verify_prop_x(int ell);

}  // namespace virmod
