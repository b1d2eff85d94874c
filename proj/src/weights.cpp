#include "virmod/weights.hpp"

#include <algorithm>
#include <cstdlib>

namespace virmod {
namespace {

void require_level(int ell) {
  if (ell < 2) throw ContractViolation("level must be >= 2, got " + std::to_string(ell));
}

void require_indices(int ell, int m, int n) {
  require_level(ell);
  if (m < 1 || m > ell || n < 1 || n > ell + 1)
    throw ContractViolation("label (" + std::to_string(m) + "," + std::to_string(n) +
                            ") out of range for level " + std::to_string(ell));
}

}  // namespace

std::int64_t bad_prime_bound(int ell) {
  require_level(ell);
  const std::int64_t l = ell;
  return 2 * l * l + l - 3;
}

BigRational central_charge(int ell) {
  require_level(ell);
  const long l = ell;
  return BigRational(1) - BigRational(6, (l + 1) * (l + 2));
}

std::int64_t weight_numerator(int ell, int m, int n) {
  require_indices(ell, m, n);
  const std::int64_t t = std::int64_t(m) * (ell + 2) - std::int64_t(n) * (ell + 1);
  return t * t - 1;
}

BigRational highest_weight(int ell, int m, int n) {
  const long l = ell;
  return BigRational(weight_numerator(ell, m, n), 4 * (l + 1) * (l + 2));
}

MinimalLabel canonicalize(int ell, int m, int n) {
  require_indices(ell, m, n);
  if (n <= m) return {ell, m, n};
  return {ell, ell + 1 - m, ell + 2 - n};
}

std::vector<MinimalLabel> canonical_labels(int ell) {
  require_level(ell);
  std::vector<MinimalLabel> out;
  for (int m = 1; m <= ell; ++m)
    for (int n = 1; n <= m; ++n) out.push_back({ell, m, n});
  return out;
}

std::int64_t d_plus(int ell, int m, int n, int m2, int n2) {
  require_indices(ell, m, n);
  require_indices(ell, m2, n2);
  return std::int64_t(m + m2) * (ell + 2) - std::int64_t(n + n2) * (ell + 1);
}

std::int64_t d_minus(int ell, int m, int n, int m2, int n2) {
  require_indices(ell, m, n);
  require_indices(ell, m2, n2);
  return std::int64_t(m - m2) * (ell + 2) - std::int64_t(n - n2) * (ell + 1);
}

std::set<std::int64_t> b_set_bruteforce(int ell) {
  require_level(ell);
  const std::int64_t l = ell;
  const std::int64_t top = 2 * (l * l + l - 1);
  std::vector<char> seen(static_cast<std::size_t>(top) + 1, 0);
  for (std::int64_t m = 1; m <= l; ++m)
    for (std::int64_t m2 = 1; m2 <= l; ++m2)
      for (std::int64_t n = 1; n <= l + 1; ++n)
        for (std::int64_t n2 = 1; n2 <= l + 1; ++n2) {
          const std::int64_t d = std::llabs((m + m2) * (l + 2) - (n + n2) * (l + 1));
          if (d <= top) seen[static_cast<std::size_t>(d)] = 1;
          else throw std::logic_error("b_set_bruteforce: value above 2(l^2+l-1)");
        }
  std::set<std::int64_t> out;
  for (std::int64_t v = 1; v <= top; ++v)
    if (seen[static_cast<std::size_t>(v)]) out.insert(out.end(), v);
  return out;
}

Interval b_block(int ell, int a) {
  require_level(ell);
  if (a < 0 || a > ell - 1) throw ContractViolation("b_block: index out of range");
  const std::int64_t l = ell;
  return {l * l + l + a * (l + 2), l * l + 2 * l - 1 + a * (l + 1)};
}

IntervalSet b_set_intervals(int ell) {
  require_level(ell);
  const std::int64_t l = ell;
  IntervalSet s({{1, l * l + l - 2}});
  for (int a = 0; a < ell; ++a) s.add(b_block(ell, a));
  return s;
}

namespace {

DMatrix difference_table(int ell, int col_count) {
  require_level(ell);
  DMatrix d;
  for (int s = 2; s <= 2 * ell; ++s) d.row_labels.push_back(std::int64_t(s) * (ell + 2));
  for (int t = 2; t < 2 + col_count; ++t) d.col_labels.push_back(std::int64_t(t) * (ell + 1));
  d.entries = DenseMatrix<std::int64_t>(d.row_labels.size(), d.col_labels.size(), 0);
  for (std::size_t i = 0; i < d.row_labels.size(); ++i)
    for (std::size_t j = 0; j < d.col_labels.size(); ++j)
      d.entries(i, j) = std::llabs(d.col_labels[j] - d.row_labels[i]);
  return d;
}

}  // namespace

DMatrix d_matrix(int ell) { return difference_table(ell, ell + 1); }
DMatrix full_d_matrix(int ell) { return difference_table(ell, 2 * ell + 1); }

Interval g_block(int ell, int a) {
  require_level(ell);
  if (a < 0 || a > ell - 1) throw ContractViolation("g_block: index out of range");
  const std::int64_t l = ell;
  return {l * l + l - 1 + a * (l + 1), l * l + l - 1 + a * (l + 2)};
}

IntervalSet g_union(int ell) {
  IntervalSet s;
  for (int a = 0; a < ell; ++a) s.add(g_block(ell, a));
  return s;
}

IntervalSet g_set(int ell, bool corrected) {
  require_level(ell);
  const std::int64_t l = ell;
  const std::int64_t top = corrected ? 2 * l * l + 2 * l - 3 : bad_prime_bound(ell);
  return IntervalSet({{1, top}}).minus(b_set_intervals(ell));
}

std::string to_string(PrimeStatus s) { return s == PrimeStatus::Good ? "good" : "bad"; }

PrimeClassification classify_prime(int ell, std::uint32_t p) {
  require_level(ell);
  if (!is_prime(p)) throw ContractViolation("classify_prime: " + std::to_string(p) + " is not prime");
  PrimeClassification out;
  out.ell = ell;
  out.p = p;
  if (p == 2) {
    out.status = PrimeStatus::Bad;
    out.central_charge_defined = central_charge(ell).denominator() % 2 != 0;
    return out;
  }
  out.central_charge_defined = reduce_mod_p(central_charge(ell), p).has_value();
  for (const auto& label : canonical_labels(ell)) {
    auto w = highest_weight(label);
    auto r = reduce_mod_p(w, p);
    if (!r) out.degenerate.push_back(label);
    out.residues.push_back({label, std::move(w), r});
  }
  for (std::size_t i = 0; i < out.residues.size(); ++i) {
    if (!out.residues[i].residue) continue;
    for (std::size_t j = i + 1; j < out.residues.size(); ++j) {
      if (out.residues[j].residue && *out.residues[i].residue == *out.residues[j].residue)
        out.collisions.emplace_back(out.residues[i].label, out.residues[j].label);
    }
  }
  out.status = out.collisions.empty() ? PrimeStatus::Good : PrimeStatus::Bad;
  return out;
}

std::vector<std::uint32_t> bad_primes(int ell) {
  std::vector<std::uint32_t> out;
  for (auto p : primes_up_to(static_cast<std::uint32_t>(bad_prime_bound(ell))))
    if (classify_prime(ell, p).status == PrimeStatus::Bad) out.push_back(p);
  return out;
}

PropHReport verify_prop_h(int ell) {
  PropHReport r;
  r.ell = ell;
  r.window_lo = bad_prime_bound(ell);
  r.window_hi = 2 * std::int64_t(ell) * ell + 3 * std::int64_t(ell);
  for (auto p : primes_up_to(static_cast<std::uint32_t>(r.window_hi))) {
    if (p <= r.window_lo) continue;
    const auto status = classify_prime(ell, p).status;
    r.sampled.emplace_back(p, status);
    if (status != PrimeStatus::Good) r.passed = false;
  }
  return r;
}

PropXReport verify_prop_x(int ell) {
  PropXReport r;
  r.ell = ell;
  const auto brute = b_set_bruteforce(ell);
  const auto formula = b_set_intervals(ell).expand();
  std::set_difference(brute.begin(), brute.end(), formula.begin(), formula.end(),
                      std::inserter(r.missing, r.missing.end()));
  std::set_difference(formula.begin(), formula.end(), brute.begin(), brute.end(),
                      std::inserter(r.extra, r.extra.end()));
  auto it = brute.rbegin();
  r.max = *it;
  r.second_max = *std::next(it);
  const std::int64_t l = ell;
  r.passed = r.missing.empty() && r.extra.empty() && r.max == 2 * (l * l + l - 1) &&
             r.second_max == bad_prime_bound(ell);
  return r;
}

}  // namespace virmod
