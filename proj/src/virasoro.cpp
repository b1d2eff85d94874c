#include "virmod/virasoro.hpp"

#include <algorithm>

namespace virmod {

std::string Partition::to_string() const {
  if (parts.empty()) return "()";
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts[i]);
  }
  return s + ")";
}

namespace {

void fill_partitions(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition{prefix});
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    fill_partitions(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions(int n) {
  if (n < 0) throw ContractViolation("partitions: negative degree");
  std::vector<Partition> out;
  std::vector<int> prefix;
  fill_partitions(n, n, prefix, out);
  return out;
}

std::string ProbeVerdict::verdict() const {
  if (!rank_drop_level) return "Consistent";
  return "RankDropAtLevel(" + std::to_string(*rank_drop_level) + ")";
}

ProbeVerdict irreducibility_probe(const MinimalLabel& label, std::uint32_t p, int max_level) {
  if (p == 2 || !is_prime(p)) throw ContractViolation("irreducibility_probe: p must be an odd prime");
  const auto canon = canonicalize(label.ell, label.m, label.n);
  ProbeVerdict v;
  v.label = canon;
  v.p = p;
  v.max_level = max_level;
  v.c = central_charge(canon.ell);
  v.h = highest_weight(canon);
  const auto c_mod = reduce_mod_p(v.c, p);
  const auto h_mod = reduce_mod_p(v.h, p);
  if (!c_mod || !h_mod) {
    std::string what = !c_mod ? "c = " + v.c.to_string() : "h = " + v.h.to_string();
    throw DegenerateParams(what + " is undefined mod " + std::to_string(p));
  }
  const auto over_q = graded_rank(VermaParams<BigRational>{v.c, v.h}, max_level);
  const auto over_p = graded_rank(VermaParams<ModP>{*c_mod, *h_mod}, max_level);
  for (int n = 0; n <= max_level; ++n) {
    const auto& q = over_q.levels[n];
    const auto& r = over_p.levels[n];
    v.levels.push_back({n, q.verma_dim, q.rank, r.rank});
    if (!v.rank_drop_level && r.rank < q.rank) v.rank_drop_level = n;
  }
  return v;
}

KacReport kac_vanishing_check(const MinimalLabel& label, int max_level) {
  if (!label.is_canonical()) throw ContractViolation("kac_vanishing_check: label must be canonical");
  KacReport r;
  r.label = label;
  const int ell = label.ell;
  r.d_min = std::min(label.m * label.n, (ell + 1 - label.m) * (ell + 2 - label.n));
  VermaModule<BigRational> module({central_charge(ell), highest_weight(label)});
  for (int n = 0; n <= max_level; ++n) {
    KacLevel lv;
    lv.level = n;
    lv.det = determinant(module.gram_matrix(n));
    lv.expect_zero = n >= r.d_min;
    lv.ok = lv.det.is_zero() == lv.expect_zero;
    r.passed = r.passed && lv.ok;
    r.levels.push_back(std::move(lv));
  }
  return r;
}

}  // namespace virmod
