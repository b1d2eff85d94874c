#pragma once

// Verma modules M_{c,h} of the Virasoro algebra with
//   [L_m, L_n] = (m-n) L_{m+n} + delta_{m+n,0} (1/2) binom(m+1,3) C,
// their contravariant (Gram) forms, and the char-0 vs char-p rank probe.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "virmod/exact.hpp"
#include "virmod/matrix.hpp"
#include "virmod/weights.hpp"

namespace virmod {

/// Weakly decreasing positive parts; indexes L_{-parts[0]} ... L_{-parts[k-1]} v.
struct Partition {
  std::vector<int> parts;

  int degree() const {
    int d = 0;
    for (int x : parts) d += x;
    return d;
  }
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;
};

/// All partitions of n, lexicographically descending (5, 41, 32, 311, ...).
std::vector<Partition> partitions(int n);

template <class S>
struct VermaParams {
  S c;
  S h;
};

/// Homogeneous combination of PBW monomials; zero coefficients never stored.
template <class S>
class PBWVector {
public:
  explicit PBWVector(int degree) : degree_(degree) {}
  PBWVector(const Partition& mono, S coeff) : degree_(mono.degree()) { add(mono, std::move(coeff)); }

  int degree() const { return degree_; }
  const std::map<Partition, S>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Partition& mono, const S& coeff) {
    if (mono.degree() != degree_) throw ContractViolation("PBWVector: inhomogeneous term");
    if (virmod::is_zero(coeff)) return;
    auto [it, inserted] = terms_.try_emplace(mono, coeff);
    if (!inserted) {
      it->second += coeff;
      if (virmod::is_zero(it->second)) terms_.erase(it);
    }
  }

  void add_scaled(const PBWVector& other, const S& factor) {
    if (virmod::is_zero(factor)) return;
    for (const auto& [mono, coeff] : other.terms_) add(mono, coeff * factor);
  }

  /// Coefficient of `mono`, or nullopt when absent (i.e. zero).
  std::optional<S> coefficient(const Partition& mono) const {
    auto it = terms_.find(mono);
    if (it == terms_.end()) return std::nullopt;
    return it->second;
  }

  friend bool operator==(const PBWVector&, const PBWVector&) = default;

private:
  int degree_;
  std::map<Partition, S> terms_;
};

/// Normal-ordering engine for one (c, h). Results of L_k on single monomials
/// are cached per (k, monomial) unless memoization is turned off.
template <class S>
class VermaModule {
public:
  explicit VermaModule(VermaParams<S> params, bool memoize = true)
      : params_(std::move(params)), memoize_(memoize) {}

  const VermaParams<S>& params() const { return params_; }
  S scalar(long n) const { return embed(n, params_.h); }

  /// L_k applied to `state` and re-normal-ordered. k = 0 is rejected; use
  /// the scalar h + degree directly.
  PBWVector<S> apply_mode(int k, const PBWVector<S>& state) {
    if (k == 0) throw ContractViolation("apply_mode: L_0 acts as the scalar h + degree");
    PBWVector<S> out(state.degree() - k);
    for (const auto& [mono, coeff] : state.terms()) out.add_scaled(act(k, mono), coeff);
    return out;
  }

  /// <L_{-mu} v, L_{-lambda} v>: apply L_{mu_1}, then L_{mu_2}, ... and read off v.
  S pairing(const Partition& mu, const Partition& lambda) {
    if (mu.degree() != lambda.degree()) return scalar(0);
    PBWVector<S> x(lambda, scalar(1));
    for (int part : mu.parts) {
      x = apply_mode(part, x);
      if (x.is_zero()) return scalar(0);
    }
    return x.coefficient(Partition{}).value_or(scalar(0));
  }

  /// Bilinear extension of the contravariant form to homogeneous vectors.
  S form(const PBWVector<S>& x, const PBWVector<S>& y) {
    S total = scalar(0);
    if (x.degree() != y.degree()) return total;
    for (const auto& [mu, a] : x.terms())
      for (const auto& [lambda, b] : y.terms()) total += a * b * pairing(mu, lambda);
    return total;
  }

  /// p(N) x p(N) Gram matrix in the basis partitions(N).
  DenseMatrix<S> gram_matrix(int level) {
    if (level < 0) throw ContractViolation("gram_matrix: negative level");
    const auto basis = partitions(level);
    DenseMatrix<S> g(basis.size(), basis.size(), scalar(0));
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = i; j < basis.size(); ++j) {
        g(i, j) = pairing(basis[i], basis[j]);
        if (i != j) g(j, i) = g(i, j);
      }
    return g;
  }

  std::size_t memo_size() const { return memo_.size(); }

private:
  PBWVector<S> act(int k, const Partition& mono) {
    if (!memoize_) return compute(k, mono);
    const auto key = std::make_pair(k, mono.parts);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    auto value = compute(k, mono);
    memo_.emplace(key, value);
    return value;
  }

  PBWVector<S> compute(int k, const Partition& mono) {
    const int d = mono.degree();
    if (k == 0) return PBWVector<S>(mono, params_.h + scalar(d));
    if (mono.parts.empty()) {
      if (k > 0) return PBWVector<S>(-k);
      return PBWVector<S>(Partition{{-k}}, scalar(1));
    }
    if (k < 0 && -k >= mono.parts.front()) {
      Partition longer;
      longer.parts.reserve(mono.parts.size() + 1);
      longer.parts.push_back(-k);
      longer.parts.insert(longer.parts.end(), mono.parts.begin(), mono.parts.end());
      return PBWVector<S>(longer, scalar(1));
    }
    // L_k L_a X = L_a (L_k X) + (k - a) L_{k+a} X + delta_{k+a,0} (k^3-k)/12 c X
    const int a = -mono.parts.front();
    const Partition rest{std::vector<int>(mono.parts.begin() + 1, mono.parts.end())};
    PBWVector<S> out(d - k);
    const auto inner = act(k, rest);
    for (const auto& [m2, coeff] : inner.terms()) out.add_scaled(act(a, m2), coeff);
    const int merged = k + a;
    if (merged != 0) {
      out.add_scaled(act(merged, rest), scalar(k - a));
    } else {
      const long binom = static_cast<long>(k + 1) * k * (k - 1) / 6;
      const S central = scalar(binom) / scalar(2) * params_.c;
      const S diagonal = scalar(k - a) * (params_.h + scalar(rest.degree()));
      out.add(rest, diagonal + central);
    }
    return out;
  }

  VermaParams<S> params_;
  bool memoize_;
  std::map<std::pair<int, std::vector<int>>, PBWVector<S>> memo_;
};

template <class S>
DenseMatrix<S> gram_matrix(const VermaParams<S>& params, int level) {
  return VermaModule<S>(params).gram_matrix(level);
}

struct LevelRank {
  int level = 0;
  std::size_t verma_dim = 0;
  std::size_t rank = 0;
};

struct GramReport {
  std::vector<LevelRank> levels;
};

template <class S>
GramReport graded_rank(const VermaParams<S>& params, int max_level) {
  if (max_level < 0) throw ContractViolation("graded_rank: negative level");
  VermaModule<S> module(params);
  GramReport r;
  for (int n = 0; n <= max_level; ++n) {
    const auto g = module.gram_matrix(n);
    r.levels.push_back({n, g.rows(), rank(g)});
  }
  return r;
}

/// c_l or h_{m,n} has no image in F_p.
class DegenerateParams : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct ProbeLevel {
  int level = 0;
  std::size_t verma_dim = 0;
  std::size_t rank_q = 0;
  std::size_t rank_p = 0;
};

struct ProbeVerdict {
  MinimalLabel label;
  std::uint32_t p = 3;
  int max_level = 0;
  BigRational c;
  BigRational h;
  std::vector<ProbeLevel> levels;
  std::optional<int> rank_drop_level;  // least level with rank_p < rank_q

  bool consistent() const { return !rank_drop_level; }
  std::string verdict() const;
};

inline constexpr int kDefaultProbeLevel = 8;

/// Graded ranks of the Gram forms at (c_l, h_{m,n}) over Q and over F_p.
/// Throws DegenerateParams when c_l or h is undefined mod p.
ProbeVerdict irreducibility_probe(const MinimalLabel& label, std::uint32_t p,
                                  int max_level = kDefaultProbeLevel);

struct KacLevel {
  int level = 0;
  BigRational det;
  bool expect_zero = false;
  bool ok = false;
};

struct KacReport {
  MinimalLabel label;
  int d_min = 0;
  std::vector<KacLevel> levels;
  bool passed = true;
};

/// det Gram_N at (c_l, h_{m,n}) must vanish exactly from level
/// min(mn, (l+1-m)(l+2-n)) on.
KacReport kac_vanishing_check(const MinimalLabel& label, int max_level);

}  // namespace virmod
