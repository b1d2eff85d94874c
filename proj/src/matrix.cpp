#include "virmod/matrix.hpp"

#include <utility>

namespace virmod {
namespace {

struct IntegerForm {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<mpz_class> a;
  mpq_class scale{1};  // original = integer form / scale (row-wise product)

  mpz_class& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
};

// Multiplies each row by the lcm of its denominators.
IntegerForm clear_denominators(const RationalMatrix& m) {
  IntegerForm f{m.rows(), m.cols(), std::vector<mpz_class>(m.rows() * m.cols()), mpq_class(1)};
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class l = 1;
    for (const auto& x : m.row(r)) l = lcm(l, x.denominator());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const auto& x = m(r, c);
      f.at(r, c) = x.numerator() * (l / x.denominator());
    }
    f.scale *= l;
  }
  return f;
}

struct BareissResult {
  std::size_t rank = 0;
  int sign = 1;
  mpz_class last_pivot{1};
};

// Fraction-free row echelon form in place. Every division is exact.
BareissResult bareiss(IntegerForm& f) {
  BareissResult res;
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < f.cols && r < f.rows; ++c) {
    std::size_t piv = r;
    while (piv < f.rows && f.at(piv, c) == 0) ++piv;
    if (piv == f.rows) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < f.cols; ++j) std::swap(f.at(piv, j), f.at(r, j));
      res.sign = -res.sign;
    }
    const mpz_class pivot = f.at(r, c);
    for (std::size_t i = r + 1; i < f.rows; ++i) {
      const mpz_class lead = f.at(i, c);
      for (std::size_t j = c + 1; j < f.cols; ++j) {
        mpz_class t = pivot * f.at(i, j) - lead * f.at(r, j);
        mpz_divexact(f.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      f.at(i, c) = 0;
    }
    prev = pivot;
    ++r;
  }
  res.rank = r;
  res.last_pivot = prev;
  return res;
}

}  // namespace

std::size_t rank(const RationalMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  auto f = clear_denominators(m);
  return bareiss(f).rank;
}

std::size_t rank(const ModPMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  const auto p = m(0, 0).modulus();
  std::vector<ModP> a;
  a.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& x : m.row(r)) {
      if (x.modulus() != p) throw ContractViolation("rank: entries over different prime fields");
      a.push_back(x);
    }
  const std::size_t rows = m.rows(), cols = m.cols();
  auto at = [&](std::size_t i, std::size_t j) -> ModP& { return a[i * cols + j]; };
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && at(piv, c).is_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(piv, j), at(r, j));
    const ModP inv = at(r, c).inverse();
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (at(i, c).is_zero()) continue;
      const ModP factor = at(i, c) * inv;
      for (std::size_t j = c; j < cols; ++j) at(i, j) -= factor * at(r, j);
    }
    ++r;
  }
  return r;
}

BigRational determinant(const RationalMatrix& m) {
  if (!m.is_square()) throw ContractViolation("determinant: matrix is not square");
  if (m.rows() == 0) return BigRational(1);
  auto f = clear_denominators(m);
  const auto res = bareiss(f);
  if (res.rank < m.rows()) return BigRational(0);
  mpq_class det(res.last_pivot * res.sign);
  det /= f.scale;
  return BigRational(det);
}

std::optional<ModPMatrix> reduce_mod_p(const RationalMatrix& m, std::uint32_t p) {
  ModPMatrix out(m.rows(), m.cols(), ModP(0, p));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      auto v = reduce_mod_p(m(r, c), p);
      if (!v) return std::nullopt;
      out(r, c) = *v;
    }
  return out;
}

}  // namespace virmod
