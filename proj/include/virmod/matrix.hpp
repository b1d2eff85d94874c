#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "virmod/exact.hpp"

namespace virmod {

/// Row-major rectangular matrix. The field is fixed by T: BigRational for Q,
/// ModP for F_p (every entry must share one modulus).
template <class T>
class DenseMatrix {
public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  DenseMatrix(std::initializer_list<std::initializer_list<T>> rows);

  static DenseMatrix identity(std::size_t n, const T& zero, const T& one) {
    DenseMatrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
  }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
DenseMatrix<T>::DenseMatrix(std::initializer_list<std::initializer_list<T>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ContractViolation("DenseMatrix: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

using RationalMatrix = DenseMatrix<BigRational>;
using ModPMatrix = DenseMatrix<ModP>;

/// Rank over Q by fraction-free (Bareiss) elimination on the row-scaled
/// integer matrix.
std::size_t rank(const RationalMatrix& m);
/// Rank over F_p by Gaussian elimination.
std::size_t rank(const ModPMatrix& m);

/// Exact determinant via Bareiss. Throws ContractViolation if not square.
BigRational determinant(const RationalMatrix& m);

/// Entrywise reduction; empty if any entry is undefined mod p.
std::optional<ModPMatrix> reduce_mod_p(const RationalMatrix& m, std::uint32_t p);

}  // namespace virmod
