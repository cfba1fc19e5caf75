#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "heisurf/errors.hpp"
#include "heisurf/exactmath/ring.hpp"

namespace heisurf {

/// Dense row-major matrix over an exact commutative ring R (a field element
/// type or MultiPoly). R must provide zero_like/one_like/is_zero/exact_divide.
template <class R>
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols, const R& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  ExactMatrix(std::initializer_list<std::initializer_list<R>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }
  ExactMatrix(std::size_t rows, std::size_t cols, std::vector<R> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) throw DimensionMismatch("entry count does not match shape");
  }

  static ExactMatrix identity(std::size_t n, const R& one) {
    ExactMatrix m(n, n, zero_like(one));
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  R& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const R& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<R>& entries() const { return data_; }

  std::vector<R> row(std::size_t r) const {
    return std::vector<R>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  ExactMatrix transpose() const {
    std::vector<R> t;
    t.reserve(data_.size());
    for (std::size_t c = 0; c < cols_; ++c)
      for (std::size_t r = 0; r < rows_; ++r) t.push_back((*this)(r, c));
    return ExactMatrix(cols_, rows_, std::move(t));
  }

  ExactMatrix submatrix(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
    std::vector<R> out;
    out.reserve(rs.size() * cs.size());
    for (auto r : rs)
      for (auto c : cs) out.push_back((*this)(r, c));
    return ExactMatrix(rs.size(), cs.size(), std::move(out));
  }

  template <class Fn>
  auto map(Fn&& fn) const {
    using T = decltype(fn(data_.front()));
    std::vector<T> out;
    out.reserve(data_.size());
    for (const auto& x : data_) out.push_back(fn(x));
    return ExactMatrix<T>(rows_, cols_, std::move(out));
  }

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
    if (a.data_.empty() || b.data_.empty()) throw DimensionMismatch("empty matrix product");
    ExactMatrix out(a.rows_, b.cols_, zero_like(a.data_.front()));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const R& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (is_zero(b(k, j))) continue;
          out(i, j) = out(i, j) + aik * b(k, j);
        }
      }
    return out;
  }
  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
    a.same_shape(b);
    ExactMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = out.data_[i] + b.data_[i];
    return out;
  }
  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
    a.same_shape(b);
    ExactMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = out.data_[i] - b.data_[i];
    return out;
  }
  ExactMatrix scaled(const R& s) const {
    ExactMatrix out = *this;
    for (auto& x : out.data_) x = s * x;
    return out;
  }
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void same_shape(const ExactMatrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw DimensionMismatch("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<R> data_;
};

/// Determinant by fraction-free (Bareiss) elimination. Every division is exact
/// in an integral domain, so this works over polynomial rings as well as fields.
template <class R>
R det_bareiss(ExactMatrix<R> a) {
  if (!a.is_square()) throw NonSquare(a.rows(), a.cols());
  const std::size_t n = a.rows();
  if (n == 0) throw DimensionMismatch("empty matrix");
  bool negate = false;
  R prev = one_like(a(0, 0));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(a(k, k))) {
      std::size_t p = k + 1;
      while (p < n && is_zero(a(p, k))) ++p;
      if (p == n) return zero_like(a(0, 0));
      a.swap_rows(k, p);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = exact_divide(a(i, j) * a(k, k) - a(i, k) * a(k, j), prev);
      a(i, k) = zero_like(prev);
    }
    prev = a(k, k);
  }
  R d = a(n - 1, n - 1);
  return negate ? zero_like(d) - d : d;
}

/// Laplace expansion along the first row. Exponential; intended for n <= 6
/// as an independent cross-check of det_bareiss.
template <class R>
R det_cofactor(const ExactMatrix<R>& a) {
  if (!a.is_square()) throw NonSquare(a.rows(), a.cols());
  const std::size_t n = a.rows();
  if (n == 0) throw DimensionMismatch("empty matrix");
  if (n == 1) return a(0, 0);
  R total = zero_like(a(0, 0));
  std::vector<std::size_t> rows_rest;
  for (std::size_t r = 1; r < n; ++r) rows_rest.push_back(r);
  for (std::size_t c = 0; c < n; ++c) {
    if (is_zero(a(0, c))) continue;
    std::vector<std::size_t> cols_rest;
    for (std::size_t k = 0; k < n; ++k)
      if (k != c) cols_rest.push_back(k);
    R term = a(0, c) * det_cofactor(a.submatrix(rows_rest, cols_rest));
    total = (c % 2 == 0) ? total + term : total - term;
  }
  return total;
}

/// Reduced row echelon form over a field; returns the pivot columns.
template <FieldElement F>
std::vector<std::size_t> rref_in_place(ExactMatrix<F>& a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(r, p);
    F inv = a(r, c).inverse();
    for (std::size_t k = c; k < a.cols(); ++k) a(r, k) = a(r, k) * inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      F f = a(i, c);
      for (std::size_t k = c; k < a.cols(); ++k) a(i, k) = a(i, k) - f * a(r, k);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

/// Exact rank over a field by Gaussian elimination.
template <FieldElement F>
std::size_t rank(ExactMatrix<F> a) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  return rref_in_place(a).size();
}

/// Basis of the right kernel {v : a v = 0}, in reduced echelon form (each
/// basis vector has a leading 1 at a distinct position, zeros at the others).
template <FieldElement F>
std::vector<std::vector<F>> nullspace(ExactMatrix<F> a, const F& one) {
  std::vector<std::size_t> pivots = a.rows() ? rref_in_place(a) : std::vector<std::size_t>{};
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(a.cols(), zero_like(one));
    v[free] = one;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a(i, free);
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return basis;
  // canonicalize: row-reduce the basis itself
  std::vector<F> flat;
  for (const auto& v : basis) flat.insert(flat.end(), v.begin(), v.end());
  ExactMatrix<F> b(basis.size(), a.cols(), std::move(flat));
  rref_in_place(b);
  std::vector<std::vector<F>> out;
  for (std::size_t i = 0; i < b.rows(); ++i) out.push_back(b.row(i));
  return out;
}

inline std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    out.push_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

/// All k x k minors, ordered lexicographically by (row set, column set).
template <class R>
std::vector<R> minors(const ExactMatrix<R>& m, std::size_t k) {
  if (k == 0 || k > std::min(m.rows(), m.cols()))
    throw OrderTooLarge("minor order " + std::to_string(k) + " exceeds matrix dimensions");
  std::vector<R> out;
  auto rsets = combinations(m.rows(), k);
  auto csets = combinations(m.cols(), k);
  out.reserve(rsets.size() * csets.size());
  for (const auto& rs : rsets)
    for (const auto& cs : csets) out.push_back(det_bareiss(m.submatrix(rs, cs)));
  return out;
}

}  // namespace heisurf
