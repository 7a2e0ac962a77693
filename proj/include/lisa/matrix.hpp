#ifndef LISA_MATRIX_HPP
#define LISA_MATRIX_HPP

#include <optional>
#include <sstream>
#include <vector>

#include "lisa/fields.hpp"

namespace lisa {

template <class F>
using Vec = std::vector<typename F::Element>;

template <class K>
std::vector<K> vec_add(const std::vector<K>& a, const std::vector<K>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector length mismatch");
  std::vector<K> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

template <class K>
std::vector<K> vec_sub(const std::vector<K>& a, const std::vector<K>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector length mismatch");
  std::vector<K> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

template <class K>
std::vector<K> vec_neg(const std::vector<K>& a) {
  std::vector<K> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

template <class K>
std::vector<K> vec_smul(const K& c, const std::vector<K>& a) {
  std::vector<K> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
  return out;
}

template <class K>
bool vec_is_zero(const std::vector<K>& a) {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

template <class F>
Vec<F> vec_zero(const F& f, size_t n) {
  return Vec<F>(n, f.zero());
}

template <class F>
Vec<F> vec_unit(const F& f, size_t n, size_t i) {
  Vec<F> v(n, f.zero());
  v.at(i) = f.one();
  return v;
}

template <class K>
std::string vec_str(const std::vector<K>& a) {
  std::string s = "(";
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += a[i].str();
  }
  return s + ")";
}

/// Dense matrix over an exact field, row-major.
template <class F>
class Matrix {
public:
  using K = typename F::Element;

  Matrix(const F& f, size_t rows, size_t cols)
      : field_(f), rows_(rows), cols_(cols), e_(rows * cols, f.zero()) {}

  static Matrix identity(const F& f, size_t n) {
    Matrix m(f, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
  }

  static Matrix from_rows(const F& f, const std::vector<std::vector<K>>& rows) {
    size_t r = rows.size();
    size_t c = r ? rows[0].size() : 0;
    Matrix m(f, r, c);
    for (size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw DimensionMismatch("ragged matrix rows");
      for (size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  const F& field() const { return field_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  K& at(size_t r, size_t c) { return e_[r * cols_ + c]; }
  const K& at(size_t r, size_t c) const { return e_[r * cols_ + c]; }

  std::vector<K> row(size_t r) const {
    return std::vector<K>(e_.begin() + r * cols_, e_.begin() + (r + 1) * cols_);
  }
  void set_row(size_t r, const std::vector<K>& v) {
    if (v.size() != cols_) throw DimensionMismatch("row length mismatch");
    for (size_t j = 0; j < cols_; ++j) at(r, j) = v[j];
  }
  std::vector<K> col(size_t c) const {
    std::vector<K> v(rows_, field_.zero());
    for (size_t i = 0; i < rows_; ++i) v[i] = at(i, c);
    return v;
  }
  void set_col(size_t c, const std::vector<K>& v) {
    if (v.size() != rows_) throw DimensionMismatch("column length mismatch");
    for (size_t i = 0; i < rows_; ++i) at(i, c) = v[i];
  }

  Matrix transpose() const {
    Matrix m(field_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
  }

  Matrix operator+(const Matrix& o) const {
    check_same_shape(o);
    Matrix m = *this;
    for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] + o.e_[i];
    return m;
  }

  Matrix operator-(const Matrix& o) const {
    check_same_shape(o);
    Matrix m = *this;
    for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] - o.e_[i];
    return m;
  }

  Matrix scaled(const K& c) const {
    Matrix m = *this;
    for (auto& x : m.e_) x = c * x;
    return m;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape mismatch");
    Matrix m(field_, rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t k = 0; k < cols_; ++k) {
        const K& a = at(i, k);
        if (a.is_zero()) continue;
        for (size_t j = 0; j < o.cols_; ++j) m.at(i, j) += a * o.at(k, j);
      }
    return m;
  }

  /// m * v with v a column vector of length cols().
  std::vector<K> apply(const std::vector<K>& v) const {
    if (v.size() != cols_) throw DimensionMismatch("matrix apply length mismatch");
    std::vector<K> out(rows_, field_.zero());
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j)
        if (!at(i, j).is_zero()) out[i] += at(i, j) * v[j];
    return out;
  }

  Matrix vstack(const Matrix& o) const {
    if (cols_ != o.cols_) throw DimensionMismatch("vstack column mismatch");
    Matrix m(field_, rows_ + o.rows_, cols_);
    m.e_ = e_;
    m.e_.insert(m.e_.end(), o.e_.begin(), o.e_.end());
    return m;
  }

  /// Reduced row-echelon form; unique canonical representative of the row
  /// space. Pivot columns are reported through `pivots` when non-null.
  Matrix rref(std::vector<size_t>* pivots = nullptr) const {
    Matrix m = *this;
    if (pivots) pivots->clear();
    size_t lead = 0;
    for (size_t col = 0; col < cols_ && lead < rows_; ++col) {
      size_t piv = lead;
      while (piv < rows_ && m.at(piv, col).is_zero()) ++piv;
      if (piv == rows_) continue;
      if (piv != lead)
        for (size_t j = 0; j < cols_; ++j) std::swap(m.at(piv, j), m.at(lead, j));
      K inv = m.at(lead, col).inverse();
      for (size_t j = col; j < cols_; ++j) m.at(lead, j) = inv * m.at(lead, j);
      for (size_t i = 0; i < rows_; ++i) {
        if (i == lead || m.at(i, col).is_zero()) continue;
        K factor = m.at(i, col);
        for (size_t j = col; j < cols_; ++j)
          m.at(i, j) = m.at(i, j) - factor * m.at(lead, j);
      }
      if (pivots) pivots->push_back(col);
      ++lead;
    }
    return m;
  }

  size_t rank() const {
    std::vector<size_t> piv;
    rref(&piv);
    return piv.size();
  }

  /// Basis of {x : m x = 0}, one row per free column of the rref.
  Matrix kernel() const {
    std::vector<size_t> piv;
    Matrix r = rref(&piv);
    std::vector<bool> is_pivot(cols_, false);
    for (size_t c : piv) is_pivot[c] = true;
    size_t nfree = cols_ - piv.size();
    Matrix out(field_, nfree, cols_);
    size_t row = 0;
    for (size_t f = 0; f < cols_; ++f) {
      if (is_pivot[f]) continue;
      out.at(row, f) = field_.one();
      for (size_t i = 0; i < piv.size(); ++i) out.at(row, piv[i]) = -r.at(i, f);
      ++row;
    }
    return out;
  }

  /// One solution of m x = b, if consistent.
  std::optional<std::vector<K>> solve(const std::vector<K>& b) const {
    if (b.size() != rows_) throw DimensionMismatch("solve rhs length mismatch");
    Matrix aug(field_, rows_, cols_ + 1);
    for (size_t i = 0; i < rows_; ++i) {
      for (size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
      aug.at(i, cols_) = b[i];
    }
    std::vector<size_t> piv;
    Matrix r = aug.rref(&piv);
    for (size_t c : piv)
      if (c == cols_) return std::nullopt;
    std::vector<K> x(cols_, field_.zero());
    for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = r.at(i, cols_);
    return x;
  }

  K determinant() const {
    if (rows_ != cols_) throw DimensionMismatch("determinant of non-square matrix");
    Matrix m = *this;
    K det = field_.one();
    for (size_t col = 0; col < cols_; ++col) {
      size_t piv = col;
      while (piv < rows_ && m.at(piv, col).is_zero()) ++piv;
      if (piv == rows_) return field_.zero();
      if (piv != col) {
        for (size_t j = 0; j < cols_; ++j) std::swap(m.at(piv, j), m.at(col, j));
        det = -det;
      }
      det = det * m.at(col, col);
      K inv = m.at(col, col).inverse();
      for (size_t i = col + 1; i < rows_; ++i) {
        if (m.at(i, col).is_zero()) continue;
        K factor = m.at(i, col) * inv;
        for (size_t j = col; j < cols_; ++j)
          m.at(i, j) = m.at(i, j) - factor * m.at(col, j);
      }
    }
    return det;
  }

  bool is_zero() const {
    for (const auto& x : e_)
      if (!x.is_zero()) return false;
    return true;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  bool operator<(const Matrix& o) const {
    if (rows_ != o.rows_) return rows_ < o.rows_;
    if (cols_ != o.cols_) return cols_ < o.cols_;
    return e_ < o.e_;
  }

  std::string str() const {
    std::string s = "[";
    for (size_t i = 0; i < rows_; ++i) {
      if (i) s += ",";
      s += "[";
      for (size_t j = 0; j < cols_; ++j) {
        if (j) s += ",";
        s += at(i, j).str();
      }
      s += "]";
    }
    return s + "]";
  }

private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw DimensionMismatch("matrix shape mismatch");
  }

  F field_;
  size_t rows_, cols_;
  std::vector<K> e_;
};

}  // namespace lisa

#endif
