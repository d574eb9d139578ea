#pragma once

#include <string>
#include <vector>

#include "cyclo_field.hpp"

namespace cmsing {

/// Dense matrix over Q(zeta_m), row-major.
class CycloMatrix {
 public:
  CycloMatrix(int rows, int cols, int modulus)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, CycloNumber::zero(modulus)) {}

  static CycloMatrix identity(int n, int modulus) {
    CycloMatrix I(n, n, modulus);
    for (int i = 0; i < n; ++i) I(i, i) = CycloNumber::one(modulus);
    return I;
  }

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  int modulus() const { return data_.empty() ? 1 : data_.front().modulus(); }

  CycloNumber& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const CycloNumber& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  friend CycloMatrix operator*(const CycloMatrix& a, const CycloMatrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix product: shape mismatch");
    CycloMatrix r(a.rows_, b.cols_, a.modulus());
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        if (a(i, k).is_zero()) continue;
        for (int j = 0; j < b.cols_; ++j)
          if (!b(k, j).is_zero()) r(i, j) += a(i, k) * b(k, j);
      }
    return r;
  }
  friend CycloMatrix operator+(CycloMatrix a, const CycloMatrix& b) {
    a.check_shape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend CycloMatrix operator-(CycloMatrix a, const CycloMatrix& b) {
    a.check_shape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }
  friend CycloMatrix operator*(CycloMatrix a, const CycloNumber& s) {
    for (auto& x : a.data_) x *= s;
    return a;
  }
  friend bool operator==(const CycloMatrix& a, const CycloMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::vector<CycloNumber> apply(const std::vector<CycloNumber>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw DomainError("matrix apply: length mismatch");
    std::vector<CycloNumber> out(rows_, CycloNumber::zero(modulus()));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (!(*this)(i, j).is_zero()) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  CycloMatrix transpose() const {
    CycloMatrix t(cols_, rows_, modulus());
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  CycloNumber trace() const {
    CycloNumber s = CycloNumber::zero(modulus());
    for (int i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
    return s;
  }

  // Reduced row echelon form; returns pivot columns.
  std::vector<int> rref() {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
      int sel = -1;
      for (int i = row; i < rows_; ++i)
        if (!(*this)(i, col).is_zero()) {
          sel = i;
          break;
        }
      if (sel < 0) continue;
      if (sel != row)
        for (int j = 0; j < cols_; ++j) std::swap((*this)(sel, j), (*this)(row, j));
      const CycloNumber inv = (*this)(row, col).inverse();
      for (int j = col; j < cols_; ++j) (*this)(row, j) *= inv;
      for (int i = 0; i < rows_; ++i) {
        if (i == row || (*this)(i, col).is_zero()) continue;
        const CycloNumber factor = (*this)(i, col);
        for (int j = col; j < cols_; ++j) (*this)(i, j) -= factor * (*this)(row, j);
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  int rank() const {
    CycloMatrix c = *this;
    return static_cast<int>(c.rref().size());
  }

  CycloMatrix inverse() const {
    if (rows_ != cols_) throw DomainError("inverse of a non-square matrix");
    const int n = rows_;
    CycloMatrix aug(n, 2 * n, modulus());
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
      aug(i, n + i) = CycloNumber::one(modulus());
    }
    auto piv = aug.rref();
    if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1) throw DomainError("singular matrix");
    CycloMatrix inv(n, n, modulus());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
  }

  // Basis of the right null space, as columns of the returned matrix.
  CycloMatrix nullspace() const {
    CycloMatrix r = *this;
    auto piv = r.rref();
    std::vector<int> free;
    for (int j = 0, p = 0; j < cols_; ++j) {
      if (p < static_cast<int>(piv.size()) && piv[p] == j)
        ++p;
      else
        free.push_back(j);
    }
    CycloMatrix basis(cols_, static_cast<int>(free.size()), modulus());
    for (std::size_t f = 0; f < free.size(); ++f) {
      basis(free[f], static_cast<int>(f)) = CycloNumber::one(modulus());
      for (std::size_t i = 0; i < piv.size(); ++i)
        basis(piv[i], static_cast<int>(f)) = -r(static_cast<int>(i), free[f]);
    }
    return basis;
  }

  // Basis of the column space (pivot columns of the original matrix).
  CycloMatrix column_space() const {
    CycloMatrix r = *this;
    auto piv = r.rref();
    CycloMatrix basis(rows_, static_cast<int>(piv.size()), modulus());
    for (std::size_t k = 0; k < piv.size(); ++k)
      for (int i = 0; i < rows_; ++i) basis(i, static_cast<int>(k)) = (*this)(i, piv[k]);
    return basis;
  }

  CycloMatrix embed(int target) const {
    CycloMatrix r(rows_, cols_, target);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i].embed(target);
    return r;
  }

 private:
  void check_shape(const CycloMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix shape mismatch");
  }

  int rows_, cols_;
  std::vector<CycloNumber> data_;
};

// Horizontal concatenation.
inline CycloMatrix hcat(const CycloMatrix& a, const CycloMatrix& b) {
  if (a.rows() != b.rows()) throw DomainError("hcat: row mismatch");
  CycloMatrix r(a.rows(), a.cols() + b.cols(), a.modulus());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (int j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
  }
  return r;
}

}  // namespace cmsing
