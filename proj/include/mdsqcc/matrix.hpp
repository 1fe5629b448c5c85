/*
   Copyright 2026 The mdsqcc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef MDSQCC_MATRIX_HPP
#define MDSQCC_MATRIX_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "gf.hpp"

namespace mdsqcc {

/// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const T> values) {
    if (rows_ == 0 && cols_ == 0) cols_ = values.size();
    if (values.size() != cols_) throw std::invalid_argument("append_row: column mismatch");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
Matrix<T> select_rows(const Matrix<T>& m, std::span<const std::size_t> rows) {
  Matrix<T> out(0, m.cols());
  for (std::size_t r : rows) out.append_row(m.row(r));
  return out;
}

template <class T>
Matrix<T> stack(const Matrix<T>& top, const Matrix<T>& bottom) {
  Matrix<T> out = top;
  for (std::size_t r = 0; r < bottom.rows(); ++r) out.append_row(bottom.row(r));
  return out;
}

/// Incremental row echelon basis over a field. Vectors are reduced against the
/// stored rows; independent ones are normalized and appended.
template <gf::FiniteField F>
class EchelonBasis {
 public:
  using E = typename F::Element;

  EchelonBasis(const F& field, std::size_t width) : field_(&field), width_(width) {}

  std::size_t rank() const { return pivots_.size(); }

  /// Reduces v in place against the basis; returns true if it became zero.
  bool reduce(std::vector<E>& v) const {
    const F& f = *field_;
    for (std::size_t k = 0; k < pivots_.size(); ++k) {
      const E c = v[pivots_[k]];
      if (c == f.zero()) continue;
      const auto& b = rows_[k];
      for (std::size_t j = 0; j < width_; ++j) {
        if (b[j] != f.zero()) v[j] = f.sub(v[j], f.mul(c, b[j]));
      }
    }
    for (const E& x : v) {
      if (x != f.zero()) return false;
    }
    return true;
  }

  /// Adds v if independent of the basis; returns whether it was added.
  bool insert(std::span<const E> values) {
    std::vector<E> v(values.begin(), values.end());
    if (reduce(v)) return false;
    const F& f = *field_;
    std::size_t piv = 0;
    while (v[piv] == f.zero()) ++piv;
    const E inv = f.inv(v[piv]);
    for (auto& x : v) x = f.mul(x, inv);
    // Keep the basis fully reduced at existing pivots.
    for (auto& b : rows_) {
      const E c = b[piv];
      if (c == f.zero()) continue;
      for (std::size_t j = 0; j < width_; ++j) b[j] = f.sub(b[j], f.mul(c, v[j]));
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
  }

 private:
  const F* field_;
  std::size_t width_;
  std::vector<std::vector<E>> rows_;
  std::vector<std::size_t> pivots_;
};

template <gf::FiniteField F>
std::size_t rank(const F& field, const Matrix<typename F::Element>& m) {
  EchelonBasis<F> basis(field, m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) basis.insert(m.row(r));
  return basis.rank();
}

/// Indices of the rows that are independent of all earlier rows.
template <gf::FiniteField F>
std::vector<std::size_t> independent_rows(const F& field,
                                          const Matrix<typename F::Element>& m) {
  EchelonBasis<F> basis(field, m.cols());
  std::vector<std::size_t> kept;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (basis.insert(m.row(r))) kept.push_back(r);
  }
  return kept;
}

}  // namespace mdsqcc

#endif  // MDSQCC_MATRIX_HPP
