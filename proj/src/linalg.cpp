// Copyright 2026 The brauer-tilt Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "brauer/linalg.hpp"

#include <utility>

#include "brauer/error.hpp"

namespace brauer {

PrimeField::PrimeField(Scalar prime) : p_(prime) {
  if (prime < 2) throw InputError("field prime must be at least 2");
  for (Scalar d = 2; static_cast<std::uint64_t>(d) * d <= prime; ++d) {
    if (prime % d == 0) throw InputError("field characteristic " + std::to_string(prime) + " is not prime");
  }
  if (prime > (1u << 31)) throw InputError("field prime must be below 2^31");
}

Scalar PrimeField::inv(Scalar a) const {
  if (a == 0) throw InternalError("inverse of zero in prime field");
  // Fermat: a^(p-2).
  std::uint64_t result = 1, base = a, e = p_ - 2;
  while (e) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<Scalar>(result);
}

Scalar PrimeField::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Scalar>(r);
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool Matrix::is_zero() const {
  for (Scalar v : data_)
    if (v) return false;
  return true;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix multiply(const PrimeField& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw InternalError("matrix dimension mismatch in multiply");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      Scalar x = a(i, k);
      if (!x) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        Scalar y = b(k, j);
        if (y) c(i, j) = f.add(c(i, j), f.mul(x, y));
      }
    }
  }
  return c;
}

Matrix add(const PrimeField& f, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InternalError("matrix dimension mismatch in add");
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = f.add(a(i, j), b(i, j));
  return c;
}

Matrix subtract(const PrimeField& f, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InternalError("matrix dimension mismatch in subtract");
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = f.sub(a(i, j), b(i, j));
  return c;
}

Matrix scale(const PrimeField& f, const Matrix& a, Scalar s) {
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = f.mul(a(i, j), s);
  return c;
}

std::vector<std::size_t> row_reduce(const PrimeField& f, Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    Scalar inv = f.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Scalar factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (m(r, j)) m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(const PrimeField& f, Matrix m) { return row_reduce(f, m).size(); }

std::vector<std::vector<Scalar>> nullspace(const PrimeField& f, const Matrix& m) {
  Matrix r = m;
  auto pivots = row_reduce(f, r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(r(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Scalar>> solve(const PrimeField& f, const Matrix& m, std::span<const Scalar> b) {
  if (b.size() != m.rows()) throw InternalError("right-hand side length mismatch in solve");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto pivots = row_reduce(f, aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  std::vector<Scalar> x(m.cols(), 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, m.cols());
  return x;
}

bool is_invertible(const PrimeField& f, const Matrix& m) {
  return m.rows() == m.cols() && rank(f, m) == m.rows();
}

Matrix from_columns(std::size_t rows, const std::vector<std::vector<Scalar>>& cols) {
  Matrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw InternalError("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

std::vector<Scalar> SpanBuilder::reduce(std::vector<Scalar> v) const {
  if (v.size() != dim_) throw InternalError("vector length mismatch in span reduction");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Scalar c = v[pivots_[i]];
    if (!c) continue;
    const auto& row = rows_[i];
    for (std::size_t j = 0; j < dim_; ++j)
      if (row[j]) v[j] = field_.sub(v[j], field_.mul(c, row[j]));
  }
  return v;
}

bool SpanBuilder::contains(const std::vector<Scalar>& v) const {
  auto r = reduce(v);
  for (Scalar x : r)
    if (x) return false;
  return true;
}

bool SpanBuilder::insert(std::vector<Scalar> v) {
  v = reduce(std::move(v));
  std::size_t piv = 0;
  while (piv < dim_ && v[piv] == 0) ++piv;
  if (piv == dim_) return false;
  Scalar inv = field_.inv(v[piv]);
  for (auto& x : v) x = field_.mul(x, inv);
  // Keep the stored rows fully reduced against each other.
  for (auto& row : rows_) {
    Scalar c = row[piv];
    if (!c) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      if (v[j]) row[j] = field_.sub(row[j], field_.mul(c, v[j]));
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(piv);
  return true;
}

}  // namespace brauer
