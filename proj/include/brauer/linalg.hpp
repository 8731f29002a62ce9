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


#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace brauer {

using Scalar = std::uint32_t;

inline constexpr Scalar kDefaultPrime = 32003;

/// Arithmetic in Z/pZ. The prime is a runtime value so that every
/// computation can be repeated over several characteristics.
class PrimeField {
 public:
  explicit PrimeField(Scalar prime = kDefaultPrime);

  Scalar prime() const { return p_; }

  Scalar add(Scalar a, Scalar b) const {
    Scalar s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Scalar sub(Scalar a, Scalar b) const { return a >= b ? a - b : a + p_ - b; }
  Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }
  Scalar mul(Scalar a, Scalar b) const {
    return static_cast<Scalar>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Scalar inv(Scalar a) const;
  /// Reduces a signed integer into [0, p).
  Scalar from_int(long long v) const;

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  Scalar p_;
};

/// Dense row-major matrix over a prime field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Scalar operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  bool is_zero() const;
  bool operator==(const Matrix& o) const = default;

  Matrix transposed() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix multiply(const PrimeField& f, const Matrix& a, const Matrix& b);
Matrix add(const PrimeField& f, const Matrix& a, const Matrix& b);
Matrix subtract(const PrimeField& f, const Matrix& a, const Matrix& b);
Matrix scale(const PrimeField& f, const Matrix& a, Scalar s);

/// Reduced row echelon form computed in place; returns pivot columns.
std::vector<std::size_t> row_reduce(const PrimeField& f, Matrix& m);

std::size_t rank(const PrimeField& f, Matrix m);

/// Basis of the right kernel {x : m x = 0}; one vector per basis element.
std::vector<std::vector<Scalar>> nullspace(const PrimeField& f, const Matrix& m);

/// Some solution of m x = b, if one exists.
std::optional<std::vector<Scalar>> solve(const PrimeField& f, const Matrix& m,
                                         std::span<const Scalar> b);

bool is_invertible(const PrimeField& f, const Matrix& m);

/// Builds a matrix whose columns are the given vectors (all of length `rows`).
Matrix from_columns(std::size_t rows, const std::vector<std::vector<Scalar>>& cols);

/// Incrementally maintained row space with reduction of new vectors.
/// Used for spans of null-homotopic maps, radical powers and complements.
class SpanBuilder {
 public:
  SpanBuilder(PrimeField f, std::size_t dim) : field_(f), dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }

  /// Reduces v against the current basis; returns the residue.
  std::vector<Scalar> reduce(std::vector<Scalar> v) const;
  bool contains(const std::vector<Scalar>& v) const;
  /// Adds v; returns true if the span grew.
  bool insert(std::vector<Scalar> v);

 private:
  PrimeField field_;
  std::size_t dim_;
  std::vector<std::vector<Scalar>> rows_;  // each row normalised with pivot 1
  std::vector<std::size_t> pivots_;
};

}  // namespace brauer
