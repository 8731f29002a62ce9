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

#include <gtest/gtest.h>

#include <random>

#include "brauer/error.hpp"

namespace brauer {
namespace {

TEST(PrimeField, Arithmetic) {
  PrimeField f(7);
  EXPECT_EQ(f.add(5, 4), 2u);
  EXPECT_EQ(f.sub(2, 5), 4u);
  EXPECT_EQ(f.mul(3, 5), 1u);
  EXPECT_EQ(f.inv(3), 5u);
  EXPECT_EQ(f.neg(0), 0u);
  EXPECT_EQ(f.from_int(-1), 6u);
  EXPECT_EQ(f.from_int(-15), 6u);
}

TEST(PrimeField, InverseRoundTrip) {
  for (Scalar p : {2u, 3u, 101u, 32003u}) {
    PrimeField f(p);
    for (Scalar a = 1; a < std::min<Scalar>(p, 500); ++a) EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
  }
}

TEST(PrimeField, RejectsComposite) {
  EXPECT_THROW(PrimeField(1), InputError);
  EXPECT_THROW(PrimeField(9), InputError);
  EXPECT_THROW(PrimeField(32001), InputError);
}

TEST(Matrix, RankAndNullspace) {
  PrimeField f(32003);
  Matrix m(3, 4);
  // Row 3 = row 1 + 2 * row 2.
  Scalar rows[3][4] = {{1, 2, 0, 1}, {0, 1, 1, 0}, {1, 4, 2, 1}};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 4; ++c) m(r, c) = rows[r][c];
  EXPECT_EQ(rank(f, m), 2u);
  auto ker = nullspace(f, m);
  ASSERT_EQ(ker.size(), 2u);
  for (const auto& v : ker) {
    Matrix col = from_columns(4, {v});
    EXPECT_TRUE(multiply(f, m, col).is_zero());
  }
}

TEST(Matrix, RankDependsOnCharacteristic) {
  // Entries 1 1 / 1 3 reduced into each field; the determinant is 2.
  auto build = [](const PrimeField& f) {
    Matrix m(2, 2);
    m(0, 0) = m(0, 1) = m(1, 0) = 1;
    m(1, 1) = f.from_int(3);
    return m;
  };
  EXPECT_EQ(rank(PrimeField(2), build(PrimeField(2))), 1u);
  EXPECT_EQ(rank(PrimeField(3), build(PrimeField(3))), 2u);
}

TEST(Matrix, SolveAndInvert) {
  PrimeField f(101);
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix m(4, 4);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) m(r, c) = rng() % 101;
    std::vector<Scalar> x(4);
    for (auto& v : x) v = rng() % 101;
    Matrix b = multiply(f, m, from_columns(4, {x}));
    std::vector<Scalar> rhs{b(0, 0), b(1, 0), b(2, 0), b(3, 0)};
    auto sol = solve(f, m, rhs);
    ASSERT_TRUE(sol.has_value());
    Matrix check = multiply(f, m, from_columns(4, {*sol}));
    EXPECT_EQ(check, b);
    EXPECT_EQ(is_invertible(f, m), rank(f, m) == 4);
  }
}

TEST(Matrix, InconsistentSystem) {
  PrimeField f(5);
  Matrix m(2, 1);
  m(0, 0) = 1;
  m(1, 0) = 1;
  std::vector<Scalar> b{1, 2};
  EXPECT_FALSE(solve(f, m, b).has_value());
}

TEST(SpanBuilder, InsertAndContains) {
  PrimeField f(3);
  SpanBuilder s(f, 3);
  EXPECT_TRUE(s.insert({1, 1, 0}));
  EXPECT_TRUE(s.insert({0, 1, 1}));
  EXPECT_FALSE(s.insert({1, 2, 1}));  // sum of the two
  EXPECT_TRUE(s.contains({2, 2, 0}));
  EXPECT_FALSE(s.contains({0, 0, 1}));
  EXPECT_EQ(s.rank(), 2u);
  auto res = s.reduce({0, 0, 1});
  EXPECT_FALSE(std::all_of(res.begin(), res.end(), [](Scalar x) { return x == 0; }));
}

}  // namespace
}  // namespace brauer
