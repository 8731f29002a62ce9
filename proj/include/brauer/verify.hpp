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

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "brauer/linalg.hpp"

namespace brauer {

struct VerifyOptions {
  Scalar prime = kDefaultPrime;
  int max_n = 0;  // 0 keeps each suite's default range
  std::uint64_t seed = 1;
  int workers = 1;
};

struct SuiteResult {
  std::string name;
  bool pass = false;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::vector<std::string> counterexamples;  // first few only
  /// Numerical outputs in a fixed order, compared across field primes.
  std::string fingerprint;
  double seconds = 0;
};

SuiteResult verify_prop1(const VerifyOptions& opt);
SuiteResult verify_theorem1(const VerifyOptions& opt);
SuiteResult verify_prop3(const VerifyOptions& opt);
SuiteResult verify_remark1(const VerifyOptions& opt);
SuiteResult verify_prop4(const VerifyOptions& opt);
SuiteResult verify_tables(const VerifyOptions& opt);
SuiteResult verify_happel(const VerifyOptions& opt);
SuiteResult verify_example1(const VerifyOptions& opt);
SuiteResult verify_prop5(const VerifyOptions& opt);
SuiteResult verify_remark2(const VerifyOptions& opt);

struct SuiteEntry {
  std::string name;
  std::function<SuiteResult(const VerifyOptions&)> run;
};
/// Suites in the order of the acceptance criteria 1-10.
const std::vector<SuiteEntry>& verify_suites();

/// Output of the worked example, shared by the CLI, golden files and tests.
struct ExampleOutput {
  std::vector<std::string> summands;  // sorted label texts
  std::string quiver;
  std::string tree_form;              // canonical form of the End tree
  std::string complex_json;
  std::string tree_dot;
};
ExampleOutput run_example1(Scalar prime = kDefaultPrime);

/// Runs fn(0..count-1) on `workers` threads; results keep index order.
void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& fn);

}  // namespace brauer
