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

#include <map>

#include "brauer/algebra.hpp"
#include "brauer/complex.hpp"
#include "brauer/tree.hpp"

namespace brauer {

/// Which way the children of a vertex are read off its cyclic order,
/// starting from the edge towards the root.
enum class ChildOrder { Successor, Predecessor };

struct TreeLabeling {
  std::map<int, int> label;   // edge id -> 1..n
  std::map<int, int> level;   // edge id -> level of its lower end
  std::map<int, int> parent;  // edge id -> edge above it, 0 at the root
};

/// Labels edges so that every subtree occupies a block of consecutive labels.
/// Root and even levels put an edge before its subtree, odd levels after.
TreeLabeling label_brauer_tree(const BrauerTree& tree, ChildOrder order = ChildOrder::Successor);

/// Two-term tilting complex over star(n, k) whose endomorphism ring has
/// Brauer tree `tree`. Stalks sit in `degree` (0 or 1).
ProjComplex realize(const BrauerTree& tree, int degree = 0, Scalar prime = kDefaultPrime);

}  // namespace brauer
