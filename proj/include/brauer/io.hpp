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

#include <string>
#include <vector>

#include <json.hpp>

#include "brauer/complex.hpp"
#include "brauer/endo.hpp"
#include "brauer/representation.hpp"
#include "brauer/star_tilting.hpp"
#include "brauer/tree.hpp"

namespace brauer {

using Json = nlohmann::json;

/// Parses JSON text; syntax errors become InputError with line and column.
Json parse_json_text(const std::string& text, const std::string& source = "input");
Json read_json_file(const std::string& path);

/// BrauerTree schema or the {"star":{"n":..,"k":..}} shorthand.
BrauerTree tree_from_json(const Json& j);
Json tree_to_json(const BrauerTree& t);

/// {"uniserial":{"top":edge,"len":l}} or {"string":{"start":edge,"walk":[..]}}.
IndecomposableEntry module_from_json(const Algebra& alg, const Json& j);

/// {"summands":[{"pres":<module>,"degree":d} | {"stalk":{"edge":i,"degree":d}}]}.
ProjComplex complex_from_json(const Algebra& alg, const Json& j);
Json complex_to_json(const ProjComplex& t);

/// Covering schema; "start" is an edge id, or {"tuple":[edges]} in
/// descending form. "inner" is keyed by outer index or aligned as a list.
Covering covering_from_json(const Algebra& star, const Json& j);
Json covering_to_json(const Algebra& star, const Covering& c);

std::string tree_to_dot(const BrauerTree& t, const std::vector<std::string>& edge_labels = {});
Json endo_tree_to_json(const EndoTree& r);

}  // namespace brauer
