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


#include "brauer/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "brauer/error.hpp"

namespace brauer {

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw InputError("field " + (path.empty() ? std::string("/") : path) + ": " + what);
}

const Json& field(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) schema_error(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema_error(path + "/" + key, "missing");
  return *it;
}

int as_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) schema_error(path, "expected an integer");
  return j.get<int>();
}

std::vector<int> as_int_list(const Json& j, const std::string& path) {
  if (!j.is_array()) schema_error(path, "expected an array of integers");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_int(j[i], path + "/" + std::to_string(i)));
  return out;
}

int simple_of(const Algebra& alg, int edge, const std::string& path) {
  for (int s = 0; s < alg.num_simples(); ++s)
    if (alg.edge_id(s) == edge) return s;
  schema_error(path, "no edge with id " + std::to_string(edge));
}

}  // namespace

Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON");
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path);
}

BrauerTree tree_from_json(const Json& j) {
  if (!j.is_object()) schema_error("", "expected an object");
  if (j.contains("star")) {
    const Json& s = j["star"];
    return star_tree(as_int(field(s, "n", "/star"), "/star/n"), as_int(field(s, "k", "/star"), "/star/k"));
  }
  BrauerTree t;
  t.vertices = as_int_list(field(j, "vertices", ""), "/vertices");
  const Json& edges = field(j, "edges", "");
  if (!edges.is_array()) schema_error("/edges", "expected an array");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    std::string p = "/edges/" + std::to_string(i);
    TreeEdge e;
    e.id = as_int(field(edges[i], "id", p), p + "/id");
    auto ends = as_int_list(field(edges[i], "ends", p), p + "/ends");
    if (ends.size() != 2) schema_error(p + "/ends", "expected two vertices");
    e.ends[0] = ends[0];
    e.ends[1] = ends[1];
    t.edges.push_back(e);
  }
  const Json& co = field(j, "cyclic_order", "");
  if (!co.is_object()) schema_error("/cyclic_order", "expected an object keyed by vertex id");
  for (const auto& [key, val] : co.items()) {
    std::string p = "/cyclic_order/" + key;
    int v;
    try {
      std::size_t used = 0;
      v = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      schema_error(p, "key is not a vertex id");
    }
    t.cyclic_order[v] = as_int_list(val, p);
  }
  t.exceptional = as_int(field(j, "exceptional", ""), "/exceptional");
  t.multiplicity = j.contains("multiplicity") ? as_int(j["multiplicity"], "/multiplicity") : 1;
  t.validate();
  return t;
}

Json tree_to_json(const BrauerTree& t) {
  Json j;
  j["vertices"] = t.vertices;
  j["edges"] = Json::array();
  for (const auto& e : t.edges) j["edges"].push_back({{"id", e.id}, {"ends", {e.ends[0], e.ends[1]}}});
  j["cyclic_order"] = Json::object();
  for (const auto& [v, order] : t.cyclic_order) j["cyclic_order"][std::to_string(v)] = order;
  j["exceptional"] = t.exceptional;
  j["multiplicity"] = t.multiplicity;
  return j;
}

IndecomposableEntry module_from_json(const Algebra& alg, const Json& j) {
  if (!j.is_object()) schema_error("", "expected a module literal");
  if (j.contains("uniserial")) {
    const Json& u = j["uniserial"];
    UniserialSpec spec{simple_of(alg, as_int(field(u, "top", "/uniserial"), "/uniserial/top"), "/uniserial/top"),
                       as_int(field(u, "len", "/uniserial"), "/uniserial/len")};
    return IndecomposableEntry{uniserial(alg, spec), spec.length == alg.projective_dim(spec.top), spec, std::nullopt};
  }
  if (j.contains("string")) {
    const Json& s = j["string"];
    auto walk = as_int_list(field(s, "walk", "/string"), "/string/walk");
    int start;
    if (s.contains("start")) {
      start = simple_of(alg, as_int(s["start"], "/string/start"), "/string/start");
    } else {
      if (walk.empty()) schema_error("/string/start", "required for the empty walk");
      int letter = walk.front();
      if (letter == 0 || std::abs(letter) > static_cast<int>(alg.arrows().size()))
        schema_error("/string/walk/0", "not a signed arrow id");
      std::size_t a = alg.arrows()[std::abs(letter) - 1];
      start = letter > 0 ? alg.source(a) : alg.target(a);
    }
    return IndecomposableEntry{string_module(alg, start, walk), false, std::nullopt, std::make_pair(start, walk)};
  }
  schema_error("", "expected \"uniserial\" or \"string\"");
}

ProjComplex complex_from_json(const Algebra& alg, const Json& j) {
  const Json& list = field(j, "summands", "");
  if (!list.is_array() || list.empty()) schema_error("/summands", "expected a nonempty array");
  std::vector<ProjComplex> parts;
  for (std::size_t i = 0; i < list.size(); ++i) {
    std::string p = "/summands/" + std::to_string(i);
    const Json& s = list[i];
    if (!s.is_object()) schema_error(p, "expected an object");
    if (s.contains("stalk")) {
      const Json& st = s["stalk"];
      int simple = simple_of(alg, as_int(field(st, "edge", p + "/stalk"), p + "/stalk/edge"), p + "/stalk/edge");
      int deg = st.contains("degree") ? as_int(st["degree"], p + "/stalk/degree") : 0;
      parts.push_back(stalk(alg, simple, deg));
    } else if (s.contains("pres")) {
      int deg = s.contains("degree") ? as_int(s["degree"], p + "/degree") : 0;
      auto load = [&]() {
        try {
          return module_from_json(alg, s["pres"]);
        } catch (const InputError& e) {
          throw InputError(p + "/pres: " + e.what());
        }
      };
      IndecomposableEntry m = load();
      if (m.projective) schema_error(p + "/pres", "module is projective");
      if (m.uniserial)
        parts.push_back(uniserial_presentation(alg, *m.uniserial, deg));
      else
        parts.push_back(presentation_of(m, deg));
    } else {
      schema_error(p, "expected \"stalk\" or \"pres\"");
    }
  }
  return direct_sum(parts);
}

Json complex_to_json(const ProjComplex& t) {
  const Algebra& alg = t.algebra();
  Json j;
  j["lowest"] = t.lowest();
  j["terms"] = Json::array();
  for (int d = t.lowest(); d <= t.highest() && !t.empty(); ++d) {
    Json term = Json::array();
    for (int s : t.term(d)) term.push_back(alg.edge_id(s));
    j["terms"].push_back(term);
  }
  j["summands"] = Json::array();
  for (const auto& s : t.summands()) {
    const auto& l = s.label;
    Json e;
    e["label"] = l.text;
    if (l.kind == SummandLabel::Kind::Stalk) {
      e["stalk"] = {{"edge", alg.edge_id(l.simple)}, {"degree", l.degree}};
    } else if (l.uniserial) {
      e["pres"] = {{"uniserial", {{"top", alg.edge_id(l.uniserial->top)}, {"len", l.uniserial->length}}}};
      e["degree"] = l.degree;
    } else if (l.walk) {
      e["pres"] = {{"string", {{"start", alg.edge_id(l.walk->first)}, {"walk", l.walk->second}}}};
      e["degree"] = l.degree;
    }
    j["summands"].push_back(e);
  }
  return j;
}

Covering covering_from_json(const Algebra& star, const Json& j) {
  StarFrame frame(star);
  auto interval = [&](const Json& x, const std::string& p) {
    if (!x.is_object()) schema_error(p, "expected an interval object");
    try {
      if (x.contains("tuple")) return interval_from_tuple(frame, as_int_list(x["tuple"], p + "/tuple"));
      int start = frame.position_of_edge(as_int(field(x, "start", p), p + "/start"));
      return CyclicInterval{start, as_int(field(x, "size", p), p + "/size")};
    } catch (const InputError& e) {
      std::string msg = e.what();
      if (msg.rfind("field ", 0) == 0) throw;
      schema_error(p, msg);
    }
  };
  Covering c;
  c.n = frame.n();
  const Json& outer = field(j, "outer", "");
  if (!outer.is_array() || outer.empty()) schema_error("/outer", "expected a nonempty array");
  for (std::size_t i = 0; i < outer.size(); ++i) c.outer.push_back(interval(outer[i], "/outer/" + std::to_string(i)));
  c.inner.assign(c.outer.size(), {});
  if (j.contains("inner")) {
    const Json& in = j["inner"];
    auto load = [&](std::size_t idx, const Json& list, const std::string& p) {
      if (idx >= c.outer.size()) schema_error(p, "no outer interval with this index");
      if (!list.is_array()) schema_error(p, "expected an array");
      for (std::size_t q = 0; q < list.size(); ++q) c.inner[idx].push_back(interval(list[q], p + "/" + std::to_string(q)));
    };
    if (in.is_array()) {
      for (std::size_t i = 0; i < in.size(); ++i) load(i, in[i], "/inner/" + std::to_string(i));
    } else if (in.is_object()) {
      for (const auto& [key, val] : in.items()) {
        std::size_t idx;
        try {
          std::size_t used = 0;
          idx = std::stoul(key, &used);
          if (used != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
          schema_error("/inner/" + key, "key is not an outer index");
        }
        load(idx, val, "/inner/" + key);
      }
    } else {
      schema_error("/inner", "expected an object or an array");
    }
  }
  const Json& mode = field(j, "mode", "");
  if (mode == "deg0")
    c.mode = CoveringMode::Deg0;
  else if (mode == "deg1")
    c.mode = CoveringMode::Deg1;
  else
    schema_error("/mode", "expected \"deg0\" or \"deg1\"");
  c.normalize();
  c.validate();
  return c;
}

Json covering_to_json(const Algebra& star, const Covering& c) {
  StarFrame frame(star);
  auto iv = [&](const CyclicInterval& x) {
    return Json{{"start", frame.edge_at(x.start)}, {"size", x.size}};
  };
  Json j;
  j["outer"] = Json::array();
  j["inner"] = Json::object();
  for (std::size_t i = 0; i < c.outer.size(); ++i) {
    j["outer"].push_back(iv(c.outer[i]));
    if (c.inner[i].empty()) continue;
    Json list = Json::array();
    for (const auto& x : c.inner[i]) list.push_back(iv(x));
    j["inner"][std::to_string(i)] = list;
  }
  j["mode"] = c.mode == CoveringMode::Deg0 ? "deg0" : "deg1";
  return j;
}

std::string tree_to_dot(const BrauerTree& t, const std::vector<std::string>& edge_labels) {
  std::ostringstream os;
  os << "graph brauer_tree {\n  node [shape=circle, label=\"\", width=0.25];\n";
  for (int v : t.vertices) {
    os << "  v" << v;
    if (v == t.exceptional) os << " [shape=doublecircle" << (t.multiplicity > 1 ? ", xlabel=\"" + std::to_string(t.multiplicity) + "\"" : "") << "]";
    os << ";\n";
  }
  for (std::size_t i = 0; i < t.edges.size(); ++i) {
    const auto& e = t.edges[i];
    std::string label = i < edge_labels.size() ? edge_labels[i] : std::to_string(e.id);
    os << "  v" << e.ends[0] << " -- v" << e.ends[1] << " [label=\"" << label << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

Json endo_tree_to_json(const EndoTree& r) {
  Json j;
  j["tree"] = tree_to_json(r.tree);
  j["edge_labels"] = Json::object();
  for (std::size_t i = 0; i < r.edge_labels.size(); ++i) j["edge_labels"][std::to_string(r.tree.edges[i].id)] = r.edge_labels[i];
  j["cycles"] = Json::array();
  for (const auto& c : r.cycles)
    j["cycles"].push_back({{"members", c.labels},
                           {"exceptional", c.exceptional},
                           {"multiplicity", c.multiplicity},
                           {"witness_checked", c.witness_checked}});
  j["cartan"] = r.cartan;
  return j;
}

}  // namespace brauer
