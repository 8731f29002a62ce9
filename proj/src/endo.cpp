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


#include "brauer/endo.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "brauer/error.hpp"
#include "brauer/star_tilting.hpp"

namespace brauer {

EndoAlgebra::EndoAlgebra(const ProjComplex& t) : field_(t.algebra().field()) {
  if (t.summands().empty()) throw InputError("complex has no labelled summands");
  for (std::size_t i = 0; i < t.summands().size(); ++i) {
    parts_.push_back(t.summand(i));
    labels_.push_back(t.summands()[i].label.text);
    if (!parts_.back().is_minimal()) throw PreconditionError("summand " + labels_.back() + " is not minimal");
  }
  const int n = size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) homs_.emplace_back(parts_[a], parts_[b], 0);

  const Algebra& alg = t.algebra();
  rad_.resize(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const auto& h = hom(a, b);
      auto& r = rad_[a * n + b];
      if (a != b) {
        for (int i = 0; i < h.dim(); ++i) {
          std::vector<Scalar> v(h.dim(), 0);
          v[i] = 1;
          r.push_back(std::move(v));
        }
        continue;
      }
      // Non-units of a local ring: maps with vanishing scalar part.
      std::vector<std::vector<Scalar>> cols;
      for (const auto& q : h.quotient_basis()) {
        std::vector<Scalar> flat;
        for (const auto& comp : h.components(q)) {
          Matrix s = scalar_part(alg, comp);
          for (std::size_t x = 0; x < s.rows(); ++x)
            for (std::size_t y = 0; y < s.cols(); ++y) flat.push_back(s(x, y));
        }
        cols.push_back(std::move(flat));
      }
      r = nullspace(field_, from_columns(cols.front().size(), cols));
      if (static_cast<int>(r.size()) != h.dim() - 1)
        throw PreconditionError("endomorphism ring of " + labels_[a] + " is not local with residue field K");
    }

  rad2_.assign(n * n, 0);
  arrows_.resize(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      SpanBuilder sq(field_, dim(a, b));
      for (int c = 0; c < n; ++c)
        for (const auto& x : radical(a, c))
          for (const auto& y : radical(c, b)) sq.insert(compose(a, c, b, x, y));
      rad2_[a * n + b] = static_cast<int>(sq.rank());
      for (const auto& x : radical(a, b))
        if (sq.insert(x)) arrows_[a * n + b].push_back(x);
    }
}

std::vector<Scalar> EndoAlgebra::compose(int a, int b, int c, const std::vector<Scalar>& x,
                                         const std::vector<Scalar>& y) const {
  auto lift = [&](const ChainMapSpace& h, const std::vector<Scalar>& q) {
    std::vector<Scalar> out(h.num_unknowns(), 0);
    for (std::size_t i = 0; i < q.size(); ++i)
      if (q[i])
        for (std::size_t u = 0; u < out.size(); ++u)
          out[u] = field_.add(out[u], field_.mul(q[i], h.quotient_basis()[i][u]));
    return out;
  };
  const auto& hab = hom(a, b);
  const auto& hbc = hom(b, c);
  const auto& hac = hom(a, c);
  if (hac.dim() == 0) return {};
  return hac.reduce(compose_chain_maps(hab, lift(hab, x), hbc, lift(hbc, y), hac));
}

std::vector<std::vector<int>> EndoAlgebra::cartan() const {
  std::vector<std::vector<int>> c(size(), std::vector<int>(size()));
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < size(); ++b) c[a][b] = dim(a, b);
  return c;
}

std::vector<std::vector<int>> endo_cartan(const ProjComplex& t) {
  if (!is_tilting(t)) throw PreconditionError("complex is not tilting");
  std::vector<std::vector<int>> c(t.summands().size(), std::vector<int>(t.summands().size()));
  std::vector<ProjComplex> parts;
  for (std::size_t i = 0; i < t.summands().size(); ++i) parts.push_back(t.summand(i));
  for (std::size_t a = 0; a < parts.size(); ++a)
    for (std::size_t b = 0; b < parts.size(); ++b) c[a][b] = hom_complex_dim(parts[a], parts[b], 0);
  return c;
}

namespace {

bool is_zero(const std::vector<Scalar>& v) {
  return std::all_of(v.begin(), v.end(), [](Scalar x) { return x == 0; });
}

struct Decoded {
  std::vector<ACycle> cycles;
  std::vector<int> leaf_ends;  // per summand
};

std::vector<std::set<int>> vertex_cliques(const std::vector<std::vector<int>>& c) {
  const int n = static_cast<int>(c.size());
  std::set<std::set<int>> found;
  for (int a = 0; a < n; ++a) {
    std::vector<std::set<int>> groups;
    for (int b = 0; b < n; ++b) {
      if (b == a || c[a][b] == 0) continue;
      auto it = std::find_if(groups.begin(), groups.end(), [&](const std::set<int>& g) { return c[*g.begin()][b] > 0; });
      if (it == groups.end())
        groups.push_back({b});
      else
        it->insert(b);
    }
    if (groups.size() > 2) throw InternalError("Cartan matrix does not come from a Brauer tree");
    for (auto g : groups) {
      g.insert(a);
      for (int x : g)
        for (int y : g)
          if (x != y && c[x][y] == 0) throw InternalError("Cartan matrix does not come from a Brauer tree");
      found.insert(g);
    }
  }
  return {found.begin(), found.end()};
}

std::vector<int> order_by_arrows(const EndoAlgebra& e, const std::set<int>& members) {
  std::vector<int> out{*members.begin()};
  while (out.size() < members.size()) {
    int cur = out.back();
    int next = -1;
    for (int t : members)
      if (t != cur && !e.arrows(cur, t).empty()) {
        if (next >= 0) throw InternalError("two arrows leave " + e.label(cur) + " inside one cycle");
        next = t;
      }
    if (next < 0 || std::find(out.begin(), out.end(), next) != out.end())
      throw InternalError("arrows do not close up into a cycle at " + e.label(cur));
    out.push_back(next);
  }
  int back = out.back();
  if (members.size() > 1 && e.arrows(back, out.front()).empty())
    throw InternalError("cycle does not return to " + e.label(out.front()));
  return out;
}

void check_witness(const EndoAlgebra& e, ACycle& cyc) {
  const int r = static_cast<int>(cyc.members.size());
  cyc.witness.clear();
  for (int t = 0; t < r; ++t) {
    int a = cyc.members[t], b = cyc.members[(t + 1) % r];
    const auto& arr = e.arrows(a, b);
    if (arr.empty()) {
      if (r == 1) return;  // a leaf without a loop carries no witness
      throw InternalError("missing arrow " + e.label(a) + " -> " + e.label(b));
    }
    if (arr.size() != 1) throw InternalError("multiple arrows " + e.label(a) + " -> " + e.label(b));
    cyc.witness.push_back(arr.front());
  }
  const int len = cyc.multiplicity * r;
  for (int start = 0; start < r; ++start) {
    int src = cyc.members[start];
    std::vector<Scalar> acc = cyc.witness[start];
    int at = cyc.members[(start + 1) % r];
    for (int step = 1; step <= len; ++step) {
      if (step == len && is_zero(acc))
        throw InternalError("composite of " + std::to_string(len) + " arrows from " + e.label(src) + " vanishes");
      int idx = (start + step) % r;
      int nxt = cyc.members[(idx + 1) % r];
      acc = e.compose(src, at, nxt, acc, cyc.witness[idx]);
      at = nxt;
    }
    if (!is_zero(acc)) throw InternalError("composite beyond the cycle bound from " + e.label(src) + " survives");
  }
  cyc.witness_checked = true;
}

Decoded decode(const EndoAlgebra& e) {
  const int n = e.size();
  const int k = e.multiplicity();
  auto c = e.cartan();
  auto cliques = vertex_cliques(c);
  Decoded d;
  d.leaf_ends.assign(n, 2);
  for (const auto& q : cliques) {
    ACycle cyc;
    cyc.members = order_by_arrows(e, q);
    for (int a : q)
      if (--d.leaf_ends[a] < 0) throw InternalError("summand " + e.label(a) + " lies on three cycles");
    d.cycles.push_back(std::move(cyc));
  }

  // Exceptional vertex.
  auto pick_set = [&](const std::set<int>& s) -> bool {
    if (s.size() >= 2) {
      for (auto& cyc : d.cycles)
        if (std::set<int>(cyc.members.begin(), cyc.members.end()) == s) {
          cyc.exceptional = true;
          return true;
        }
      return false;
    }
    if (s.size() == 1 && d.leaf_ends[*s.begin()] > 0) {
      ACycle cyc;
      cyc.members = {*s.begin()};
      cyc.exceptional = true;
      --d.leaf_ends[*s.begin()];
      d.cycles.push_back(std::move(cyc));
      return true;
    }
    return false;
  };
  bool placed = false;
  if (k >= 2) {
    std::set<int> heavy;
    for (int a = 0; a < n; ++a)
      if (c[a][a] == k + 1) heavy.insert(a);
    placed = pick_set(heavy);
    if (!placed) throw InternalError("no vertex fits the exceptional Cartan pattern");
  } else {
    std::set<int> stalks;
    for (int a = 0; a < n; ++a)
      if (e.is_stalk(a)) stalks.insert(a);
    placed = pick_set(stalks);
    if (!placed) {
      if (!d.cycles.empty())
        d.cycles.front().exceptional = true;
      else
        pick_set({0});
    }
  }

  for (auto& cyc : d.cycles) {
    cyc.multiplicity = cyc.exceptional ? k : 1;
    for (int a : cyc.members) cyc.labels.push_back(e.label(a));
    check_witness(e, cyc);
  }
  return d;
}

}  // namespace

std::vector<ACycle> a_cycle_partition(const EndoAlgebra& e) { return decode(e).cycles; }

std::vector<ACycle> a_cycle_partition(const ProjComplex& t) {
  if (!is_tilting(t)) throw PreconditionError("complex is not tilting");
  return a_cycle_partition(EndoAlgebra(t));
}

std::vector<std::vector<int>> star_cycle_prediction(const ProjComplex& t) {
  const Algebra& star = t.algebra();
  StarFrame frame(star);
  const int n = frame.n();
  // key: (-1, 0) for the stalk cycle, (d, simple) for a shared degree-d term.
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> groups;  // (offset, summand)
  for (std::size_t i = 0; i < t.summands().size(); ++i) {
    ProjComplex s = t.summand(i);
    const auto& lab = t.summands()[i].label;
    if (lab.kind == SummandLabel::Kind::Stalk) {
      if (s.term(lab.degree).size() != 1) throw PreconditionError("stalk summand must be one projective");
      int m = lab.simple;
      groups[{-1, 0}].push_back({frame.position_of(m), static_cast<int>(i)});
      groups[{lab.degree, m}].push_back({0, static_cast<int>(i)});
      continue;
    }
    if (s.lowest() != 0 || s.highest() != 1 || s.term(0).size() != 1 || s.term(1).size() != 1)
      throw PreconditionError("summand " + lab.text + " is not of the form P -> Q in degrees 0 and 1");
    int p0 = s.term(0).front(), p1 = s.term(1).front();
    auto off = [&](int from, int to) { return ((frame.position_of(to) - frame.position_of(from)) % n + n) % n; };
    groups[{0, p0}].push_back({off(p0, p1), static_cast<int>(i)});
    groups[{1, p1}].push_back({off(p1, p0), static_cast<int>(i)});
  }
  std::vector<std::vector<int>> out;
  for (auto& [key, g] : groups) {
    if (g.size() < 2) continue;
    std::sort(g.begin(), g.end());
    std::vector<int> cyc;
    for (auto [o, idx] : g) cyc.push_back(idx);
    std::rotate(cyc.begin(), std::min_element(cyc.begin(), cyc.end()), cyc.end());
    out.push_back(std::move(cyc));
  }
  std::sort(out.begin(), out.end());
  return out;
}

EndoTree endo_brauer_tree(const ProjComplex& t) {
  if (!is_tilting(t)) throw PreconditionError("complex is not tilting");
  EndoAlgebra e(t);
  Decoded d = decode(e);
  const int n = e.size();
  EndoTree out;
  out.cartan = e.cartan();
  BrauerTree& tree = out.tree;
  tree.multiplicity = e.multiplicity();
  std::vector<std::vector<int>> ends(n);
  int v = 0;
  for (const auto& cyc : d.cycles) {
    tree.vertices.push_back(v);
    for (int a : cyc.members) {
      ends[a].push_back(v);
      tree.cyclic_order[v].push_back(a + 1);
    }
    if (cyc.exceptional) tree.exceptional = v;
    ++v;
  }
  for (int a = 0; a < n; ++a)
    for (int l = 0; l < d.leaf_ends[a]; ++l) {
      tree.vertices.push_back(v);
      ends[a].push_back(v);
      tree.cyclic_order[v] = {a + 1};
      ++v;
    }
  for (int a = 0; a < n; ++a) {
    if (ends[a].size() != 2) throw InternalError("edge " + e.label(a) + " does not have two ends");
    tree.edges.push_back({a + 1, {ends[a][0], ends[a][1]}});
    out.edge_labels.push_back(e.label(a));
  }
  tree.validate();
  Algebra check = Algebra::from_tree(tree, e.field().prime());
  const auto& cc = check.cartan();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (cc[a][b] != out.cartan[a][b]) throw InternalError("decoded tree disagrees with the Cartan matrix of End(T)");
  out.cycles = std::move(d.cycles);
  return out;
}

std::string quiver_text(const EndoAlgebra& e, const std::vector<std::string>& names) {
  const int n = e.size();
  if (static_cast<int>(names.size()) != n) throw InputError("need one name per summand");
  auto arrows = [&](int a, int b) { return static_cast<int>(e.arrows(a, b).size()); };
  std::vector<std::vector<int>> nb(n);
  bool path = true;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int x = arrows(a, b);
      if (a == b) path = path && x == 0;
      else if (x > 0) {
        path = path && x == 1 && arrows(b, a) == 1;
        nb[a].push_back(b);
      }
    }
  int edges = 0;
  for (const auto& l : nb) {
    path = path && l.size() <= 2;
    edges += static_cast<int>(l.size());
  }
  path = path && n >= 2 && edges == 2 * (n - 1);
  if (path) {
    std::vector<std::string> renders;
    for (int s = 0; s < n; ++s) {
      if (nb[s].size() != 1) continue;
      std::string txt = names[s];
      int prev = s, cur = nb[s][0];
      int seen = 1;
      while (true) {
        txt += " ⇄ " + names[cur];
        ++seen;
        int nxt = -1;
        for (int x : nb[cur])
          if (x != prev) nxt = x;
        if (nxt < 0) break;
        prev = cur;
        cur = nxt;
      }
      if (seen == n) renders.push_back(txt);
    }
    if (!renders.empty()) return *std::max_element(renders.begin(), renders.end());
  }
  std::vector<std::string> parts;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (int x = arrows(a, b); x > 0)
        parts.push_back(names[a] + " -> " + names[b] + (x > 1 ? " x" + std::to_string(x) : ""));
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : ", ") + p;
  return out;
}

bool remark2_autoequivalence_check(const Covering& s, const Algebra& star) {
  ProjComplex t = covering_to_complex(s, star);
  return isomorphic(endo_brauer_tree(t).tree, star.tree());
}

}  // namespace brauer
