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


#include "brauer/star_tilting.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "brauer/error.hpp"

namespace brauer {

StarFrame::StarFrame(const Algebra& star) : order_(star.star_order()) {
  pos_of_simple_.assign(order_.size(), -1);
  for (std::size_t p = 0; p < order_.size(); ++p) {
    pos_of_simple_[order_[p]] = static_cast<int>(p);
    edges_.push_back(star.edge_id(order_[p]));
  }
}

int StarFrame::position_of_edge(int edge_id) const {
  auto it = std::find(edges_.begin(), edges_.end(), edge_id);
  if (it == edges_.end()) throw InputError("edge " + std::to_string(edge_id) + " is not an edge of the star");
  return static_cast<int>(it - edges_.begin());
}

std::vector<int> CyclicInterval::positions(int n) const {
  std::vector<int> out;
  for (int t = 0; t < size; ++t) out.push_back((start + t) % n);
  return out;
}

bool Covering::is_trivial() const {
  return std::all_of(outer.begin(), outer.end(), [](const CyclicInterval& iv) { return iv.size == 1; });
}

void Covering::validate() const {
  if (n < 1) throw InputError("covering needs n >= 1");
  if (outer.empty()) throw InputError("covering has no outer intervals");
  if (inner.size() != outer.size()) throw InputError("inner families must align with outer intervals");
  std::vector<int> hit(n, 0);
  for (const auto& o : outer) {
    if (o.start < 0 || o.start >= n || o.size < 1 || o.size > n)
      throw InputError("outer interval out of range");
    for (int p : o.positions(n)) ++hit[p];
  }
  for (int p = 0; p < n; ++p)
    if (hit[p] != 1) throw InputError("outer intervals do not partition the vertices (vertex " + std::to_string(p + 1) + ")");
  for (std::size_t k = 0; k < outer.size(); ++k) {
    const auto& o = outer[k];
    const auto& fam = inner[k];
    int want = std::max(0, o.size - 2);
    if (static_cast<int>(fam.size()) != want)
      throw InputError("outer interval of size " + std::to_string(o.size) + " needs " + std::to_string(want) +
                       " inner intervals");
    std::vector<std::pair<int, int>> ranges;
    for (const auto& iv : fam) {
      if (iv.start < 0 || iv.start >= n) throw InputError("inner interval out of range");
      if (iv.size < 2) throw InputError("inner intervals need at least two vertices");
      if (iv.size >= o.size) throw InputError("inner interval must be a proper part of its outer interval");
      int off = ((iv.start - o.start) % n + n) % n;
      if (off + iv.size > o.size) throw InputError("inner interval leaves its outer interval");
      ranges.emplace_back(off, off + iv.size);
    }
    for (std::size_t a = 0; a < ranges.size(); ++a)
      for (std::size_t b = a + 1; b < ranges.size(); ++b) {
        auto [s1, e1] = ranges[a];
        auto [s2, e2] = ranges[b];
        if (ranges[a] == ranges[b]) throw InputError("repeated inner interval");
        bool disjoint = e1 <= s2 || e2 <= s1;
        bool nested = (s1 <= s2 && e2 <= e1) || (s2 <= s1 && e1 <= e2);
        if (!disjoint && !nested) throw InputError("inner intervals cross");
      }
  }
}

void Covering::normalize() {
  std::vector<std::size_t> idx(outer.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return outer[a] < outer[b]; });
  std::vector<CyclicInterval> o;
  std::vector<std::vector<CyclicInterval>> in;
  for (std::size_t i : idx) {
    o.push_back(outer[i]);
    auto fam = i < inner.size() ? inner[i] : std::vector<CyclicInterval>{};
    std::sort(fam.begin(), fam.end());
    in.push_back(std::move(fam));
  }
  outer = std::move(o);
  inner = std::move(in);
}

std::string Covering::key() const {
  std::ostringstream os;
  os << (mode == CoveringMode::Deg0 ? "deg0" : "deg1");
  for (std::size_t k = 0; k < outer.size(); ++k) {
    os << " (" << outer[k].start + 1 << "+" << outer[k].size;
    for (const auto& iv : inner[k]) os << " " << iv.start + 1 << "+" << iv.size;
    os << ")";
  }
  return os.str();
}

std::vector<CyclicInterval> Covering::all_intervals() const {
  std::vector<CyclicInterval> out;
  for (std::size_t k = 0; k < outer.size(); ++k) {
    const auto& o = outer[k];
    out.push_back(o);
    if (o.size > 1) {
      out.insert(out.end(), inner[k].begin(), inner[k].end());
      out.push_back({mode == CoveringMode::Deg0 ? o.start : o.last(n), 1});
    }
  }
  return out;
}

Covering trivial_covering(int n, CoveringMode mode) {
  Covering c;
  c.n = n;
  c.mode = mode;
  for (int p = 0; p < n; ++p) {
    c.outer.push_back({p, 1});
    c.inner.emplace_back();
  }
  return c;
}

namespace {

// Families of r - 2 distinct proper sub-ranges of [0, r), each of length at
// least 2, pairwise nested or disjoint. Ranges are (offset, size).
std::vector<std::vector<std::pair<int, int>>> inner_families(int r) {
  std::vector<std::vector<std::pair<int, int>>> out;
  if (r <= 2) {
    out.emplace_back();
    return out;
  }
  std::vector<std::pair<int, int>> cand;
  for (int size = 2; size < r; ++size)
    for (int off = 0; off + size <= r; ++off) cand.emplace_back(off, size);
  auto laminar = [](std::pair<int, int> a, std::pair<int, int> b) {
    int s1 = a.first, e1 = a.first + a.second, s2 = b.first, e2 = b.first + b.second;
    return e1 <= s2 || e2 <= s1 || (s1 <= s2 && e2 <= e1) || (s2 <= s1 && e1 <= e2);
  };
  std::vector<std::pair<int, int>> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (static_cast<int>(cur.size()) == r - 2) {
      out.push_back(cur);
      return;
    }
    for (std::size_t c = from; c < cand.size(); ++c) {
      if (!std::all_of(cur.begin(), cur.end(), [&](auto x) { return laminar(x, cand[c]); })) continue;
      cur.push_back(cand[c]);
      rec(c + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

}  // namespace

std::vector<Covering> enumerate_coverings(int n) {
  if (n < 1) throw InputError("covering needs n >= 1");
  std::map<int, std::vector<std::vector<std::pair<int, int>>>> families;
  std::vector<Covering> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> starts;
    for (int p = 0; p < n; ++p)
      if (mask & (1u << p)) starts.push_back(p);
    std::vector<CyclicInterval> outer;
    for (std::size_t s = 0; s < starts.size(); ++s) {
      int next = s + 1 < starts.size() ? starts[s + 1] : starts[0] + n;
      outer.push_back({starts[s], next - starts[s]});
    }
    bool trivial = std::all_of(outer.begin(), outer.end(), [](const CyclicInterval& iv) { return iv.size == 1; });
    if (trivial) continue;
    for (const auto& o : outer)
      if (!families.count(o.size)) families[o.size] = inner_families(o.size);
    std::vector<std::vector<CyclicInterval>> chosen(outer.size());
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
      if (k == outer.size()) {
        for (CoveringMode mode : {CoveringMode::Deg0, CoveringMode::Deg1}) {
          Covering c{n, outer, chosen, mode};
          c.normalize();
          out.push_back(std::move(c));
        }
        return;
      }
      for (const auto& fam : families[outer[k].size]) {
        chosen[k].clear();
        for (auto [off, size] : fam) chosen[k].push_back({(outer[k].start + off) % n, size});
        rec(k + 1);
      }
    };
    rec(0);
  }
  std::sort(out.begin(), out.end(), [](const Covering& a, const Covering& b) { return a.key() < b.key(); });
  return out;
}

UniserialSpec interval_module(const StarFrame& frame, const CyclicInterval& iv) {
  if (iv.size < 2) throw InputError("singleton intervals give stalks, not presentations");
  return UniserialSpec{frame.simple_at(iv.last(frame.n())), iv.size - 1};
}

ProjComplex covering_to_complex(const Covering& s, const Algebra& star) {
  StarFrame frame(star);
  if (s.n != frame.n()) throw InputError("covering size does not match the star");
  s.validate();
  if (s.is_trivial()) return regular_complex(star, s.mode == CoveringMode::Deg0 ? 0 : 1);
  const int deg = s.mode == CoveringMode::Deg0 ? 0 : 1;
  std::vector<ProjComplex> parts;
  for (const auto& iv : s.all_intervals()) {
    if (iv.size == 1)
      parts.push_back(stalk(star, frame.simple_at(iv.start), deg));
    else
      parts.push_back(uniserial_presentation(star, interval_module(frame, iv)));
  }
  return direct_sum(parts);
}

CyclicInterval interval_from_tuple(const StarFrame& frame, const std::vector<int>& edges) {
  if (edges.empty() || static_cast<int>(edges.size()) > frame.n()) throw InputError("interval tuple has bad length");
  std::vector<int> pos;
  for (int e : edges) pos.push_back(frame.position_of_edge(e));
  for (std::size_t t = 1; t < pos.size(); ++t)
    if (pos[t] != frame.pred(pos[t - 1]))
      throw InputError("interval tuple is not a descending run at entry " + std::to_string(t + 1));
  return CyclicInterval{pos.back(), static_cast<int>(pos.size())};
}

std::vector<int> interval_tuple(const StarFrame& frame, const CyclicInterval& iv) {
  std::vector<int> out;
  for (int t = iv.size - 1; t >= 0; --t) out.push_back(frame.edge_at(iv.start + t));
  return out;
}

namespace {

// Positions {i, i-1, ..., j-1} of a uniserial with top i and socle j, as an
// ascending interval starting at j-1.
CyclicInterval support(const Algebra& star, const StarFrame& frame, const UniserialSpec& m) {
  if (m.length >= star.num_simples()) throw InputError("compatibility is defined for modules of length < n");
  auto f = uniserial_factors(star, m);
  return CyclicInterval{frame.pred(frame.position_of(f.back())), m.length + 1};
}

bool inside(const CyclicInterval& a, const CyclicInterval& b, int n) {
  int off = ((a.start - b.start) % n + n) % n;
  return off + a.size <= b.size;
}

}  // namespace

bool compatible_pres(const Algebra& star, const UniserialSpec& m1, const UniserialSpec& m2) {
  StarFrame frame(star);
  const int n = frame.n();
  auto a = support(star, frame, m1);
  auto b = support(star, frame, m2);
  auto pa = a.positions(n);
  bool disjoint = std::none_of(pa.begin(), pa.end(), [&](int x) { return b.contains(x, n); });
  return disjoint || inside(a, b, n) || inside(b, a, n);
}

bool compatible_stalk(const Algebra& star, const UniserialSpec& m, int simple, int degree) {
  if (m.length >= star.num_simples()) throw PreconditionError("compatibility is defined for modules of length < n");
  if (degree != 0 && degree != 1) throw InputError("stalk degree must be 0 or 1");
  StarFrame frame(star);
  auto f = uniserial_factors(star, m);
  for (int x : f) {
    int y = degree == 0 ? x : frame.simple_at(frame.pred(frame.position_of(x)));
    if (y == simple) return false;
  }
  return true;
}

std::string complex_key(const ProjComplex& t) {
  std::vector<std::string> parts;
  for (const auto& s : t.summands()) parts.push_back(s.label.text);
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "; ") + p;
  return out;
}

BruteForceResult enumerate_two_term_tilting_bruteforce(const Algebra& star, int max_n, int max_k) {
  const int n = star.num_simples();
  if (n > max_n || star.multiplicity() > max_k)
    throw PreconditionError("brute-force budget: need n <= " + std::to_string(max_n) + " and k <= " +
                            std::to_string(max_k));
  StarFrame frame(star);
  std::vector<ProjComplex> catalog;
  for (int p = 0; p < n; ++p)
    for (int l = 1; l < n; ++l) catalog.push_back(uniserial_presentation(star, {frame.simple_at(p), l}));
  for (int deg : {0, 1})
    for (int p = 0; p < n; ++p) catalog.push_back(stalk(star, frame.simple_at(p), deg));
  const std::size_t m = catalog.size();
  std::vector<std::vector<char>> ok(m, std::vector<char>(m, 0));
  for (std::size_t x = 0; x < m; ++x) {
    ok[x][x] = is_partial_tilting(catalog[x]);
    for (std::size_t y = x + 1; y < m; ++y) {
      bool orth = true;
      for (int s : {-1, 1}) {
        orth = orth && hom_complex_dim(catalog[x], catalog[y], s) == 0 && hom_complex_dim(catalog[y], catalog[x], s) == 0;
        if (!orth) break;
      }
      ok[x][y] = ok[y][x] = orth;
    }
  }
  BruteForceResult res;
  res.catalog_size = m;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (static_cast<int>(cur.size()) == n) {
      ++res.cliques;
      std::vector<ProjComplex> parts;
      for (auto i : cur) parts.push_back(catalog[i]);
      ProjComplex t = direct_sum(parts);
      if (is_tilting(t)) res.complexes.push_back(std::move(t));
      return;
    }
    for (std::size_t c = from; c < m; ++c) {
      if (!ok[c][c]) continue;
      if (!std::all_of(cur.begin(), cur.end(), [&](std::size_t x) { return ok[x][c]; })) continue;
      cur.push_back(c);
      rec(c + 1);
      cur.pop_back();
    }
  };
  rec(0);
  std::sort(res.complexes.begin(), res.complexes.end(),
            [](const ProjComplex& a, const ProjComplex& b) { return complex_key(a) < complex_key(b); });
  return res;
}

}  // namespace brauer
