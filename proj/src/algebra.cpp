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


#include "brauer/algebra.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "brauer/error.hpp"

namespace brauer {

std::string PathClass::to_string() const {
  switch (kind) {
    case PathKind::Idempotent:
      return "e" + std::to_string(start_edge);
    case PathKind::Socle:
      return "z" + std::to_string(start_edge);
    case PathKind::Proper:
      return "p[v" + std::to_string(winding_vertex) + ":" + std::to_string(start_edge) + "->" +
             std::to_string(end_edge) + ",len " + std::to_string(length) + "]";
  }
  return "?";
}

Algebra Algebra::from_tree(const BrauerTree& tree, Scalar prime) {
  tree.validate();
  auto impl = std::make_shared<Impl>();
  impl->tree = tree;
  impl->field = PrimeField(prime);
  const int n = static_cast<int>(tree.edges.size());
  impl->n = n;
  auto sidx = [&](int edge_id) { return static_cast<int>(tree.edge_index(edge_id)); };

  auto& basis = impl->basis;
  auto& source = impl->source;
  auto& target = impl->target;
  auto push = [&](PathClass p) {
    basis.push_back(p);
    source.push_back(sidx(p.start_edge));
    target.push_back(sidx(p.end_edge));
    return basis.size() - 1;
  };

  impl->idempotents.resize(n);
  impl->socles.resize(n);
  for (int i = 0; i < n; ++i) {
    int id = tree.edges[i].id;
    impl->idempotents[i] = push({PathKind::Idempotent, -1, id, id, 0});
  }
  // Proper paths keyed by (vertex, start simple, length).
  std::map<std::tuple<int, int, int>, std::size_t> proper;
  for (int v : tree.vertices) {
    const auto& order = tree.cyclic_order.at(v);
    const int d = static_cast<int>(order.size());
    const int winding = tree.vertex_multiplicity(v) * d;
    for (int t = 0; t < d; ++t) {
      for (int len = 1; len < winding; ++len) {
        PathClass p{PathKind::Proper, v, order[t], order[(t + len) % d], len};
        proper[{v, sidx(order[t]), len}] = push(p);
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    const auto& e = tree.edges[i];
    int len = std::max(tree.vertex_multiplicity(e.ends[0]) * tree.degree(e.ends[0]),
                       tree.vertex_multiplicity(e.ends[1]) * tree.degree(e.ends[1]));
    impl->socles[i] = push({PathKind::Socle, -1, e.id, e.id, len});
  }

  const std::size_t dim = basis.size();
  impl->table.assign(dim * dim, -1);
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = 0; b < dim; ++b) {
      if (target[a] != source[b]) continue;
      const auto& p = basis[a];
      const auto& q = basis[b];
      int result = -1;
      if (p.kind == PathKind::Idempotent) {
        result = static_cast<int>(b);
      } else if (q.kind == PathKind::Idempotent) {
        result = static_cast<int>(a);
      } else if (p.kind == PathKind::Proper && q.kind == PathKind::Proper && p.winding_vertex == q.winding_vertex) {
        int v = p.winding_vertex;
        int winding = tree.vertex_multiplicity(v) * tree.degree(v);
        int total = p.length + q.length;
        if (total < winding) {
          result = static_cast<int>(proper.at({v, source[a], total}));
        } else if (total == winding) {
          result = static_cast<int>(impl->socles[source[a]]);
        }
      }
      impl->table[a * dim + b] = result;
    }
  }

  // Arrows: length-one windings, plus z_i when neither end of edge i winds
  // (only the single edge with k = 1, where A = K[x]/x^2).
  for (std::size_t a = 0; a < dim; ++a)
    if (basis[a].kind == PathKind::Proper && basis[a].length == 1) impl->arrows.push_back(a);
  std::vector<int> socle_is_arrow(n, 0);
  for (int i = 0; i < n; ++i) {
    const auto& e = tree.edges[i];
    bool winds = false;
    for (int v : e.ends) winds |= tree.vertex_multiplicity(v) * tree.degree(v) >= 2;
    if (!winds) {
      socle_is_arrow[i] = 1;
      impl->arrows.push_back(impl->socles[i]);
    }
  }
  std::map<std::size_t, std::size_t> arrow_pos;
  for (std::size_t k = 0; k < impl->arrows.size(); ++k) arrow_pos[impl->arrows[k]] = k;
  auto winding_word = [&](int v, int start_simple, int len) {
    std::vector<std::size_t> w;
    const auto& order = tree.cyclic_order.at(v);
    const int d = static_cast<int>(order.size());
    int t = static_cast<int>(std::find(order.begin(), order.end(), tree.edges[start_simple].id) - order.begin());
    for (int s = 0; s < len; ++s) w.push_back(arrow_pos.at(proper.at({v, sidx(order[(t + s) % d]), 1})));
    return w;
  };
  impl->words.resize(dim);
  for (std::size_t a = 0; a < dim; ++a) {
    const auto& p = basis[a];
    if (p.kind == PathKind::Proper) {
      impl->words[a] = winding_word(p.winding_vertex, source[a], p.length);
    } else if (p.kind == PathKind::Socle) {
      int i = source[a];
      if (socle_is_arrow[i]) {
        impl->words[a] = {arrow_pos.at(a)};
      } else {
        const auto& e = tree.edges[i];
        int v = tree.vertex_multiplicity(e.ends[0]) * tree.degree(e.ends[0]) >= 2 ? e.ends[0] : e.ends[1];
        impl->words[a] = winding_word(v, i, tree.vertex_multiplicity(v) * tree.degree(v));
      }
    }
  }

  impl->blocks.assign(n * n, {});
  impl->block_pos.assign(dim, 0);
  for (std::size_t a = 0; a < dim; ++a) {
    auto& blk = impl->blocks[source[a] * n + target[a]];
    impl->block_pos[a] = blk.size();
    blk.push_back(a);
  }
  impl->cartan.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) impl->cartan[i][j] = static_cast<int>(impl->blocks[j * n + i].size());

  impl->is_star = tree.degree(tree.exceptional) == n;
  if (impl->is_star)
    for (int id : tree.cyclic_order.at(tree.exceptional)) impl->star_order.push_back(sidx(id));

  Algebra alg(impl);
  if (n <= 5 && !alg.check_associative()) throw InternalError("multiplication table is not associative");
  return alg;
}

Algebra Algebra::star(int n, int k, Scalar prime) { return from_tree(star_tree(n, k), prime); }

int Algebra::simple_of_edge(int edge_id) const { return static_cast<int>(impl_->tree.edge_index(edge_id)); }

std::optional<std::size_t> Algebra::index_of(const PathClass& p) const {
  for (std::size_t i = 0; i < impl_->basis.size(); ++i)
    if (impl_->basis[i] == p) return i;
  return std::nullopt;
}

int Algebra::projective_dim(int simple) const {
  int s = 0;
  for (int j = 0; j < impl_->n; ++j) s += impl_->cartan[j][simple];
  return s;
}

const std::vector<int>& Algebra::star_order() const {
  if (!impl_->is_star) throw PreconditionError("algebra is not a Brauer star algebra");
  return impl_->star_order;
}

std::optional<PathClass> Algebra::compose(const PathClass& p, const PathClass& q) const {
  auto a = index_of(p);
  auto b = index_of(q);
  if (!a || !b) throw InputError("path class does not belong to this algebra");
  auto r = product(*a, *b);
  if (!r) return std::nullopt;
  return basis(*r);
}

std::vector<PathClass> Algebra::hom_proj_basis(int i, int j) const {
  if (i < 0 || j < 0 || i >= impl_->n || j >= impl_->n) throw InputError("simple index out of range");
  std::vector<PathClass> out;
  for (auto idx : block(i, j)) out.push_back(basis(idx));
  return out;
}

AlgElem Algebra::multiply(const AlgElem& a, const AlgElem& b) const {
  const auto& f = impl_->field;
  std::map<std::size_t, Scalar> acc;
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b)
      if (auto r = product(x, y)) {
        Scalar& s = acc[*r];
        s = f.add(s, f.mul(cx, cy));
      }
  AlgElem out;
  for (const auto& [k, v] : acc)
    if (v) out.emplace_back(k, v);
  return out;
}

AlgElem Algebra::add(const AlgElem& a, const AlgElem& b) const {
  const auto& f = impl_->field;
  AlgElem out;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      Scalar s = f.add(a[i].second, b[j].second);
      if (s) out.emplace_back(a[i].first, s);
      ++i;
      ++j;
    }
  }
  return out;
}

AlgElem Algebra::scale(const AlgElem& a, Scalar s) const {
  AlgElem out;
  if (!s) return out;
  for (const auto& [k, v] : a) out.emplace_back(k, impl_->field.mul(v, s));
  return out;
}

bool Algebra::check_associative() const {
  const std::size_t dim = impl_->basis.size();
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b) {
      auto ab = product(a, b);
      for (std::size_t c = 0; c < dim; ++c) {
        std::optional<std::size_t> left, right;
        if (ab) left = product(*ab, c);
        if (auto bc = product(b, c)) right = product(a, *bc);
        if (left != right) return false;
      }
    }
  return true;
}

}  // namespace brauer
