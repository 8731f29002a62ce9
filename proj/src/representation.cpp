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


#include "brauer/representation.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include "brauer/error.hpp"

namespace brauer {

Representation::Representation(Algebra alg, std::vector<int> dims, std::vector<Matrix> arrow_action, std::string name,
                               bool check)
    : alg_(std::move(alg)), dims_(std::move(dims)), arrows_(std::move(arrow_action)), name_(std::move(name)) {
  const auto& arrows = alg_.arrows();
  if (static_cast<int>(dims_.size()) != alg_.num_simples()) throw InputError("dimension vector has wrong length");
  for (int d : dims_)
    if (d < 0) throw InputError("negative dimension in dimension vector");
  if (arrows_.size() != arrows.size()) throw InputError("need one matrix per arrow");
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    int s = alg_.source(arrows[k]), t = alg_.target(arrows[k]);
    if (arrows_[k].rows() != static_cast<std::size_t>(dims_[s]) || arrows_[k].cols() != static_cast<std::size_t>(dims_[t]))
      throw InputError("arrow matrix " + std::to_string(k + 1) + " has the wrong shape");
  }
  const auto& f = alg_.field();
  actions_.resize(alg_.dim());
  for (std::size_t idx = 0; idx < alg_.dim(); ++idx) {
    int s = alg_.source(idx), t = alg_.target(idx);
    if (alg_.basis(idx).kind == PathKind::Idempotent) {
      actions_[idx] = Matrix::identity(dims_[s]);
      continue;
    }
    const auto& word = alg_.arrow_word(idx);
    Matrix acc = arrows_[word.front()];
    for (std::size_t w = 1; w < word.size(); ++w) acc = multiply(f, acc, arrows_[word[w]]);
    if (acc.rows() != static_cast<std::size_t>(dims_[s]) || acc.cols() != static_cast<std::size_t>(dims_[t]))
      throw InternalError("arrow word has inconsistent endpoints");
    actions_[idx] = std::move(acc);
  }
  if (check && !satisfies_relations()) throw InputError("representation does not satisfy the algebra relations");
}

int Representation::total_dim() const { return std::accumulate(dims_.begin(), dims_.end(), 0); }

Matrix Representation::action(const AlgElem& x, int s, int t) const {
  const auto& f = alg_.field();
  Matrix out(dims_[s], dims_[t]);
  for (const auto& [idx, c] : x) {
    if (alg_.source(idx) != s || alg_.target(idx) != t) throw InternalError("element outside the requested block");
    out = add(f, out, brauer::scale(f, actions_[idx], c));
  }
  return out;
}

bool Representation::satisfies_relations() const {
  const auto& f = alg_.field();
  const auto& arrows = alg_.arrows();
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    std::size_t a = arrows[k];
    for (std::size_t c = 0; c < alg_.dim(); ++c) {
      if (alg_.target(a) != alg_.source(c)) continue;
      Matrix lhs = multiply(f, arrows_[k], actions_[c]);
      auto ac = alg_.product(a, c);
      if (ac) {
        if (!(lhs == actions_[*ac])) return false;
      } else if (!lhs.is_zero()) {
        return false;
      }
    }
  }
  return true;
}

Representation projective_rep(const Algebra& alg, int simple) {
  const int n = alg.num_simples();
  if (simple < 0 || simple >= n) throw InputError("simple index out of range");
  std::vector<int> dims(n);
  for (int s = 0; s < n; ++s) dims[s] = static_cast<int>(alg.block(s, simple).size());
  std::vector<Matrix> mats;
  for (std::size_t a : alg.arrows()) {
    int s = alg.source(a), t = alg.target(a);
    Matrix m(dims[s], dims[t]);
    const auto& blk = alg.block(t, simple);
    for (std::size_t col = 0; col < blk.size(); ++col)
      if (auto r = alg.product(a, blk[col])) m(alg.block_position(*r), col) = 1;
    mats.push_back(std::move(m));
  }
  return Representation(alg, dims, std::move(mats), "P" + std::to_string(alg.edge_id(simple)));
}

Representation simple_rep(const Algebra& alg, int simple) {
  std::vector<int> dims(alg.num_simples(), 0);
  dims[simple] = 1;
  std::vector<Matrix> mats;
  for (std::size_t a : alg.arrows()) mats.emplace_back(dims[alg.source(a)], dims[alg.target(a)]);
  return Representation(alg, dims, std::move(mats), "S" + std::to_string(alg.edge_id(simple)));
}

Representation direct_sum(const std::vector<Representation>& parts) {
  if (parts.empty()) throw InputError("direct sum of no modules");
  const Algebra& alg = parts.front().algebra();
  const int n = alg.num_simples();
  std::vector<int> dims(n, 0);
  for (const auto& p : parts) {
    if (!p.algebra().same_as(alg)) throw InputError("direct sum of modules over different algebras");
    for (int i = 0; i < n; ++i) dims[i] += p.dim(i);
  }
  std::vector<Matrix> mats;
  const auto& arrows = alg.arrows();
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    int s = alg.source(arrows[k]), t = alg.target(arrows[k]);
    Matrix m(dims[s], dims[t]);
    int ro = 0, co = 0;
    for (const auto& p : parts) {
      const auto& pm = p.arrow_action(k);
      for (std::size_t r = 0; r < pm.rows(); ++r)
        for (std::size_t c = 0; c < pm.cols(); ++c) m(ro + r, co + c) = pm(r, c);
      ro += p.dim(s);
      co += p.dim(t);
    }
    mats.push_back(std::move(m));
  }
  std::string name;
  for (const auto& p : parts) name += (name.empty() ? "" : "+") + p.name();
  return Representation(alg, dims, std::move(mats), name, false);
}

Representation submodule(const Representation& m, const std::vector<std::vector<std::vector<Scalar>>>& basis) {
  const Algebra& alg = m.algebra();
  const auto& f = alg.field();
  const int n = alg.num_simples();
  std::vector<int> dims(n);
  std::vector<Matrix> w(n);
  for (int i = 0; i < n; ++i) {
    dims[i] = static_cast<int>(basis[i].size());
    w[i] = from_columns(m.dim(i), basis[i]);
  }
  std::vector<Matrix> mats;
  const auto& arrows = alg.arrows();
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    int s = alg.source(arrows[k]), t = alg.target(arrows[k]);
    Matrix out(dims[s], dims[t]);
    Matrix img = multiply(f, m.arrow_action(k), w[t]);
    for (int c = 0; c < dims[t]; ++c) {
      std::vector<Scalar> v(m.dim(s));
      for (int r = 0; r < m.dim(s); ++r) v[r] = img(r, c);
      auto x = solve(f, w[s], v);
      if (!x) throw InternalError("subspace is not a submodule");
      for (int r = 0; r < dims[s]; ++r) out(r, c) = (*x)[r];
    }
    mats.push_back(std::move(out));
  }
  return Representation(alg, dims, std::move(mats), {}, false);
}

Representation quotient(const Representation& m, const std::vector<std::vector<std::vector<Scalar>>>& basis) {
  const Algebra& alg = m.algebra();
  const auto& f = alg.field();
  const int n = alg.num_simples();
  std::vector<int> dims(n);
  std::vector<Matrix> change(n);        // inverse of [W | C]
  std::vector<Matrix> complement(n);    // columns spanning C
  std::vector<int> sub_dim(n);
  for (int i = 0; i < n; ++i) {
    SpanBuilder span(f, m.dim(i));
    std::vector<std::vector<Scalar>> cols;
    for (const auto& v : basis[i])
      if (span.insert(v)) cols.push_back(v);
    sub_dim[i] = static_cast<int>(cols.size());
    std::vector<std::vector<Scalar>> comp;
    for (int c = 0; c < m.dim(i); ++c) {
      std::vector<Scalar> e(m.dim(i), 0);
      e[c] = 1;
      if (span.insert(e)) {
        comp.push_back(e);
        cols.push_back(e);
      }
    }
    dims[i] = static_cast<int>(comp.size());
    complement[i] = from_columns(m.dim(i), comp);
    Matrix full = from_columns(m.dim(i), cols);
    // Invert by solving against unit vectors.
    Matrix inv(m.dim(i), m.dim(i));
    for (int c = 0; c < m.dim(i); ++c) {
      std::vector<Scalar> e(m.dim(i), 0);
      e[c] = 1;
      auto x = solve(f, full, e);
      for (int r = 0; r < m.dim(i); ++r) inv(r, c) = (*x)[r];
    }
    change[i] = std::move(inv);
  }
  std::vector<Matrix> mats;
  const auto& arrows = alg.arrows();
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    int s = alg.source(arrows[k]), t = alg.target(arrows[k]);
    Matrix img = multiply(f, change[s], multiply(f, m.arrow_action(k), complement[t]));
    Matrix out(dims[s], dims[t]);
    for (int r = 0; r < dims[s]; ++r)
      for (int c = 0; c < dims[t]; ++c) out(r, c) = img(sub_dim[s] + r, c);
    mats.push_back(std::move(out));
  }
  return Representation(alg, dims, std::move(mats), {}, false);
}

Representation uniserial(const Algebra& star, const UniserialSpec& spec) {
  if (!star.is_star()) throw PreconditionError("uniserial modules are defined here over star algebras only");
  const int n = star.num_simples();
  const int max_len = n * star.multiplicity() + 1;
  if (spec.top < 0 || spec.top >= n) throw InputError("uniserial top out of range");
  if (spec.length < 1 || spec.length > max_len)
    throw InputError("uniserial length " + std::to_string(spec.length) + " outside 1.." + std::to_string(max_len));
  Representation p = projective_rep(star, spec.top);
  std::vector<std::vector<std::vector<Scalar>>> sub(n);
  for (int s = 0; s < n; ++s) {
    const auto& blk = star.block(s, spec.top);
    for (std::size_t pos = 0; pos < blk.size(); ++pos) {
      if (star.basis(blk[pos]).length >= spec.length) {
        std::vector<Scalar> e(blk.size(), 0);
        e[pos] = 1;
        sub[s].push_back(e);
      }
    }
  }
  Representation q = spec.length == max_len ? p : quotient(p, sub);
  std::string name = "(";
  auto factors = uniserial_factors(star, spec);
  for (std::size_t i = 0; i < factors.size(); ++i)
    name += (i ? "," : "") + std::to_string(star.edge_id(factors[i]));
  q.set_name(name + ")");
  return q;
}

std::vector<int> uniserial_factors(const Algebra& star, const UniserialSpec& spec) {
  const auto& order = star.star_order();
  const int n = static_cast<int>(order.size());
  int pos = static_cast<int>(std::find(order.begin(), order.end(), spec.top) - order.begin());
  std::vector<int> out;
  for (int t = 0; t < spec.length; ++t) out.push_back(order[((pos - t) % n + n) % n]);
  return out;
}

Representation string_module(const Algebra& alg, int start, const std::vector<int>& walk) {
  const int n = alg.num_simples();
  const auto& arrows = alg.arrows();
  if (start < 0 || start >= n) throw InputError("walk start out of range");
  std::vector<int> verts{start};
  // Running product of the current same-direction run.
  std::optional<std::size_t> run;
  int run_sign = 0;
  for (std::size_t r = 0; r < walk.size(); ++r) {
    int letter = walk[r];
    if (letter == 0 || std::abs(letter) > static_cast<int>(arrows.size()))
      throw InputError("walk letter " + std::to_string(letter) + " is not a signed arrow id");
    std::size_t a = arrows[std::abs(letter) - 1];
    int cur = verts.back();
    int next;
    if (letter > 0) {
      if (alg.source(a) != cur) throw InputError("walk is not connected at letter " + std::to_string(r + 1));
      next = alg.target(a);
    } else {
      if (alg.target(a) != cur) throw InputError("walk is not connected at letter " + std::to_string(r + 1));
      next = alg.source(a);
    }
    if (r > 0 && walk[r - 1] == -letter) throw InputError("walk backtracks at letter " + std::to_string(r + 1));
    if (alg.basis(a).kind != PathKind::Proper) throw InputError("walk crosses a zero relation at letter " + std::to_string(r + 1));
    int sign = letter > 0 ? 1 : -1;
    if (sign != run_sign) {
      run = a;
      run_sign = sign;
    } else {
      run = sign > 0 ? alg.product(*run, a) : alg.product(a, *run);
      if (!run || alg.basis(*run).kind != PathKind::Proper)
        throw InputError("walk crosses a zero relation at letter " + std::to_string(r + 1));
    }
    verts.push_back(next);
  }
  std::vector<int> dims(n, 0);
  std::vector<int> local(verts.size());
  for (std::size_t r = 0; r < verts.size(); ++r) local[r] = dims[verts[r]]++;
  std::vector<Matrix> mats;
  for (std::size_t a : arrows) mats.emplace_back(dims[alg.source(a)], dims[alg.target(a)]);
  for (std::size_t r = 1; r < verts.size(); ++r) {
    int letter = walk[r - 1];
    auto& m = mats[std::abs(letter) - 1];
    if (letter > 0)
      m(local[r - 1], local[r]) = 1;
    else
      m(local[r], local[r - 1]) = 1;
  }
  std::ostringstream name;
  name << "string[" << alg.edge_id(start) << ":";
  for (std::size_t r = 0; r < walk.size(); ++r) name << (r ? "," : "") << walk[r];
  name << "]";
  return Representation(alg, dims, std::move(mats), name.str());
}

std::vector<ModuleMap> hom_basis(const Representation& m, const Representation& n) {
  const Algebra& alg = m.algebra();
  if (!alg.same_as(n.algebra())) throw InputError("hom between modules over different algebras");
  const auto& f = alg.field();
  const int ns = alg.num_simples();
  std::vector<int> off(ns + 1, 0);
  for (int i = 0; i < ns; ++i) off[i + 1] = off[i] + n.dim(i) * m.dim(i);
  const int unknowns = off[ns];
  if (unknowns == 0) return {};
  std::size_t eqs = 0;
  const auto& arrows = alg.arrows();
  for (std::size_t a : arrows) eqs += static_cast<std::size_t>(n.dim(alg.source(a))) * m.dim(alg.target(a));
  Matrix sys(eqs, unknowns);
  std::size_t row = 0;
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    int s = alg.source(arrows[k]), t = alg.target(arrows[k]);
    const auto& rm = m.arrow_action(k);
    const auto& rn = n.arrow_action(k);
    for (int r = 0; r < n.dim(s); ++r) {
      for (int c = 0; c < m.dim(t); ++c, ++row) {
        // (phi_s rho_M)[r][c] - (rho_N phi_t)[r][c]
        for (int x = 0; x < m.dim(s); ++x)
          if (rm(x, c)) sys(row, off[s] + r * m.dim(s) + x) = f.add(sys(row, off[s] + r * m.dim(s) + x), rm(x, c));
        for (int y = 0; y < n.dim(t); ++y)
          if (rn(r, y)) sys(row, off[t] + y * m.dim(t) + c) = f.sub(sys(row, off[t] + y * m.dim(t) + c), rn(r, y));
      }
    }
  }
  std::vector<ModuleMap> out;
  for (const auto& v : nullspace(f, sys)) {
    ModuleMap map;
    for (int i = 0; i < ns; ++i) {
      Matrix b(n.dim(i), m.dim(i));
      for (int r = 0; r < n.dim(i); ++r)
        for (int c = 0; c < m.dim(i); ++c) b(r, c) = v[off[i] + r * m.dim(i) + c];
      map.blocks.push_back(std::move(b));
    }
    out.push_back(std::move(map));
  }
  return out;
}

int hom_dim(const Representation& m, const Representation& n) { return static_cast<int>(hom_basis(m, n).size()); }

ModuleMap compose(const PrimeField& f, const ModuleMap& first, const ModuleMap& second) {
  ModuleMap out;
  for (std::size_t i = 0; i < first.blocks.size(); ++i) out.blocks.push_back(multiply(f, second.blocks[i], first.blocks[i]));
  return out;
}

bool is_isomorphism(const PrimeField& f, const ModuleMap& map) {
  for (const auto& b : map.blocks)
    if (b.rows() != b.cols() || (b.rows() && !is_invertible(f, b))) return false;
  return true;
}

bool is_isomorphic(const Representation& m, const Representation& n, std::uint64_t seed) {
  if (m.dims() != n.dims()) return false;
  const auto& f = m.algebra().field();
  auto basis = hom_basis(m, n);
  if (m.is_zero()) return true;
  for (const auto& b : basis)
    if (is_isomorphism(f, b)) return true;
  if (basis.size() < 2) return false;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Scalar> coeff(0, f.prime() - 1);
  for (int attempt = 0; attempt < 8; ++attempt) {
    ModuleMap combo;
    for (const auto& blk : basis.front().blocks) combo.blocks.emplace_back(blk.rows(), blk.cols());
    for (const auto& b : basis) {
      Scalar c = coeff(rng);
      for (std::size_t i = 0; i < b.blocks.size(); ++i) combo.blocks[i] = add(f, combo.blocks[i], scale(f, b.blocks[i], c));
    }
    if (is_isomorphism(f, combo)) return true;
  }
  return false;
}

std::vector<std::vector<std::vector<Scalar>>> radical_basis(const Representation& m) {
  const Algebra& alg = m.algebra();
  const int n = alg.num_simples();
  std::vector<std::vector<std::vector<Scalar>>> out(n);
  std::vector<SpanBuilder> spans;
  for (int i = 0; i < n; ++i) spans.emplace_back(alg.field(), m.dim(i));
  const auto& arrows = alg.arrows();
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    int s = alg.source(arrows[k]);
    const auto& a = m.arrow_action(k);
    for (std::size_t c = 0; c < a.cols(); ++c) {
      std::vector<Scalar> v(a.rows());
      for (std::size_t r = 0; r < a.rows(); ++r) v[r] = a(r, c);
      if (spans[s].insert(v)) out[s].push_back(v);
    }
  }
  return out;
}

TopSocle top_and_socle(const Representation& m) {
  if (m.is_zero()) throw PreconditionError("top and socle of the zero module");
  const Algebra& alg = m.algebra();
  const auto& f = alg.field();
  const int n = alg.num_simples();
  TopSocle ts{std::vector<int>(n), std::vector<int>(n)};
  auto rad = radical_basis(m);
  for (int i = 0; i < n; ++i) ts.top[i] = m.dim(i) - static_cast<int>(rad[i].size());
  const auto& arrows = alg.arrows();
  for (int i = 0; i < n; ++i) {
    std::size_t rows = 0;
    for (std::size_t a : arrows)
      if (alg.target(a) == i) rows += m.dim(alg.source(a));
    Matrix stack(rows, m.dim(i));
    std::size_t r0 = 0;
    for (std::size_t k = 0; k < arrows.size(); ++k) {
      if (alg.target(arrows[k]) != i) continue;
      const auto& a = m.arrow_action(k);
      for (std::size_t r = 0; r < a.rows(); ++r, ++r0)
        for (std::size_t c = 0; c < a.cols(); ++c) stack(r0, c) = a(r, c);
    }
    ts.socle[i] = m.dim(i) - static_cast<int>(rank(f, stack));
  }
  return ts;
}

bool has_projective_summand(const Representation& m) {
  const Algebra& alg = m.algebra();
  for (int i = 0; i < alg.num_simples(); ++i) {
    if (m.dim(i) == 0) continue;
    Representation p = projective_rep(alg, i);
    std::size_t unit_pos = alg.block_position(alg.idempotent(i));
    for (const auto& g : hom_basis(m, p)) {
      // g restricted to e_i M; any nonzero idempotent coefficient of g(x) for a
      // basis vector x gives an invertible composite P_i -> M -> P_i.
      const auto& b = g.blocks[i];
      for (std::size_t c = 0; c < b.cols(); ++c)
        if (b(unit_pos, c)) return true;
    }
  }
  return false;
}

ProjectiveCover projective_cover(const Representation& m) {
  const Algebra& alg = m.algebra();
  const auto& f = alg.field();
  const int n = alg.num_simples();
  auto rad = radical_basis(m);
  std::vector<int> tops;
  std::vector<int> gen_index;  // basis position in e_top M
  for (int i = 0; i < n; ++i) {
    SpanBuilder span(f, m.dim(i));
    for (const auto& v : rad[i]) span.insert(v);
    for (int c = 0; c < m.dim(i); ++c) {
      std::vector<Scalar> e(m.dim(i), 0);
      e[c] = 1;
      if (span.insert(e)) {
        tops.push_back(i);
        gen_index.push_back(c);
      }
    }
  }
  std::vector<Representation> parts;
  for (int t : tops) parts.push_back(projective_rep(alg, t));
  std::vector<int> pdims(n, 0);
  for (int t : tops)
    for (int s = 0; s < n; ++s) pdims[s] += static_cast<int>(alg.block(s, t).size());
  Representation cover = parts.empty() ? Representation(alg, pdims, [&] {
    std::vector<Matrix> mats;
    mats.resize(alg.arrows().size(), Matrix(0, 0));
    return mats;
  }(), "0", false)
                                       : direct_sum(parts);
  std::vector<Matrix> map(n);
  std::vector<std::vector<std::vector<Scalar>>> ker(n);
  for (int s = 0; s < n; ++s) {
    Matrix mm(m.dim(s), pdims[s]);
    int col = 0;
    for (std::size_t u = 0; u < tops.size(); ++u) {
      for (std::size_t p : alg.block(s, tops[u])) {
        const Matrix& act = m.action(p);
        for (int r = 0; r < m.dim(s); ++r) mm(r, col) = act(r, gen_index[u]);
        ++col;
      }
    }
    ker[s] = nullspace(f, mm);
    map[s] = std::move(mm);
  }
  std::vector<Matrix> emb(n);
  for (int s = 0; s < n; ++s) emb[s] = from_columns(pdims[s], ker[s]);
  Representation kernel = submodule(cover, ker);
  return ProjectiveCover{std::move(tops), std::move(cover), std::move(map), std::move(kernel), std::move(emb)};
}

Representation syzygy(const Representation& m) {
  if (has_projective_summand(m)) throw PreconditionError("syzygy requires a module without projective summands");
  auto pc = projective_cover(m);
  Representation k = pc.kernel;
  k.set_name("Omega(" + m.name() + ")");
  return k;
}

namespace {

struct WalkState {
  std::vector<int> verts;
  std::vector<int> letters;
  std::optional<std::size_t> run;
  int run_sign = 0;
};

}  // namespace

std::vector<IndecomposableEntry> enumerate_indecomposables(const Algebra& alg) {
  std::vector<IndecomposableEntry> out;
  const int n = alg.num_simples();
  if (alg.is_star()) {
    const int max_len = n * alg.multiplicity() + 1;
    for (int top = 0; top < n; ++top)
      for (int len = 1; len <= max_len; ++len) {
        UniserialSpec spec{top, len};
        out.push_back({uniserial(alg, spec), len == max_len, spec, std::nullopt});
      }
    return out;
  }
  if (alg.multiplicity() != 1)
    throw PreconditionError("indecomposable enumeration needs a star algebra or a multiplicity-1 tree algebra");
  const auto& arrows = alg.arrows();
  const int depth_limit = 4 * n + 4;
  std::vector<std::pair<int, std::vector<int>>> walks;
  std::function<void(WalkState&)> dfs = [&](WalkState& st) {
    // Keep one of each walk / inverse-walk pair.
    std::vector<int> inv;
    for (auto it = st.letters.rbegin(); it != st.letters.rend(); ++it) inv.push_back(-*it);
    if (std::pair(st.verts.front(), st.letters) <= std::pair(st.verts.back(), inv))
      walks.emplace_back(st.verts.front(), st.letters);
    if (static_cast<int>(st.letters.size()) >= depth_limit) throw InternalError("string enumeration did not terminate");
    for (int k = 1; k <= static_cast<int>(arrows.size()); ++k) {
      for (int sign : {1, -1}) {
        int letter = sign * k;
        std::size_t a = arrows[k - 1];
        if (alg.basis(a).kind != PathKind::Proper) continue;
        int cur = st.verts.back();
        if (sign > 0 ? alg.source(a) != cur : alg.target(a) != cur) continue;
        if (!st.letters.empty() && st.letters.back() == -letter) continue;
        std::optional<std::size_t> run;
        if (sign != st.run_sign) {
          run = a;
        } else {
          run = sign > 0 ? alg.product(*st.run, a) : alg.product(a, *st.run);
          if (!run || alg.basis(*run).kind != PathKind::Proper) continue;
        }
        WalkState next = st;
        next.letters.push_back(letter);
        next.verts.push_back(sign > 0 ? alg.target(a) : alg.source(a));
        next.run = run;
        next.run_sign = sign;
        dfs(next);
      }
    }
  };
  for (int s = 0; s < n; ++s) {
    WalkState st;
    st.verts = {s};
    dfs(st);
  }
  std::sort(walks.begin(), walks.end(),
            [](const auto& a, const auto& b) { return std::pair(a.second.size(), a) < std::pair(b.second.size(), b); });
  for (const auto& [start, letters] : walks)
    out.push_back({string_module(alg, start, letters), false, std::nullopt, std::pair(start, letters)});
  for (int i = 0; i < n; ++i) out.push_back({projective_rep(alg, i), true, std::nullopt, std::nullopt});
  return out;
}

}  // namespace brauer
