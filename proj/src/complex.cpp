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


#include "brauer/complex.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "brauer/error.hpp"

namespace brauer {

bool AlgMatrix::is_zero() const {
  return std::all_of(entries.begin(), entries.end(), [](const AlgElem& e) { return e.empty(); });
}

AlgMatrix multiply(const Algebra& alg, const AlgMatrix& a, const AlgMatrix& b) {
  if (a.cols() != b.rows()) throw InternalError("algebra matrix shapes do not compose");
  AlgMatrix out(a.row_proj, b.col_proj);
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t m = 0; m < a.cols(); ++m) {
      const auto& x = a.at(r, m);
      if (x.empty()) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) {
        const auto& y = b.at(m, c);
        if (!y.empty()) out.at(r, c) = alg.add(out.at(r, c), alg.multiply(x, y));
      }
    }
  return out;
}

AlgMatrix add(const Algebra& alg, const AlgMatrix& a, const AlgMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InternalError("algebra matrix shapes differ");
  AlgMatrix out(a.row_proj, a.col_proj);
  for (std::size_t i = 0; i < a.entries.size(); ++i) out.entries[i] = alg.add(a.entries[i], b.entries[i]);
  return out;
}

namespace {

std::string proj_name(const Algebra& alg, int simple) { return "P" + std::to_string(alg.edge_id(simple)); }

std::string label_text(const Algebra& alg, const SummandLabel& label, const std::vector<int>& p0,
                       const std::vector<int>& p1) {
  if (label.kind == SummandLabel::Kind::Stalk) return proj_name(alg, label.simple) + "@" + std::to_string(label.degree);
  std::string base;
  if (p0.size() == 1 && p1.size() == 1) {
    base = proj_name(alg, p0[0]) + "->" + proj_name(alg, p1[0]);
  } else {
    base = "pres(" + label.module_name + ")";
  }
  if (label.degree != 0) base = "(" + base + ")@" + std::to_string(label.degree);
  return base;
}

const std::vector<int> kNoTerm;

}  // namespace

ProjComplex::ProjComplex(Algebra alg, int lowest, std::vector<std::vector<int>> terms,
                         std::vector<AlgMatrix> differentials, std::vector<Summand> summands)
    : alg_(std::move(alg)), lowest_(lowest), terms_(std::move(terms)), diffs_(std::move(differentials)),
      summands_(std::move(summands)) {
  const int n = alg_.num_simples();
  const std::size_t len = terms_.size();
  if (len == 0 ? !diffs_.empty() : diffs_.size() != len - 1)
    throw InputError("complex needs one differential between consecutive terms");
  for (const auto& t : terms_)
    for (int s : t)
      if (s < 0 || s >= n) throw InputError("projective index out of range");
  for (std::size_t d = 0; d < diffs_.size(); ++d) {
    const auto& m = diffs_[d];
    if (m.row_proj != terms_[d] || m.col_proj != terms_[d + 1])
      throw InputError("differential " + std::to_string(d) + " does not match its terms");
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        for (const auto& [idx, coef] : m.at(r, c))
          if (alg_.source(idx) != m.row_proj[r] || alg_.target(idx) != m.col_proj[c] || coef == 0)
            throw InputError("differential entry lies outside e_i A e_j");
  }
  for (std::size_t d = 0; d + 1 < diffs_.size(); ++d)
    if (!multiply(alg_, diffs_[d], diffs_[d + 1]).is_zero()) throw InputError("differential squares to a nonzero map");
  if (!summands_.empty()) {
    std::vector<std::vector<int>> owner(len);
    for (std::size_t d = 0; d < len; ++d) owner[d].assign(terms_[d].size(), -1);
    for (std::size_t s = 0; s < summands_.size(); ++s) {
      if (summands_[s].positions.size() != len) throw InputError("summand positions do not cover every degree");
      for (std::size_t d = 0; d < len; ++d)
        for (std::size_t p : summands_[s].positions[d]) {
          if (p >= terms_[d].size() || owner[d][p] >= 0) throw InputError("summand positions overlap or overflow");
          owner[d][p] = static_cast<int>(s);
        }
    }
    for (std::size_t d = 0; d < len; ++d)
      for (int o : owner[d])
        if (o < 0) throw InputError("summand labels do not cover the complex");
    for (std::size_t d = 0; d < diffs_.size(); ++d)
      for (std::size_t r = 0; r < diffs_[d].rows(); ++r)
        for (std::size_t c = 0; c < diffs_[d].cols(); ++c)
          if (!diffs_[d].at(r, c).empty() && owner[d][r] != owner[d + 1][c])
            throw InputError("differential mixes declared summands");
  }
  // Trim empty terms at both ends.
  std::size_t front = 0;
  while (front < terms_.size() && terms_[front].empty()) ++front;
  std::size_t back = terms_.size();
  while (back > front && terms_[back - 1].empty()) --back;
  if (front > 0 || back < terms_.size()) {
    std::vector<std::vector<int>> t(terms_.begin() + front, terms_.begin() + back);
    std::vector<AlgMatrix> dm;
    for (std::size_t d = front; d + 1 < back; ++d) dm.push_back(diffs_[d]);
    for (auto& s : summands_)
      s.positions = std::vector<std::vector<std::size_t>>(s.positions.begin() + front, s.positions.begin() + back);
    lowest_ += static_cast<int>(front);
    terms_ = std::move(t);
    diffs_ = std::move(dm);
  }
}

const std::vector<int>& ProjComplex::term(int degree) const {
  if (terms_.empty() || degree < lowest_ || degree > highest()) return kNoTerm;
  return terms_[degree - lowest_];
}

AlgMatrix ProjComplex::differential(int degree) const {
  if (!terms_.empty() && degree >= lowest_ && degree < highest()) return diffs_[degree - lowest_];
  return AlgMatrix(term(degree), term(degree + 1));
}

std::size_t ProjComplex::num_projectives() const {
  std::size_t s = 0;
  for (const auto& t : terms_) s += t.size();
  return s;
}

bool ProjComplex::is_minimal() const {
  for (const auto& d : diffs_)
    for (const auto& e : d.entries)
      for (const auto& [idx, c] : e)
        if (alg_.basis(idx).kind == PathKind::Idempotent) return false;
  return true;
}

ProjComplex ProjComplex::shifted(int s) const {
  ProjComplex out = *this;
  out.lowest_ -= s;
  for (auto& sm : out.summands_) {
    sm.label.degree -= s;
    std::vector<int> p0, p1;
    if (sm.label.kind == SummandLabel::Kind::Presentation) {
      for (auto p : sm.positions[sm.label.degree - out.lowest_]) p0.push_back(out.term(sm.label.degree)[p]);
      if (sm.label.degree + 1 <= out.highest())
        for (auto p : sm.positions[sm.label.degree + 1 - out.lowest_]) p1.push_back(out.term(sm.label.degree + 1)[p]);
    }
    sm.label.text = label_text(alg_, sm.label, p0, p1);
  }
  return out;
}

ProjComplex ProjComplex::summand(std::size_t idx) const {
  const auto& sm = summands_.at(idx);
  std::vector<std::vector<int>> terms(terms_.size());
  std::vector<std::vector<std::size_t>> pos(terms_.size());
  for (std::size_t d = 0; d < terms_.size(); ++d)
    for (std::size_t k = 0; k < sm.positions[d].size(); ++k) {
      terms[d].push_back(terms_[d][sm.positions[d][k]]);
      pos[d].push_back(k);
    }
  std::vector<AlgMatrix> diffs;
  for (std::size_t d = 0; d + 1 < terms_.size(); ++d) {
    AlgMatrix m(terms[d], terms[d + 1]);
    for (std::size_t r = 0; r < terms[d].size(); ++r)
      for (std::size_t c = 0; c < terms[d + 1].size(); ++c)
        m.at(r, c) = diffs_[d].at(sm.positions[d][r], sm.positions[d + 1][c]);
    diffs.push_back(std::move(m));
  }
  return ProjComplex(alg_, lowest_, std::move(terms), std::move(diffs), {Summand{sm.label, std::move(pos)}});
}

std::string ProjComplex::describe() const {
  std::ostringstream os;
  if (!summands_.empty()) {
    for (std::size_t s = 0; s < summands_.size(); ++s) os << (s ? ", " : "") << summands_[s].label.text;
    return os.str();
  }
  for (std::size_t d = 0; d < terms_.size(); ++d) {
    os << (d ? " -> " : "") << "[";
    for (std::size_t k = 0; k < terms_[d].size(); ++k) os << (k ? "+" : "") << proj_name(alg_, terms_[d][k]);
    os << "]@" << lowest_ + static_cast<int>(d);
  }
  return os.str();
}

ProjComplex stalk(const Algebra& alg, int simple, int degree) {
  if (simple < 0 || simple >= alg.num_simples()) throw InputError("stalk projective out of range");
  SummandLabel label;
  label.kind = SummandLabel::Kind::Stalk;
  label.simple = simple;
  label.degree = degree;
  label.text = label_text(alg, label, {}, {});
  return ProjComplex(alg, degree, {{simple}}, {}, {Summand{label, {{0}}}});
}

ProjComplex regular_complex(const Algebra& alg, int degree) {
  std::vector<ProjComplex> parts;
  for (int i = 0; i < alg.num_simples(); ++i) parts.push_back(stalk(alg, i, degree));
  return direct_sum(parts);
}

ProjComplex direct_sum(const std::vector<ProjComplex>& parts) {
  if (parts.empty()) throw InputError("direct sum of no complexes");
  const Algebra& alg = parts.front().algebra();
  int lo = 0, hi = -1;
  bool any = false;
  for (const auto& p : parts) {
    if (!p.algebra().same_as(alg)) throw InputError("direct sum of complexes over different algebras");
    if (p.empty()) continue;
    lo = any ? std::min(lo, p.lowest()) : p.lowest();
    hi = any ? std::max(hi, p.highest()) : p.highest();
    any = true;
  }
  if (!any) return ProjComplex(alg, 0, {}, {}, {});
  const std::size_t len = hi - lo + 1;
  std::vector<std::vector<int>> terms(len);
  std::vector<std::vector<std::size_t>> base(parts.size(), std::vector<std::size_t>(len));
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t d = 0; d < len; ++d) {
      base[i][d] = terms[d].size();
      const auto& t = parts[i].term(lo + static_cast<int>(d));
      terms[d].insert(terms[d].end(), t.begin(), t.end());
    }
  std::vector<AlgMatrix> diffs;
  for (std::size_t d = 0; d + 1 < len; ++d) {
    AlgMatrix m(terms[d], terms[d + 1]);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      AlgMatrix pd = parts[i].differential(lo + static_cast<int>(d));
      for (std::size_t r = 0; r < pd.rows(); ++r)
        for (std::size_t c = 0; c < pd.cols(); ++c) m.at(base[i][d] + r, base[i][d + 1] + c) = pd.at(r, c);
    }
    diffs.push_back(std::move(m));
  }
  std::vector<Summand> summands;
  bool labelled = std::all_of(parts.begin(), parts.end(), [](const ProjComplex& p) { return !p.summands().empty() || p.empty(); });
  if (labelled) {
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (const auto& s : parts[i].summands()) {
        Summand out{s.label, std::vector<std::vector<std::size_t>>(len)};
        for (std::size_t d = 0; d < s.positions.size(); ++d) {
          std::size_t gd = parts[i].lowest() - lo + d;
          for (std::size_t p : s.positions[d]) out.positions[gd].push_back(base[i][gd] + p);
        }
        summands.push_back(std::move(out));
      }
  }
  return ProjComplex(alg, lo, std::move(terms), std::move(diffs), std::move(summands));
}

namespace {

Representation zero_module(const Algebra& alg) {
  std::vector<Matrix> mats(alg.arrows().size());
  return Representation(alg, std::vector<int>(alg.num_simples(), 0), std::move(mats), "0", false);
}

// Offset of component v inside block s of a direct sum of projectives.
std::vector<std::vector<std::size_t>> component_offsets(const Algebra& alg, const std::vector<int>& tops) {
  const int n = alg.num_simples();
  std::vector<std::vector<std::size_t>> off(n, std::vector<std::size_t>(tops.size() + 1, 0));
  for (int s = 0; s < n; ++s)
    for (std::size_t v = 0; v < tops.size(); ++v) off[s][v + 1] = off[s][v] + alg.block(s, tops[v]).size();
  return off;
}

}  // namespace

ProjComplex projective_presentation(const Representation& m, int degree) {
  const Algebra& alg = m.algebra();
  auto pc1 = projective_cover(m);
  auto pc0 = projective_cover(pc1.kernel);
  auto off1 = component_offsets(alg, pc1.tops);
  auto off0 = component_offsets(alg, pc0.tops);
  AlgMatrix f(pc0.tops, pc1.tops);
  for (std::size_t u = 0; u < pc0.tops.size(); ++u) {
    int t = pc0.tops[u];
    // Generator u of Omega M, then its image in the cover of M.
    std::size_t col = off0[t][u] + alg.block_position(alg.idempotent(t));
    const Matrix& gmap = pc0.map[t];
    std::vector<Scalar> g(gmap.rows());
    for (std::size_t r = 0; r < gmap.rows(); ++r) g[r] = gmap(r, col);
    Matrix img = multiply(alg.field(), pc1.embedding[t], from_columns(g.size(), {g}));
    for (std::size_t v = 0; v < pc1.tops.size(); ++v) {
      const auto& blk = alg.block(t, pc1.tops[v]);
      AlgElem e;
      for (std::size_t p = 0; p < blk.size(); ++p) {
        Scalar c = img(off1[t][v] + p, 0);
        if (c) e.emplace_back(blk[p], c);
      }
      std::sort(e.begin(), e.end());
      f.at(u, v) = std::move(e);
    }
  }
  SummandLabel label;
  label.kind = SummandLabel::Kind::Presentation;
  label.degree = degree;
  label.module_name = m.name();
  label.text = label_text(alg, label, pc0.tops, pc1.tops);
  std::vector<std::vector<std::size_t>> pos(2);
  for (std::size_t u = 0; u < pc0.tops.size(); ++u) pos[0].push_back(u);
  for (std::size_t v = 0; v < pc1.tops.size(); ++v) pos[1].push_back(v);
  return ProjComplex(alg, degree, {pc0.tops, pc1.tops}, {f}, {Summand{label, pos}});
}

ProjComplex min_proj_presentation(const Representation& m, int degree) {
  if (has_projective_summand(m)) throw PreconditionError("minimal presentation requires a module without projective summands");
  return projective_presentation(m, degree);
}

namespace {

ProjComplex relabel(ProjComplex c, const SummandLabel& label) {
  auto summands = c.summands();
  summands.front().label.uniserial = label.uniserial;
  summands.front().label.walk = label.walk;
  std::vector<std::vector<int>> terms;
  std::vector<AlgMatrix> diffs;
  for (int d = c.lowest(); d <= c.highest(); ++d) {
    terms.push_back(c.term(d));
    if (d < c.highest()) diffs.push_back(c.differential(d));
  }
  return ProjComplex(c.algebra(), c.lowest(), std::move(terms), std::move(diffs), std::move(summands));
}

}  // namespace

ProjComplex uniserial_presentation(const Algebra& star, const UniserialSpec& spec, int degree) {
  SummandLabel label;
  label.uniserial = spec;
  return relabel(min_proj_presentation(uniserial(star, spec), degree), label);
}

ProjComplex presentation_of(const IndecomposableEntry& entry, int degree) {
  SummandLabel label;
  label.uniserial = entry.uniserial;
  label.walk = entry.walk;
  return relabel(min_proj_presentation(entry.module, degree), label);
}

// ---------------------------------------------------------------------------

ChainMapSpace::ChainMapSpace(const ProjComplex& q, const ProjComplex& r, int shift) : q_(q), r_(r), shift_(shift) {
  const Algebra& alg = q.algebra();
  if (!alg.same_as(r.algebra())) throw InputError("chain maps between complexes over different algebras");
  const auto& f = alg.field();
  if (q.empty() || r.empty()) return;

  const int qlo = q.lowest(), qhi = q.highest();
  entry_index_.resize(qhi - qlo + 1);
  for (int d = qlo; d <= qhi; ++d) {
    const auto& rows = q.term(d);
    const auto& cols = r.term(d + shift);
    auto& idx = entry_index_[d - qlo];
    for (std::size_t a = 0; a < rows.size(); ++a)
      for (std::size_t b = 0; b < cols.size(); ++b) {
        idx.push_back(entries_.size());
        entries_.push_back({d, a, b, rows[a], cols[b], unknowns_});
        unknowns_ += alg.block(rows[a], cols[b]).size();
      }
  }
  if (unknowns_ == 0) return;

  // Chain condition at degree d: dQ^d phi^(d+1) - phi^d dR^(d+s) = 0 as maps Q^d -> R^(d+s+1).
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> rows_sparse;
  for (int d = qlo; d <= qhi; ++d) {
    const auto& qd = q.term(d);
    const auto& rt = r.term(d + shift + 1);
    if (qd.empty() || rt.empty()) continue;
    AlgMatrix dq = q.differential(d);
    AlgMatrix dr = r.differential(d + shift);
    for (std::size_t a = 0; a < qd.size(); ++a)
      for (std::size_t c = 0; c < rt.size(); ++c) {
        const auto& blk = alg.block(qd[a], rt[c]);
        if (blk.empty()) continue;
        std::vector<std::map<std::size_t, Scalar>> eq(blk.size());
        for (std::size_t b = 0; b < dq.cols(); ++b) {
          const auto& u = dq.at(a, b);
          if (u.empty()) continue;
          const Entry* e = entry(d + 1, b, c);
          if (!e) continue;
          const auto& vblk = alg.block(e->from, e->to);
          for (const auto& [ui, uc] : u)
            for (std::size_t pp = 0; pp < vblk.size(); ++pp)
              if (auto prod = alg.product(ui, vblk[pp])) {
                Scalar& x = eq[alg.block_position(*prod)][e->offset + pp];
                x = f.add(x, uc);
              }
        }
        for (std::size_t b = 0; b < dr.rows(); ++b) {
          const Entry* e = entry(d, a, b);
          if (!e) continue;
          const auto& v = dr.at(b, c);
          if (v.empty()) continue;
          const auto& pblk = alg.block(e->from, e->to);
          for (std::size_t pp = 0; pp < pblk.size(); ++pp)
            for (const auto& [vi, vc] : v)
              if (auto prod = alg.product(pblk[pp], vi)) {
                Scalar& x = eq[alg.block_position(*prod)][e->offset + pp];
                x = f.sub(x, vc);
              }
        }
        for (auto& m : eq) {
          std::vector<std::pair<std::size_t, Scalar>> row;
          for (const auto& [k, v] : m)
            if (v) row.emplace_back(k, v);
          if (!row.empty()) rows_sparse.push_back(std::move(row));
        }
      }
  }
  chain_system_ = Matrix(rows_sparse.size(), unknowns_);
  for (std::size_t i = 0; i < rows_sparse.size(); ++i)
    for (const auto& [k, v] : rows_sparse[i]) chain_system_(i, k) = v;
  if (rows_sparse.empty()) {
    for (std::size_t k = 0; k < unknowns_; ++k) {
      std::vector<Scalar> e(unknowns_, 0);
      e[k] = 1;
      chain_.push_back(std::move(e));
    }
  } else {
    chain_ = nullspace(f, chain_system_);
  }

  // Null-homotopic maps: phi^d = dQ^d h^(d+1) + h^d dR^(d+s-1) with h^d : Q^d -> R^(d+s-1).
  SpanBuilder span(f, unknowns_);
  for (int d = qlo; d <= qhi; ++d) {
    const auto& qd = q.term(d);
    const auto& rt = r.term(d + shift - 1);
    if (qd.empty() || rt.empty()) continue;
    AlgMatrix dq_prev = q.differential(d - 1);       // Q^(d-1) -> Q^d
    AlgMatrix dr = r.differential(d + shift - 1);    // R^(d+s-1) -> R^(d+s)
    for (std::size_t a = 0; a < qd.size(); ++a)
      for (std::size_t b = 0; b < rt.size(); ++b) {
        const auto& hblk = alg.block(qd[a], rt[b]);
        for (std::size_t hp = 0; hp < hblk.size(); ++hp) {
          std::vector<Scalar> col(unknowns_, 0);
          // Into phi^(d-1)(x, b) through dQ^(d-1)(x, a).
          for (std::size_t x = 0; x < dq_prev.rows(); ++x) {
            const auto& u = dq_prev.at(x, a);
            if (u.empty()) continue;
            const Entry* e = entry(d - 1, x, b);
            if (!e) throw InternalError("homotopy target entry missing");
            for (const auto& [ui, uc] : u)
              if (auto prod = alg.product(ui, hblk[hp])) {
                Scalar& y = col[e->offset + alg.block_position(*prod)];
                y = f.add(y, uc);
              }
          }
          // Into phi^d(a, y) through dR(b, y).
          for (std::size_t yy = 0; yy < dr.cols(); ++yy) {
            const auto& v = dr.at(b, yy);
            if (v.empty()) continue;
            const Entry* e = entry(d, a, yy);
            if (!e) throw InternalError("homotopy target entry missing");
            for (const auto& [vi, vc] : v)
              if (auto prod = alg.product(hblk[hp], vi)) {
                Scalar& y = col[e->offset + alg.block_position(*prod)];
                y = f.add(y, vc);
              }
          }
          if (span.insert(col)) homotopy_basis_.push_back(std::move(col));
        }
      }
  }
  homotopy_rank_ = homotopy_basis_.size();
  for (const auto& v : chain_)
    if (span.insert(v)) quotient_.push_back(v);
  std::vector<std::vector<Scalar>> cols = homotopy_basis_;
  cols.insert(cols.end(), quotient_.begin(), quotient_.end());
  reduce_system_ = from_columns(unknowns_, cols);
}

const ChainMapSpace::Entry* ChainMapSpace::entry(int degree, std::size_t row, std::size_t col) const {
  if (entry_index_.empty()) return nullptr;
  int d = degree - q_.lowest();
  if (d < 0 || d >= static_cast<int>(entry_index_.size())) return nullptr;
  std::size_t ncols = r_.term(degree + shift_).size();
  std::size_t k = row * ncols + col;
  if (col >= ncols || k >= entry_index_[d].size()) return nullptr;
  return &entries_[entry_index_[d][k]];
}

std::vector<AlgMatrix> ChainMapSpace::components(const std::vector<Scalar>& coords) const {
  const Algebra& alg = q_.algebra();
  std::vector<AlgMatrix> out;
  if (q_.empty()) return out;
  for (int d = q_.lowest(); d <= q_.highest(); ++d) out.emplace_back(q_.term(d), r_.term(d + shift_));
  for (const auto& e : entries_) {
    const auto& blk = alg.block(e.from, e.to);
    AlgElem x;
    for (std::size_t p = 0; p < blk.size(); ++p)
      if (coords[e.offset + p]) x.emplace_back(blk[p], coords[e.offset + p]);
    std::sort(x.begin(), x.end());
    out[e.degree - q_.lowest()].at(e.row, e.col) = std::move(x);
  }
  return out;
}

std::vector<Scalar> ChainMapSpace::coordinates(const std::vector<AlgMatrix>& comps) const {
  const Algebra& alg = q_.algebra();
  std::vector<Scalar> out(unknowns_, 0);
  for (const auto& e : entries_) {
    const auto& m = comps.at(e.degree - q_.lowest());
    for (const auto& [idx, c] : m.at(e.row, e.col)) {
      if (alg.source(idx) != e.from || alg.target(idx) != e.to) throw InternalError("component entry outside its block");
      out[e.offset + alg.block_position(idx)] = c;
    }
  }
  return out;
}

bool ChainMapSpace::is_chain_map(const std::vector<Scalar>& coords) const {
  if (unknowns_ == 0) return true;
  const auto& f = q_.algebra().field();
  return multiply(f, chain_system_, from_columns(unknowns_, {coords})).is_zero();
}

bool ChainMapSpace::is_null_homotopic(const std::vector<Scalar>& coords) const {
  if (std::all_of(coords.begin(), coords.end(), [](Scalar x) { return x == 0; })) return true;
  if (homotopy_basis_.empty()) return false;
  return solve(q_.algebra().field(), from_columns(unknowns_, homotopy_basis_), coords).has_value();
}

std::vector<Scalar> ChainMapSpace::reduce(const std::vector<Scalar>& coords) const {
  std::vector<Scalar> out(quotient_.size(), 0);
  if (quotient_.empty()) return out;
  auto x = solve(q_.algebra().field(), reduce_system_, coords);
  if (!x) throw InternalError("reduce called on a vector that is not a chain map");
  std::copy(x->begin() + homotopy_basis_.size(), x->end(), out.begin());
  return out;
}

int hom_complex_dim(const ProjComplex& q, const ProjComplex& r, int shift) {
  return ChainMapSpace(q, r, shift).dim();
}

std::vector<Scalar> compose_chain_maps(const ChainMapSpace& first, const std::vector<Scalar>& a,
                                       const ChainMapSpace& second, const std::vector<Scalar>& b,
                                       const ChainMapSpace& result) {
  const ProjComplex& x = first.source();
  const Algebra& alg = x.algebra();
  auto phi = first.components(a);
  auto psi = second.components(b);
  const ProjComplex& y = second.source();
  std::vector<AlgMatrix> out;
  for (int d = x.lowest(); d <= x.highest(); ++d) {
    int yd = d + first.shift();
    AlgMatrix m(x.term(d), result.target().term(d + result.shift()));
    if (!y.empty() && yd >= y.lowest() && yd <= y.highest())
      m = multiply(alg, phi[d - x.lowest()], psi[yd - y.lowest()]);
    out.push_back(std::move(m));
  }
  return result.coordinates(out);
}

Matrix scalar_part(const Algebra& alg, const AlgMatrix& m) {
  Matrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m.row_proj[r] != m.col_proj[c]) continue;
      std::size_t e = alg.idempotent(m.row_proj[r]);
      for (const auto& [idx, v] : m.at(r, c))
        if (idx == e) out(r, c) = v;
    }
  return out;
}

namespace {

std::vector<std::vector<int>> shape(const ProjComplex& x) {
  std::vector<std::vector<int>> s;
  for (int d = x.lowest(); d <= x.highest(); ++d) {
    auto t = x.term(d);
    std::sort(t.begin(), t.end());
    s.push_back(t);
  }
  return s;
}

}  // namespace

bool complexes_isomorphic(const ProjComplex& x, const ProjComplex& y) {
  if (x.empty() || y.empty()) return x.empty() && y.empty();
  if (x.lowest() != y.lowest() || shape(x) != shape(y)) return false;
  ChainMapSpace space(x, y, 0);
  const Algebra& alg = x.algebra();
  for (const auto& v : space.quotient_basis()) {
    bool ok = true;
    for (const auto& comp : space.components(v))
      if (!is_invertible(alg.field(), scalar_part(alg, comp))) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

bool is_partial_tilting(const ProjComplex& t) {
  if (t.empty()) return true;
  int span = t.highest() - t.lowest();
  for (int s = -span; s <= span; ++s)
    if (s != 0 && hom_complex_dim(t, t, s) != 0) return false;
  return true;
}

int count_isoclasses(const ProjComplex& t) {
  std::vector<std::pair<SummandLabel, ProjComplex>> reps;
  for (std::size_t i = 0; i < t.summands().size(); ++i) {
    const auto& label = t.summands()[i].label;
    ProjComplex s = t.summand(i);
    bool found = false;
    for (const auto& [l, c] : reps)
      if (l == label || complexes_isomorphic(c, s)) {
        found = true;
        break;
      }
    if (!found) reps.emplace_back(label, std::move(s));
  }
  return static_cast<int>(reps.size());
}

bool is_tilting(const ProjComplex& t) {
  if (t.summands().empty()) throw InputError("tilting test needs declared summands");
  return is_partial_tilting(t) && count_isoclasses(t) == t.algebra().num_simples();
}

int hom_to_module(const ProjComplex& t, const Representation& m) {
  if (!t.algebra().same_as(m.algebra())) throw InputError("complex and module over different algebras");
  if (t.empty()) return 0;
  if (t.highest() - t.lowest() > 1) throw InputError("hom_to_module needs a two-term complex");
  const Algebra& alg = t.algebra();
  const auto& p0 = t.term(t.lowest());
  const auto& p1 = t.term(t.lowest() + 1);
  AlgMatrix f = t.differential(t.lowest());
  std::vector<std::size_t> roff{0}, coff{0};
  for (int a : p0) roff.push_back(roff.back() + m.dim(a));
  for (int b : p1) coff.push_back(coff.back() + m.dim(b));
  Matrix phi(roff.back(), coff.back());
  for (std::size_t r = 0; r < p0.size(); ++r)
    for (std::size_t c = 0; c < p1.size(); ++c) {
      if (f.at(r, c).empty()) continue;
      Matrix blk = m.action(f.at(r, c), p0[r], p1[c]);
      for (std::size_t i = 0; i < blk.rows(); ++i)
        for (std::size_t j = 0; j < blk.cols(); ++j) phi(roff[r] + i, coff[c] + j) = blk(i, j);
    }
  return static_cast<int>(roff.back() - rank(alg.field(), phi));
}

bool prop1_check(const Representation& m) {
  if (has_projective_summand(m)) throw PreconditionError("module has a projective summand");
  Representation om2 = syzygy(syzygy(m));
  if (hom_dim(m, om2) != 0) return false;
  return hom_to_module(min_proj_presentation(m), m) == 0;
}

bool prop2_stalk_check(const Representation& m, int simple, int degree) {
  if (degree != 0 && degree != 1) throw InputError("stalk degree must be 0 or 1");
  if (!is_partial_tilting(min_proj_presentation(m))) throw PreconditionError("presentation is not partial tilting");
  Representation p = projective_rep(m.algebra(), simple);
  Representation x = degree == 0 ? m : syzygy(syzygy(m));
  return hom_dim(x, p) == 0 && hom_dim(p, x) == 0;
}

int happel_pairing(const ProjComplex& q, const ProjComplex& r) {
  if (q.empty() || r.empty()) return 0;
  const auto& c = q.algebra().cartan();
  int total = 0;
  for (int a = q.lowest(); a <= q.highest(); ++a)
    for (int b = r.lowest(); b <= r.highest(); ++b) {
      int sign = ((a - b) % 2 == 0) ? 1 : -1;
      for (int x : q.term(a))
        for (int y : r.term(b)) total += sign * c[y][x];
    }
  return total;
}

Representation cokernel(const ProjComplex& t) {
  const Algebra& alg = t.algebra();
  if (t.empty()) return zero_module(alg);
  if (t.highest() - t.lowest() > 1) throw InputError("cokernel needs a two-term complex");
  const auto& p0 = t.term(t.lowest());
  const auto& p1 = t.term(t.highest());
  if (t.highest() == t.lowest() && !p0.empty()) {
    std::vector<Representation> parts;
    for (int b : p0) parts.push_back(projective_rep(alg, b));
    return direct_sum(parts);
  }
  std::vector<Representation> parts;
  for (int b : p1) parts.push_back(projective_rep(alg, b));
  Representation top = direct_sum(parts);
  AlgMatrix f = t.differential(t.lowest());
  auto off = component_offsets(alg, p1);
  const int n = alg.num_simples();
  std::vector<std::vector<std::vector<Scalar>>> span(n);
  for (std::size_t r = 0; r < p0.size(); ++r)
    for (int s = 0; s < n; ++s)
      for (std::size_t q : alg.block(s, p0[r])) {
        std::vector<Scalar> v(top.dim(s), 0);
        bool nonzero = false;
        for (std::size_t c = 0; c < p1.size(); ++c)
          for (const auto& [idx, coef] : f.at(r, c))
            if (auto prod = alg.product(q, idx)) {
              Scalar& x = v[off[s][c] + alg.block_position(*prod)];
              x = alg.field().add(x, coef);
              nonzero = true;
            }
        if (nonzero) span[s].push_back(std::move(v));
      }
  Representation out = quotient(top, span);
  out.set_name("coker");
  return out;
}

ProjComplex decompose_two_term(const ProjComplex& t) {
  const Algebra& alg = t.algebra();
  if (t.empty() || t.highest() == t.lowest()) return t;
  if (t.highest() - t.lowest() > 1) throw InputError("decomposition needs a two-term complex");
  const int lo = t.lowest();
  const int n = alg.num_simples();
  Representation m = cokernel(t);
  std::vector<ProjComplex> parts;
  std::vector<int> have0(n, 0), have1(n, 0), pres0(n, 0), pres1(n, 0);
  for (int a : t.term(lo)) ++have0[a];
  for (int b : t.term(lo + 1)) ++have1[b];
  if (!m.is_zero()) {
    ProjComplex d = projective_presentation(m, lo);
    for (int a : d.term(lo)) ++pres0[a];
    for (int b : d.term(lo + 1)) ++pres1[b];
    parts.push_back(std::move(d));
  }
  for (int i = 0; i < n; ++i) {
    int mult = (have0[i] - pres0[i]) - (have1[i] - pres1[i]);
    if (mult < 0 || have1[i] < pres1[i]) throw InternalError("two-term decomposition has negative multiplicity");
    for (int k = 0; k < mult; ++k) parts.push_back(stalk(alg, i, lo));
  }
  if (parts.empty()) return ProjComplex(alg, lo, {}, {}, {});
  return direct_sum(parts);
}

}  // namespace brauer
