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


#include "brauer/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "brauer/endo.hpp"
#include "brauer/error.hpp"
#include "brauer/io.hpp"
#include "brauer/realization.hpp"
#include "brauer/star_tilting.hpp"

namespace brauer {

void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& fn) {
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr err;
  std::mutex mu;
  std::vector<std::thread> pool;
  for (int w = 0; w < std::min<int>(workers, static_cast<int>(count)); ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(mu);
          if (!err) err = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

namespace {

constexpr std::size_t kMaxCounterexamples = 8;

class Tally {
 public:
  explicit Tally(std::string name) : start_(std::chrono::steady_clock::now()) { res_.name = std::move(name); }

  void check(bool ok, const std::function<std::string()>& what) {
    std::lock_guard<std::mutex> lock(mu_);
    ++res_.checked;
    if (ok) return;
    ++res_.failures;
    if (res_.counterexamples.size() < kMaxCounterexamples) res_.counterexamples.push_back(what());
  }
  std::ostringstream& fp() { return fp_; }

  SuiteResult finish() {
    res_.pass = res_.failures == 0 && res_.checked > 0;
    res_.fingerprint = fp_.str();
    res_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return res_;
  }

 private:
  SuiteResult res_;
  std::ostringstream fp_;
  std::mutex mu_;
  std::chrono::steady_clock::time_point start_;
};

int cap(const VerifyOptions& opt, int def) { return opt.max_n > 0 ? std::min(opt.max_n, def) : def; }

struct NamedAlgebra {
  std::string name;
  Algebra alg;
};

std::vector<NamedAlgebra> stars(int max_n, int max_k, Scalar p) {
  std::vector<NamedAlgebra> out;
  for (int n = 1; n <= max_n; ++n)
    for (int k = 1; k <= max_k; ++k)
      out.push_back({"star(" + std::to_string(n) + "," + std::to_string(k) + ")", Algebra::star(n, k, p)});
  return out;
}

std::vector<NamedAlgebra> trees_mult1(int max_n, Scalar p) {
  std::vector<NamedAlgebra> out;
  for (int n = 1; n <= max_n; ++n)
    for (const auto& t : enumerate_brauer_trees(n, 1)) out.push_back({"tree" + canonical_form(t), Algebra::from_tree(t, p)});
  return out;
}

Representation projective_mod_socle(const Algebra& a, int i) {
  auto p = projective_rep(a, i);
  std::vector<std::vector<std::vector<Scalar>>> soc(a.num_simples());
  std::vector<Scalar> z(p.dim(i), 0);
  z[a.block_position(a.socle(i))] = 1;
  soc[i].push_back(z);
  return quotient(p, soc);
}

ProjComplex random_two_term(const Algebra& a, std::mt19937_64& rng) {
  const int n = a.num_simples();
  std::vector<int> p0(1 + rng() % 3), p1(1 + rng() % 2);
  for (auto& x : p0) x = static_cast<int>(rng() % n);
  for (auto& x : p1) x = static_cast<int>(rng() % n);
  AlgMatrix f(p0, p1);
  for (std::size_t r = 0; r < p0.size(); ++r)
    for (std::size_t c = 0; c < p1.size(); ++c)
      for (std::size_t idx : a.block(p0[r], p1[c]))
        if (a.basis(idx).kind != PathKind::Idempotent && rng() % 2) f.at(r, c).emplace_back(idx, 1);
  return ProjComplex(a, 0, {p0, p1}, {f});
}

struct TiltingSet {
  int n, k;
  Algebra star;
  std::vector<ProjComplex> from_coverings;  // A, A[-1], then coverings in canonical order
};

TiltingSet tilting_set(int n, int k, Scalar p) {
  TiltingSet s{n, k, Algebra::star(n, k, p), {}};
  s.from_coverings.push_back(regular_complex(s.star, 0));
  s.from_coverings.push_back(regular_complex(s.star, 1));
  for (const auto& c : enumerate_coverings(n)) s.from_coverings.push_back(covering_to_complex(c, s.star));
  return s;
}

const std::vector<std::pair<int, int>> kBijectionSizes = {{2, 1}, {3, 1}, {4, 1}, {5, 1}, {2, 2}, {3, 2}};

}  // namespace

SuiteResult verify_prop1(const VerifyOptions& opt) {
  Tally t("prop1");
  auto algs = stars(cap(opt, 5), 3, opt.prime);
  for (auto& a : trees_mult1(cap(opt, 4), opt.prime)) algs.push_back(std::move(a));
  std::vector<std::string> fps(algs.size());
  parallel_for(algs.size(), opt.workers, [&](std::size_t i) {
    int agree = 0, pt = 0;
    for (const auto& e : enumerate_indecomposables(algs[i].alg)) {
      if (e.projective) continue;
      bool lhs = prop1_check(e.module);
      bool rhs = is_partial_tilting(min_proj_presentation(e.module));
      pt += rhs;
      agree += lhs == rhs;
      t.check(lhs == rhs, [&] { return algs[i].name + " " + e.module.name(); });
    }
    fps[i] = algs[i].name + ":" + std::to_string(pt) + "/" + std::to_string(agree) + ";";
  });
  for (const auto& f : fps) t.fp() << f;
  return t.finish();
}

SuiteResult verify_theorem1(const VerifyOptions& opt) {
  Tally t("theorem1");
  auto algs = trees_mult1(cap(opt, 4), opt.prime);
  std::vector<std::string> fps(algs.size());
  parallel_for(algs.size(), opt.workers, [&](std::size_t i) {
    const Algebra& a = algs[i].alg;
    const int n = a.num_simples();
    std::vector<Representation> quotients;
    for (int s = 0; s < n; ++s) quotients.push_back(projective_mod_socle(a, s));
    std::set<int> matched;
    int failures = 0;
    bool all_match = true;
    for (const auto& e : enumerate_indecomposables(a)) {
      if (e.projective || is_partial_tilting(presentation_of(e))) continue;
      ++failures;
      int hit = -1;
      for (int s = 0; s < n && hit < 0; ++s)
        if (is_isomorphic(e.module, quotients[s])) hit = s;
      if (hit < 0) all_match = false;
      else matched.insert(hit);
    }
    bool ok = all_match && failures == n && static_cast<int>(matched.size()) == n;
    t.check(ok, [&] {
      return algs[i].name + ": " + std::to_string(failures) + " failures, " + std::to_string(matched.size()) +
             " matched P/soc P";
    });
    fps[i] = std::to_string(failures) + ",";
  });
  for (const auto& f : fps) t.fp() << f;
  return t.finish();
}

SuiteResult verify_prop3(const VerifyOptions& opt) {
  Tally t("prop3");
  for (const auto& [name, a] : stars(cap(opt, 5), 3, opt.prime)) {
    const int n = a.num_simples(), k = a.multiplicity();
    int pt = 0;
    for (int top = 0; top < n; ++top)
      for (int l = 1; l <= n * k; ++l) {
        bool got = is_partial_tilting(uniserial_presentation(a, {top, l}));
        pt += got;
        t.check(got == (l < n), [&, top = top, l = l] {
          return name + " top " + std::to_string(a.edge_id(top)) + " length " + std::to_string(l);
        });
      }
    t.fp() << name << ":" << pt << ";";
  }
  return t.finish();
}

SuiteResult verify_remark1(const VerifyOptions& opt) {
  Tally t("remark1");
  std::vector<ProjComplex> corpus;
  const int nmax = cap(opt, 4);
  for (int n = 2; n <= nmax; ++n)
    for (int k = 1; k <= 2; ++k) {
      auto s = tilting_set(n, k, opt.prime);
      for (auto& c : s.from_coverings) corpus.push_back(std::move(c));
    }
  auto algs = trees_mult1(std::min(nmax, 3), opt.prime);
  for (auto& a : stars(std::min(nmax, 3), 2, opt.prime)) algs.push_back(std::move(a));
  std::vector<ProjComplex> pres;
  for (const auto& na : algs)
    for (const auto& e : enumerate_indecomposables(na.alg))
      if (!e.projective) pres.push_back(presentation_of(e));
  for (const auto& p : pres) corpus.push_back(p);
  std::mt19937_64 rng(opt.seed);
  for (int r = 0; r < 120 && !pres.empty(); ++r) {
    const auto& x = pres[rng() % pres.size()];
    std::vector<const ProjComplex*> same;
    for (const auto& p : pres)
      if (p.algebra().same_as(x.algebra())) same.push_back(&p);
    const auto& y = *same[rng() % same.size()];
    corpus.push_back(direct_sum({x, y.shifted(rng() % 2 ? 1 : -1)}));
  }
  for (const auto& na : algs)
    for (int r = 0; r < 12; ++r) corpus.push_back(random_two_term(na.alg, rng));
  const std::size_t min_corpus = 500;
  t.check(opt.max_n > 0 || corpus.size() >= min_corpus,
          [&] { return "corpus has only " + std::to_string(corpus.size()) + " complexes"; });
  std::vector<std::pair<int, int>> dims(corpus.size());
  parallel_for(corpus.size(), opt.workers, [&](std::size_t i) {
    dims[i] = {hom_complex_dim(corpus[i], corpus[i], 1), hom_complex_dim(corpus[i], corpus[i], -1)};
    t.check(dims[i].first == dims[i].second, [&] {
      return corpus[i].describe() + ": " + std::to_string(dims[i].first) + " vs " + std::to_string(dims[i].second);
    });
  });
  long total = 0;
  for (auto [a, b] : dims) total += a;
  t.fp() << corpus.size() << ":" << total;
  return t.finish();
}

SuiteResult verify_prop4(const VerifyOptions& opt) {
  Tally t("prop4");
  for (auto [n, k] : kBijectionSizes) {
    if (n > cap(opt, 5)) continue;
    auto s = tilting_set(n, k, opt.prime);
    auto bf = enumerate_two_term_tilting_bruteforce(s.star);
    std::set<std::string> brute, mapped;
    for (const auto& c : bf.complexes) brute.insert(complex_key(c));
    std::size_t images = 0;
    for (std::size_t i = 2; i < s.from_coverings.size(); ++i) {
      mapped.insert(complex_key(s.from_coverings[i]));
      ++images;
    }
    std::string tag = "star(" + std::to_string(n) + "," + std::to_string(k) + ")";
    t.check(bf.complexes.size() == images + 2, [&] {
      return tag + ": brute force " + std::to_string(bf.complexes.size()) + ", coverings " + std::to_string(images);
    });
    t.check(mapped.size() == images, [&] { return tag + ": covering map is not injective"; });
    mapped.insert(complex_key(s.from_coverings[0]));
    mapped.insert(complex_key(s.from_coverings[1]));
    t.check(mapped == brute, [&] { return tag + ": image differs from the brute-force set"; });
    bool tilting = std::all_of(s.from_coverings.begin(), s.from_coverings.end(), [](const ProjComplex& c) { return is_tilting(c); });
    t.check(tilting, [&] { return tag + ": a covering complex is not tilting"; });
    t.fp() << tag << ":" << bf.complexes.size() << "/" << images << "/" << bf.catalog_size << "/" << bf.cliques << ";";
  }
  return t.finish();
}

SuiteResult verify_tables(const VerifyOptions& opt) {
  Tally t("tables");
  const std::vector<std::pair<int, int>> sizes = {{4, 1}, {5, 1}, {3, 2}};
  for (auto [n, k] : sizes) {
    if (n > cap(opt, 5)) continue;
    Algebra a = Algebra::star(n, k, opt.prime);
    StarFrame fr(a);
    std::string tag = "star(" + std::to_string(n) + "," + std::to_string(k) + ")";
    // Intervals of size >= 2 in descending form (i, ..., j).
    struct Iv {
      CyclicInterval iv;
      int i, j;
      UniserialSpec m;
      ProjComplex c;
    };
    std::vector<Iv> ivs;
    for (int start = 0; start < n; ++start)
      for (int size = 2; size <= n; ++size) {
        CyclicInterval iv{start, size};
        auto m = interval_module(fr, iv);
        ivs.push_back({iv, iv.last(n), start, m, uniserial_presentation(a, m)});
      }
    std::map<int, int> hist;
    for (const auto& x : ivs)
      for (const auto& y : ivs) {
        auto px = x.iv.positions(n), py = y.iv.positions(n);
        std::set<int> sx(px.begin(), px.end()), sy(py.begin(), py.end());
        bool disjoint = std::none_of(px.begin(), px.end(), [&](int p) { return sy.count(p); });
        auto inside = [&](const CyclicInterval& u, const CyclicInterval& v) {
          int off = ((u.start - v.start) % n + n) % n;
          return off + u.size <= v.size;
        };
        int want;
        if (disjoint)
          want = 0;
        else if (x.iv == y.iv)
          want = 2;
        else if (inside(x.iv, y.iv) || inside(y.iv, x.iv))
          want = (x.i == y.i || x.j == y.j) ? 1 : 0;
        else
          continue;  // crossing pairs never meet in a covering
        int got = hom_complex_dim(x.c, y.c, 0);
        ++hist[got];
        t.check(got == want, [&] {
          return tag + " Hom(" + x.c.describe() + ", " + y.c.describe() + ") = " + std::to_string(got) + ", table " +
                 std::to_string(want);
        });
      }
    for (int deg : {0, 1})
      for (int m = 0; m < n; ++m)
        for (int r = 0; r < n; ++r) {
          int got = hom_complex_dim(stalk(a, fr.simple_at(m), deg), stalk(a, fr.simple_at(r), deg), 0);
          ++hist[100 + got];
          t.check(got == (m == r ? k + 1 : k), [&] { return tag + " stalk pair"; });
        }
    for (int deg : {0, 1})
      for (const auto& x : ivs)
        for (int m = 0; m < n; ++m) {
          if (!compatible_stalk(a, x.m, fr.simple_at(m), deg)) continue;
          auto st = stalk(a, fr.simple_at(m), deg);
          int special = deg == 0 ? x.j : x.i;
          int want = m == special ? 1 : 0;
          int to = hom_complex_dim(st, x.c, 0), from = hom_complex_dim(x.c, st, 0);
          ++hist[200 + to];
          t.check(to == want && from == want, [&] {
            return tag + " mixed deg" + std::to_string(deg) + " " + x.c.describe() + " vs P" +
                   std::to_string(fr.edge_at(m)) + ": " + std::to_string(to) + "/" + std::to_string(from);
          });
        }
    t.fp() << tag;
    for (auto [v, c] : hist) t.fp() << " " << v << ":" << c;
    t.fp() << ";";
  }
  return t.finish();
}

SuiteResult verify_happel(const VerifyOptions& opt) {
  Tally t("happel");
  for (auto [n, k] : kBijectionSizes) {
    if (n > cap(opt, 5)) continue;
    auto s = tilting_set(n, k, opt.prime);
    long total = 0;
    for (const auto& c : s.from_coverings) {
      std::vector<ProjComplex> parts;
      for (std::size_t i = 0; i < c.summands().size(); ++i) parts.push_back(c.summand(i));
      for (const auto& x : parts)
        for (const auto& y : parts) {
          int h = hom_complex_dim(x, y, 0), p = happel_pairing(x, y);
          total += h;
          t.check(h == p, [&] { return x.describe() + " vs " + y.describe(); });
        }
    }
    t.fp() << n << "," << k << ":" << total << ";";
  }
  return t.finish();
}

ExampleOutput run_example1(Scalar prime) {
  Algebra a = Algebra::from_tree(star_tree(4, 1).mirrored(), prime);
  Covering c = covering_from_json(a, Json::parse(R"({"outer":[{"tuple":[1,2,3,4]}],
      "inner":{"0":[{"tuple":[2,3,4]},{"tuple":[2,3]}]},"mode":"deg1"})"));
  ProjComplex t = covering_to_complex(c, a);
  ExampleOutput out;
  for (const auto& s : t.summands()) out.summands.push_back(s.label.text);
  std::sort(out.summands.begin(), out.summands.end());
  EndoAlgebra e(t);
  const std::map<std::string, std::string> names = {{"P4->P1", "a"}, {"P4->P2", "b"}, {"P3->P2", "c"}, {"P1@1", "d"}};
  std::vector<std::string> vn;
  for (int i = 0; i < e.size(); ++i) {
    auto it = names.find(e.label(i));
    vn.push_back(it == names.end() ? e.label(i) : it->second);
  }
  out.quiver = quiver_text(e, vn);
  EndoTree r = endo_brauer_tree(t);
  out.tree_form = canonical_form(r.tree, true);
  out.complex_json = complex_to_json(t).dump(2) + "\n";
  out.tree_dot = tree_to_dot(r.tree, r.edge_labels);
  return out;
}

SuiteResult verify_example1(const VerifyOptions& opt) {
  Tally t("example1");
  ExampleOutput out = run_example1(opt.prime);
  const std::vector<std::string> published = {"P1@1", "P3->P2", "P4->P1", "P4->P2"};
  t.check(out.summands == published, [&] {
    std::string s;
    for (const auto& x : out.summands) s += x + " ";
    return "summands " + s;
  });
  t.check(out.quiver == "d ⇄ a ⇄ b ⇄ c", [&] { return "quiver " + out.quiver; });
  BrauerTree line;
  for (int v = 0; v <= 4; ++v) line.vertices.push_back(v);
  for (int i = 1; i <= 4; ++i) {
    line.edges.push_back({i, {i - 1, i}});
    line.cyclic_order[i - 1].push_back(i);
    line.cyclic_order[i].push_back(i);
  }
  t.check(out.tree_form == canonical_form(line, true), [&] { return "tree " + out.tree_form; });
  t.fp() << out.quiver << "|" << out.tree_form;
  return t.finish();
}

SuiteResult verify_prop5(const VerifyOptions& opt) {
  Tally t("prop5");
  std::vector<BrauerTree> trees;
  for (int n = 1; n <= cap(opt, 4); ++n)
    for (int k = 1; k <= 2; ++k)
      for (const auto& g : enumerate_brauer_trees(n, k)) {
        // Every choice of first edge at the root.
        BrauerTree h = g;
        auto& ord = h.cyclic_order[h.exceptional];
        for (std::size_t r = 0; r < ord.size(); ++r) {
          trees.push_back(h);
          std::rotate(ord.begin(), ord.begin() + 1, ord.end());
        }
      }
  std::vector<std::string> fps(trees.size());
  parallel_for(trees.size(), opt.workers, [&](std::size_t i) {
    for (int deg : {0, 1}) {
      bool ok = false;
      std::string why;
      try {
        ProjComplex c = realize(trees[i], deg, opt.prime);
        ok = isomorphic(endo_brauer_tree(c).tree, trees[i]);
        if (deg == 0) fps[i] = complex_key(c) + ";";
      } catch (const std::exception& e) {
        why = e.what();
      }
      t.check(ok, [&] { return canonical_form(trees[i]) + " degree " + std::to_string(deg) + " " + why; });
    }
  });
  t.fp() << trees.size() << ":";
  for (const auto& f : fps) t.fp() << f;
  return t.finish();
}

SuiteResult verify_remark2(const VerifyOptions& opt) {
  Tally t("remark2");
  for (int n = 2; n <= cap(opt, 5); ++n) {
    Algebra s1 = Algebra::star(n, 1, opt.prime);
    Algebra s2 = Algebra::star(n, 2, opt.prime);
    std::set<std::string> expected;
    for (int a = 0; a < n; ++a) {
      Covering c0{n, {{a, n}}, {{}}, CoveringMode::Deg0};
      Covering c1{n, {{(a + 1) % n, n}}, {{}}, CoveringMode::Deg1};
      for (int r = 2; r < n; ++r) {
        c0.inner[0].push_back({a, r});
        c1.inner[0].push_back({((a - r + 1) % n + n) % n, r});
      }
      c0.normalize();
      c1.normalize();
      expected.insert(c0.key());
      expected.insert(c1.key());
    }
    std::set<std::string> hits;
    int hits2 = 0;
    for (const auto& c : enumerate_coverings(n)) {
      if (remark2_autoequivalence_check(c, s1)) hits.insert(c.key());
      if (remark2_autoequivalence_check(c, s2)) ++hits2;
    }
    t.check(hits.size() == static_cast<std::size_t>(2 * n) && hits == expected, [&] {
      std::string s;
      for (const auto& h : hits) s += "[" + h + "] ";
      return "star(" + std::to_string(n) + ",1) autoequivalences: " + s;
    });
    t.check(hits2 == 0, [&] { return "star(" + std::to_string(n) + ",2): " + std::to_string(hits2) + " nontrivial"; });
    t.check(remark2_autoequivalence_check(trivial_covering(n, CoveringMode::Deg0), s1) &&
                remark2_autoequivalence_check(trivial_covering(n, CoveringMode::Deg1), s2),
            [&] { return "trivial covering"; });
    t.fp() << n << ":" << hits.size() << "/" << hits2 << ";";
  }
  return t.finish();
}

const std::vector<SuiteEntry>& verify_suites() {
  static const std::vector<SuiteEntry> suites = {
      {"prop1", verify_prop1},   {"theorem1", verify_theorem1}, {"prop3", verify_prop3},
      {"remark1", verify_remark1}, {"prop4", verify_prop4},     {"tables", verify_tables},
      {"happel", verify_happel}, {"example1", verify_example1}, {"prop5", verify_prop5},
      {"remark2", verify_remark2},
  };
  return suites;
}

}  // namespace brauer
