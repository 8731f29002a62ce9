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


// Command-line front end. Exit codes: 0 pass, 1 verification failure,
// 2 input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <set>

#include "brauer/endo.hpp"
#include "brauer/error.hpp"
#include "brauer/io.hpp"
#include "brauer/realization.hpp"
#include "brauer/star_tilting.hpp"
#include "brauer/verify.hpp"

namespace {

using namespace brauer;

struct Globals {
  Scalar prime = kDefaultPrime;
  int max_n = 0;
  bool json = false;
  bool dot = false;
  std::uint64_t seed = 1;
  int workers = 1;
};

void print_matrix(std::ostream& os, const std::vector<std::vector<int>>& m) {
  for (const auto& row : m) {
    os << " ";
    for (int x : row) os << " " << x;
    os << "\n";
  }
}

int cmd_algebra(const Globals& g, const std::string& path) {
  BrauerTree tree = tree_from_json(read_json_file(path));
  Algebra a = Algebra::from_tree(tree, g.prime);
  std::map<std::string, int> kinds;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    switch (a.basis(i).kind) {
      case PathKind::Idempotent: ++kinds["idempotent"]; break;
      case PathKind::Proper: ++kinds["proper"]; break;
      case PathKind::Socle: ++kinds["socle"]; break;
    }
  }
  std::vector<int> pdims;
  for (int s = 0; s < a.num_simples(); ++s) pdims.push_back(a.projective_dim(s));
  if (g.json) {
    Json j;
    j["edges"] = a.num_simples();
    j["multiplicity"] = tree.multiplicity;
    j["field_prime"] = g.prime;
    j["dim"] = a.dim();
    j["projective_dims"] = pdims;
    j["cartan"] = a.cartan();
    j["basis"] = kinds;
    j["arrows"] = a.arrows().size();
    j["star"] = a.is_star();
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "edges: " << a.num_simples() << "  multiplicity: " << tree.multiplicity << "  field: F_" << g.prime
            << (a.is_star() ? "  (star)" : "") << "\n";
  std::cout << "dim: " << a.dim() << "\nprojective dims:";
  for (int s = 0; s < a.num_simples(); ++s) std::cout << " P" << a.edge_id(s) << "=" << pdims[s];
  std::cout << "\ncartan:\n";
  print_matrix(std::cout, a.cartan());
  std::cout << "basis: " << kinds["idempotent"] << " idempotents, " << kinds["proper"] << " proper paths, "
            << kinds["socle"] << " socle elements; " << a.arrows().size() << " arrows\n";
  return 0;
}

int cmd_enumerate(const Globals& g, int n, int k, const std::string& mode) {
  if (mode != "brute" && mode != "coverings" && mode != "both") throw InputError("mode must be brute, coverings or both");
  Algebra star = Algebra::star(n, k, g.prime);
  const int max_n = g.max_n > 0 ? g.max_n : 5;
  std::vector<std::string> cov_keys, brute_keys;
  std::vector<std::string> cov_lines;
  if (mode != "brute") {
    for (int deg : {0, 1}) {
      cov_keys.push_back(complex_key(regular_complex(star, deg)));
      cov_lines.push_back("trivial deg" + std::to_string(deg) + "  =>  " + cov_keys.back());
    }
    for (const auto& c : enumerate_coverings(n)) {
      cov_keys.push_back(complex_key(covering_to_complex(c, star)));
      cov_lines.push_back(c.key() + "  =>  " + cov_keys.back());
    }
  }
  if (mode != "coverings") {
    for (const auto& t : enumerate_two_term_tilting_bruteforce(star, max_n, 2).complexes)
      brute_keys.push_back(complex_key(t));
  }
  bool ok = true;
  if (mode == "both") {
    std::set<std::string> a(cov_keys.begin(), cov_keys.end()), b(brute_keys.begin(), brute_keys.end());
    ok = a == b && a.size() == cov_keys.size();
  }
  if (g.json) {
    Json j;
    j["n"] = n;
    j["k"] = k;
    j["mode"] = mode;
    if (mode != "brute") {
      j["coverings"] = cov_lines;
      j["covering_total"] = cov_keys.size();
    }
    if (mode != "coverings") {
      j["bruteforce"] = brute_keys;
      j["bruteforce_total"] = brute_keys.size();
    }
    if (mode == "both") j["match"] = ok;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& l : cov_lines) std::cout << l << "\n";
    if (mode == "brute")
      for (const auto& l : brute_keys) std::cout << l << "\n";
    if (mode != "brute") std::cout << "total (coverings + A, A[-1]): " << cov_keys.size() << "\n";
    if (mode != "coverings") std::cout << "total (brute force): " << brute_keys.size() << "\n";
    if (mode == "both") std::cout << (ok ? "match" : "MISMATCH") << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_verify(const Globals& g, const std::string& suite) {
  VerifyOptions opt{g.prime, g.max_n, g.seed, g.workers};
  std::vector<SuiteEntry> chosen;
  for (const auto& s : verify_suites())
    if (suite == "all" || s.name == suite) chosen.push_back(s);
  if (chosen.empty()) throw InputError("unknown suite '" + suite + "'");
  bool all = true;
  Json report = Json::array();
  for (const auto& s : chosen) {
    SuiteResult r = s.run(opt);
    all = all && r.pass;
    if (g.json) {
      report.push_back({{"suite", r.name},
                        {"pass", r.pass},
                        {"checked", r.checked},
                        {"failures", r.failures},
                        {"counterexamples", r.counterexamples},
                        {"fingerprint", r.fingerprint},
                        {"seconds", r.seconds}});
      continue;
    }
    std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << "  checked=" << r.checked << " failures=" << r.failures
              << "\n";
    for (const auto& c : r.counterexamples) std::cout << "  counterexample: " << c << "\n";
    if (r.name == "example1" && r.pass) std::cout << "  quiver: " << run_example1(g.prime).quiver << "\n";
  }
  if (g.json) std::cout << report.dump(2) << "\n";
  return all ? 0 : 1;
}

void print_endo(const Globals& g, const ProjComplex& t, const EndoTree& r) {
  bool both = !g.json && !g.dot;
  if (g.json || both) {
    Json j = endo_tree_to_json(r);
    j["complex"] = complex_to_json(t);
    std::cout << j.dump(2) << "\n";
  }
  if (g.dot || both) std::cout << tree_to_dot(r.tree, r.edge_labels);
  if (both) {
    for (const auto& c : r.cycles) {
      std::cout << "# cycle";
      for (const auto& l : c.labels) std::cout << " " << l;
      std::cout << (c.exceptional ? "  (exceptional)" : "") << "  witness: "
                << (c.witness_checked ? std::to_string(c.multiplicity * c.labels.size()) + " arrows nonzero, one more vanishes"
                                      : "no arrows")
                << "\n";
    }
  }
}

int cmd_endo(const Globals& g, const std::string& path, int n, int k, bool mirror) {
  BrauerTree base = star_tree(n, k);
  if (mirror) base = base.mirrored();
  Algebra star = Algebra::from_tree(base, g.prime);
  Covering c = covering_from_json(star, read_json_file(path));
  ProjComplex t = covering_to_complex(c, star);
  print_endo(g, t, endo_brauer_tree(t));
  return 0;
}

int cmd_realize(const Globals& g, const std::string& path, int degree) {
  BrauerTree tree = tree_from_json(read_json_file(path));
  ProjComplex t = realize(tree, degree, g.prime);
  EndoTree r = endo_brauer_tree(t);
  bool ok = isomorphic(r.tree, tree);
  print_endo(g, t, r);
  if (!ok) std::cerr << "End-tree does not match the input tree\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-term tilting complexes over Brauer tree algebras"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--field-prime", g.prime, "prime of the base field")->check(CLI::Range(2u, 46337u));
  app.add_option("--max-n", g.max_n, "cap on the number of edges in enumerations");
  app.add_flag("--json", g.json, "JSON output");
  app.add_flag("--dot", g.dot, "DOT output");
  app.add_option("--seed", g.seed, "seed for randomized isomorphism probes and corpora");
  app.add_option("--workers", g.workers, "worker threads for independent checks")->check(CLI::PositiveNumber);

  std::string tree_path;
  auto* alg = app.add_subcommand("algebra", "report dimensions, Cartan matrix and basis of a tree algebra");
  alg->add_option("tree", tree_path, "tree JSON")->required();

  int n = 0, k = 1;
  std::string mode = "both";
  auto* en = app.add_subcommand("enumerate", "list two-term tilting complexes over star(n, k)");
  en->add_option("n", n)->required()->check(CLI::PositiveNumber);
  en->add_option("k", k)->check(CLI::PositiveNumber);
  en->add_option("--mode", mode, "brute, coverings or both");

  std::string suite;
  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("suite", suite, "prop1 theorem1 prop3 remark1 prop4 tables happel example1 prop5 remark2 all")
      ->required();

  std::string cov_path;
  bool mirror = false;
  auto* endo = app.add_subcommand("endo", "Brauer tree of End(T) for a covering");
  endo->add_option("covering", cov_path, "covering JSON")->required();
  endo->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  endo->add_option("--k", k)->check(CLI::PositiveNumber);
  endo->add_flag("--mirror", mirror, "read the star with the reversed cyclic order");

  int degree = 0;
  auto* real = app.add_subcommand("realize", "tilting complex over the star whose End has the given tree");
  real->add_option("--tree", tree_path, "tree JSON")->required();
  real->add_option("--degree", degree, "degree of the stalks (0 or 1)");

  for (auto* sub : {alg, en, ver, endo, real}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    if (*alg) return cmd_algebra(g, tree_path);
    if (*en) return cmd_enumerate(g, n, k, mode);
    if (*ver) return cmd_verify(g, suite);
    if (*endo) return cmd_endo(g, cov_path, n, k, mirror);
    if (*real) return cmd_realize(g, tree_path, degree);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
