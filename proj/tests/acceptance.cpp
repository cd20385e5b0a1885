// Acceptance run: one line per criterion, exit status 1 if any criterion fails.
#include "polytor/character.hpp"
#include "polytor/shenlarsson.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <sys/wait.h>

using namespace polytor;

namespace {

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back("FAILED " + what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

AlgebraConfig cfg(XKind x, int n, int D) { return AlgebraConfig{x, n, 2, D}; }

LabeledWeight with_mu(const AlgebraConfig& c, int k) {
  LabeledWeight lw = trivial_weight(c);
  lw.mu = mu_k(c.xkind, c.n, k);
  return lw;
}

// lambda = omega, mu = eps_1, c = (1, 0, ...)
LabeledWeight generic(const AlgebraConfig& c) {
  LabeledWeight lw = with_mu(c, 1);
  lw.lambda = {1};
  lw.c[0] = 1;
  return lw;
}

std::string first_violation(const Report& r) {
  if (r.passed()) return "";
  const auto& v = r.violations.front();
  return v.case_name + (v.detail.empty() ? "" : ": " + v.detail);
}

std::pair<int, std::string> run_cli(const std::string& args) {
  const std::string cmd = std::string(POLYTOR_CLI_PATH) + " " + args + " 2>&1";
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, ""};
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), got);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Outcome jacobi_and_closure() {
  Outcome o;
  for (auto c : {cfg(XKind::W, 2, 4), cfg(XKind::W, 3, 4), cfg(XKind::S, 3, 4), cfg(XKind::H, 2, 4)}) {
    ToroidalAlgebra alg(c);
    Report j = verify_jacobi(alg, 2, c.D);
    Report cl = verify_closure(alg, 3);
    o.require(j.passed(), describe(c) + " jacobi: " + first_violation(j));
    o.require(cl.passed(), describe(c) + " closure: " + first_violation(cl));
    o.note(describe(c) + ": " + std::to_string(j.checked) + " triples, " + std::to_string(cl.checked) + " closure pairs");
  }
  return o;
}

Outcome module_axioms() {
  Outcome o;
  for (auto c : {cfg(XKind::W, 2, 4), cfg(XKind::W, 3, 4), cfg(XKind::S, 3, 4), cfg(XKind::H, 2, 4)}) {
    SLModule m(c, generic(c));
    Report r = verify_module_axiom(m, c.D);
    o.require(r.passed(), describe(c) + ": " + first_violation(r));
    o.note(describe(c) + " " + generic(c).str() + ": " + std::to_string(r.checked) + " checks");
  }
  return o;
}

Outcome irreducibility() {
  Outcome o;
  for (auto c : {cfg(XKind::W, 2, 4), cfg(XKind::S, 3, 4), cfg(XKind::H, 2, 4)}) {
    LabeledWeight a = generic(c);
    LabeledWeight b = trivial_weight(c);
    b.c[0] = 1;
    LabeledWeight d = trivial_weight(c);
    d.lambda = {1};
    for (const auto& lw : {a, b, d}) {
      o.require(!exceptional_index(c, lw).has_value(), describe(c) + " " + lw.str() + " is exceptional");
      o.require(is_irreducible_to_depth(SLModule(c, lw)), describe(c) + " " + lw.str() + " does not fill");
    }
    const int top = c.xkind == XKind::H ? c.n / 2 : c.n - 1;
    for (int k = 0; k <= top; ++k) {
      SLModule m(c, with_mu(c, k));
      o.require(!is_irreducible_to_depth(m), describe(c) + " mu_" + std::to_string(k) + " fills");
    }
    o.note(describe(c) + ": 3 generic tuples fill, exceptional k = 0.." + std::to_string(top) + " do not");
  }
  return o;
}

Outcome composition() {
  Outcome o;
  struct Case {
    AlgebraConfig c;
    std::vector<int> ks;
  };
  for (const auto& [c, ks] : {Case{cfg(XKind::W, 2, 4), {0, 1}}, Case{cfg(XKind::S, 3, 4), {0, 1, 2}}, Case{cfg(XKind::H, 2, 4), {0, 1}}}) {
    for (int k : ks) {
      Composition comp = exceptional_composition(c, k);
      std::ostringstream f;
      for (const auto& x : comp.factors) f << " " << x.label << "@" << x.degree << "x" << x.multiplicity;
      f << " | claimed";
      for (const auto& [label, m] : comp.claimed) f << " " << label << "x" << m;
      bool balanced = true;
      for (const auto& row : comp.table) balanced = balanced && row.module_dim == row.formula_sum;
      f << (balanced ? " | formulas balance" : " | formulas do not balance");
      o.require(comp.report.passed(), describe(c) + " k=" + std::to_string(k) + ":" + f.str());
      if (comp.report.passed()) o.note(describe(c) + " k=" + std::to_string(k) + ":" + f.str());
    }
  }
  return o;
}

Outcome de_rham() {
  Outcome o;
  for (int n : {2, 3}) {
    AlgebraConfig c = cfg(XKind::W, n, 4);
    for (int k = 0; k <= n; ++k) {
      DeRhamCheck d = derham(c, k);
      o.require(d.report.passed(), describe(c) + " k=" + std::to_string(k) + ": " + first_violation(d.report));
    }
    o.note(describe(c) + ": k = 0.." + std::to_string(n) + " checked");
  }
  return o;
}

Outcome pairing_and_sigma() {
  Outcome o;
  auto mono = [](std::initializer_list<int> r) { return Poly(2, MultiIndex(r)); };
  PairingSet example{MultiIndex{1, 1},
                     {{Poly::constant(2, 1), mono({1, 1})}, {mono({0, 1}) * Rational(-1), mono({1, 0})},
                      {mono({1, 0}) * Rational(-1), mono({0, 1})}, {mono({1, 1}), Poly::constant(2, 1)}}};
  o.require(verify_pairing(example), "worked example set");
  long solved = 0;
  for (int n = 1; n <= 3; ++n)
    for (const auto& g : monomials_up_to(n, 3)) {
      o.require(verify_pairing(pairing_polynomials(n, g)), "solver output for " + g.str());
      ++solved;
    }
  o.note(std::to_string(solved) + " solver outputs verified");
  for (auto c : {cfg(XKind::W, 2, 4), cfg(XKind::S, 3, 4), cfg(XKind::H, 2, 4)}) {
    Report stated = sigma_recovery_sweep(c, generic(c), 2, SigmaReference::stated);
    Report derived = sigma_recovery_sweep(c, generic(c), 2, SigmaReference::derived);
    o.require(stated.passed(), describe(c) + " stated case values: " + std::to_string(stated.violations.size()) + " of " +
                                  std::to_string(stated.checked) + " vectors, first " + first_violation(stated));
    if (stated.passed()) o.note(describe(c) + " stated case values: pass (" + std::to_string(stated.checked) + " vectors)");
    o.note(describe(c) + " derived values: " + derived.status() + " (" + std::to_string(derived.checked) + " vectors)");
  }
  return o;
}

Outcome semi_infinite() {
  Outcome o;
  for (auto c : {cfg(XKind::W, 2, 2), cfg(XKind::S, 3, 2), cfg(XKind::H, 2, 2)}) {
    ToroidalAlgebra alg(c);
    Report r = verify_si2(alg);
    o.require(r.passed(), describe(c) + ": " + first_violation(r));
    if (c.xkind != XKind::W)
      for (const auto& e : alg.graded_slice(0).basis) o.require(semi_infinite_character(alg, e) == 0, describe(c) + " E nonzero");
    o.note(describe(c) + ": " + std::to_string(r.checked) + " pairs");
  }
  return o;
}

Outcome characters() {
  Outcome o;
  long modules = 0;
  for (auto c : {cfg(XKind::W, 2, 4), cfg(XKind::W, 3, 4), cfg(XKind::S, 3, 4), cfg(XKind::H, 2, 4)})
    for (const auto& lw : {trivial_weight(c), generic(c), with_mu(c, 1)}) {
      o.require(brute_character(SLModule(c, lw)) == ch_costandard(c, lw, c.D), describe(c) + " census " + lw.str());
      ++modules;
    }
  o.note(std::to_string(modules) + " module censuses");
  for (auto c : {cfg(XKind::W, 2, 2), cfg(XKind::S, 3, 2), cfg(XKind::H, 2, 2)})
    for (const auto& lw : {trivial_weight(c), generic(c)})
      o.require(pbw_census(c, lw) == ch_standard(c, lw, 2), describe(c) + " PBW " + lw.str());

  AlgebraConfig h = cfg(XKind::H, 4, 3);
  auto L = [&](int k) { return ch_irreducible(h, with_mu(h, k), 3); };
  auto G = [&](int k) { return ch_costandard(h, with_mu(h, k), 3); };
  o.require(L(1) == G(0) - L(0) * 2, "H4 recursion k=1");
  o.require(L(2) == G(1) - L(1) * 2 - L(0), "H4 recursion k=2");

  for (auto c : {cfg(XKind::W, 2, 4), cfg(XKind::S, 3, 4), cfg(XKind::H, 2, 4)}) {
    LabeledWeight gen = generic(c);
    LabeledWeight exc = sharp(c, with_mu(c, 1));
    for (const auto& lw : {gen, exc})
      o.require(ch_tilting(c, lw, c.D) == ch_tilting_closed_form(c, lw, c.D), describe(c) + " tilting " + lw.str());
  }
  return o;
}

Outcome freudenthal() {
  Outcome o;
  struct Case {
    LieKind kind;
    int size;
    Weight hw;
    long dim;
  };
  for (const auto& c : {Case{LieKind::gl, 3, {2, 1, 0}, 8}, Case{LieKind::sl, 3, sl_from_fundamental({1, 1}), 8},
                        Case{LieKind::sp, 4, {1, 0}, 4}, Case{LieKind::sp, 4, {1, 1}, 5}}) {
    MatLieAlg g = build_algebra(c.kind, c.size);
    IrrepModule v = irrep(g, c.hw);
    const std::string name = to_string(c.kind) + std::to_string(c.size);
    o.require(weight_multiplicities(g, c.hw) == v.weight_census(), name + " multiplicities");
    o.require(weyl_dim(g, c.hw) == Integer(c.dim) && v.dim() == static_cast<std::size_t>(c.dim), name + " dimension");
  }
  return o;
}

Outcome determinism() {
  Outcome o;
  for (const char* args : {"verify module --x W --n 2 --D 3 --lambda 1 --mu 1,0 --c 1,0 --seed 11 --format json",
                           "verify algebra --x S --n 3 --D 2 --format json", "char tilt --x H --n 2 --D 3 --mu 0",
                           "compose --x S --n 3 --k 1 --D 3 --format json", "pairing --n 3 --gamma 1,0,2"}) {
    auto a = run_cli(args), b = run_cli(args);
    o.require(a.first == b.first && a.second == b.second && !a.second.empty(), std::string("polytor ") + args);
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Jacobi identity and bracket closure", jacobi_and_closure},
      {"module axioms", module_axioms},
      {"irreducibility of generic Shen-Larsson modules", irreducibility},
      {"exceptional composition factors", composition},
      {"de Rham complex", de_rham},
      {"pairing polynomials and sigma recovery", pairing_and_sigma},
      {"semi-infinite character trace identity", semi_infinite},
      {"character engine", characters},
      {"Freudenthal multiplicities", freudenthal},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.notes.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %zu: %s  %s (%.1fs)\n", i + 1, o.ok ? "PASS" : "FAIL", criteria[i].first.c_str(), secs);
    for (const auto& n : o.notes) std::printf("    %s\n", n.c_str());
    std::fflush(stdout);
    if (!o.ok) ++failed;
  }
  std::printf("%d of %zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
