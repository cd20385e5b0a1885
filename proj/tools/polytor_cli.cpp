#include "polytor/character.hpp"
#include "polytor/shenlarsson.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <iostream>
#include <sstream>

using namespace polytor;
using nlohmann::ordered_json;

namespace {

constexpr int kUsage = 2;

struct Options {
  std::string x = "W";
  int n = 2;
  int g = 2;
  int D = 4;
  std::string lambda, mu, c;
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string suite, which, gamma;
  int k = -1;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

Weight parse_ints(const std::string& s, const char* what) {
  Weight out;
  for (const auto& item : split(s)) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || item.empty()) throw UsageError(std::string("malformed ") + what + " entry '" + item + "'");
    out.push_back(v);
  }
  return out;
}

AlgebraConfig config_of(const Options& o) {
  AlgebraConfig cfg{parse_xkind(o.x), o.n, o.g, o.D};
  validate(cfg);
  return cfg;
}

LabeledWeight weight_of(const Options& o, const AlgebraConfig& cfg) {
  LabeledWeight lw = trivial_weight(cfg);
  if (!o.lambda.empty()) {
    Weight a = parse_ints(o.lambda, "--lambda");
    if (static_cast<int>(a.size()) != cfg.g_rank - 1)
      throw UsageError("--lambda needs " + std::to_string(cfg.g_rank - 1) + " fundamental coordinates");
    lw.lambda = sl_from_fundamental(a);
  }
  if (!o.mu.empty()) {
    Weight m = parse_ints(o.mu, "--mu");
    const int rank = x_rank(cfg.xkind, cfg.n);
    if (static_cast<int>(m.size()) == cfg.n && cfg.xkind != XKind::W) m = restrict_weight(cfg.xkind, m);
    if (static_cast<int>(m.size()) != rank)
      throw UsageError("--mu needs " + std::to_string(rank) + " coordinates for " + to_string(cfg.xkind));
    lw.mu = m;
  }
  if (!o.c.empty()) {
    const auto items = split(o.c);
    if (static_cast<int>(items.size()) != cfg.n) throw UsageError("--c needs " + std::to_string(cfg.n) + " rationals");
    for (int i = 0; i < cfg.n; ++i) lw.c[i] = parse_rational(items[i]);
  }
  check_weight(cfg, lw);
  return lw;
}

ordered_json config_json(const AlgebraConfig& cfg) {
  return {{"x", to_string(cfg.xkind)}, {"n", cfg.n}, {"g", cfg.g_rank}, {"D", cfg.D}};
}

int emit_report(const Report& r, const Options& o) {
  std::cout << (o.format == "json" ? r.to_json() + "\n" : r.to_table());
  return r.passed() ? 0 : 1;
}

Report merged(const std::string& suite, const std::vector<Report>& parts) {
  Report out;
  out.suite = suite;
  for (const auto& p : parts) {
    Report tagged = p;
    for (auto& v : tagged.violations) v.case_name = p.suite + ": " + v.case_name;
    out.merge(tagged);
  }
  return out;
}

int cmd_verify(const Options& o) {
  const AlgebraConfig cfg = config_of(o);
  if (o.suite == "algebra") {
    ToroidalAlgebra alg(cfg);
    return emit_report(merged("algebra", {verify_jacobi(alg, std::min(2, cfg.D), cfg.D), verify_closure(alg, std::min(3, cfg.D)),
                                          verify_central(alg), verify_grading(alg), verify_generation(alg),
                                          verify_normal_order(alg, 2), verify_degree_zero(alg)}),
                       o);
  }
  if (o.suite == "si") {
    ToroidalAlgebra alg(cfg);
    Report r = verify_si2(alg);
    const Weight e = semi_infinite_weight(cfg.xkind, cfg.n);
    std::string s;
    for (int v : e) s += (s.empty() ? "" : ",") + std::to_string(v);
    r.notes.push_back("E restricted to h_X: (" + s + ")");
    return emit_report(r, o);
  }
  if (o.suite == "derham") {
    if (cfg.xkind != XKind::W) throw UsageError("the de Rham complex is available for W only");
    std::vector<Report> parts;
    for (int k = 0; k <= cfg.n; ++k) {
      DeRhamCheck d = derham(cfg, k);
      std::string ker, pred;
      for (std::size_t i = 0; i < d.kernel.size(); ++i) {
        ker += (i ? "," : "") + std::to_string(d.kernel[i]);
        pred += (i ? "," : "") + std::to_string(d.predicted[i]);
      }
      d.report.notes.push_back("k=" + std::to_string(k) + " kernel by degree " + ker + "; predicted " + pred);
      d.report.suite = "derham k=" + std::to_string(k);
      parts.push_back(d.report);
    }
    return emit_report(merged("derham", parts), o);
  }
  const LabeledWeight lw = weight_of(o, cfg);
  if (o.suite == "module") {
    SLModule m(cfg, lw);
    Report r = merged("module", {verify_module_axiom(m, cfg.D), verify_action_forms(m, cfg.D), verify_cyclic_submodules(m, 50, o.seed)});
    r.notes.push_back(std::string("bottom span fills every slice <= D: ") + (is_irreducible_to_depth(m) ? "yes" : "no"));
    return emit_report(r, o);
  }
  if (o.suite == "al-axioms") {
    SLModule m(cfg, lw);
    Report pairing;
    pairing.suite = "pairing";
    const int top = cfg.xkind == XKind::W ? 1 : 2;
    for (int d = 0; d <= top; ++d)
      for (const auto& g : monomials_of_degree(cfg.n, d)) pairing.check(verify_pairing(pairing_polynomials(cfg.n, g)), "gamma=" + g.str());
    return emit_report(merged("al-axioms", {verify_AL_axioms(m), pairing, sigma_recovery_sweep(cfg, lw, std::min(2, cfg.D), SigmaReference::stated)}), o);
  }
  throw UsageError("unknown suite '" + o.suite + "' (algebra, module, si, al-axioms, derham)");
}

int cmd_char(const Options& o) {
  const AlgebraConfig cfg = config_of(o);
  const LabeledWeight lw = weight_of(o, cfg);
  GradedCharacter ch;
  if (o.which == "irr") ch = ch_irreducible(cfg, lw, cfg.D);
  else if (o.which == "std") ch = ch_standard(cfg, lw, cfg.D);
  else if (o.which == "costd") ch = ch_costandard(cfg, lw, cfg.D);
  else if (o.which == "tilt") ch = ch_tilting(cfg, lw, cfg.D);
  else throw UsageError("unknown character '" + o.which + "' (irr, std, costd, tilt)");
  std::cout << (o.format == "json" ? ch.to_json(cfg) + "\n" : ch.to_table());
  return 0;
}

int cmd_pairing(const Options& o) {
  if (o.n < 1) throw UsageError("--n must be >= 1");
  Weight g = parse_ints(o.gamma, "--gamma");
  if (static_cast<int>(g.size()) != o.n) throw UsageError("--gamma needs " + std::to_string(o.n) + " entries");
  for (int v : g)
    if (v < 0) throw UsageError("--gamma entries must be non-negative");
  const PairingSet ps = pairing_polynomials(o.n, MultiIndex(g));
  const bool ok = verify_pairing(ps);
  if (o.format == "json") {
    ordered_json j;
    j["n"] = o.n;
    j["gamma"] = g;
    j["pairs"] = ordered_json::array();
    for (const auto& [f, h] : ps.pairs) j["pairs"].push_back({{"f", f.str()}, {"g", h.str()}});
    j["verified"] = ok;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "gamma " << MultiIndex(g).str() << "\n";
    for (const auto& [f, h] : ps.pairs) std::cout << "  f = " << f.str() << "    g = " << h.str() << "\n";
    std::cout << "verified " << (ok ? "yes" : "no") << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_compose(const Options& o) {
  const AlgebraConfig cfg = config_of(o);
  if (o.k < 0 || o.k > n_x(cfg.xkind, cfg.n))
    throw UsageError("--k must lie in 0.." + std::to_string(n_x(cfg.xkind, cfg.n)));
  const Composition c = exceptional_composition(cfg, o.k);
  if (o.format == "json") {
    ordered_json j;
    j["config"] = config_json(cfg);
    j["k"] = c.k;
    j["factors"] = ordered_json::array();
    for (const auto& f : c.factors)
      j["factors"].push_back({{"label", f.label}, {"weight", f.lw.str()}, {"degree", f.degree}, {"multiplicity", f.multiplicity}});
    j["claimed"] = ordered_json::array();
    for (const auto& [l, m] : c.claimed) j["claimed"].push_back({{"label", l}, {"multiplicity", m}});
    j["table"] = ordered_json::array();
    for (const auto& r : c.table)
      j["table"].push_back({{"degree", r.degree}, {"module_dim", r.module_dim}, {"socle_sum", r.socle_sum}, {"formula_sum", r.formula_sum}});
    j["report"] = ordered_json::parse(c.report.to_json());
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "factors of V(0, mu_" << c.k << ", 0), " << describe(cfg) << "\n";
    for (const auto& f : c.factors)
      std::cout << "  L(" << f.label << ")  bottom degree " << f.degree << "  multiplicity " << f.multiplicity << "\n";
    std::cout << "claimed\n";
    for (const auto& [l, m] : c.claimed) std::cout << "  L(" << l << ")  multiplicity " << m << "\n";
    std::cout << std::left << std::setw(8) << "degree" << std::setw(12) << "dim V" << std::setw(12) << "factors" << "formulas\n";
    for (const auto& r : c.table)
      std::cout << std::setw(8) << r.degree << std::setw(12) << r.module_dim << std::setw(12) << r.socle_sum << r.formula_sum << "\n";
    std::cout << c.report.to_table();
  }
  return c.report.passed() ? 0 : 1;
}

void add_config(CLI::App* sc, Options& o, bool with_weight) {
  sc->add_option("--x", o.x, "vector field algebra: W, S or H")->capture_default_str();
  sc->add_option("--n", o.n, "number of variables (H needs n even)")->capture_default_str();
  sc->add_option("--g", o.g, "g = sl_g")->capture_default_str();
  sc->add_option("--D", o.D, "truncation degree")->capture_default_str();
  sc->add_option("--format", o.format, "json or table")->check(CLI::IsMember({"json", "table"}))->capture_default_str();
  if (!with_weight) return;
  sc->add_option("--lambda", o.lambda, "g weight in fundamental coordinates, e.g. 1");
  sc->add_option("--mu", o.mu,
                 "(X_n)_0 weight in eps coordinates; S and H also accept n entries, reduced to "
                 "(mu_i - mu_n) resp. (mu_i - mu_{m+i})");
  sc->add_option("--c", o.c, "K eigenvalues, n comma-separated rationals p/q");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polynomial toroidal Lie algebras, Shen-Larsson modules and their characters"};
  app.require_subcommand(1);
  Options o;

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", o.suite, "algebra | module | si | al-axioms | derham")->required();
  add_config(verify, o, true);
  verify->add_option("--seed", o.seed, "seed for sampled checks")->capture_default_str();

  auto* chr = app.add_subcommand("char", "print a graded character");
  chr->add_option("which", o.which, "irr | std | costd | tilt")->required();
  add_config(chr, o, true);

  auto* pairing = app.add_subcommand("pairing", "pairing polynomials for d^gamma");
  pairing->add_option("--n", o.n, "number of variables")->capture_default_str();
  pairing->add_option("--gamma", o.gamma, "exponents, comma-separated")->required();
  pairing->add_option("--format", o.format, "json or table")->check(CLI::IsMember({"json", "table"}))->capture_default_str();

  auto* compose = app.add_subcommand("compose", "composition factors of V(0, mu_k, 0)");
  compose->add_option("--k", o.k, "index of the exceptional weight")->required();
  add_config(compose, o, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*verify) return cmd_verify(o);
    if (*chr) return cmd_char(o);
    if (*pairing) return cmd_pairing(o);
    if (*compose) return cmd_compose(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
