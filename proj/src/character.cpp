#include "polytor/character.hpp"

#include "polytor/shenlarsson.hpp"

#include <json.hpp>

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace polytor {

void GradedCharacter::add(int degree, const HWeight& w, long mult) {
  if (degree > D_ || mult == 0) return;
  auto [it, fresh] = entries_.try_emplace({degree, w}, mult);
  if (!fresh) {
    it->second += mult;
    if (it->second == 0) entries_.erase(it);
  }
}

long GradedCharacter::coeff(int degree, const HWeight& w) const {
  auto it = entries_.find({degree, w});
  return it == entries_.end() ? 0 : it->second;
}

std::map<HWeight, long> GradedCharacter::at_degree(int degree) const {
  std::map<HWeight, long> out;
  for (auto it = entries_.lower_bound({degree, HWeight{}}); it != entries_.end() && it->first.first == degree; ++it)
    out.emplace(it->first.second, it->second);
  return out;
}

long GradedCharacter::degree_dim(int degree) const {
  long s = 0;
  for (const auto& [w, m] : at_degree(degree)) s += m;
  return s;
}

std::optional<int> GradedCharacter::min_degree() const {
  if (entries_.empty()) return std::nullopt;
  return entries_.begin()->first.first;
}

bool GradedCharacter::nonnegative() const {
  for (const auto& [k, m] : entries_)
    if (m < 0) return false;
  return true;
}

GradedCharacter GradedCharacter::operator+(const GradedCharacter& o) const {
  GradedCharacter out(std::min(D_, o.D_));
  for (const auto& [k, m] : entries_) out.add(k.first, k.second, m);
  for (const auto& [k, m] : o.entries_) out.add(k.first, k.second, m);
  out.c_ = c_ ? c_ : o.c_;
  return out;
}

GradedCharacter GradedCharacter::operator-(const GradedCharacter& o) const {
  return *this + o * -1;
}

GradedCharacter GradedCharacter::operator*(long k) const {
  GradedCharacter out(D_);
  out.c_ = c_;
  if (k == 0) return out;
  for (const auto& [key, m] : entries_) out.entries_.emplace(key, m * k);
  return out;
}

GradedCharacter GradedCharacter::operator*(const GradedCharacter& o) const {
  GradedCharacter out(std::min(D_, o.D_));
  for (const auto& [ka, ma] : entries_)
    for (const auto& [kb, mb] : o.entries_) {
      if (ka.first + kb.first > out.D_) continue;
      out.add(ka.first + kb.first, ka.second + kb.second, ma * mb);
    }
  out.c_ = c_ ? c_ : o.c_;
  return out;
}

GradedCharacter GradedCharacter::shifted(int k) const {
  GradedCharacter out(D_ + k);
  out.c_ = c_;
  for (const auto& [key, m] : entries_) out.entries_.emplace(Key{key.first + k, key.second}, m);
  return out;
}

GradedCharacter GradedCharacter::truncated(int D) const {
  GradedCharacter out(std::min(D, D_));
  out.c_ = c_;
  for (const auto& [key, m] : entries_)
    if (key.first <= out.D_) out.entries_.emplace(key, m);
  return out;
}

bool GradedCharacter::operator==(const GradedCharacter& o) const {
  if (c_ && o.c_ && *c_ != *o.c_) return false;
  return D_ == o.D_ && entries_ == o.entries_;
}

std::string GradedCharacter::to_json(const AlgebraConfig& cfg, int indent) const {
  nlohmann::ordered_json j;
  j["config"] = {{"x", to_string(cfg.xkind)}, {"n", cfg.n}, {"g", cfg.g_rank}, {"D", cfg.D}};
  if (c_) {
    std::vector<std::string> cs;
    for (const auto& c : *c_) cs.push_back(to_string(c));
    j["config"]["c"] = cs;
  }
  j["truncation"] = D_;
  j["entries"] = nlohmann::ordered_json::array();
  for (const auto& [key, m] : entries_) {
    std::vector<std::string> xs;
    for (int v : key.second.x) xs.push_back(std::to_string(v));
    j["entries"].push_back({{"degree", key.first}, {"g_weight", key.second.g}, {"x_weight", xs}, {"mult", m}});
  }
  return j.dump(indent);
}

GradedCharacter GradedCharacter::from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  GradedCharacter out(j.at("truncation").get<int>());
  if (j.at("config").contains("c")) {
    std::vector<Rational> c;
    for (const auto& s : j["config"]["c"]) c.push_back(parse_rational(s.get<std::string>()));
    out.c_ = c;
  }
  for (const auto& e : j.at("entries")) {
    HWeight w{e.at("g_weight").get<Weight>(), {}};
    for (const auto& s : e.at("x_weight")) {
      Rational q = parse_rational(s.get<std::string>());
      if (!is_integer(q)) throw std::invalid_argument("x weights must be integral");
      w.x.push_back(static_cast<int>(to_long(q)));
    }
    out.add(e.at("degree").get<int>(), w, e.at("mult").get<long>());
  }
  return out;
}

std::string GradedCharacter::to_table() const {
  std::ostringstream os;
  os << "truncation " << D_ << "\n";
  os << std::left << std::setw(8) << "degree" << std::setw(28) << "weight (g|x)" << "mult\n";
  for (const auto& [key, m] : entries_) os << std::setw(8) << key.first << std::setw(28) << key.second.str() << m << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------------------------

namespace {

HWeight zero_weight(const AlgebraConfig& cfg) {
  return HWeight{Weight(cfg.g_rank - 1, 0), Weight(x_rank(cfg.xkind, cfg.n), 0)};
}

GradedCharacter e0(const AlgebraConfig& cfg, int D) {
  GradedCharacter out(D);
  out.add(0, zero_weight(cfg), 1);
  return out;
}

AlgebraConfig with_depth(AlgebraConfig cfg, int D) {
  cfg.D = D;
  return cfg;
}

}  // namespace

GradedCharacter gamma(const AlgebraConfig& cfg, int D) {
  validate(with_depth(cfg, std::max(D, 1)));
  GradedCharacter out(D);
  const Weight g0(cfg.g_rank - 1, 0);
  for (int d = 0; d <= D; ++d)
    for (const auto& r : monomials_of_degree(cfg.n, d)) out.add(d, HWeight{g0, xi_weight(cfg.xkind, r)}, 1);
  return out;
}

GradedCharacter upsilon(const AlgebraConfig& cfg, int D) {
  GradedCharacter out = e0(cfg, D);
  if (D < 1) return out;
  ToroidalAlgebra alg(with_depth(cfg, D));
  for (int d = 1; d <= D; ++d) {
    const GradedSlice& s = alg.graded_slice(d);
    for (const HWeight& alpha : s.weights) {
      // multiply by 1/(1 - q^d e^alpha): ascending degrees see their own updates
      for (int e = 0; e + d <= D; ++e)
        for (const auto& [w, m] : out.at_degree(e)) out.add(e + d, w + alpha, m);
    }
  }
  return out;
}

GradedCharacter pbw_census(const AlgebraConfig& cfg, const LabeledWeight& lw) {
  const int D = 2;
  ToroidalAlgebra alg(with_depth(cfg, std::max(cfg.D, D)));
  GradedCharacter u = e0(cfg, D);
  const auto& w1 = alg.graded_slice(1).weights;
  for (const auto& w : w1) u.add(1, w, 1);
  for (std::size_t a = 0; a < w1.size(); ++a)
    for (std::size_t b = a; b < w1.size(); ++b) u.add(2, w1[a] + w1[b], 1);
  for (const auto& w : alg.graded_slice(2).weights) u.add(2, w, 1);
  return u * ch_L0(cfg, lw, D);
}

GradedCharacter ch_L0(const AlgebraConfig& cfg, const LabeledWeight& lw, int D) {
  check_weight(with_depth(cfg, std::max(cfg.D, 1)), lw);
  const auto gm = weight_multiplicities(build_algebra(LieKind::sl, cfg.g_rank), lw.lambda);
  const auto xm = weight_multiplicities(build_algebra(x_lie_kind(cfg.xkind), cfg.n), lw.mu);
  GradedCharacter out(D);
  for (const auto& [g, a] : gm)
    for (const auto& [x, b] : xm) out.add(0, HWeight{g, x}, a * b);
  out.set_c_label(lw.c);
  return out;
}

GradedCharacter ch_standard(const AlgebraConfig& cfg, const LabeledWeight& lw, int D) {
  return upsilon(cfg, D) * ch_L0(cfg, lw, D);
}

GradedCharacter ch_costandard(const AlgebraConfig& cfg, const LabeledWeight& lw, int D) {
  return gamma(cfg, D) * ch_L0(cfg, lw, D);
}

GradedCharacter ch_irreducible(const AlgebraConfig& cfg, const LabeledWeight& lw, int D) {
  const auto k = exceptional_index(with_depth(cfg, std::max(cfg.D, 1)), lw);
  if (!k) return ch_costandard(cfg, lw, D);
  auto L0 = [&](int i, int depth) {
    LabeledWeight w = trivial_weight(cfg);
    w.mu = mu_k(cfg.xkind, cfg.n, i);
    return ch_L0(cfg, w, depth);
  };
  GradedCharacter out(D);
  if (cfg.xkind == XKind::H) {
    const GradedCharacter g = gamma(cfg, D);
    for (int i = 0; i < *k; ++i) {
      const long sign = (*k - i + 1) % 2 ? -1 : 1;
      out = out + (g * L0(i, D)) * (sign * (*k - i));
    }
    out = out + e0(cfg, D) * ((*k % 2 ? -1 : 1) * (*k + 1));
  } else {
    const GradedCharacter g = gamma(cfg, D + *k);
    out = GradedCharacter(D + *k);
    for (int i = 0; i < *k; ++i) {
      const long sign = (*k - i + 1) % 2 ? -1 : 1;
      out = out + ((g * L0(i, D + *k)) * sign).shifted(-(*k - i)).truncated(D + *k);
    }
    out = out + e0(cfg, D + *k).shifted(-*k).truncated(D + *k) * (*k % 2 ? -1 : 1);
    out = out.truncated(D);
  }
  out.set_c_label(lw.c);
  return out;
}

// ---------------------------------------------------------------------------------------------

LabeledWeight sharp(const AlgebraConfig& cfg, const LabeledWeight& lw) {
  LabeledWeight out;
  out.lambda = dual_weight(LieKind::sl, lw.lambda);
  out.mu = dual_weight(x_lie_kind(cfg.xkind), lw.mu);
  const Weight e = semi_infinite_weight(cfg.xkind, cfg.n);
  for (std::size_t i = 0; i < out.mu.size(); ++i) out.mu[i] -= e[i];
  for (const auto& c : lw.c) out.c.push_back(-c);
  return out;
}

std::map<LabeledWeight, long> tilting_multiplicities(const AlgebraConfig& cfg, const LabeledWeight& lw) {
  check_weight(with_depth(cfg, std::max(cfg.D, 1)), lw);
  const LabeledWeight target = sharp(cfg, lw);
  const int top = n_x(cfg.xkind, cfg.n);
  const LabeledWeight triv = trivial_weight(cfg);
  std::map<LabeledWeight, long> out;
  if (target.lambda == triv.lambda && target.c == triv.c) {
    // [T(lw) : Delta(nu#)] = [V(nu) : L(lw#)], and V(nu) is reducible only for nu = (0, mu_k, 0)
    for (int k = 0; k <= top; ++k)
      for (const auto& [j, mult] : claimed_factors(cfg.xkind, cfg.n, k)) {
        if (mu_k(cfg.xkind, cfg.n, j) != target.mu) continue;
        LabeledWeight nu = triv;
        nu.mu = mu_k(cfg.xkind, cfg.n, k);
        out[sharp(cfg, nu)] += mult;
      }
  }
  if (out.empty()) out[lw] = 1;
  return out;
}

GradedCharacter ch_tilting(const AlgebraConfig& cfg, const LabeledWeight& lw, int D) {
  GradedCharacter out(D);
  for (const auto& [w, m] : tilting_multiplicities(cfg, lw)) out = out + ch_standard(cfg, w, D) * m;
  out.set_c_label(lw.c);
  return out;
}

GradedCharacter ch_tilting_closed_form(const AlgebraConfig& cfg, const LabeledWeight& lw, int D) {
  check_weight(with_depth(cfg, std::max(cfg.D, 1)), lw);
  const int n = cfg.n;
  const LabeledWeight triv = trivial_weight(cfg);
  const GradedCharacter ups = upsilon(cfg, D);
  auto L0 = [&](const Weight& mu) {
    LabeledWeight w = triv;
    w.mu = mu;
    return ch_L0(cfg, w, D);
  };
  GradedCharacter out(D);
  bool matched = false;
  if (lw.lambda == triv.lambda && lw.c == triv.c) {
    if (cfg.xkind == XKind::H) {
      const int m = n / 2;
      for (int k = 0; k <= m && !matched; ++k) {
        const Weight mk = mu_k(XKind::H, n, k);
        if (lw.mu != mk) continue;
        GradedCharacter inner = L0(mk) * 2;
        if (k + 1 <= m) {
          Weight up = mk;
          up[k] += 1;
          inner = inner + L0(up);
        }
        if (k >= 1) {
          Weight down = mk;
          down[k - 1] -= 1;
          inner = inner + L0(down);
        }
        out = ups * inner;
        matched = true;
      }
    } else {
      for (int k = 0; k < n && !matched; ++k) {
        // mu'_k = -2 sum_{i<=k} eps_{n+1-i} - sum_{i>k} eps_{n+1-i}
        std::vector<int> prime(n, -1);
        for (int i = 0; i < k; ++i) prime[n - 1 - i] = -2;
        std::vector<int> mu = prime;
        mu[n - k - 1] -= 1;
        const Weight pr = restrict_weight(cfg.xkind, prime);
        if (lw.mu != restrict_weight(cfg.xkind, mu)) continue;
        out = ups * (L0(lw.mu) + L0(pr));
        matched = true;
      }
    }
  }
  if (!matched) out = ups * ch_L0(cfg, lw, D);
  out.set_c_label(lw.c);
  return out;
}

// ---------------------------------------------------------------------------------------------

GradedCharacter brute_character(const SLModule& m) {
  GradedCharacter out(m.D());
  for (std::size_t i = 0; i < m.dim(); ++i) out.add(m.degree_of(i), m.weight_of(i), 1);
  out.set_c_label(m.weight().c);
  return out;
}

GradedCharacter subspace_character(const SLModule& m, const SubSlices& s) {
  GradedCharacter out(static_cast<int>(s.slices.size()) - 1);
  for (const auto& slice : s.slices)
    for (const auto& row : slice.rows()) {
      const std::size_t p = row.leading_index();
      out.add(m.degree_of(p), m.weight_of(p), 1);
    }
  out.set_c_label(m.weight().c);
  return out;
}

}  // namespace polytor
