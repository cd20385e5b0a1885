#include "polytor/toroidal.hpp"

#include <sstream>
#include <stdexcept>

namespace polytor {

void validate(const AlgebraConfig& cfg) {
  check_kind_size(cfg.xkind, cfg.n);
  if (cfg.g_rank < 2) throw std::invalid_argument("g = sl_k needs k >= 2");
  if (cfg.D < 1) throw std::invalid_argument("truncation degree D must be >= 1");
}

std::string describe(const AlgebraConfig& cfg) {
  return "L(sl" + std::to_string(cfg.g_rank) + ", " + to_string(cfg.xkind) + std::to_string(cfg.n) + "), D=" +
         std::to_string(cfg.D);
}

namespace {

std::string weight_str(const Weight& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + ")";
}

Weight add(const Weight& a, const Weight& b) {
  Weight r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

}  // namespace

LieKind x_lie_kind(XKind k) {
  switch (k) {
    case XKind::W: return LieKind::gl;
    case XKind::S: return LieKind::sl;
    case XKind::H: return LieKind::sp;
  }
  return LieKind::gl;
}

int n_x(XKind k, int n) {
  switch (k) {
    case XKind::W: return n;
    case XKind::S: return n - 1;
    case XKind::H: return n / 2;
  }
  return n;
}

Weight mu_k(XKind k, int n, int j) {
  const int len = k == XKind::H ? n / 2 : n;
  if (j < 0 || j > len) throw std::out_of_range("mu_k index out of range");
  std::vector<int> w(n, 0);
  for (int i = 0; i < j; ++i) w[i] = 1;
  return restrict_weight(k, w);
}

bool LabeledWeight::operator<(const LabeledWeight& o) const {
  if (lambda != o.lambda) return lambda < o.lambda;
  if (mu != o.mu) return mu < o.mu;
  return c < o.c;
}

std::string LabeledWeight::str() const {
  std::string s = "(" + weight_str(lambda) + ", " + weight_str(mu) + ", (";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + to_string(c[i]);
  return s + "))";
}

LabeledWeight trivial_weight(const AlgebraConfig& cfg) {
  return {Weight(cfg.g_rank - 1, 0), Weight(x_rank(cfg.xkind, cfg.n), 0), std::vector<Rational>(cfg.n, Rational(0))};
}

void check_weight(const AlgebraConfig& cfg, const LabeledWeight& lw) {
  if (static_cast<int>(lw.lambda.size()) != cfg.g_rank - 1)
    throw std::invalid_argument("lambda needs " + std::to_string(cfg.g_rank - 1) + " entries");
  if (static_cast<int>(lw.mu.size()) != x_rank(cfg.xkind, cfg.n))
    throw std::invalid_argument("mu needs " + std::to_string(x_rank(cfg.xkind, cfg.n)) + " entries");
  if (static_cast<int>(lw.c.size()) != cfg.n) throw std::invalid_argument("c needs " + std::to_string(cfg.n) + " entries");
  if (!build_algebra(LieKind::sl, cfg.g_rank).is_dominant(lw.lambda)) throw std::invalid_argument("lambda is not dominant");
  if (!build_algebra(x_lie_kind(cfg.xkind), cfg.n).is_dominant(lw.mu)) throw std::invalid_argument("mu is not dominant");
}

std::optional<int> exceptional_index(const AlgebraConfig& cfg, const LabeledWeight& lw) {
  for (int v : lw.lambda)
    if (v != 0) return std::nullopt;
  for (const auto& x : lw.c)
    if (x != 0) return std::nullopt;
  const int top = cfg.xkind == XKind::H ? cfg.n / 2 : cfg.n - 1;
  for (int k = 0; k <= top; ++k)
    if (lw.mu == mu_k(cfg.xkind, cfg.n, k)) return k;
  return std::nullopt;
}

HWeight HWeight::operator+(const HWeight& o) const {
  return {add(g, o.g), add(x, o.x)};
}

HWeight HWeight::operator-() const {
  HWeight r = *this;
  for (auto& v : r.g) v = -v;
  for (auto& v : r.x) v = -v;
  return r;
}

std::string HWeight::str() const {
  return weight_str(g) + "|" + weight_str(x);
}

bool ToroidalElem::is_zero() const {
  if (!vf.is_zero()) return false;
  for (const auto& p : loop)
    if (!p.is_zero()) return false;
  for (const auto& p : central)
    if (!p.is_zero()) return false;
  return true;
}

int ToroidalElem::degree() const {
  int d = vf.degree();
  auto merge = [&d](const Poly& p) {
    for (const auto& [r, c] : p.terms()) {
      int e = r.degree();
      if (d == -2) d = e;
      else if (d != e) throw std::domain_error("toroidal element is not homogeneous");
    }
  };
  for (const auto& p : loop) merge(p);
  for (const auto& p : central) merge(p);
  return d;
}

ToroidalElem& ToroidalElem::operator+=(const ToroidalElem& o) {
  vf += o.vf;
  for (std::size_t a = 0; a < loop.size(); ++a) loop[a] += o.loop[a];
  for (std::size_t j = 0; j < central.size(); ++j) central[j] += o.central[j];
  return *this;
}

ToroidalElem ToroidalElem::operator+(const ToroidalElem& o) const {
  ToroidalElem r = *this;
  r += o;
  return r;
}

ToroidalElem ToroidalElem::operator-(const ToroidalElem& o) const {
  return *this + o * Rational(-1);
}

ToroidalElem ToroidalElem::operator*(const Rational& c) const {
  ToroidalElem r = *this;
  r.vf = vf * c;
  for (auto& p : r.loop) p = p * c;
  for (auto& p : r.central) p = p * c;
  return r;
}

bool ToroidalElem::operator==(const ToroidalElem& o) const {
  return vf == o.vf && loop == o.loop && central == o.central;
}

std::string ToroidalElem::str(const MatLieAlg& g) const {
  std::vector<std::string> parts;
  if (!vf.is_zero()) parts.push_back(vf.str());
  for (std::size_t a = 0; a < loop.size(); ++a)
    if (!loop[a].is_zero()) parts.push_back(g.basis_names()[a] + "(x)(" + loop[a].str() + ")");
  for (std::size_t j = 0; j < central.size(); ++j)
    if (!central[j].is_zero()) parts.push_back("(" + central[j].str() + ")K" + std::to_string(j + 1));
  if (parts.empty()) return "0";
  std::string s = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) s += " + " + parts[i];
  return s;
}

ToroidalAlgebra::ToroidalAlgebra(const AlgebraConfig& cfg)
    : cfg_(cfg), g_(build_algebra(LieKind::sl, cfg.g_rank)), x_(cfg.xkind, cfg.n, cfg.D) {
  validate(cfg);
  const int n = cfg.n;
  for (int d = -1; d <= cfg.D; ++d) {
    GradedSlice s;
    s.degree = d;
    const DegreeBasis& db = x_.slice(d);
    for (std::size_t k = 0; k < db.dim(); ++k) {
      s.basis.push_back(vf(db.elements[k]));
      auto glw = w_coordinate_gl_weight(n, d, db.basis.rows[k].leading_index());
      s.weights.push_back({Weight(g_.rank(), 0), restrict_weight(cfg.xkind, glw)});
      s.names.push_back(db.elements[k].str());
    }
    s.vf_count = db.dim();
    if (d >= 0) {
      for (const auto& r : monomials_of_degree(n, d))
        for (std::size_t a = 0; a < gdim(); ++a) {
          s.basis.push_back(gt(a, r));
          s.weights.push_back(weight_of_gt(a, r));
          s.names.push_back(g_.basis_names()[a] + "(x)" + r.monomial());
        }
      s.gt_count = s.basis.size() - s.vf_count;
      for (const auto& r : monomials_of_degree(n, d))
        for (int i = 0; i < n; ++i) {
          s.basis.push_back(k(r, i));
          s.weights.push_back(weight_of_k(r));
          s.names.push_back((d == 0 ? std::string() : r.monomial() + "*") + "K" + std::to_string(i + 1));
        }
      s.k_count = s.basis.size() - s.vf_count - s.gt_count;
    }
    slices_.push_back(std::move(s));
  }
}

ToroidalElem ToroidalAlgebra::vf(const VectorField& v) const {
  ToroidalElem e = zero();
  e.vf = v;
  return e;
}

ToroidalElem ToroidalAlgebra::gt(std::size_t a, const MultiIndex& r, const Rational& c) const {
  ToroidalElem e = zero();
  e.loop.at(a).add_term(r, c);
  return e;
}

ToroidalElem ToroidalAlgebra::k(const MultiIndex& r, int i, const Rational& c) const {
  ToroidalElem e = zero();
  e.central.at(i).add_term(r, c);
  return e;
}

HWeight ToroidalAlgebra::weight_of_gt(std::size_t a, const MultiIndex& r) const {
  return {g_.basis_weight(a), xi_weight(cfg_.xkind, r)};
}

HWeight ToroidalAlgebra::weight_of_k(const MultiIndex& r) const {
  return {Weight(g_.rank(), 0), xi_weight(cfg_.xkind, r)};
}

const GradedSlice& ToroidalAlgebra::graded_slice(int d) const {
  if (d < -1) return empty_;
  if (d > cfg_.D) throw std::out_of_range("slice degree " + std::to_string(d) + " exceeds D=" + std::to_string(cfg_.D));
  return slices_[d + 1];
}

std::vector<Rational> ToroidalAlgebra::slice_coordinates(const ToroidalElem& e, int d) const {
  const GradedSlice& s = graded_slice(d);
  std::vector<Rational> c(s.dim(), Rational(0));
  if (e.is_zero()) return c;
  if (d < -1) throw std::domain_error("nonzero element in an empty slice");
  const DegreeBasis& db = x_.slice(d);
  if (!e.vf.is_zero()) {
    if (!db.contains(e.vf)) throw std::domain_error("vector field part is not in the degree-" + std::to_string(d) + " slice");
    auto vc = db.coordinates(e.vf);
    for (std::size_t k = 0; k < vc.size(); ++k) c[k] = vc[k];
  }
  const std::size_t gd = gdim();
  for (std::size_t a = 0; a < e.loop.size(); ++a)
    for (const auto& [r, x] : e.loop[a].terms()) {
      if (r.degree() != d) throw std::domain_error("loop part outside degree " + std::to_string(d));
      c[s.vf_count + monomial_rank(r) * gd + a] = x;
    }
  for (std::size_t j = 0; j < e.central.size(); ++j)
    for (const auto& [r, x] : e.central[j].terms()) {
      if (r.degree() != d) throw std::domain_error("central part outside degree " + std::to_string(d));
      c[s.vf_count + s.gt_count + monomial_rank(r) * cfg_.n + j] = x;
    }
  return c;
}

bool ToroidalAlgebra::in_slice(const ToroidalElem& e, int d) const {
  try {
    slice_coordinates(e, d);
    return true;
  } catch (const std::domain_error&) {
    return false;
  }
}

ToroidalElem bracket(const ToroidalAlgebra& alg, const ToroidalElem& a, const ToroidalElem& b) {
  if (a.n() != alg.n() || b.n() != alg.n() || a.loop.size() != alg.gdim() || b.loop.size() != alg.gdim())
    throw std::invalid_argument("toroidal elements do not belong to this algebra");
  ToroidalElem out = alg.zero();
  out.vf = bracket(a.vf, b.vf);
  const std::size_t gd = alg.gdim();
  for (std::size_t x = 0; x < gd; ++x) out.loop[x] = a.vf.apply(b.loop[x]) - b.vf.apply(a.loop[x]);
  for (std::size_t x = 0; x < gd; ++x) {
    if (a.loop[x].is_zero()) continue;
    for (std::size_t y = 0; y < gd; ++y) {
      if (b.loop[y].is_zero()) continue;
      const auto& sc = alg.g().structure(x, y);
      Poly prod;
      bool have = false;
      for (std::size_t z = 0; z < gd; ++z) {
        if (sc[z] == 0) continue;
        if (!have) {
          prod = a.loop[x] * b.loop[y];
          have = true;
        }
        out.loop[z] += prod * sc[z];
      }
    }
  }
  for (int j = 0; j < alg.n(); ++j) out.central[j] = a.vf.apply(b.central[j]) - b.vf.apply(a.central[j]);
  return out;
}

namespace {

Integer binomial(int r, int k) {
  if (k < 0 || k > r) return 0;
  Integer c = 1;
  for (int i = 1; i <= k; ++i) c = c * (r - k + i) / i;
  return c;
}

void add_to(NormalOrdered& no, const MultiIndex& beta, const ToroidalElem& y) {
  auto [it, fresh] = no.try_emplace(beta, y);
  if (!fresh) it->second += y;
  if (it->second.is_zero()) no.erase(it);
}

}  // namespace

NormalOrdered normal_order(const ToroidalAlgebra& alg, const MultiIndex& r, const ToroidalElem& target) {
  if (!target.vf.is_zero()) throw std::invalid_argument("normal_order target must lie in g (x) A_n + Z");
  const int n = alg.n();
  NormalOrdered out;
  // enumerate kappa <= r componentwise
  std::vector<int> kappa(n, 0);
  while (true) {
    MultiIndex k(kappa);
    Integer cr = 1;
    for (int i = 0; i < n; ++i) cr *= binomial(r[i], kappa[i]);
    ToroidalElem y = alg.zero();
    for (std::size_t a = 0; a < target.loop.size(); ++a)
      for (const auto& [s, c] : target.loop[a].terms()) {
        Integer p = 1;
        for (int i = 0; i < n; ++i) p *= falling_factorial(s[i], kappa[i]);
        if (p != 0) y.loop[a].add_term(s - k, c * Rational(cr * p));
      }
    for (int j = 0; j < n; ++j)
      for (const auto& [s, c] : target.central[j].terms()) {
        Integer p = 1;
        for (int i = 0; i < n; ++i) p *= falling_factorial(s[i], kappa[i]);
        if (p != 0) y.central[j].add_term(s - k, c * Rational(cr * p));
      }
    if (!y.is_zero()) add_to(out, r - k, y);
    int i = 0;
    while (i < n && kappa[i] == r[i]) kappa[i++] = 0;
    if (i == n) break;
    ++kappa[i];
  }
  return out;
}

NormalOrdered normal_order_by_brackets(const ToroidalAlgebra& alg, const MultiIndex& r, const ToroidalElem& target) {
  const int n = alg.n();
  NormalOrdered state;
  if (!target.is_zero()) state.emplace(MultiIndex(n), target);
  // apply the innermost factors first; the d_i commute, so the order is immaterial
  for (int i = n - 1; i >= 0; --i) {
    ToroidalElem di = alg.vf(VectorField::monomial(n, MultiIndex(n), i));
    for (int rep = 0; rep < r[i]; ++rep) {
      NormalOrdered next;
      for (const auto& [beta, y] : state) {
        add_to(next, beta + MultiIndex::unit(n, i), y);
        ToroidalElem comm = bracket(alg, di, y);
        if (!comm.is_zero()) add_to(next, beta, comm);
      }
      state = std::move(next);
    }
  }
  return state;
}

Rational adjoint_trace_pairing(const ToroidalAlgebra& alg, const ToroidalElem& x, const ToroidalElem& y) {
  if (x.degree() != 1 && !x.is_zero()) throw std::invalid_argument("adjoint_trace_pairing needs x of degree 1");
  if (y.degree() != -1 && !y.is_zero()) throw std::invalid_argument("adjoint_trace_pairing needs y of degree -1");
  const GradedSlice& s0 = alg.graded_slice(0);
  Rational tr = 0;
  for (std::size_t k = 0; k < s0.dim(); ++k) {
    ToroidalElem w = bracket(alg, x, bracket(alg, y, s0.basis[k]));
    tr += alg.slice_coordinates(w, 0)[k];
  }
  return tr;
}

Rational semi_infinite_character(const ToroidalAlgebra& alg, const ToroidalElem& e) {
  if (!e.is_zero() && e.degree() != 0) throw std::invalid_argument("semi-infinite character is defined on L_0");
  if (alg.xkind() != XKind::W) return 0;
  Rational s = 0;
  for (int i = 0; i < alg.n(); ++i) s += e.vf.component(i).coeff(MultiIndex::unit(alg.n(), i));
  return s;
}

Weight semi_infinite_weight(XKind kind, int n) {
  if (kind == XKind::W) return Weight(n, 1);
  return Weight(x_rank(kind, n), 0);
}

namespace {

struct Indexed {
  const ToroidalElem* elem;
  int degree;
  std::string name;
};

std::vector<Indexed> basis_up_to(const ToroidalAlgebra& alg, int max_degree) {
  std::vector<Indexed> out;
  for (int d = -1; d <= max_degree; ++d) {
    const GradedSlice& s = alg.graded_slice(d);
    for (std::size_t k = 0; k < s.dim(); ++k) out.push_back({&s.basis[k], d, s.names[k]});
  }
  return out;
}

}  // namespace

Report verify_jacobi(const ToroidalAlgebra& alg, int max_factor_degree, int max_total_degree) {
  Report rep;
  rep.suite = "jacobi";
  rep.notes.push_back(describe(alg.config()) + ": basis triples with factor degree <= " + std::to_string(max_factor_degree) +
                      " and total degree <= " + std::to_string(max_total_degree));
  auto basis = basis_up_to(alg, max_factor_degree);
  const std::size_t N = basis.size();
  // [b_i, b_j] for i < j, cached
  std::vector<ToroidalElem> pair(N * N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j) {
      pair[i * N + j] = bracket(alg, *basis[i].elem, *basis[j].elem);
      ToroidalElem back = bracket(alg, *basis[j].elem, *basis[i].elem);
      rep.check((pair[i * N + j] + back).is_zero(), "antisymmetry [" + basis[i].name + ", " + basis[j].name + "]");
    }
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j) {
      if (basis[i].degree + basis[j].degree - 1 > max_total_degree) continue;
      const ToroidalElem& ij = pair[i * N + j];
      for (std::size_t k = j + 1; k < N; ++k) {
        if (basis[i].degree + basis[j].degree + basis[k].degree > max_total_degree) continue;
        // [[a,b],c] + [[b,c],a] + [[c,a],b]
        ToroidalElem sum = bracket(alg, ij, *basis[k].elem);
        sum += bracket(alg, pair[j * N + k], *basis[i].elem);
        sum += bracket(alg, *basis[j].elem, pair[i * N + k]);
        rep.check(sum.is_zero(), "jacobi (" + basis[i].name + ", " + basis[j].name + ", " + basis[k].name + ")",
                  sum.is_zero() ? "" : sum.str(alg.g()));
      }
    }
  return rep;
}

Report verify_closure(const ToroidalAlgebra& alg, int max_result_degree) {
  Report rep;
  rep.suite = "closure";
  rep.notes.push_back(describe(alg.config()) + ": degree-basis pairs of the vector field part with result degree <= " +
                      std::to_string(max_result_degree));
  const VFAlgebra& x = alg.x();
  for (int d1 = -1; d1 <= x.max_degree(); ++d1)
    for (int d2 = d1; d2 <= x.max_degree() && d1 + d2 <= max_result_degree; ++d2) {
      if (d1 + d2 < -1 || d1 + d2 > x.max_degree()) continue;
      const auto& s1 = x.slice(d1).elements;
      const auto& s2 = x.slice(d2).elements;
      for (std::size_t i = 0; i < s1.size(); ++i)
        for (std::size_t j = d1 == d2 ? i + 1 : 0; j < s2.size(); ++j) {
          VectorField b = bracket(s1[i], s2[j]);
          rep.check(b.is_zero() || x.slice(d1 + d2).contains(b), "closure [" + s1[i].str() + ", " + s2[j].str() + "]",
                    b.str());
        }
    }
  return rep;
}

Report verify_central(const ToroidalAlgebra& alg) {
  Report rep;
  rep.suite = "central";
  const int n = alg.n();
  auto basis = basis_up_to(alg, alg.config().D);
  rep.notes.push_back(describe(alg.config()) + ": K_i against every basis symbol of degree <= D");
  for (int i = 0; i < n; ++i) {
    ToroidalElem K = alg.k(MultiIndex(n), i);
    for (const auto& b : basis) {
      ToroidalElem c = bracket(alg, K, *b.elem);
      rep.check(c.is_zero(), "[K" + std::to_string(i + 1) + ", " + b.name + "]", c.str(alg.g()));
    }
  }
  return rep;
}

Report verify_grading(const ToroidalAlgebra& alg) {
  Report rep;
  rep.suite = "grading";
  const int D = alg.config().D;
  rep.notes.push_back(describe(alg.config()) + ": [L_i, L_j] in L_{i+j} for i + j <= D");
  for (int d1 = -1; d1 <= D; ++d1)
    for (int d2 = d1; d2 <= D && d1 + d2 <= D; ++d2) {
      const GradedSlice& s1 = alg.graded_slice(d1);
      const GradedSlice& s2 = alg.graded_slice(d2);
      for (std::size_t i = 0; i < s1.dim(); ++i)
        for (std::size_t j = 0; j < s2.dim(); ++j) {
          ToroidalElem b = bracket(alg, s1.basis[i], s2.basis[j]);
          bool ok = b.is_zero() || (d1 + d2 >= -1 && alg.in_slice(b, d1 + d2));
          rep.check(ok, "grading [" + s1.names[i] + ", " + s2.names[j] + "]", b.str(alg.g()));
        }
    }
  return rep;
}

Report verify_si2(const ToroidalAlgebra& alg) {
  Report rep;
  rep.suite = "si";
  const GradedSlice& s1 = alg.graded_slice(1);
  const GradedSlice& sm = alg.graded_slice(-1);
  rep.notes.push_back(describe(alg.config()) + ": E([X,Y]) = tr(ad X ad Y | L_0) for X in L_1, Y in L_-1");
  for (std::size_t i = 0; i < s1.dim(); ++i)
    for (std::size_t j = 0; j < sm.dim(); ++j) {
      Rational tr = adjoint_trace_pairing(alg, s1.basis[i], sm.basis[j]);
      Rational e = semi_infinite_character(alg, bracket(alg, s1.basis[i], sm.basis[j]));
      rep.check(tr == e, "SI-2 (" + s1.names[i] + ", " + sm.names[j] + ")",
                "trace " + to_string(tr) + " vs E " + to_string(e));
    }
  return rep;
}

Report verify_generation(const ToroidalAlgebra& alg) {
  Report rep;
  rep.suite = "generation";
  const int D = alg.config().D;
  rep.notes.push_back(describe(alg.config()) + ": L_d spanned by [L_i, L_j], 1 <= i <= j, i + j = d, for 2 <= d <= D");
  for (int d = 2; d <= D; ++d) {
    const GradedSlice& target = alg.graded_slice(d);
    EchelonBasis<Rational> eb(target.dim());
    for (int i = 1; 2 * i <= d; ++i) {
      const GradedSlice& a = alg.graded_slice(i);
      const GradedSlice& b = alg.graded_slice(d - i);
      for (std::size_t p = 0; p < a.dim() && eb.rank() < target.dim(); ++p)
        for (std::size_t q = 0; q < b.dim() && eb.rank() < target.dim(); ++q) {
          auto c = alg.slice_coordinates(bracket(alg, a.basis[p], b.basis[q]), d);
          eb.insert(SparseVec<Rational>::from_dense(c));
        }
    }
    rep.check(eb.rank() == target.dim(), "generation of degree " + std::to_string(d),
              "rank " + std::to_string(eb.rank()) + " of " + std::to_string(target.dim()));
  }
  return rep;
}

Report verify_normal_order(const ToroidalAlgebra& alg, int max_degree) {
  Report rep;
  rep.suite = "normal-order";
  const int n = alg.n();
  rep.notes.push_back(describe(alg.config()) + ": d^r y for |r|, |s| <= " + std::to_string(max_degree));
  for (const auto& r : monomials_up_to(n, max_degree))
    for (const auto& s : monomials_up_to(n, max_degree)) {
      for (int kind = 0; kind < 2; ++kind) {
        ToroidalElem y = kind == 0 ? alg.gt(0, s) : alg.k(s, n - 1);
        NormalOrdered f = normal_order(alg, r, y);
        NormalOrdered o = normal_order_by_brackets(alg, r, y);
        rep.check(f == o, "normal order d^" + r.str() + " on " + (kind == 0 ? "x(x)t^" : "t^K_n ") + s.str());
      }
    }
  return rep;
}

Report verify_degree_zero(const ToroidalAlgebra& alg) {
  Report rep;
  rep.suite = "degree-zero";
  const int n = alg.n();
  const XKind kind = alg.xkind();
  const DegreeBasis& db0 = alg.x().slice(0);
  MatLieAlg target = build_algebra(x_lie_kind(kind), n);
  rep.check(db0.dim() == target.dim(), "dim (X_n)_0",
            std::to_string(db0.dim()) + " vs " + std::to_string(target.dim()));
  for (const auto& a : db0.elements) {
    rep.check(target.contains(degree_zero_to_matrix(a)), "image in " + to_string(target.kind()) + " of " + a.str());
    rep.check(matrix_to_degree_zero(degree_zero_to_matrix(a)) == a, "round trip " + a.str());
    for (const auto& b : db0.elements) {
      Mat lhs = degree_zero_to_matrix(bracket(a, b));
      Mat rhs = commutator(degree_zero_to_matrix(a), degree_zero_to_matrix(b));
      rep.check(is_zero(Mat(lhs - rhs)), "bracket compatibility " + a.str() + ", " + b.str());
    }
  }
  TriangularLists t = triangular_decomposition(kind, n);
  EchelonBasis<Rational> eb(w_coordinate_count(n, 0));
  for (const auto* list : {&t.nminus, &t.cartan, &t.nplus})
    for (const auto& v : *list) {
      rep.check(db0.contains(v), "triangular generator in (X_n)_0: " + v.str());
      eb.insert(w_coordinates(v, 0));
    }
  rep.check(eb.rank() == db0.dim(), "triangular lists span (X_n)_0",
            std::to_string(eb.rank()) + " of " + std::to_string(db0.dim()));
  for (const auto& h1 : t.cartan)
    for (const auto& h2 : t.cartan) rep.check(bracket(h1, h2).is_zero(), "h_X abelian " + h1.str() + ", " + h2.str());
  // each n+ generator is a common ad-eigenvector of h_X
  for (const auto* list : {&t.nplus, &t.nminus})
    for (const auto& e : *list)
      for (const auto& h : t.cartan) {
        VectorField b = bracket(h, e);
        auto we = w_coordinates(e, 0), wb = w_coordinates(b, 0);
        Rational ratio = wb.empty() ? Rational(0) : wb.leading_coeff() / we.coeff(wb.leading_index());
        rep.check(b == e * ratio, "root vector " + e.str() + " under " + h.str());
      }
  // L_{-1} is irreducible under (X_n)_0: the orbit of each d_i spans everything
  const DegreeBasis& dbm = alg.x().slice(-1);
  for (const auto& start : dbm.elements) {
    EchelonBasis<Rational> orbit(w_coordinate_count(n, -1));
    std::vector<VectorField> queue{start};
    orbit.insert(w_coordinates(start, -1));
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (const auto& a : db0.elements) {
        VectorField b = bracket(a, queue[h]);
        if (!b.is_zero() && orbit.insert(w_coordinates(b, -1))) queue.push_back(b);
      }
    rep.check(orbit.rank() == dbm.dim(), "L_-1 orbit of " + start.str(),
              std::to_string(orbit.rank()) + " of " + std::to_string(dbm.dim()));
  }
  return rep;
}

}  // namespace polytor
