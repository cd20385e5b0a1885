#include "polytor/shenlarsson.hpp"

#include "polytor/character.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace polytor {

namespace {

Mat kron(const Mat& a, const Mat& b) {
  Mat out = zero_matrix(static_cast<int>(a.rows() * b.rows()), static_cast<int>(a.cols() * b.cols()));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          if (b(k, l) != 0) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

Mat identity(int n) {
  Mat m = zero_matrix(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

// d_a d_b t^r as (coefficient, exponent); coefficient 0 when it vanishes.
std::pair<Rational, MultiIndex> second_derivative(const MultiIndex& r, int a, int b) {
  MultiIndex out = r;
  long c = r[a];
  out.set(a, r[a] - 1);
  c *= out[b];
  out.set(b, out[b] - 1);
  if (c == 0 || !out.nonnegative()) return {Rational(0), r};
  return {Rational(c), out};
}

void add_matrix(std::map<MultiIndex, Mat>& acc, const MultiIndex& u, const Mat& m, const Rational& c) {
  if (c == 0) return;
  auto it = acc.find(u);
  if (it == acc.end()) it = acc.emplace(u, zero_matrix(static_cast<int>(m.rows()), static_cast<int>(m.cols()))).first;
  it->second += m * c;
}

std::map<int, VectorField> homogeneous_parts(const VectorField& x) {
  std::map<int, VectorField> parts;
  for (int i = 0; i < x.n(); ++i)
    for (const auto& [r, c] : x.component(i).terms()) {
      auto it = parts.try_emplace(r.degree() - 1, VectorField(x.n())).first;
      it->second.component(i).add_term(r, c);
    }
  return parts;
}

std::string vec_str(const SLModule& m, const Vec& v) {
  if (v.empty()) return "0";
  std::ostringstream os;
  std::size_t shown = 0;
  for (const auto& [i, c] : v) {
    if (shown++) os << " + ";
    if (shown > 4) {
      os << "...";
      break;
    }
    os << to_string(c) << "*[" << m.label(i) << "]";
  }
  return os.str();
}

Vec accumulate(std::size_t dim, const std::map<std::size_t, Rational>& acc) {
  return Vec::from_map(dim, acc);
}

}  // namespace

std::vector<VFBasisSym> symbol_fields(XKind kind, int n, int d) {
  std::vector<VFBasisSym> out;
  if (d < -1) return out;
  if (kind == XKind::W) {
    for (const auto& r : monomials_of_degree(n, d + 1))
      for (int i = 0; i < n; ++i) out.push_back(VFBasisSym::w(r, i));
  } else if (kind == XKind::S) {
    for (const auto& r : monomials_of_degree(n, d + 2))
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) out.push_back(VFBasisSym::s(r, i, j));
  } else {
    for (const auto& r : monomials_of_degree(n, d + 2)) out.push_back(VFBasisSym::h(r));
  }
  return out;
}

SLModule::SLModule(const AlgebraConfig& cfg, const LabeledWeight& lw, ModuleOptions opt)
    : alg_(std::make_shared<ToroidalAlgebra>(cfg)), lw_(lw), opt_(opt) {
  check_weight(cfg, lw);
  if (opt.h_sign != 1 && opt.h_sign != -1) throw std::invalid_argument("h_sign must be +1 or -1");
  vg_ = irrep(alg_->g(), lw.lambda);
  vx_ = irrep(build_algebra(x_lie_kind(cfg.xkind), cfg.n), lw.mu);
  dimv_ = vg_.dim() * vx_.dim();
  mono_ = MonomialIndex(cfg.n, cfg.D);
  const Mat ix = identity(static_cast<int>(vx_.dim()));
  for (std::size_t a = 0; a < alg_->gdim(); ++a) g_ops_.push_back(kron(vg_.rho(a), ix));
  symbol_cache_.resize(cfg.D + 2);
  gen_cache_.resize(cfg.D + 2);
  col_cache_.resize(cfg.D + 2);
  for (int d = -1; d <= cfg.D; ++d) {
    gen_cache_[d + 1].resize(alg_->graded_slice(d).dim());
    col_cache_[d + 1].resize(alg_->graded_slice(d).dim());
  }
}

HWeight SLModule::weight_of(std::size_t idx) const {
  const std::size_t a = idx % dimv_;
  HWeight w{vg_.weights()[a / vx_.dim()], vx_.weights()[a % vx_.dim()]};
  const auto xi = xi_weight(config().xkind, mono_.at(idx / dimv_));
  for (std::size_t i = 0; i < xi.size(); ++i) w.x[i] += xi[i];
  return w;
}

std::string SLModule::label(std::size_t idx) const {
  const std::size_t a = idx % dimv_;
  std::string s = mono_.at(idx / dimv_).monomial() + " (x) v" + std::to_string(a / vx_.dim() + 1);
  if (vx_.dim() > 1 || vg_.dim() > 1) s += "," + std::to_string(a % vx_.dim() + 1);
  return s;
}

Mat SLModule::x_op(const Mat& m) const {
  return kron(identity(static_cast<int>(vg_.dim())), vx_.action(m));
}

Mat SLModule::v_action(const ToroidalElem& y) const {
  Mat out = zero_matrix(static_cast<int>(dimv_), static_cast<int>(dimv_));
  if (!y.vf.is_zero()) {
    if (y.vf.degree() != 0) throw std::invalid_argument("v_action needs a degree-0 element");
    out += x_op(degree_zero_to_matrix(y.vf));
  }
  const MultiIndex one(config().n);
  for (std::size_t a = 0; a < y.loop.size(); ++a)
    for (const auto& [r, c] : y.loop[a].terms()) {
      if (r != one) throw std::invalid_argument("v_action needs a degree-0 element");
      out += g_ops_[a] * c;
    }
  for (std::size_t j = 0; j < y.central.size(); ++j)
    for (const auto& [r, c] : y.central[j].terms()) {
      if (r != one) throw std::invalid_argument("v_action needs a degree-0 element");
      out += identity(static_cast<int>(dimv_)) * Rational(c * lw_.c[j]);
    }
  return out;
}

const CoordinateSystem<Rational>& SLModule::symbols(int d) const {
  auto& slot = symbol_cache_.at(d + 1);
  if (!slot) {
    const int n = config().n;
    EchelonBasis<Rational> eb(w_coordinate_count(n, d));
    std::vector<VFBasisSym> chosen;
    std::vector<Vec> coords;
    for (const auto& sym : symbol_fields(config().xkind, n, d)) {
      Vec c = w_coordinates(expand_symbol(sym), d);
      if (eb.insert(c)) {
        chosen.push_back(sym);
        coords.push_back(std::move(c));
      }
    }
    slot.emplace(std::move(chosen), CoordinateSystem<Rational>(coords, w_coordinate_count(n, d)));
  }
  return slot->second;
}

void SLModule::literal_vf_terms(const VectorField& x, std::map<MultiIndex, Mat>& acc) const {
  const int n = config().n;
  const XKind kind = config().xkind;
  if (kind == XKind::W) {
    // t^r d_i . (t^s (x) v) = t^r d_i(t^s) (x) v + sum_j d_j(t^r) t^s (x) (x_j d_i) v,  x_j d_i -> E_ji
    for (int i = 0; i < n; ++i)
      for (const auto& [r, c] : x.component(i).terms())
        for (int j = 0; j < n; ++j) {
          if (r[j] == 0) continue;
          add_matrix(acc, r - MultiIndex::unit(n, j), unit_matrix(n, j, i), Rational(c * r[j]));
        }
    return;
  }
  for (const auto& [d, part] : homogeneous_parts(x)) {
    const auto& cs = symbols(d);
    const auto& fields = symbol_cache_[d + 1]->first;
    const auto coeffs = cs.coordinates(w_coordinates(part, d));
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (coeffs[k] == 0) continue;
      const Rational kappa = coeffs[k];
      const VFBasisSym& sym = fields[k];
      const MultiIndex& r = sym.r;
      if (kind == XKind::S) {
        const int i = sym.i, j = sym.j;
        // d_ij(t^r) . (t^s (x) v) = d_ij(t^r)(t^s) (x) v + d_i d_j(t^r) t^s (x) (x_i d_i - x_j d_j) v
        //   + sum_{k != i} d_k d_j(t^r) t^s (x) (x_k d_i) v - sum_{k != j} d_k d_i(t^r) t^s (x) (x_k d_j) v
        {
          auto [c, u] = second_derivative(r, i, j);
          add_matrix(acc, u, unit_matrix(n, i, i) - unit_matrix(n, j, j), Rational(kappa * c));
        }
        for (int kk = 0; kk < n; ++kk) {
          if (kk != i) {
            auto [c, u] = second_derivative(r, kk, j);
            add_matrix(acc, u, unit_matrix(n, kk, i), Rational(kappa * c));
          }
          if (kk != j) {
            auto [c, u] = second_derivative(r, kk, i);
            add_matrix(acc, u, unit_matrix(n, kk, j), Rational(-kappa * c));
          }
        }
      } else {
        const int m = n / 2;
        auto put = [&](int a, int b, const Mat& e, int sign) {
          auto [c, u] = second_derivative(r, a, b);
          add_matrix(acc, u, e, Rational(kappa * c * sign));
        };
        for (int k2 = 0; k2 < m; ++k2) put(k2, k2, unit_matrix(n, k2, k2 + m), 1);
        for (int k2 = m; k2 < n; ++k2) put(k2, k2, unit_matrix(n, k2, k2 - m), -1);
        for (int k2 = 0; k2 < m; ++k2)
          for (int j = m; j < n; ++j) put(j, k2, unit_matrix(n, k2, j - m) - unit_matrix(n, j, m + k2), -1);
        for (int j = 0; j < m; ++j)
          for (int k2 = j + 1; k2 < m; ++k2) put(j, k2, unit_matrix(n, k2, m + j) + unit_matrix(n, j, m + k2), 1);
        for (int j = m; j < n; ++j)
          for (int k2 = j + 1; k2 < n; ++k2)
            put(j, k2, unit_matrix(n, k2, j - m) + unit_matrix(n, j, k2 - m), opt_.h_sign);
      }
    }
  }
}

GenOp SLModule::generator_op(const ToroidalElem& e) const {
  const int n = config().n;
  if (e.n() != n || e.loop.size() != alg_->gdim()) throw std::invalid_argument("element does not belong to this module's algebra");
  std::map<MultiIndex, Mat> xterms;  // n x n matrices acting on V_x
  std::map<MultiIndex, Mat> vterms;  // dim V matrices
  if (!e.vf.is_zero()) {
    if (opt_.form == ActionForm::literal) {
      literal_vf_terms(e.vf, xterms);
    } else {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          const Poly dji = e.vf.component(i).derivative(j);
          for (const auto& [u, c] : dji.terms()) add_matrix(xterms, u, unit_matrix(n, j, i), c);
        }
    }
  }
  for (const auto& [u, m] : xterms)
    if (!is_zero(m)) add_matrix(vterms, u, x_op(m), Rational(1));
  for (std::size_t a = 0; a < e.loop.size(); ++a)
    for (const auto& [u, c] : e.loop[a].terms()) add_matrix(vterms, u, g_ops_[a], c);
  const Mat id = identity(static_cast<int>(dimv_));
  for (std::size_t j = 0; j < e.central.size(); ++j)
    for (const auto& [u, c] : e.central[j].terms()) add_matrix(vterms, u, id, Rational(c * lw_.c[j]));

  GenOp op;
  op.deriv = e.vf;
  for (const auto& [u, m] : vterms) {
    if (is_zero(m)) continue;
    GenOp::Term t;
    t.shift = u;
    t.cols.resize(dimv_);
    for (std::size_t b = 0; b < dimv_; ++b)
      for (std::size_t a = 0; a < dimv_; ++a)
        if (m(a, b) != 0) t.cols[b].emplace_back(a, m(a, b));
    op.terms.push_back(std::move(t));
  }
  return op;
}

Vec SLModule::apply(const GenOp& op, const Vec& v) const {
  if (v.dim() != dim()) throw std::invalid_argument("vector does not belong to this module");
  const int n = config().n;
  std::map<std::size_t, Rational> acc;
  auto put = [&](const MultiIndex& t, std::size_t a, const Rational& x) {
    long k = mono_.index_of(t);
    if (k < 0) {
      if (t.nonnegative()) throw std::out_of_range("action leaves the truncation: degree " + std::to_string(t.degree()) + " > D=" + std::to_string(D()));
      return;
    }
    acc[static_cast<std::size_t>(k) * dimv_ + a] += x;
  };
  for (const auto& [idx, c] : v) {
    const MultiIndex& s = mono_.at(idx / dimv_);
    const std::size_t a = idx % dimv_;
    for (int i = 0; i < n; ++i) {
      if (s[i] == 0) continue;
      const MultiIndex base = s - MultiIndex::unit(n, i);
      for (const auto& [r, x] : op.deriv.component(i).terms()) put(r + base, a, Rational(x * c * s[i]));
    }
    for (const auto& t : op.terms) {
      if (t.cols[a].empty()) continue;
      const MultiIndex target = t.shift + s;
      for (const auto& [b, x] : t.cols[a]) put(target, b, Rational(x * c));
    }
  }
  for (auto it = acc.begin(); it != acc.end();) it = it->second == 0 ? acc.erase(it) : std::next(it);
  return accumulate(dim(), acc);
}

const Vec& SLModule::column(int d, std::size_t k, std::size_t idx) const {
  auto& gslot = gen_cache_.at(d + 1).at(k);
  if (!gslot) gslot = generator_op(alg_->graded_slice(d).basis[k]);
  auto& cols = col_cache_[d + 1][k];
  if (cols.empty()) cols.resize(dim());
  auto& c = cols.at(idx);
  if (!c) c = apply(*gslot, unit(idx));
  return *c;
}

Vec SLModule::act_basis(int d, std::size_t k, const Vec& v) const {
  Vec out = zero();
  for (const auto& [idx, c] : v) out.axpy(c, column(d, k, idx));
  return out;
}

Vec SLModule::multiply(const Poly& f, const Vec& v) const {
  std::map<std::size_t, Rational> acc;
  for (const auto& [idx, c] : v) {
    const MultiIndex& s = mono_.at(idx / dimv_);
    for (const auto& [r, x] : f.terms()) {
      long k = mono_.index_of(r + s);
      if (k < 0) throw std::out_of_range("multiplication leaves the truncation");
      acc[static_cast<std::size_t>(k) * dimv_ + idx % dimv_] += x * c;
    }
  }
  for (auto it = acc.begin(); it != acc.end();) it = it->second == 0 ? acc.erase(it) : std::next(it);
  return accumulate(dim(), acc);
}

Vec SLModule::sigma(const ToroidalElem& y, const Vec& v) const {
  if (y.is_zero()) return zero();
  const int d = y.degree();
  if (d >= 1) return zero();
  if (d != 0) throw std::invalid_argument("sigma is defined on degrees >= 0");
  const Mat m = v_action(y);
  std::map<std::size_t, Rational> acc;
  for (const auto& [idx, c] : v) {
    const std::size_t base = idx - idx % dimv_, a = idx % dimv_;
    for (std::size_t b = 0; b < dimv_; ++b)
      if (m(b, a) != 0) acc[base + b] += m(b, a) * c;
  }
  for (auto it = acc.begin(); it != acc.end();) it = it->second == 0 ? acc.erase(it) : std::next(it);
  return accumulate(dim(), acc);
}

// ---------------------------------------------------------------------------------------------

Report verify_module_axiom(const SLModule& m, int max_gen_degree) {
  const ToroidalAlgebra& alg = m.algebra();
  const int D = m.D();
  const int top = std::min(max_gen_degree, D);
  Report rep;
  rep.suite = "module";
  rep.notes.push_back(describe(alg.config()) + ", module " + m.weight().str());
  rep.notes.push_back("generator degrees -1.." + std::to_string(top) + "; every basis vector w with all intermediate degrees <= D");
  if (alg.xkind() == XKind::H)
    rep.notes.push_back("H action: last summation taken with sign " + std::string(m.options().h_sign < 0 ? "-1" : "+1"));
  for (int da = -1; da <= top; ++da)
    for (int db = da; db <= top; ++db) {
      const int ds = da + db;
      const int wmax = std::min(D, D - std::max({da, db, ds}));
      if (wmax < 0) continue;
      const std::size_t nw = m.degree_offset(wmax) + m.degree_size(wmax);
      const GradedSlice& sa = alg.graded_slice(da);
      const GradedSlice& sb = alg.graded_slice(db);
      for (std::size_t ka = 0; ka < sa.dim(); ++ka)
        for (std::size_t kb = (da == db ? ka + 1 : 0); kb < sb.dim(); ++kb) {
          const std::string name = "[" + sa.names[ka] + ", " + sb.names[kb] + "]";
          ToroidalElem br = bracket(alg, sa.basis[ka], sb.basis[kb]);
          std::vector<Rational> coords;
          if (ds >= -1) {
            try {
              coords = alg.slice_coordinates(br, ds);
            } catch (const std::domain_error& e) {
              rep.check(false, name, std::string("bracket outside its slice: ") + e.what());
              continue;
            }
          } else if (!br.is_zero()) {
            rep.check(false, name, "bracket of degree < -1 is nonzero");
            continue;
          }
          for (std::size_t w = 0; w < nw; ++w) {
            Vec lhs = m.zero();
            for (std::size_t k = 0; k < coords.size(); ++k)
              if (coords[k] != 0) lhs.axpy(coords[k], m.column(ds, k, w));
            Vec rhs = m.act_basis(da, ka, m.column(db, kb, w)) - m.act_basis(db, kb, m.column(da, ka, w));
            bool ok = lhs == rhs;
            rep.check(ok, name + " on " + m.label(w),
                      ok ? "" : "lhs " + vec_str(m, lhs) + " vs rhs " + vec_str(m, rhs));
          }
        }
    }
  return rep;
}

Report verify_action_forms(const SLModule& m, int max_gen_degree) {
  ModuleOptions jo = m.options();
  jo.form = ActionForm::jacobian;
  SLModule jac(m.config(), m.weight(), jo);
  const ToroidalAlgebra& alg = m.algebra();
  Report rep;
  rep.suite = "action-forms";
  rep.notes.push_back("literal formulas vs the Jacobian form, on every basis vector whose image stays within D");
  for (int d = -1; d <= std::min(max_gen_degree, m.D()); ++d) {
    const GradedSlice& s = alg.graded_slice(d);
    const int wmax = m.D() - std::max(d, 0);
    const std::size_t nw = m.degree_offset(wmax) + m.degree_size(wmax);
    for (std::size_t k = 0; k < s.vf_count; ++k)
      for (std::size_t w = 0; w < nw; ++w) {
        const Vec& a = m.column(d, k, w);
        const Vec& b = jac.column(d, k, w);
        rep.check(a == b, s.names[k] + " on " + m.label(w), a == b ? "" : "literal " + vec_str(m, a) + " vs jacobian " + vec_str(m, b));
      }
  }
  return rep;
}

std::vector<std::size_t> SubSlices::dims() const {
  std::vector<std::size_t> out;
  for (const auto& s : slices) out.push_back(s.rank());
  return out;
}

SubSlices bottom_span(const SLModule& m) {
  const int D = m.D();
  SubSlices out;
  out.slices.assign(D + 1, EchelonBasis<Rational>(m.dim()));
  for (std::size_t i = 0; i < m.degree_size(0); ++i) out.slices[0].insert(m.unit(m.degree_offset(0) + i));
  for (int d = 1; d <= D; ++d) {
    auto& target = out.slices[d];
    const std::size_t full = m.degree_size(d);
    for (int j = 1; j <= d && target.rank() < full; ++j) {
      const GradedSlice& s = m.algebra().graded_slice(j);
      const auto rows = out.slices[d - j].rows();
      for (const auto& row : rows) {
        for (std::size_t k = 0; k < s.dim() && target.rank() < full; ++k) target.insert(m.act_basis(j, k, row));
        if (target.rank() == full) break;
      }
    }
  }
  return out;
}

bool is_irreducible_to_depth(const SLModule& m) {
  SubSlices s = bottom_span(m);
  for (int d = 0; d <= m.D(); ++d)
    if (s.slices[d].rank() != m.degree_size(d)) return false;
  return true;
}

Report verify_cyclic_submodules(const SLModule& m, int samples, std::uint64_t seed) {
  Report rep;
  rep.suite = "cyclic";
  const int D = m.D();
  SubSlices bs = bottom_span(m);
  rep.notes.push_back("bottom span dims: " + [&] {
    std::string s;
    for (auto x : bs.dims()) s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
  }());
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-3, 3);

  // weight vectors grouped by (degree, weight)
  std::map<std::pair<int, HWeight>, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < m.dim(); ++i) groups[{m.degree_of(i), m.weight_of(i)}].push_back(i);

  auto lowering_reaches_bottom = [&](const Vec& v0) {
    std::vector<EchelonBasis<Rational>> sub(D + 1, EchelonBasis<Rational>(m.dim()));
    std::vector<Vec> queue;
    int d0 = m.degree_of(v0.leading_index());
    if (sub[d0].insert(v0)) queue.push_back(v0);
    while (!queue.empty()) {
      Vec v = std::move(queue.back());
      queue.pop_back();
      int d = m.degree_of(v.leading_index());
      for (int g = -1; g <= 0; ++g) {
        if (d + g < 0) continue;
        const GradedSlice& s = m.algebra().graded_slice(g);
        for (std::size_t k = 0; k < s.dim(); ++k) {
          Vec w = m.act_basis(g, k, v);
          if (!w.empty() && sub[d + g].insert(w)) queue.push_back(std::move(w));
        }
      }
    }
    return sub[0].rank() == m.degree_size(0);
  };

  for (int t = 0; t < samples; ++t) {
    Vec v = m.zero();
    std::string origin;
    if (t % 2 == 0) {
      std::uniform_int_distribution<std::size_t> pick(0, m.dim() - 1);
      std::size_t i = pick(rng);
      for (std::size_t j : groups[{m.degree_of(i), m.weight_of(i)}]) v.set(j, Rational(coef(rng)));
      if (v.empty()) v.set(i, Rational(1));
      origin = "module";
    } else {
      std::uniform_int_distribution<int> pd(0, D);
      int d = pd(rng);
      while (bs.slices[d].rank() == 0) d = (d + 1) % (D + 1);
      const auto rows = bs.slices[d].rows();
      std::uniform_int_distribution<std::size_t> pr(0, rows.size() - 1);
      const Vec& first = rows[pr(rng)];
      const HWeight w = m.weight_of(first.leading_index());
      for (const auto& r : rows)
        if (m.weight_of(r.leading_index()) == w) v.axpy(Rational(coef(rng)), r);
      if (v.empty()) v = first;
      origin = "socle";
    }
    const std::size_t lead = v.leading_index();
    rep.check(lowering_reaches_bottom(v), "sample " + std::to_string(t) + " (" + origin + ", degree " + std::to_string(m.degree_of(lead)) + ", weight " + m.weight_of(lead).str() + ")",
              "lowering closure misses part of 1 (x) V");
  }

  // the bottom span is stable under L_{-1} and L_0, hence a submodule contained in every cyclic one
  for (int d = 0; d <= D; ++d)
    for (const auto& row : bs.slices[d].rows())
      for (int g = -1; g <= 0; ++g) {
        if (d + g < 0) continue;
        const GradedSlice& s = m.algebra().graded_slice(g);
        for (std::size_t k = 0; k < s.dim(); ++k)
          rep.check(bs.slices[d + g].contains(m.act_basis(g, k, row)), "bottom span stable under " + s.names[k] + " at degree " + std::to_string(d));
      }
  return rep;
}

// ---------------------------------------------------------------------------------------------

long derham_kernel_prediction(int n, int k, int d) {
  if (d < 0) return 0;
  if (k == 0) return d == 0 ? 1 : 0;
  auto binom = [](int a, int b) -> long {
    if (b < 0 || b > a) return 0;
    long c = 1;
    for (int i = 1; i <= b; ++i) c = c * (a - b + i) / i;
    return c;
  };
  long s = 0;
  for (int j = 0; j < k; ++j) s += ((k - 1 - j) % 2 ? -1 : 1) * binom(n, j) * monomial_count(n, d + k - j);
  return s;
}

namespace {

unsigned mask_of(const Weight& w) {
  unsigned s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] != 0 && w[i] != 1) throw std::logic_error("not an exterior-power weight");
    if (w[i]) s |= 1u << i;
  }
  return s;
}

// d_k(t^s (x) e_J) = sum_i d_i(t^s) (x) e_J ^ e_i, from the module of k-forms to (k+1)-forms.
Vec apply_derham(const SLModule& from, const SLModule& to, const Vec& v) {
  const int n = from.config().n;
  std::map<unsigned, std::size_t> to_index;
  for (std::size_t b = 0; b < to.v_x().dim(); ++b) to_index[mask_of(to.v_x().weights()[b])] = b;
  std::map<std::size_t, Rational> acc;
  for (const auto& [idx, c] : v) {
    const MultiIndex& s = from.monomials().at(idx / from.dim_v());
    const unsigned J = mask_of(from.v_x().weights()[idx % from.dim_v()]);
    for (int i = 0; i < n; ++i) {
      if (s[i] == 0 || (J >> i & 1u)) continue;
      int above = std::popcount(J >> (i + 1));
      Rational x = c * s[i];
      if (above % 2) x = -x;
      long k = to.monomials().index_of(s - MultiIndex::unit(n, i));
      acc[static_cast<std::size_t>(k) * to.dim_v() + to_index.at(J | 1u << i)] += x;
    }
  }
  for (auto it = acc.begin(); it != acc.end();) it = it->second == 0 ? acc.erase(it) : std::next(it);
  return Vec::from_map(to.dim(), acc);
}

LabeledWeight exterior_weight(const AlgebraConfig& cfg, int k) {
  LabeledWeight lw = trivial_weight(cfg);
  lw.mu = mu_k(cfg.xkind, cfg.n, k);
  return lw;
}

}  // namespace

DeRhamCheck derham(const AlgebraConfig& cfg, int k) {
  if (cfg.xkind != XKind::W) throw std::invalid_argument("the de Rham complex is built for W only");
  if (k < 0 || k > cfg.n) throw std::out_of_range("form degree k must lie in 0..n");
  const int n = cfg.n, D = cfg.D;
  DeRhamCheck out;
  out.k = k;
  Report& rep = out.report;
  rep.suite = "derham";
  rep.notes.push_back(describe(cfg) + ", k=" + std::to_string(k));
  SLModule mk(cfg, exterior_weight(cfg, k));
  std::optional<SLModule> mnext, mnext2, mprev;
  if (k + 1 <= n) mnext.emplace(cfg, exterior_weight(cfg, k + 1));
  if (k + 2 <= n) mnext2.emplace(cfg, exterior_weight(cfg, k + 2));
  if (k >= 1) mprev.emplace(cfg, exterior_weight(cfg, k - 1));

  for (int d = 0; d <= D; ++d) {
    EchelonBasis<Rational> img(mnext ? mnext->dim() : 1);
    for (std::size_t i = 0; i < mk.degree_size(d); ++i) {
      const std::size_t idx = mk.degree_offset(d) + i;
      if (!mnext) continue;
      Vec y = apply_derham(mk, *mnext, mk.unit(idx));
      img.insert(y);
      if (mnext2) {
        Vec z = apply_derham(*mnext, *mnext2, y);
        rep.check(z.empty(), "d^2 on " + mk.label(idx), z.empty() ? "" : "nonzero");
      }
    }
    out.rank.push_back(static_cast<long>(img.rank()));
    out.kernel.push_back(static_cast<long>(mk.degree_size(d)) - static_cast<long>(img.rank()));
    out.predicted.push_back(derham_kernel_prediction(n, k, d));
  }

  // module map: d(e.w) = e.(d w) for generators of degree <= 2
  if (mnext) {
    for (int g = -1; g <= std::min(2, D); ++g) {
      const GradedSlice& s = mk.algebra().graded_slice(g);
      const int wmax = D - std::max(g, 0);
      for (std::size_t kk = 0; kk < s.dim(); ++kk)
        for (std::size_t w = 0; w < mk.degree_offset(wmax) + mk.degree_size(wmax); ++w) {
          Vec lhs = apply_derham(mk, *mnext, mk.column(g, kk, w));
          Vec rhs = mnext->act_basis(g, kk, apply_derham(mk, *mnext, mk.unit(w)));
          bool ok = lhs == rhs;
          rep.check(ok, "module map: " + s.names[kk] + " on " + mk.label(w), ok ? "" : vec_str(*mnext, lhs) + " vs " + vec_str(*mnext, rhs));
        }
    }
  }

  // exactness in interior degrees: ker d_k = im d_{k-1}
  for (int d = 0; d <= D; ++d) {
    if (d == D) {
      out.image_in.push_back(-1);
      break;
    }
    long image = 0;
    if (mprev) {
      EchelonBasis<Rational> img(mk.dim());
      for (std::size_t i = 0; i < mprev->degree_size(d + 1); ++i) img.insert(apply_derham(*mprev, mk, mprev->unit(mprev->degree_offset(d + 1) + i)));
      image = static_cast<long>(img.rank());
    } else {
      image = d == 0 ? 1 : 0;  // constants
    }
    out.image_in.push_back(image);
    rep.check(image == out.kernel[d], "exactness at degree " + std::to_string(d),
              "ker " + std::to_string(out.kernel[d]) + " vs im " + std::to_string(image));
  }
  for (int d = 0; d <= D; ++d) {
    if (d == D && k < n) continue;  // truncated boundary
    rep.check(out.kernel[d] == out.predicted[d], "kernel dimension at degree " + std::to_string(d),
              "ker " + std::to_string(out.kernel[d]) + " vs predicted " + std::to_string(out.predicted[d]));
  }
  return out;
}

// ---------------------------------------------------------------------------------------------

std::optional<VectorField> sigma_stated_value(XKind kind, int n, const SigmaTarget& t) {
  const MultiIndex& g = t.gamma;
  auto td = [n](int a, int b, const Rational& c = 1) { return VectorField::monomial(n, MultiIndex::unit(n, a), b, c); };
  if (kind == XKind::W) {
    if (g.degree() != 1) return std::nullopt;
    for (int u = 0; u < n; ++u)
      if (g[u] == 1) return td(u, t.j);
    return std::nullopt;
  }
  if (g.degree() != 2) return std::nullopt;
  std::vector<int> idx;
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < g[a]; ++c) idx.push_back(a);
  if (kind == XKind::S) {
    const int i = t.i, j = t.j;
    if (g == MultiIndex::unit(n, i) + MultiIndex::unit(n, j)) return td(i, i) - td(j, j);
    // gamma = e_j + e_k with k != i
    if (g[j] >= 1) {
      MultiIndex rest = g - MultiIndex::unit(n, j);
      for (int k = 0; k < n; ++k)
        if (rest == MultiIndex::unit(n, k) && k != i) return td(k, i);
    }
    return std::nullopt;
  }
  const int m = n / 2;
  if (idx[0] == idx[1]) {
    const int i = idx[0];
    if (i < m) return td(i, m + i, 2);
    return td(i, i - m, -2);
  }
  const int i = idx[0], j = idx[1];
  if (i < m && j >= m) return td(j, m + i) - td(i, j - m);
  if (j < m) return td(j, m + i) + td(i, j + m);
  return (td(j, i - m) + td(i, j - m)) * Rational(-1);
}

VectorField sigma_derived_value(XKind kind, int n, const SigmaTarget& t) {
  if (kind == XKind::W) {
    for (int u = 0; u < n; ++u)
      if (t.gamma[u] == 1 && t.gamma.degree() == 1) return VectorField::monomial(n, MultiIndex::unit(n, u), t.j);
    throw std::invalid_argument("W recovery needs |gamma| = 1");
  }
  Integer fact = 1;
  for (int a = 0; a < n; ++a) fact *= falling_factorial(t.gamma[a], t.gamma[a]);
  const Poly mono(n, t.gamma);
  VectorField f = kind == XKind::S ? d_ij(mono, t.i, t.j) : d_H(mono);
  return f * Rational(Rational(1) / Rational(fact));
}

namespace {

std::string target_name(XKind kind, const SigmaTarget& t) {
  std::string s = "gamma=" + t.gamma.str();
  if (kind == XKind::W) s += " j=" + std::to_string(t.j + 1);
  if (kind == XKind::S) s += " (i,j)=(" + std::to_string(t.i + 1) + "," + std::to_string(t.j + 1) + ")";
  return s;
}

}  // namespace

Report sigma_recovery_check(const AlgebraConfig& cfg, const LabeledWeight& lw, const SigmaTarget& t, int max_vec_degree,
                            SigmaReference ref) {
  const int n = cfg.n;
  const int gd = t.gamma.degree();
  AlgebraConfig big = cfg;
  big.D = std::max(cfg.D, max_vec_degree) + 2 * gd;
  SLModule m(big, lw);
  Report rep;
  rep.suite = "sigma-recovery";
  const std::string name = target_name(cfg.xkind, t);

  PairingSet ps = pairing_polynomials(n, t.gamma);
  if (!verify_pairing(ps)) {
    rep.check(false, name, "pairing set does not verify");
    return rep;
  }
  std::optional<VectorField> value;
  if (ref == SigmaReference::stated) {
    value = sigma_stated_value(cfg.xkind, n, t);
    if (!value) rep.notes.push_back(name + ": no listed case, compared with the derived value");
  }
  if (!value) value = sigma_derived_value(cfg.xkind, n, t);
  const ToroidalElem y = m.algebra().vf(*value);

  std::vector<std::pair<Poly, GenOp>> lhs_ops;
  for (const auto& [f, g] : ps.pairs) {
    VectorField field(n);
    if (cfg.xkind == XKind::W) field.component(t.j) = g;
    else if (cfg.xkind == XKind::S) field = d_ij(g, t.i, t.j);
    else field = d_H(g);
    if (field.is_zero()) continue;
    lhs_ops.emplace_back(f, m.generator_op(m.algebra().vf(field)));
  }
  const std::size_t nw = m.degree_offset(max_vec_degree) + m.degree_size(max_vec_degree);
  for (std::size_t w = 0; w < nw; ++w) {
    Vec lhs = m.zero();
    for (const auto& [f, op] : lhs_ops) lhs = lhs + m.multiply(f, m.apply(op, m.unit(w)));
    Vec rhs = m.sigma(y, m.unit(w));
    bool ok = lhs == rhs;
    rep.check(ok, name + " on " + m.label(w),
              ok ? "" : "recovered " + vec_str(m, lhs) + " vs sigma(" + value->str() + ") " + vec_str(m, rhs));
  }
  return rep;
}

Report sigma_recovery_sweep(const AlgebraConfig& cfg, const LabeledWeight& lw, int max_vec_degree, SigmaReference ref) {
  const int n = cfg.n;
  Report rep;
  rep.suite = "sigma-recovery";
  rep.notes.push_back(describe(cfg) + ", module " + lw.str() + ", vectors of degree <= " + std::to_string(max_vec_degree) +
                      (ref == SigmaReference::stated ? ", stated case values" : ", derived values"));
  std::vector<SigmaTarget> targets;
  if (cfg.xkind == XKind::W) {
    for (int u = 0; u < n; ++u)
      for (int j = 0; j < n; ++j) targets.push_back({MultiIndex::unit(n, u), 0, j});
  } else {
    for (const auto& g : monomials_of_degree(n, 2)) {
      if (cfg.xkind == XKind::S) {
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j) targets.push_back({g, i, j});
      } else {
        targets.push_back({g, 0, 0});
      }
    }
  }
  for (const auto& t : targets) rep.merge(sigma_recovery_check(cfg, lw, t, max_vec_degree, ref));
  rep.suite = "sigma-recovery";
  return rep;
}

// ---------------------------------------------------------------------------------------------

Report verify_AL_axioms(const SLModule& m, bool literal_iv) {
  const ToroidalAlgebra& alg = m.algebra();
  const int n = m.config().n, D = m.D();
  const XKind kind = m.config().xkind;
  Report rep;
  rep.suite = "al-axioms";
  rep.notes.push_back(describe(m.config()) + ", module " + m.weight().str());
  const int wmax = D - 3;
  if (wmax < 0) {
    rep.notes.push_back("D < 3: no vectors to test");
    return rep;
  }
  rep.notes.push_back(std::string("second-order term of (IV)(i) ") + (literal_iv ? "as printed, sum (d^alpha f) sigma(.)" : "with 1/alpha!"));
  const std::size_t nw = m.degree_offset(wmax) + m.degree_size(wmax);
  const auto mult2 = monomials_up_to(n, 2);
  const auto mult3 = monomials_up_to(n, 3);
  const GradedSlice& s0 = alg.graded_slice(0);

  // (I)(i), (I)(ii)
  for (int d = -1; d <= 2; ++d) {
    const GradedSlice& s = alg.graded_slice(d);
    for (std::size_t k = 0; k < s.dim(); ++k) {
      const bool is_vf = k < s.vf_count;
      for (const auto& r : mult2) {
        const Poly f(n, r);
        for (std::size_t w = 0; w < nw; ++w) {
          if (m.degree_of(w) + r.degree() + d > D) continue;
          Vec fw = m.multiply(f, m.unit(w));
          Vec lhs = m.act_basis(d, k, fw) - m.multiply(f, m.column(d, k, w));
          Vec rhs = is_vf ? m.multiply(s.basis[k].vf.apply(f), m.unit(w)) : m.zero();
          rep.check(lhs == rhs, std::string(is_vf ? "(I)(i) " : "(I)(ii) ") + s.names[k] + ", f=" + r.monomial() + ", w=" + m.label(w));
        }
      }
    }
  }
  // (II) and (III) for D' in L_0
  for (std::size_t k = 0; k < s0.dim(); ++k) {
    for (const auto& r : mult2) {
      const Poly f(n, r);
      for (std::size_t w = 0; w < nw; ++w) {
        Vec lhs = m.sigma(s0.basis[k], m.multiply(f, m.unit(w))) - m.multiply(f, m.sigma(s0.basis[k], m.unit(w)));
        rep.check(lhs.empty(), "(II) " + s0.names[k] + ", f=" + r.monomial() + ", w=" + m.label(w));
      }
    }
    for (int i = 0; i < n; ++i) {
      const ToroidalElem di = alg.vf(VectorField::monomial(n, MultiIndex(n), i));
      for (std::size_t w = 0; w < nw; ++w) {
        Vec lhs = m.act(di, m.sigma(s0.basis[k], m.unit(w))) - m.sigma(s0.basis[k], m.act(di, m.unit(w)));
        rep.check(lhs.empty(), "(III) d" + std::to_string(i + 1) + ", " + s0.names[k] + ", w=" + m.label(w));
      }
    }
  }
  rep.notes.push_back("(II), (III): sigma vanishes on degrees >= 1, so only L_0 is tested");

  // (IV)(i)
  auto d_of = [&](int i) { return alg.vf(VectorField::monomial(n, MultiIndex(n), i)); };
  auto second_order = [&](const Poly& f, const std::function<VectorField(const Poly&)>& field, const Vec& w) {
    Vec out = m.zero();
    for (const auto& alpha : monomials_of_degree(n, 2)) {
      Poly coef = d_alpha_apply(f, alpha);
      if (coef.is_zero()) continue;
      Integer fact = 1;
      for (int a = 0; a < n; ++a) fact *= falling_factorial(alpha[a], alpha[a]);
      if (!literal_iv) coef = coef * Rational(Rational(1) / Rational(fact));
      VectorField y = field(Poly(n, alpha));
      if (y.is_zero()) continue;
      out = out + m.multiply(coef, m.sigma(alg.vf(y), w));
    }
    return out;
  };
  for (const auto& r : mult3) {
    const Poly f(n, r);
    for (std::size_t w = 0; w < nw; ++w) {
      const Vec ew = m.unit(w);
      if (kind == XKind::W) {
        for (int j = 0; j < n; ++j) {
          VectorField fd(n);
          fd.component(j) = f;
          Vec lhs = m.act(alg.vf(fd), ew);
          Vec rhs = m.multiply(f, m.act(d_of(j), ew));
          for (int i = 0; i < n; ++i) rhs = rhs + m.multiply(f.derivative(i), m.sigma(alg.vf(VectorField::monomial(n, MultiIndex::unit(n, i), j)), ew));
          rep.check(lhs == rhs, "(IV)(i) f=" + r.monomial() + " d" + std::to_string(j + 1) + ", w=" + m.label(w),
                    lhs == rhs ? "" : vec_str(m, lhs) + " vs " + vec_str(m, rhs));
        }
      } else if (kind == XKind::S) {
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j) {
            VectorField x = d_ij(f, i, j);
            if (x.is_zero()) continue;
            Vec lhs = m.act(alg.vf(x), ew);
            Vec rhs = m.multiply(f.derivative(j), m.act(d_of(i), ew)) - m.multiply(f.derivative(i), m.act(d_of(j), ew));
            rhs = rhs + second_order(f, [i, j](const Poly& p) { return d_ij(p, i, j); }, ew);
            rep.check(lhs == rhs, "(IV)(i) d_" + std::to_string(i + 1) + std::to_string(j + 1) + "(" + r.monomial() + "), w=" + m.label(w),
                      lhs == rhs ? "" : vec_str(m, lhs) + " vs " + vec_str(m, rhs));
          }
      } else {
        VectorField x = d_H(f);
        if (x.is_zero()) continue;
        const int half = n / 2;
        Vec lhs = m.act(alg.vf(x), ew);
        Vec rhs = m.zero();
        for (int j = 0; j < half; ++j) rhs = rhs + m.multiply(f.derivative(j), m.act(d_of(half + j), ew));
        for (int j = half; j < n; ++j) rhs = rhs - m.multiply(f.derivative(j), m.act(d_of(j - half), ew));
        rhs = rhs + second_order(f, [](const Poly& p) { return d_H(p); }, ew);
        rep.check(lhs == rhs, "(IV)(i) d_H(" + r.monomial() + "), w=" + m.label(w), lhs == rhs ? "" : vec_str(m, lhs) + " vs " + vec_str(m, rhs));
      }
    }
  }
  if (kind == XKind::H) rep.notes.push_back("(IV)(i) H: first-order term uses d_{j-m} for j = m+1..2m");

  // (IV)(ii), (IV)(iii)
  for (const auto& r : mult2) {
    const Poly f(n, r);
    for (std::size_t w = 0; w < nw; ++w) {
      const Vec fw = m.multiply(f, m.unit(w));
      for (std::size_t a = 0; a < alg.gdim(); ++a) {
        Vec lhs = m.act(alg.gt(a, r), m.unit(w));
        Vec rhs = m.sigma(alg.gt(a, MultiIndex(n)), fw);
        rep.check(lhs == rhs, "(IV)(ii) " + alg.g().basis_names()[a] + "(x)" + r.monomial() + ", w=" + m.label(w));
      }
      for (int j = 0; j < n; ++j) {
        Vec lhs = m.act(alg.k(r, j), m.unit(w));
        Vec rhs = m.sigma(alg.k(MultiIndex(n), j), fw);
        rep.check(lhs == rhs, "(IV)(iii) " + r.monomial() + "*K" + std::to_string(j + 1) + ", w=" + m.label(w));
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------------------------

std::vector<std::pair<int, long>> claimed_factors(XKind kind, int n, int k) {
  const int top = n_x(kind, n);
  if (k < 0 || k > top) throw std::out_of_range("k must lie in 0..n_X = " + std::to_string(top));
  if (kind == XKind::H) {
    std::vector<std::pair<int, long>> out;
    if (k >= 1) out.emplace_back(k - 1, 1);
    out.emplace_back(k, 2);
    if (k + 1 <= top) out.emplace_back(k + 1, 1);
    return out;
  }
  if (kind == XKind::W && k == n) return {{n, 1}};
  return {{k, 1}, {k + 1, 1}};
}

namespace {

std::string factor_label(const AlgebraConfig& cfg, const LabeledWeight& lw) {
  bool trivial_rest = true;
  for (int v : lw.lambda) trivial_rest = trivial_rest && v == 0;
  for (const auto& c : lw.c) trivial_rest = trivial_rest && c == 0;
  if (trivial_rest) {
    const int top = cfg.xkind == XKind::H ? cfg.n / 2 : cfg.n;
    for (int j = 0; j <= top; ++j)
      if (mu_k(cfg.xkind, cfg.n, j) == lw.mu) return "mu_" + std::to_string(j);
  }
  return "L" + lw.str();
}

}  // namespace

Composition exceptional_composition(const AlgebraConfig& cfg, int k) {
  validate(cfg);
  const int top = n_x(cfg.xkind, cfg.n);
  if (k < 0 || k > top) throw std::out_of_range("k must lie in 0..n_X = " + std::to_string(top));
  Composition out;
  out.k = k;
  Report& rep = out.report;
  rep.suite = "compose";
  rep.notes.push_back(describe(cfg) + ", V(0, mu_" + std::to_string(k) + ", 0)");
  const int D = cfg.D;
  LabeledWeight lw = trivial_weight(cfg);
  lw.mu = mu_k(cfg.xkind, cfg.n, k);
  SLModule m(cfg, lw);
  const GradedCharacter chv = brute_character(m);
  rep.check(chv == ch_costandard(cfg, lw, D), "module census equals Gamma * ch L0");

  // Peel composition factors from the bottom: each factor's character is the socle census of its own module.
  GradedCharacter rest = chv;
  GradedCharacter formula_total(D), socle_total(D);
  while (!rest.is_zero()) {
    const int d = *rest.min_degree();
    const auto slice = rest.at_degree(d);
    const HWeight top_weight = slice.rbegin()->first;
    const long mult = slice.rbegin()->second;
    if (mult <= 0) {
      rep.check(false, "peel at degree " + std::to_string(d), "negative remainder at " + top_weight.str());
      break;
    }
    LabeledWeight f{top_weight.g, top_weight.x, std::vector<Rational>(cfg.n, Rational(0))};
    AlgebraConfig sub = cfg;
    sub.D = D - d;
    GradedCharacter socle(D - d);
    if (sub.D >= 1) {
      SLModule fm(sub, f);
      socle = subspace_character(fm, bottom_span(fm));
    } else {
      socle = ch_L0(sub, f, 0);
    }
    const GradedCharacter piece = socle.shifted(d).truncated(D) * mult;
    rest = rest - piece;
    socle_total = socle_total + piece;
    formula_total = formula_total + ch_irreducible(sub, f, sub.D).shifted(d).truncated(D) * mult;
    out.factors.push_back({f, factor_label(cfg, f), d, mult});
    if (!rest.nonnegative()) {
      rep.check(false, "peel after " + factor_label(cfg, f), "remainder has negative coefficients");
      break;
    }
  }
  for (int d = 0; d <= D; ++d) {
    ReconciliationRow row{d, 0, 0, 0};
    row.module_dim = chv.degree_dim(d);
    row.socle_sum = socle_total.degree_dim(d);
    row.formula_sum = formula_total.degree_dim(d);
    out.table.push_back(row);
    rep.check(row.module_dim == row.socle_sum, "computed factors balance at degree " + std::to_string(d),
              std::to_string(row.module_dim) + " vs " + std::to_string(row.socle_sum));
    rep.check(row.module_dim == row.formula_sum, "character formulas balance at degree " + std::to_string(d),
              std::to_string(row.module_dim) + " vs " + std::to_string(row.formula_sum));
  }
  rep.check(formula_total == chv, "character formulas reproduce ch V weight by weight");

  // compare with the propositions
  std::map<std::string, long> found, claimed;
  for (const auto& f : out.factors) found[f.label] += f.multiplicity;
  for (const auto& [j, mlt] : claimed_factors(cfg.xkind, cfg.n, k)) {
    LabeledWeight f = trivial_weight(cfg);
    f.mu = mu_k(cfg.xkind, cfg.n, j);
    claimed[factor_label(cfg, f)] += mlt;
  }
  for (const auto& [l, mlt] : claimed) out.claimed.emplace_back(l, mlt);
  std::set<std::string> labels;
  for (const auto& [l, x] : found) labels.insert(l);
  for (const auto& [l, x] : claimed) labels.insert(l);
  for (const auto& l : labels) {
    const long a = found.count(l) ? found[l] : 0, b = claimed.count(l) ? claimed[l] : 0;
    rep.check(a == b, "multiplicity of L(" + l + ")", "computed " + std::to_string(a) + ", claimed " + std::to_string(b));
  }
  return out;
}

}  // namespace polytor
