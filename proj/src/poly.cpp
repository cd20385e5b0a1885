#include "polytor/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace polytor {

MultiIndex::MultiIndex(int n) : n_(static_cast<std::int8_t>(n)) {
  if (n < 0 || n > kMaxVars) throw std::invalid_argument("MultiIndex supports 0..8 variables");
}

MultiIndex::MultiIndex(std::initializer_list<int> exps) : MultiIndex(static_cast<int>(exps.size())) {
  int i = 0;
  for (int v : exps) e_[i++] = static_cast<std::int16_t>(v);
}

MultiIndex::MultiIndex(const std::vector<int>& exps) : MultiIndex(static_cast<int>(exps.size())) {
  for (std::size_t i = 0; i < exps.size(); ++i) e_[i] = static_cast<std::int16_t>(exps[i]);
}

MultiIndex MultiIndex::unit(int n, int i) {
  MultiIndex r(n);
  r.e_[i] = 1;
  return r;
}

int MultiIndex::degree() const {
  int d = 0;
  for (int i = 0; i < n_; ++i) d += e_[i];
  return d;
}

bool MultiIndex::nonnegative() const {
  for (int i = 0; i < n_; ++i)
    if (e_[i] < 0) return false;
  return true;
}

std::vector<int> MultiIndex::to_vector() const {
  return std::vector<int>(e_.begin(), e_.begin() + n_);
}

MultiIndex MultiIndex::operator+(const MultiIndex& o) const {
  MultiIndex r(*this);
  for (int i = 0; i < n_; ++i) r.e_[i] = static_cast<std::int16_t>(e_[i] + o.e_[i]);
  return r;
}

MultiIndex MultiIndex::operator-(const MultiIndex& o) const {
  MultiIndex r(*this);
  for (int i = 0; i < n_; ++i) r.e_[i] = static_cast<std::int16_t>(e_[i] - o.e_[i]);
  return r;
}

bool MultiIndex::operator<(const MultiIndex& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  int d = degree(), od = o.degree();
  if (d != od) return d < od;
  for (int i = 0; i < n_; ++i)
    if (e_[i] != o.e_[i]) return e_[i] > o.e_[i];
  return false;
}

bool MultiIndex::leq(const MultiIndex& o) const {
  for (int i = 0; i < n_; ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

std::string MultiIndex::str() const {
  std::string s = "(";
  for (int i = 0; i < n_; ++i) {
    if (i) s += ",";
    s += std::to_string(e_[i]);
  }
  return s + ")";
}

std::string MultiIndex::monomial() const {
  std::string s;
  for (int i = 0; i < n_; ++i) {
    if (e_[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "t" + std::to_string(i + 1);
    if (e_[i] != 1) s += "^" + std::to_string(e_[i]);
  }
  return s.empty() ? "1" : s;
}

namespace {
void fill_monomials(int n, int i, int remaining, std::vector<int>& cur, std::vector<MultiIndex>& out) {
  if (i == n - 1) {
    cur[i] = remaining;
    out.emplace_back(cur);
    return;
  }
  for (int v = remaining; v >= 0; --v) {
    cur[i] = v;
    fill_monomials(n, i + 1, remaining - v, cur, out);
  }
}
}  // namespace

std::vector<MultiIndex> monomials_of_degree(int n, int d) {
  std::vector<MultiIndex> out;
  if (d < 0 || n <= 0) return out;
  std::vector<int> cur(n, 0);
  fill_monomials(n, 0, d, cur, out);
  return out;
}

std::vector<MultiIndex> monomials_up_to(int n, int d) {
  std::vector<MultiIndex> out;
  for (int k = 0; k <= d; ++k) {
    auto m = monomials_of_degree(n, k);
    out.insert(out.end(), m.begin(), m.end());
  }
  return out;
}

long monomial_count(int n, int d) {
  if (d < 0) return 0;
  long c = 1;
  for (int k = 1; k < n; ++k) c = c * (d + k) / k;
  return c;
}

std::size_t monomial_rank(const MultiIndex& r) {
  const int n = r.n();
  int rem = r.degree();
  std::size_t k = 0;
  for (int i = 0; i + 1 < n; ++i) {
    for (int v = rem; v > r[i]; --v) k += monomial_count(n - i - 1, rem - v);
    rem -= r[i];
  }
  return k;
}

MultiIndex monomial_unrank(int n, int d, std::size_t k) {
  MultiIndex r(n);
  int rem = d;
  for (int i = 0; i + 1 < n; ++i) {
    int v = rem;
    while (true) {
      auto block = static_cast<std::size_t>(monomial_count(n - i - 1, rem - v));
      if (k < block) break;
      k -= block;
      --v;
    }
    r.set(i, v);
    rem -= v;
  }
  r.set(n - 1, rem);
  return r;
}

MonomialIndex::MonomialIndex(int n, int max_degree) : n_(n), max_degree_(max_degree) {
  offsets_.push_back(0);
  for (int d = 0; d <= max_degree; ++d) {
    for (auto& r : monomials_of_degree(n, d)) {
      pos_[r] = all_.size();
      all_.push_back(r);
    }
    offsets_.push_back(all_.size());
  }
}

long MonomialIndex::index_of(const MultiIndex& r) const {
  if (!r.nonnegative() || r.degree() > max_degree_) return -1;
  auto it = pos_.find(r);
  return it == pos_.end() ? -1 : static_cast<long>(it->second);
}

Poly::Poly(int n, const MultiIndex& r, const Rational& c) : n_(n) {
  add_term(r, c);
}

Rational Poly::coeff(const MultiIndex& r) const {
  auto it = terms_.find(r);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const MultiIndex& r, const Rational& c) {
  if (c == 0 || !r.nonnegative()) return;
  auto [it, fresh] = terms_.try_emplace(r, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [r, c] : terms_) d = std::max(d, r.degree());
  return d;
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.begin()->first.degree();
  for (const auto& [r, c] : terms_)
    if (r.degree() != d) return false;
  return true;
}

Poly& Poly::operator+=(const Poly& o) {
  if (n_ == 0) n_ = o.n_;
  for (const auto& [r, c] : o.terms_) add_term(r, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (n_ == 0) n_ = o.n_;
  for (const auto& [r, c] : o.terms_) add_term(r, -c);
  return *this;
}

Poly Poly::operator+(const Poly& o) const {
  Poly p = *this;
  p += o;
  return p;
}

Poly Poly::operator-(const Poly& o) const {
  Poly p = *this;
  p -= o;
  return p;
}

Poly Poly::operator-() const {
  Poly p(n_);
  for (const auto& [r, c] : terms_) p.terms_.emplace(r, -c);
  return p;
}

Poly Poly::operator*(const Poly& o) const {
  Poly p(std::max(n_, o.n_));
  for (const auto& [r, c] : terms_)
    for (const auto& [s, d] : o.terms_) p.add_term(r + s, c * d);
  return p;
}

Poly Poly::operator*(const Rational& c) const {
  if (c == 0) return Poly(n_);
  Poly p(n_);
  for (const auto& [r, x] : terms_) p.terms_.emplace(r, x * c);
  return p;
}

Poly Poly::derivative(int i) const {
  Poly p(n_);
  for (const auto& [r, c] : terms_) {
    if (r[i] == 0) continue;
    MultiIndex s = r;
    s.set(i, r[i] - 1);
    p.add_term(s, c * r[i]);
  }
  return p;
}

Poly Poly::times_monomial(const MultiIndex& r, const Rational& c) const {
  Poly p(n_);
  if (c == 0) return p;
  for (const auto& [s, x] : terms_) p.terms_.emplace(r + s, x * c);
  return p;
}

Poly Poly::truncated(int max_degree) const {
  Poly p(n_);
  for (const auto& [r, c] : terms_)
    if (r.degree() <= max_degree) p.terms_.emplace(r, c);
  return p;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [r, c] : terms_) {
    Rational a = c;
    if (!first) os << (a < 0 ? " - " : " + ");
    else if (a < 0) os << "-";
    if (a < 0) a = -a;
    bool unit = r.degree() == 0;
    if (a != 1 || unit) os << to_string(a) << (unit ? "" : "*");
    if (!unit) os << r.monomial();
    first = false;
  }
  return os.str();
}

Integer falling_factorial(int r, int a) {
  if (a > r || a < 0) return 0;
  Integer f = 1;
  for (int k = 0; k < a; ++k) f *= (r - k);
  return f;
}

Poly d_alpha_apply(const Poly& p, const MultiIndex& alpha) {
  if (alpha.n() != p.n()) throw std::invalid_argument("d_alpha_apply: variable count mismatch");
  Poly out(p.n());
  for (const auto& [r, c] : p.terms()) {
    if (!alpha.leq(r)) continue;
    Integer f = 1;
    for (int i = 0; i < r.n(); ++i) f *= falling_factorial(r[i], alpha[i]);
    out.add_term(r - alpha, c * Rational(f));
  }
  return out;
}

PairingSet pairing_polynomials(int n, const MultiIndex& gamma) {
  if (gamma.n() != n || !gamma.nonnegative()) throw std::invalid_argument("pairing_polynomials: bad gamma");
  const int g = gamma.degree();
  const auto mons = monomials_up_to(n, g);
  const std::size_t m = mons.size();

  // Unknown k = ia*m + ib is the coefficient of the pair (t^a, t^b). For each alpha with
  // |alpha| <= |gamma| the identity sum c_ab * d^alpha(t^b) * t^a = delta is compared
  // coefficientwise; each (alpha, resulting monomial) is one equation.
  std::map<std::pair<std::size_t, MultiIndex>, std::size_t> row_of;
  std::vector<std::map<std::size_t, Rational>> rows;
  auto row_index = [&](std::size_t ialpha, const MultiIndex& mono) {
    auto key = std::make_pair(ialpha, mono);
    auto it = row_of.find(key);
    if (it != row_of.end()) return it->second;
    row_of.emplace(key, rows.size());
    rows.emplace_back();
    return rows.size() - 1;
  };
  for (std::size_t ial = 0; ial < m; ++ial) {
    const auto& alpha = mons[ial];
    for (std::size_t ib = 0; ib < m; ++ib) {
      const auto& b = mons[ib];
      if (!alpha.leq(b)) continue;
      Integer f = 1;
      for (int i = 0; i < n; ++i) f *= falling_factorial(b[i], alpha[i]);
      for (std::size_t ia = 0; ia < m; ++ia) {
        std::size_t row = row_index(ial, mons[ia] + b - alpha);
        rows[row][ia * m + ib] += Rational(f);
      }
    }
  }
  // make sure the inhomogeneous equation exists even if no unknown touches it
  std::size_t ig = std::find(mons.begin(), mons.end(), gamma) - mons.begin();
  std::size_t target = row_index(ig, MultiIndex(n));

  SparseMat<Rational> a(m * m);
  for (const auto& r : rows) a.push_row(SparseVec<Rational>::from_map(m * m, r));
  SparseVec<Rational> b(rows.size());
  b.set(target, 1);
  auto x = solve_linear(a, b);
  if (!x) throw std::logic_error("pairing_polynomials: infeasible system");

  PairingSet ps{gamma, {}};
  for (const auto& [k, c] : *x) {
    ps.pairs.emplace_back(Poly(n, mons[k / m], c), Poly(n, mons[k % m]));
  }
  return ps;
}

bool verify_pairing(const PairingSet& ps) {
  const int n = ps.gamma.n();
  MultiIndex bound(n);
  for (const auto& [f, g] : ps.pairs) {
    if (f.n() != n || g.n() != n) return false;
    for (const auto& [r, c] : g.terms())
      for (int i = 0; i < n; ++i) bound.set(i, std::max(bound[i], r[i]));
  }
  auto value = [&](const MultiIndex& alpha) {
    Poly s(n);
    for (const auto& [f, g] : ps.pairs) s += f * d_alpha_apply(g, alpha);
    return s;
  };
  // every alpha <= bound, enumerated as a mixed-radix counter
  MultiIndex alpha(n);
  while (true) {
    Poly expect = alpha == ps.gamma ? Poly::constant(n, 1) : Poly(n);
    if (value(alpha) != expect) return false;
    int i = n - 1;
    while (i >= 0 && alpha[i] == bound[i]) alpha.set(i--, 0);
    if (i < 0) break;
    alpha.set(i, alpha[i] + 1);
  }
  if (!ps.gamma.leq(bound)) return value(ps.gamma) == Poly::constant(n, 1);
  return true;
}

}  // namespace polytor
