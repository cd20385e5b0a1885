#include "polytor/vectorfield.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace polytor {

std::string to_string(XKind k) {
  switch (k) {
    case XKind::W: return "W";
    case XKind::S: return "S";
    case XKind::H: return "H";
  }
  return "?";
}

XKind parse_xkind(const std::string& s) {
  if (s == "W" || s == "w") return XKind::W;
  if (s == "S" || s == "s") return XKind::S;
  if (s == "H" || s == "h") return XKind::H;
  throw std::invalid_argument("unknown algebra kind '" + s + "' (expected W, S or H)");
}

int x_rank(XKind k, int n) {
  switch (k) {
    case XKind::W: return n;
    case XKind::S: return n - 1;
    case XKind::H: return n / 2;
  }
  return 0;
}

void check_kind_size(XKind k, int n) {
  if (n < 2 || n > kMaxVars)
    throw std::invalid_argument("n must lie in 2.." + std::to_string(kMaxVars) + ", got " + std::to_string(n));
  if (k == XKind::H && n % 2 != 0) throw std::invalid_argument("H_n needs even n, got " + std::to_string(n));
}

std::vector<int> restrict_weight(XKind k, const std::vector<int>& w) {
  const int n = static_cast<int>(w.size());
  switch (k) {
    case XKind::W: return w;
    case XKind::S: {
      std::vector<int> out(n - 1);
      for (int i = 0; i + 1 < n; ++i) out[i] = w[i] - w[n - 1];
      return out;
    }
    case XKind::H: {
      const int m = n / 2;
      std::vector<int> out(m);
      for (int i = 0; i < m; ++i) out[i] = w[i] - w[m + i];
      return out;
    }
  }
  return w;
}

std::vector<int> xi_weight(XKind k, const MultiIndex& r) {
  return restrict_weight(k, r.to_vector());
}

VectorField VectorField::monomial(int n, const MultiIndex& r, int i, const Rational& c) {
  VectorField v(n);
  v.comp_[i].add_term(r, c);
  return v;
}

bool VectorField::is_zero() const {
  for (const auto& p : comp_)
    if (!p.is_zero()) return false;
  return true;
}

int VectorField::degree() const {
  int d = -2;
  for (const auto& p : comp_) {
    for (const auto& [r, c] : p.terms()) {
      int e = r.degree() - 1;
      if (d == -2) d = e;
      else if (d != e) throw std::domain_error("vector field is not homogeneous");
    }
  }
  return d;
}

bool VectorField::is_homogeneous() const {
  try {
    degree();
    return true;
  } catch (const std::domain_error&) {
    return false;
  }
}

VectorField& VectorField::operator+=(const VectorField& o) {
  if (n_ == 0) *this = VectorField(o.n_);
  if (o.n_ != n_ && o.n_ != 0) throw std::invalid_argument("vector fields in different dimensions");
  for (int i = 0; i < o.n_; ++i) comp_[i] += o.comp_[i];
  return *this;
}

VectorField VectorField::operator+(const VectorField& o) const {
  VectorField v = *this;
  v += o;
  return v;
}

VectorField VectorField::operator-(const VectorField& o) const {
  return *this + o * Rational(-1);
}

VectorField VectorField::operator*(const Rational& c) const {
  VectorField v(n_);
  for (int i = 0; i < n_; ++i) v.comp_[i] = comp_[i] * c;
  return v;
}

Poly VectorField::apply(const Poly& p) const {
  Poly out(n_);
  for (int i = 0; i < n_; ++i) {
    if (comp_[i].is_zero()) continue;
    Poly dp = p.derivative(i);
    if (!dp.is_zero()) out += comp_[i] * dp;
  }
  return out;
}

Poly VectorField::divergence() const {
  Poly out(n_);
  for (int i = 0; i < n_; ++i) out += comp_[i].derivative(i);
  return out;
}

std::string VectorField::str() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < n_; ++i) {
    for (const auto& [r, c] : comp_[i].terms()) {
      Rational a = c;
      if (!first) os << (a < 0 ? " - " : " + ");
      else if (a < 0) os << "-";
      if (a < 0) a = -a;
      if (a != 1) os << to_string(a) << "*";
      if (r.degree() > 0) os << r.monomial() << "*";
      os << "d" << (i + 1);
      first = false;
    }
  }
  return first ? "0" : os.str();
}

VectorField bracket(const VectorField& a, const VectorField& b) {
  if (a.n() != b.n()) throw std::invalid_argument("bracket of vector fields in different dimensions");
  const int n = a.n();
  VectorField out(n);
  // [sum f_i d_i, sum g_j d_j] = sum_j (a(g_j) - b(f_j)) d_j
  for (int j = 0; j < n; ++j) out.component(j) = a.apply(b.component(j)) - b.apply(a.component(j));
  return out;
}

VectorField d_ij(const Poly& f, int i, int j) {
  VectorField v(f.n());
  v.component(i) = f.derivative(j);
  v.component(j) = -f.derivative(i);
  return v;
}

VectorField d_H(const Poly& f) {
  const int n = f.n();
  const int m = n / 2;
  VectorField v(n);
  for (int j = 0; j < m; ++j) v.component(m + j) += f.derivative(j);
  for (int j = m; j < n; ++j) v.component(j - m) -= f.derivative(j);
  return v;
}

VectorField expand_symbol(const VFBasisSym& s) {
  const int n = s.r.n();
  switch (s.tag) {
    case VFBasisSym::Tag::W:
      return VectorField::monomial(n, s.r, s.i);
    case VFBasisSym::Tag::Sij:
      if (s.r.degree() == 0) throw std::invalid_argument("S spanning symbol needs r != 0");
      if (!(s.i < s.j)) throw std::invalid_argument("S spanning symbol needs i < j");
      return d_ij(Poly(n, s.r), s.i, s.j);
    case VFBasisSym::Tag::Hh:
      if (s.r.degree() == 0) throw std::invalid_argument("H spanning symbol needs r != 0");
      if (n % 2 != 0) throw std::invalid_argument("H spanning symbol needs even n");
      return d_H(Poly(n, s.r));
  }
  return VectorField(n);
}

VFElem bracket(const VFElem& a, const VFElem& b) {
  if (a.kind != b.kind)
    throw std::invalid_argument("bracket of elements from " + to_string(a.kind) + " and " + to_string(b.kind));
  return {a.kind, bracket(a.field, b.field)};
}

std::size_t w_coordinate_count(int n, int d) {
  return static_cast<std::size_t>(monomial_count(n, d + 1)) * n;
}

SparseVec<Rational> w_coordinates(const VectorField& v, int d) {
  const int n = v.n();
  std::map<std::size_t, Rational> m;
  for (int i = 0; i < n; ++i) {
    for (const auto& [r, c] : v.component(i).terms()) {
      if (r.degree() != d + 1) throw std::domain_error("vector field has a term outside degree " + std::to_string(d));
      m[monomial_rank(r) * n + i] = c;
    }
  }
  return SparseVec<Rational>::from_map(w_coordinate_count(n, d), m);
}

VectorField from_w_coordinates(int n, int d, const SparseVec<Rational>& x) {
  VectorField v(n);
  for (const auto& [k, c] : x) v.component(static_cast<int>(k % n)).add_term(monomial_unrank(n, d + 1, k / n), c);
  return v;
}

std::vector<int> w_coordinate_gl_weight(int n, int d, std::size_t coord) {
  auto w = monomial_unrank(n, d + 1, coord / n).to_vector();
  w[coord % n] -= 1;
  return w;
}

bool DegreeBasis::contains(const VectorField& v) const {
  if (v.is_zero()) return true;
  if (!v.is_homogeneous() || v.degree() != degree) return false;
  return span_contains(basis, w_coordinates(v, degree));
}

std::vector<Rational> DegreeBasis::coordinates(const VectorField& v) const {
  auto x = w_coordinates(v, degree);
  std::vector<Rational> c;
  c.reserve(basis.rows.size());
  for (const auto& row : basis.rows) c.push_back(x.coeff(row.leading_index()));
  return c;
}

DegreeBasis canonical_degree_basis(XKind kind, int n, int d) {
  check_kind_size(kind, n);
  if (d < -1) throw std::invalid_argument("degree must be >= -1");
  DegreeBasis db;
  db.kind = kind;
  db.n = n;
  db.degree = d;
  const std::size_t dim = w_coordinate_count(n, d);
  EchelonBasis<Rational> eb(dim);
  if (kind == XKind::W) {
    for (std::size_t k = 0; k < dim; ++k) eb.insert(SparseVec<Rational>::unit(dim, k));
  } else {
    for (const auto& r : monomials_of_degree(n, d + 2)) {
      Poly f(n, r);
      if (kind == XKind::S) {
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j) eb.insert(w_coordinates(d_ij(f, i, j), d));
      } else {
        eb.insert(w_coordinates(d_H(f), d));
      }
    }
  }
  db.basis = eb.matrix();
  for (const auto& row : db.basis.rows) db.elements.push_back(from_w_coordinates(n, d, row));
  return db;
}

VFAlgebra::VFAlgebra(XKind kind, int n, int max_degree) : kind_(kind), n_(n), max_degree_(max_degree) {
  for (int d = -1; d <= max_degree; ++d) slices_.push_back(canonical_degree_basis(kind, n, d));
}

const DegreeBasis& VFAlgebra::slice(int d) const {
  if (d < -1 || d > max_degree_) throw std::out_of_range("degree slice " + std::to_string(d) + " not built");
  return slices_[d + 1];
}

bool VFAlgebra::contains(const VectorField& v) const {
  if (v.is_zero()) return true;
  if (!v.is_homogeneous()) return false;
  int d = v.degree();
  if (d > max_degree_) throw std::out_of_range("degree slice " + std::to_string(d) + " not built");
  return slice(d).contains(v);
}

Mat degree_zero_to_matrix(const VectorField& v) {
  const int n = v.n();
  Mat m = zero_matrix(n, n);
  for (int j = 0; j < n; ++j) {
    for (const auto& [r, c] : v.component(j).terms()) {
      if (r.degree() != 1) throw std::domain_error("field is not of degree 0");
      for (int i = 0; i < n; ++i)
        if (r[i] == 1) m(i, j) += c;
    }
  }
  return m;
}

VectorField matrix_to_degree_zero(const Mat& m) {
  const int n = static_cast<int>(m.rows());
  VectorField v(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m(i, j) != 0) v.component(j).add_term(MultiIndex::unit(n, i), m(i, j));
  return v;
}

TruncatedOperator::TruncatedOperator(const VectorField& v, int D) : n_(v.n()), D_(D), index_(v.n(), D) {
  columns_.reserve(index_.size());
  for (std::size_t k = 0; k < index_.size(); ++k) {
    Poly image = v.apply(Poly(n_, index_.at(k))).truncated(D_);
    std::map<std::size_t, Rational> m;
    for (const auto& [r, c] : image.terms()) m[static_cast<std::size_t>(index_.index_of(r))] = c;
    columns_.push_back(SparseVec<Rational>::from_map(index_.size(), m));
  }
}

Poly TruncatedOperator::apply(const Poly& p) const {
  Poly out(n_);
  for (const auto& [r, c] : p.terms()) {
    long k = index_.index_of(r);
    if (k < 0) throw std::out_of_range("polynomial term above the truncation degree");
    for (const auto& [j, x] : columns_[k]) out.add_term(index_.at(j), c * x);
  }
  return out;
}

TruncatedOperator as_operator(const VectorField& v, int D) {
  return TruncatedOperator(v, D);
}

TriangularLists triangular_decomposition(XKind kind, int n) {
  check_kind_size(kind, n);
  TriangularLists t;
  auto E = [n](int i, int j) { return VectorField::monomial(n, MultiIndex::unit(n, i), j); };
  if (kind == XKind::W || kind == XKind::S) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i < j) t.nplus.push_back(E(i, j));
        else if (i > j) t.nminus.push_back(E(i, j));
      }
    if (kind == XKind::W)
      for (int i = 0; i < n; ++i) t.cartan.push_back(E(i, i));
    else
      for (int i = 0; i + 1 < n; ++i) t.cartan.push_back(E(i, i) - E(i + 1, i + 1));
    return t;
  }
  const int m = n / 2;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      VectorField x = E(i, j) - E(j + m, i + m);
      if (i < j) t.nplus.push_back(x);
      else if (i > j) t.nminus.push_back(x);
      else t.cartan.push_back(x);
    }
  for (int s = 0; s < m; ++s)
    for (int k = s; k < m; ++k) {
      t.nplus.push_back(E(s, k + m) + E(k, s + m));
      t.nminus.push_back(E(s + m, k) + E(k + m, s));
    }
  return t;
}

}  // namespace polytor
