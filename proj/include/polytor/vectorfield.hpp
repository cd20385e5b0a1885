#pragma once

#include "polytor/poly.hpp"

#include <string>
#include <vector>

namespace polytor {

enum class XKind { W, S, H };

std::string to_string(XKind k);
XKind parse_xkind(const std::string& s);

// Rank of the Cartan subalgebra h_X in our coordinates: n (W), n-1 (S), m = n/2 (H).
int x_rank(XKind k, int n);
// Throws std::invalid_argument for n < 2 or odd n with H.
void check_kind_size(XKind k, int n);

// Restriction of a gl_n weight (epsilon coordinates) to h_X:
// W: unchanged; S: (w_i - w_n), i < n; H: (w_i - w_{m+i}), i <= m.
std::vector<int> restrict_weight(XKind k, const std::vector<int>& gl_weight);
// The weight xi_r of t^r.
std::vector<int> xi_weight(XKind k, const MultiIndex& r);

// A polynomial vector field sum_i f_i d_i, stored by components (the W-coordinates).
class VectorField {
 public:
  VectorField() = default;
  explicit VectorField(int n) : n_(n), comp_(n, Poly(n)) {}
  static VectorField monomial(int n, const MultiIndex& r, int i, const Rational& c = 1);  // c t^r d_i

  int n() const { return n_; }
  const Poly& component(int i) const { return comp_[i]; }
  Poly& component(int i) { return comp_[i]; }
  bool is_zero() const;
  // Homogeneous degree (deg of coefficients minus one); throws std::domain_error otherwise. -2 for zero.
  int degree() const;
  bool is_homogeneous() const;

  VectorField operator+(const VectorField& o) const;
  VectorField operator-(const VectorField& o) const;
  VectorField operator*(const Rational& c) const;
  VectorField& operator+=(const VectorField& o);
  bool operator==(const VectorField& o) const { return n_ == o.n_ && comp_ == o.comp_; }
  bool operator!=(const VectorField& o) const { return !(*this == o); }

  Poly apply(const Poly& p) const;  // derivation action on A_n
  Poly divergence() const;
  std::string str() const;

 private:
  int n_ = 0;
  std::vector<Poly> comp_;
};

// [X, Y] of derivations: [t^r d_i, t^s d_j] = s_i t^{r+s-e_i} d_j - r_j t^{r+s-e_j} d_i.
VectorField bracket(const VectorField& a, const VectorField& b);

// Basis/spanning symbols. Indices are zero-based.
struct VFBasisSym {
  enum class Tag { W, Sij, Hh };
  Tag tag = Tag::W;
  MultiIndex r;
  int i = 0;
  int j = 0;

  static VFBasisSym w(const MultiIndex& r, int i) { return {Tag::W, r, i, 0}; }
  static VFBasisSym s(const MultiIndex& r, int i, int j) { return {Tag::Sij, r, i, j}; }
  static VFBasisSym h(const MultiIndex& r) { return {Tag::Hh, r, 0, 0}; }
};

// d_ij(f) = d_j(f) d_i - d_i(f) d_j
VectorField d_ij(const Poly& f, int i, int j);
// d_H(f) = sum_{j<=m} d_j(f) d_{m+j} - sum_{j>m} d_j(f) d_{j-m}
VectorField d_H(const Poly& f);

VectorField expand_symbol(const VFBasisSym& s);

// An element tagged with the algebra it is meant to live in.
struct VFElem {
  XKind kind = XKind::W;
  VectorField field;
};
VFElem bracket(const VFElem& a, const VFElem& b);  // throws on mixed kinds

// W-coordinates of a homogeneous field of degree d: index = (position of t^r among
// monomials of degree d+1) * n + i.
std::size_t w_coordinate_count(int n, int d);
SparseVec<Rational> w_coordinates(const VectorField& v, int d);
VectorField from_w_coordinates(int n, int d, const SparseVec<Rational>& x);
// gl-weight r - e_i of the coordinate t^r d_i.
std::vector<int> w_coordinate_gl_weight(int n, int d, std::size_t coord);

struct DegreeBasis {
  XKind kind = XKind::W;
  int n = 0;
  int degree = -1;
  SparseMat<Rational> basis;            // RREF over W-coordinates
  std::vector<VectorField> elements;    // the rows as fields

  std::size_t dim() const { return elements.size(); }
  bool contains(const VectorField& v) const;
  // Coordinates of v (assumed in the span) relative to elements.
  std::vector<Rational> coordinates(const VectorField& v) const;
};

DegreeBasis canonical_degree_basis(XKind kind, int n, int d);

// Cached slices for degrees -1..max_degree.
class VFAlgebra {
 public:
  VFAlgebra() = default;
  VFAlgebra(XKind kind, int n, int max_degree);
  XKind kind() const { return kind_; }
  int n() const { return n_; }
  int max_degree() const { return max_degree_; }
  const DegreeBasis& slice(int d) const;
  bool contains(const VectorField& v) const;  // homogeneous v only

 private:
  XKind kind_ = XKind::W;
  int n_ = 0;
  int max_degree_ = -1;
  std::vector<DegreeBasis> slices_;
};

// t_i d_j -> E_ij
Mat degree_zero_to_matrix(const VectorField& v);
VectorField matrix_to_degree_zero(const Mat& m);

// The derivation as a linear map on polynomials of degree <= D, dropping terms above D.
class TruncatedOperator {
 public:
  TruncatedOperator(const VectorField& v, int D);
  const MonomialIndex& domain() const { return index_; }
  Poly apply(const Poly& p) const;
  const SparseVec<Rational>& column(std::size_t k) const { return columns_[k]; }

 private:
  int n_;
  int D_;
  MonomialIndex index_;
  std::vector<SparseVec<Rational>> columns_;
};
TruncatedOperator as_operator(const VectorField& v, int D);

// Generators of n^-_X, h_X, n^+_X in (X_n)_0.
struct TriangularLists {
  std::vector<VectorField> nminus, cartan, nplus;
};
TriangularLists triangular_decomposition(XKind kind, int n);

}  // namespace polytor
