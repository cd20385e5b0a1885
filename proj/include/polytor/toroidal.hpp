#pragma once

#include "polytor/matrixlie.hpp"
#include "polytor/report.hpp"
#include "polytor/vectorfield.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace polytor {

struct AlgebraConfig {
  XKind xkind = XKind::W;
  int n = 2;
  int g_rank = 2;  // g = sl_{g_rank}
  int D = 4;
};

// Throws std::invalid_argument when the configuration is unusable.
void validate(const AlgebraConfig& cfg);
std::string describe(const AlgebraConfig& cfg);

// Lie type of (X_n)_0: gl_n, sl_n or sp_n.
LieKind x_lie_kind(XKind k);
// n_X = n, n-1, m: the range of k for the weights mu_k.
int n_x(XKind k, int n);
// mu_k = eps_1 + ... + eps_k in x-coordinates (for S, mu_n restricts to 0).
Weight mu_k(XKind k, int n, int j);

// (lambda, mu, c): lambda in normalized sl coordinates of g, mu in x-coordinates, c the K_i eigenvalues.
struct LabeledWeight {
  Weight lambda;
  Weight mu;
  std::vector<Rational> c;

  bool operator==(const LabeledWeight& o) const { return lambda == o.lambda && mu == o.mu && c == o.c; }
  bool operator!=(const LabeledWeight& o) const { return !(*this == o); }
  bool operator<(const LabeledWeight& o) const;
  std::string str() const;
};

LabeledWeight trivial_weight(const AlgebraConfig& cfg);
// Checks sizes and dominance; throws std::invalid_argument.
void check_weight(const AlgebraConfig& cfg, const LabeledWeight& lw);
// k when lw = (0, mu_k, 0) with A_n (x) L^0 reducible: W k < n, S k < n, H k <= m.
std::optional<int> exceptional_index(const AlgebraConfig& cfg, const LabeledWeight& lw);

// Weight for the Cartan subalgebra h + h_X of L_0. Both parts use the conventions of matrixlie.
struct HWeight {
  Weight g;
  Weight x;

  HWeight operator+(const HWeight& o) const;
  HWeight operator-() const;
  bool operator==(const HWeight& o) const { return g == o.g && x == o.x; }
  bool operator!=(const HWeight& o) const { return !(*this == o); }
  bool operator<(const HWeight& o) const { return g != o.g ? g < o.g : x < o.x; }
  std::string str() const;
};

// vf + sum_a x_a (x) loop[a] + sum_j central[j] K_j, with x_a the basis of g.
struct ToroidalElem {
  VectorField vf;
  std::vector<Poly> loop;
  std::vector<Poly> central;

  ToroidalElem() = default;
  ToroidalElem(int n, std::size_t gdim) : vf(n), loop(gdim, Poly(n)), central(n, Poly(n)) {}

  int n() const { return vf.n(); }
  bool is_zero() const;
  // Homogeneous degree; -2 for zero. Throws std::domain_error when inhomogeneous.
  int degree() const;

  ToroidalElem operator+(const ToroidalElem& o) const;
  ToroidalElem operator-(const ToroidalElem& o) const;
  ToroidalElem operator*(const Rational& c) const;
  ToroidalElem& operator+=(const ToroidalElem& o);
  bool operator==(const ToroidalElem& o) const;
  bool operator!=(const ToroidalElem& o) const { return !(*this == o); }
  std::string str(const MatLieAlg& g) const;
};

struct GradedSlice {
  int degree = 0;
  std::vector<ToroidalElem> basis;  // vector fields, then x_a (x) t^r, then t^r K_i
  std::vector<HWeight> weights;
  std::vector<std::string> names;
  std::size_t vf_count = 0, gt_count = 0, k_count = 0;
  std::size_t dim() const { return basis.size(); }
};

class ToroidalAlgebra {
 public:
  explicit ToroidalAlgebra(const AlgebraConfig& cfg);

  const AlgebraConfig& config() const { return cfg_; }
  int n() const { return cfg_.n; }
  XKind xkind() const { return cfg_.xkind; }
  const MatLieAlg& g() const { return g_; }
  std::size_t gdim() const { return g_.dim(); }
  const VFAlgebra& x() const { return x_; }

  ToroidalElem zero() const { return ToroidalElem(cfg_.n, gdim()); }
  ToroidalElem vf(const VectorField& v) const;
  ToroidalElem gt(std::size_t a, const MultiIndex& r, const Rational& c = 1) const;  // c x_a (x) t^r
  ToroidalElem k(const MultiIndex& r, int i, const Rational& c = 1) const;           // c t^r K_i

  // Empty for d < -1; throws std::out_of_range for d > D.
  const GradedSlice& graded_slice(int d) const;
  // Coordinates of a homogeneous element of degree d in graded_slice(d); throws std::domain_error if not in the slice.
  std::vector<Rational> slice_coordinates(const ToroidalElem& e, int d) const;
  bool in_slice(const ToroidalElem& e, int d) const;
  // xi-weight of t^r and g-weight of x_a.
  HWeight weight_of_gt(std::size_t a, const MultiIndex& r) const;
  HWeight weight_of_k(const MultiIndex& r) const;

 private:
  AlgebraConfig cfg_;
  MatLieAlg g_;
  VFAlgebra x_;
  std::vector<GradedSlice> slices_;  // degrees -1..D
  GradedSlice empty_;
};

ToroidalElem bracket(const ToroidalAlgebra& alg, const ToroidalElem& a, const ToroidalElem& b);

// d^r y for y in g (x) A_n + Z, written as sum_beta c_beta d^beta with c_beta in g (x) A_n + Z.
using NormalOrdered = std::map<MultiIndex, ToroidalElem>;
// Closed form: sum_{kappa <= r} binom(r, kappa) s!/(s-kappa)! x (x) t^{s-kappa} d^{r-kappa}.
NormalOrdered normal_order(const ToroidalAlgebra& alg, const MultiIndex& r, const ToroidalElem& target);
// Oracle: repeatedly uses d_i y = y d_i + [d_i, y].
NormalOrdered normal_order_by_brackets(const ToroidalAlgebra& alg, const MultiIndex& r, const ToroidalElem& target);

// tr(ad x o ad y | L_0) for x of degree 1 and y of degree -1.
Rational adjoint_trace_pairing(const ToroidalAlgebra& alg, const ToroidalElem& x, const ToroidalElem& y);
// E_W(t_i d_j) = delta_ij, zero on g + Z; E_S = E_H = 0. Defined on degree-0 elements.
Rational semi_infinite_character(const ToroidalAlgebra& alg, const ToroidalElem& e);
// Restriction of the semi-infinite character to h_X in x-weight coordinates.
Weight semi_infinite_weight(XKind kind, int n);

// Verification suites. Degree caps are documented in each report's notes.
Report verify_jacobi(const ToroidalAlgebra& alg, int max_factor_degree, int max_total_degree);
Report verify_closure(const ToroidalAlgebra& alg, int max_result_degree);
Report verify_central(const ToroidalAlgebra& alg);
Report verify_grading(const ToroidalAlgebra& alg);
Report verify_si2(const ToroidalAlgebra& alg);
Report verify_generation(const ToroidalAlgebra& alg);
Report verify_normal_order(const ToroidalAlgebra& alg, int max_degree);
Report verify_degree_zero(const ToroidalAlgebra& alg);

}  // namespace polytor
