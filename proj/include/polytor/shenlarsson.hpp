#pragma once

#include "polytor/toroidal.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace polytor {

using Vec = SparseVec<Rational>;

// How vector fields act. `literal` evaluates the displayed S/H formulas symbol by symbol
// (d_ij(t^r), d_H(t^r)); `jacobian` uses the equivalent form
//   X.(t^s (x) v) = X(t^s) (x) v + sum_u t^{u+s} (x) rho(M_u) v,  M_u = sum_{i,j} [t^u](d_j X_i) E_ji.
enum class ActionForm { literal, jacobian };

struct ModuleOptions {
  ActionForm form = ActionForm::literal;
  int h_sign = -1;  // connective in front of the last summation of the H action
};

// One generator, split into the part differentiating A_n and the parts acting on V.
struct GenOp {
  VectorField deriv;
  struct Term {
    MultiIndex shift;                                                   // multiply by t^shift
    std::vector<std::vector<std::pair<std::size_t, Rational>>> cols;  // operator on V, by columns
  };
  std::vector<Term> terms;
};

// A_n (x) V truncated at degree D, V = V(lambda) (x) L^0(mu) with K_i acting by c_i.
// Basis index = (position of t^s among monomials of degree <= D) * dim V + (a_g * dim V_x + a_x).
class SLModule {
 public:
  SLModule(const AlgebraConfig& cfg, const LabeledWeight& lw, ModuleOptions opt = {});

  const ToroidalAlgebra& algebra() const { return *alg_; }
  const AlgebraConfig& config() const { return alg_->config(); }
  const LabeledWeight& weight() const { return lw_; }
  const ModuleOptions& options() const { return opt_; }
  int D() const { return alg_->config().D; }
  std::size_t dim_v() const { return dimv_; }
  std::size_t dim() const { return mono_.size() * dimv_; }
  const MonomialIndex& monomials() const { return mono_; }
  std::size_t degree_offset(int d) const { return mono_.degree_offset(d) * dimv_; }
  std::size_t degree_size(int d) const { return mono_.degree_size(d) * dimv_; }
  int degree_of(std::size_t idx) const { return mono_.at(idx / dimv_).degree(); }
  HWeight weight_of(std::size_t idx) const;
  std::string label(std::size_t idx) const;  // "t1*t2 (x) v3"
  const IrrepModule& v_g() const { return vg_; }
  const IrrepModule& v_x() const { return vx_; }

  // rho_V(y) for y of degree 0 (dim V square matrix).
  Mat v_action(const ToroidalElem& y) const;

  GenOp generator_op(const ToroidalElem& e) const;
  // Throws std::out_of_range when a nonzero term would exceed degree D.
  Vec apply(const GenOp& op, const Vec& v) const;
  Vec act(const ToroidalElem& e, const Vec& v) const { return apply(generator_op(e), v); }
  // Action of graded_slice(d).basis[k], cached column by column.
  Vec act_basis(int d, std::size_t k, const Vec& v) const;
  const Vec& column(int d, std::size_t k, std::size_t idx) const;

  // f_{A_n} and the sigma-action y.(f (x) v) = f (x) y.v (y of degree 0; degree >= 1 acts by 0).
  Vec multiply(const Poly& f, const Vec& v) const;
  Vec sigma(const ToroidalElem& y, const Vec& v) const;

  Vec unit(std::size_t idx) const { return Vec::unit(dim(), idx); }
  Vec zero() const { return Vec(dim()); }

 private:
  Mat x_op(const Mat& m) const;  // 1 (x) rho_x(m)
  void literal_vf_terms(const VectorField& x, std::map<MultiIndex, Mat>& acc) const;
  const CoordinateSystem<Rational>& symbols(int d) const;

  std::shared_ptr<const ToroidalAlgebra> alg_;
  LabeledWeight lw_;
  ModuleOptions opt_;
  IrrepModule vg_, vx_;
  std::size_t dimv_ = 0;
  MonomialIndex mono_;
  std::vector<Mat> g_ops_;  // rho(x_a) (x) 1
  mutable std::vector<std::optional<std::pair<std::vector<VFBasisSym>, CoordinateSystem<Rational>>>> symbol_cache_;
  mutable std::vector<std::vector<std::optional<GenOp>>> gen_cache_;
  mutable std::vector<std::vector<std::vector<std::optional<Vec>>>> col_cache_;
};

// Spanning symbols used by the literal S/H action at degree d (d_ij(t^r) or d_H(t^r)).
std::vector<VFBasisSym> symbol_fields(XKind kind, int n, int d);

// Module axiom act([a,b],w) = a.b.w - b.a.w for generator pairs with degrees <= max_gen_degree.
Report verify_module_axiom(const SLModule& m, int max_gen_degree);
// Literal formulas against the Jacobian form, generator by generator.
Report verify_action_forms(const SLModule& m, int max_gen_degree);

// Per-degree rref bases.
struct SubSlices {
  std::vector<EchelonBasis<Rational>> slices;  // index = degree
  std::vector<std::size_t> dims() const;
};

// U(L_{>=1}) (1 (x) V) up to degree D.
SubSlices bottom_span(const SLModule& m);
bool is_irreducible_to_depth(const SLModule& m);
// Random weight vectors lower to 1 (x) V, and the bottom span is a submodule.
Report verify_cyclic_submodules(const SLModule& m, int samples, std::uint64_t seed);

struct DeRhamCheck {
  int k = 0;
  std::vector<long> rank;       // rank of d_k on the degree-d slice (d = 0..D)
  std::vector<long> kernel;     // dim ker d_k at degree d
  std::vector<long> image_in;   // dim im d_{k-1} inside degree d (d <= D-1), -1 when not computed
  std::vector<long> predicted;  // predicted kernel dimension
  Report report;
};
// W only; 0 <= k <= n. Checks d^2 = 0, the module-map property for generators of degree <= 2, and exactness.
DeRhamCheck derham(const AlgebraConfig& cfg, int k);
// Kernel of d_k at polynomial degree d predicted by exactness of the polynomial de Rham complex.
long derham_kernel_prediction(int n, int k, int d);

// Sum_r f_r rho(...) on all vectors of degree <= max_vec_degree against the sigma-action.
struct SigmaTarget {
  MultiIndex gamma;
  int i = 0;  // S: the pair (i, j), i < j
  int j = 0;  // W: the index of d_j
};
enum class SigmaReference { stated, derived };
// The degree-0 field whose sigma-action the recovery identity predicts; nullopt when
// no case is listed for this target.
std::optional<VectorField> sigma_stated_value(XKind kind, int n, const SigmaTarget& t);
VectorField sigma_derived_value(XKind kind, int n, const SigmaTarget& t);
Report sigma_recovery_check(const AlgebraConfig& cfg, const LabeledWeight& lw, const SigmaTarget& t,
                            int max_vec_degree, SigmaReference ref);
// Every target with |gamma| = 1 (W) or 2 (S, H).
Report sigma_recovery_sweep(const AlgebraConfig& cfg, const LabeledWeight& lw, int max_vec_degree, SigmaReference ref);

// Axioms (I)-(IV) on multipliers of degree <= 2 (<= 3 for IV(i)) and vectors of degree <= D-3.
// `literal_iv` uses the second-order term sum (d^alpha f) sigma(...) without the 1/alpha! factor.
Report verify_AL_axioms(const SLModule& m, bool literal_iv = false);

struct CompositionFactor {
  LabeledWeight lw;
  std::string label;  // "mu_j" when lw = (0, mu_j, 0)
  int degree = 0;     // degree of its bottom slice inside the module
  long multiplicity = 0;
};
struct ReconciliationRow {
  int degree = 0;
  long module_dim = 0;
  long socle_sum = 0;    // sum of computed factor dimensions
  long formula_sum = 0;  // sum of the irreducible-character formulas at the same shifts
};
struct Composition {
  int k = 0;
  std::vector<CompositionFactor> factors;           // computed, in peel order
  std::vector<std::pair<std::string, long>> claimed;  // multiplicities asserted for V_X(0, mu_k, 0)
  std::vector<ReconciliationRow> table;
  Report report;
};
// Factors of V_X(0, mu_k, 0), 0 <= k <= n_X; throws std::out_of_range otherwise.
Composition exceptional_composition(const AlgebraConfig& cfg, int k);
// The propositions' factor lists, keyed by the label of the factor (also used for tilting).
std::vector<std::pair<int, long>> claimed_factors(XKind kind, int n, int k);

}  // namespace polytor
