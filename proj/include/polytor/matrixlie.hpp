#pragma once

#include "polytor/rational.hpp"
#include "polytor/sparse.hpp"

#include <map>
#include <string>
#include <vector>

namespace polytor {

enum class LieKind { gl, sl, sp };

std::string to_string(LieKind k);

// Weights are integer vectors. Coordinates:
//   gl_n : epsilon coordinates (n entries)
//   sl_n : normalized epsilon coordinates (w_i - w_n), n-1 entries
//   sp_2m: (w_i - w_{m+i}), m entries, i.e. the usual epsilon_1..epsilon_m
using Weight = std::vector<int>;

class MatLieAlg {
 public:
  MatLieAlg() = default;
  LieKind kind() const { return kind_; }
  int size() const { return size_; }          // matrix size
  int rank() const;                           // length of a weight vector
  std::size_t dim() const { return basis_.size(); }

  const std::vector<Mat>& basis() const { return basis_; }
  const std::vector<std::string>& basis_names() const { return names_; }
  const std::vector<Mat>& cartan() const { return cartan_; }
  const std::vector<Weight>& positive_roots() const { return roots_; }
  const std::vector<Mat>& raising() const { return raising_; }
  const std::vector<Mat>& lowering() const { return lowering_; }
  const std::vector<std::size_t>& simple() const { return simple_; }  // indices into positive_roots

  // ad-weight of basis()[k] (every basis element is a Cartan or root vector).
  Weight basis_weight(std::size_t k) const;
  // Coordinates of [basis()[a], basis()[b]].
  const std::vector<Rational>& structure(std::size_t a, std::size_t b) const { return structure_[a * basis_.size() + b]; }

  bool contains(const Mat& m) const;
  // Coordinates of m with respect to basis(); throws std::domain_error outside the algebra.
  std::vector<Rational> coordinates(const Mat& m) const;
  // Restriction of a gl-weight of the natural representation to this algebra's coordinates.
  Weight restrict(const Weight& gl_weight) const;
  // A dominant weight in these coordinates, lifted to a gl_size weight (sl: append 0; sp: pad with zeros).
  Weight to_gl(const Weight& w) const;
  bool is_dominant(const Weight& w) const;

  friend MatLieAlg build_algebra(LieKind kind, int size);

 private:
  LieKind kind_ = LieKind::gl;
  int size_ = 0;
  std::vector<Mat> basis_;
  std::vector<std::string> names_;
  std::vector<Mat> cartan_;
  std::vector<Weight> roots_;
  std::vector<Mat> raising_, lowering_;
  std::vector<std::size_t> simple_;
  CoordinateSystem<Rational> coords_;
  std::vector<std::vector<Rational>> structure_;
};

MatLieAlg build_algebra(LieKind kind, int size);

// sl_n: fundamental coordinates (a_1..a_{n-1}) <-> normalized epsilon coordinates.
Weight sl_from_fundamental(const Weight& a);
Weight sl_to_fundamental(const Weight& w);

// Highest weight of the dual module, -w_0(hw).
Weight dual_weight(LieKind kind, const Weight& w);

class IrrepModule {
 public:
  IrrepModule() = default;
  const MatLieAlg& algebra() const { return alg_; }
  const Weight& highest() const { return highest_; }
  std::size_t dim() const { return weights_.size(); }
  const std::vector<Weight>& weights() const { return weights_; }
  std::size_t highest_index() const { return 0; }
  // rho(basis()[k])
  const Mat& rho(std::size_t k) const { return rho_[k]; }
  Mat action(const Mat& m) const;
  std::map<Weight, long> weight_census() const;
  // Basis vectors inside the ambient tensor product (for inspection in tests).
  const std::vector<SparseVec<Rational>>& ambient_basis() const { return ambient_; }

  friend IrrepModule irrep(const MatLieAlg& alg, const Weight& hw);

 private:
  MatLieAlg alg_;
  Weight highest_;
  std::vector<Weight> weights_;
  std::vector<Mat> rho_;
  std::vector<SparseVec<Rational>> ambient_;
};

// Throws std::invalid_argument for a non-dominant weight.
IrrepModule irrep(const MatLieAlg& alg, const Weight& hw);

std::map<Weight, long> weight_multiplicities(const MatLieAlg& alg, const Weight& hw);
Integer weyl_dim(const MatLieAlg& alg, const Weight& hw);

}  // namespace polytor
