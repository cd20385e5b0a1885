#pragma once

#include "polytor/toroidal.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace polytor {

class SLModule;
struct SubSlices;

// Finitely supported (degree, weight) -> multiplicity, valid up to degree `truncation`.
class GradedCharacter {
 public:
  using Key = std::pair<int, HWeight>;

  explicit GradedCharacter(int truncation = 0) : D_(truncation) {}

  int truncation() const { return D_; }
  const std::map<Key, long>& entries() const { return entries_; }
  const std::optional<std::vector<Rational>>& c_label() const { return c_; }
  void set_c_label(std::vector<Rational> c) { c_ = std::move(c); }

  // Ignores degrees above the truncation; drops zero coefficients.
  void add(int degree, const HWeight& w, long mult);
  long coeff(int degree, const HWeight& w) const;
  std::map<HWeight, long> at_degree(int degree) const;
  long degree_dim(int degree) const;
  std::optional<int> min_degree() const;
  bool is_zero() const { return entries_.empty(); }
  bool nonnegative() const;

  GradedCharacter operator+(const GradedCharacter& o) const;
  GradedCharacter operator-(const GradedCharacter& o) const;
  GradedCharacter operator*(long k) const;
  // Truncates at the smaller of the two depths.
  GradedCharacter operator*(const GradedCharacter& o) const;
  // Multiplication by q^k; the truncation moves with the entries.
  GradedCharacter shifted(int k) const;
  GradedCharacter truncated(int D) const;

  // Same truncation and entries; c labels must agree when both are present.
  bool operator==(const GradedCharacter& o) const;
  bool operator!=(const GradedCharacter& o) const { return !(*this == o); }

  std::string to_json(const AlgebraConfig& cfg, int indent = 2) const;
  static GradedCharacter from_json(const std::string& text);
  std::string to_table() const;

 private:
  int D_;
  std::map<Key, long> entries_;
  std::optional<std::vector<Rational>> c_;
};

// ch A_n: q^{|r|} e^{(0, xi_r)}.
GradedCharacter gamma(const AlgebraConfig& cfg, int D);
// prod over the homogeneous basis of L_{>=1} of (1 - q^d e^alpha)^{-1}.
GradedCharacter upsilon(const AlgebraConfig& cfg, int D);
// Direct census of PBW monomials of U(L_{>=1}) (x) L^0 in degrees <= 2 (oracle for upsilon).
GradedCharacter pbw_census(const AlgebraConfig& cfg, const LabeledWeight& lw);

GradedCharacter ch_L0(const AlgebraConfig& cfg, const LabeledWeight& lw, int D);
GradedCharacter ch_standard(const AlgebraConfig& cfg, const LabeledWeight& lw, int D);
GradedCharacter ch_costandard(const AlgebraConfig& cfg, const LabeledWeight& lw, int D);
// Non-exceptional: Gamma * ch L^0. Exceptional W/S: the alternating sum, each term lowered by
// its distance to k so that the result starts in degree 0. Exceptional H: the weighted sum as stated.
GradedCharacter ch_irreducible(const AlgebraConfig& cfg, const LabeledWeight& lw, int D);

// (-w0 lambda, -w0 mu - E|_h, -c).
LabeledWeight sharp(const AlgebraConfig& cfg, const LabeledWeight& lw);
std::map<LabeledWeight, long> tilting_multiplicities(const AlgebraConfig& cfg, const LabeledWeight& lw);
GradedCharacter ch_tilting(const AlgebraConfig& cfg, const LabeledWeight& lw, int D);
// The closed forms, matched on the shape of mu directly.
GradedCharacter ch_tilting_closed_form(const AlgebraConfig& cfg, const LabeledWeight& lw, int D);

GradedCharacter brute_character(const SLModule& m);
// Census of a graded subspace given by rref slices of weight vectors.
GradedCharacter subspace_character(const SLModule& m, const SubSlices& s);

}  // namespace polytor
