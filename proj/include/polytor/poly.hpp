#pragma once

#include "polytor/rational.hpp"
#include "polytor/sparse.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace polytor {

inline constexpr int kMaxVars = 8;

// Exponent vector r of the monomial t^r. Comparison is graded lexicographic:
// lower total degree first, then larger leading exponents first (t1 before t2).
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(int n);
  MultiIndex(std::initializer_list<int> exps);
  explicit MultiIndex(const std::vector<int>& exps);

  static MultiIndex unit(int n, int i);  // e_i, zero-based i

  int n() const { return n_; }
  int operator[](int i) const { return e_[i]; }
  void set(int i, int v) { e_[i] = static_cast<std::int16_t>(v); }
  int degree() const;
  bool nonnegative() const;
  std::vector<int> to_vector() const;
  bool is_zero() const { return degree() == 0 && nonnegative(); }

  MultiIndex operator+(const MultiIndex& o) const;
  MultiIndex operator-(const MultiIndex& o) const;  // may go negative: the "t^r = 0" marker
  bool operator==(const MultiIndex& o) const { return n_ == o.n_ && e_ == o.e_; }
  bool operator!=(const MultiIndex& o) const { return !(*this == o); }
  bool operator<(const MultiIndex& o) const;
  bool leq(const MultiIndex& o) const;  // componentwise

  std::string str() const;        // "(1,0,2)"
  std::string monomial() const;   // "t1*t3^2" or "1"

 private:
  std::int8_t n_ = 0;
  std::array<std::int16_t, kMaxVars> e_{};
};

// All monomials of exact degree d in n variables, graded-lex order.
std::vector<MultiIndex> monomials_of_degree(int n, int d);
// All monomials of degree <= d.
std::vector<MultiIndex> monomials_up_to(int n, int d);
long monomial_count(int n, int d);  // C(d+n-1, n-1), 0 for d < 0
// Position of r among monomials_of_degree(n, |r|), and its inverse.
std::size_t monomial_rank(const MultiIndex& r);
MultiIndex monomial_unrank(int n, int d, std::size_t k);

// Position of a monomial among monomials of its degree, and among all monomials of degree <= D.
class MonomialIndex {
 public:
  MonomialIndex() = default;
  MonomialIndex(int n, int max_degree);
  int n() const { return n_; }
  int max_degree() const { return max_degree_; }
  std::size_t size() const { return all_.size(); }
  const MultiIndex& at(std::size_t k) const { return all_[k]; }
  const std::vector<MultiIndex>& all() const { return all_; }
  // -1 when out of range (degree too high or negative exponent)
  long index_of(const MultiIndex& r) const;
  std::size_t degree_offset(int d) const { return offsets_[d]; }
  std::size_t degree_size(int d) const { return offsets_[d + 1] - offsets_[d]; }

 private:
  int n_ = 0;
  int max_degree_ = -1;
  std::vector<MultiIndex> all_;
  std::vector<std::size_t> offsets_;
  std::map<MultiIndex, std::size_t> pos_;
};

class Poly {
 public:
  using Terms = std::map<MultiIndex, Rational>;

  Poly() = default;
  explicit Poly(int n) : n_(n) {}
  Poly(int n, const MultiIndex& r, const Rational& c = 1);
  static Poly constant(int n, const Rational& c) { return Poly(n, MultiIndex(n), c); }

  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const MultiIndex& r) const;
  void add_term(const MultiIndex& r, const Rational& c);  // ignores negative exponents
  int degree() const;  // max total degree; -1 for zero
  bool is_homogeneous() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rational& c) const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  bool operator==(const Poly& o) const { return n_ == o.n_ && terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly derivative(int i) const;  // d_i, zero-based
  Poly times_monomial(const MultiIndex& r, const Rational& c = 1) const;
  Poly truncated(int max_degree) const;

  std::string str() const;

 private:
  int n_ = 0;
  Terms terms_;
};

// Falling factorial r!/(r-a)! for a <= r, 0 otherwise.
Integer falling_factorial(int r, int a);

// d^alpha p = d_1^{a_1} ... d_n^{a_n} p
Poly d_alpha_apply(const Poly& p, const MultiIndex& alpha);

struct PairingSet {
  MultiIndex gamma;
  std::vector<std::pair<Poly, Poly>> pairs;  // (f_i, g_i)
};

// Finds {(f_i, g_i)} with sum f_i d^alpha(g_i) = delta(alpha, gamma) by an exact linear solve
// over candidate monomial pairs of degree <= |gamma|.
PairingSet pairing_polynomials(int n, const MultiIndex& gamma);

// Sweeps every alpha componentwise below the largest exponents occurring in the g_i (and alpha = gamma).
bool verify_pairing(const PairingSet& ps);

}  // namespace polytor
