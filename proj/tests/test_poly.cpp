#include "polytor/poly.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace polytor;

namespace {

Poly mono(std::initializer_list<int> r, const Rational& c = 1) {
  MultiIndex m(r);
  return Poly(m.n(), m, c);
}

Poly random_poly(std::mt19937_64& rng, int n, int maxdeg) {
  std::uniform_int_distribution<int> coef(-3, 3);
  Poly p(n);
  for (const auto& r : monomials_up_to(n, maxdeg)) p.add_term(r, coef(rng));
  return p;
}

// sum f_i d^alpha g_i evaluated directly, for the sweep below
Poly pairing_value(const PairingSet& ps, const MultiIndex& alpha) {
  Poly s(alpha.n());
  for (const auto& [f, g] : ps.pairs) s += f * d_alpha_apply(g, alpha);
  return s;
}

}  // namespace

TEST(MultiIndex, GradedLexOrderAndCounts) {
  auto ms = monomials_of_degree(2, 2);
  ASSERT_EQ(ms.size(), 3u);
  EXPECT_EQ(monomial_count(3, 2), 6);
  EXPECT_EQ(monomial_count(3, -1), 0);
  MonomialIndex idx(3, 4);
  EXPECT_EQ(idx.size(), 35u);
  for (std::size_t k = 0; k < idx.size(); ++k) EXPECT_EQ(idx.index_of(idx.at(k)), static_cast<long>(k));
  EXPECT_EQ(idx.index_of(MultiIndex{5, 0, 0}), -1);
  for (std::size_t k = 0; k + 1 < idx.size(); ++k) EXPECT_LE(idx.at(k).degree(), idx.at(k + 1).degree());
}

TEST(MultiIndex, NegativeExponentIsZeroMarker) {
  MultiIndex r = MultiIndex{1, 0} - MultiIndex::unit(2, 1);
  EXPECT_FALSE(r.nonnegative());
  Poly p(2);
  p.add_term(r, 5);
  EXPECT_TRUE(p.is_zero());
}

TEST(DAlpha, Examples) {
  EXPECT_EQ(d_alpha_apply(mono({1, 1}), MultiIndex{1, 1}), Poly::constant(2, 1));
  EXPECT_EQ(d_alpha_apply(mono({2, 0}), MultiIndex{1, 0}), mono({1, 0}, 2));
  EXPECT_TRUE(d_alpha_apply(mono({2, 0}), MultiIndex{0, 1}).is_zero());
  EXPECT_EQ(d_alpha_apply(mono({3, 2}), MultiIndex{2, 1}), mono({1, 1}, 12));
}

TEST(DAlpha, LeibnizAndDegree) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    Poly p = random_poly(rng, 3, 2), q = random_poly(rng, 3, 2);
    for (int i = 0; i < 3; ++i) EXPECT_EQ((p * q).derivative(i), p.derivative(i) * q + p * q.derivative(i));
  }
  Poly a = mono({1, 2, 0}) + mono({0, 0, 3}), b = mono({1, 0, 1});
  EXPECT_EQ((a * b).degree(), a.degree() + b.degree());
  EXPECT_TRUE((a * b).is_homogeneous());
}

TEST(Pairing, WorkedExampleVerifies) {
  PairingSet ps{MultiIndex{1, 1},
                {{Poly::constant(2, 1), mono({1, 1})}, {mono({0, 1}, -1), mono({1, 0})}, {mono({1, 0}, -1), mono({0, 1})},
                 {mono({1, 1}), Poly::constant(2, 1)}}};
  EXPECT_TRUE(verify_pairing(ps));
}

TEST(Pairing, WrongClaimIsRejected) {
  PairingSet ps{MultiIndex{1, 0}, {{Poly::constant(2, 1), Poly::constant(2, 1)}}};
  EXPECT_FALSE(verify_pairing(ps));
}

TEST(Pairing, TrivialGamma) {
  PairingSet ps = pairing_polynomials(1, MultiIndex{0});
  EXPECT_TRUE(verify_pairing(ps));
  ASSERT_EQ(ps.pairs.size(), 1u);
  EXPECT_EQ(ps.pairs[0].first, Poly::constant(1, 1));
  EXPECT_EQ(ps.pairs[0].second, Poly::constant(1, 1));
}

// Independent sweep: every alpha with alpha_i <= 4 in one variable, <= 3 otherwise.
TEST(Pairing, SolverOutputPassesExhaustiveSweep) {
  for (int n = 1; n <= 3; ++n)
    for (int d = 0; d <= (n == 3 ? 3 : 4); ++d)
      for (const auto& gamma : monomials_of_degree(n, d)) {
        PairingSet ps = pairing_polynomials(n, gamma);
        EXPECT_TRUE(verify_pairing(ps)) << gamma.str();
        const int bound = n == 1 ? 4 : 3;
        for (const auto& alpha : monomials_up_to(n, bound * n)) {
          bool inside = true;
          for (int i = 0; i < n; ++i) inside = inside && alpha[i] <= bound;
          if (!inside) continue;
          Poly v = pairing_value(ps, alpha);
          if (alpha == gamma) EXPECT_EQ(v, Poly::constant(n, 1)) << gamma.str();
          else EXPECT_TRUE(v.is_zero()) << gamma.str() << " at " << alpha.str();
        }
      }
}

TEST(Pairing, ThreeVariableExample) {
  EXPECT_TRUE(verify_pairing(pairing_polynomials(3, MultiIndex{1, 0, 1})));
  EXPECT_TRUE(verify_pairing(pairing_polynomials(3, MultiIndex{1, 1, 0})));
}
