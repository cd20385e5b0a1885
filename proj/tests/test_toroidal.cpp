#include "polytor/toroidal.hpp"

#include <gtest/gtest.h>

using namespace polytor;

namespace {

AlgebraConfig cfg(XKind x, int n, int D = 3, int g = 2) { return AlgebraConfig{x, n, g, D}; }

VectorField td(int n, std::initializer_list<int> r, int i, const Rational& c = 1) {
  return VectorField::monomial(n, MultiIndex(r), i, c);
}

// [x_a, x_b] written back as an element of g (x) t^r.
ToroidalElem g_bracket_times(const ToroidalAlgebra& alg, std::size_t a, std::size_t b, const MultiIndex& r) {
  ToroidalElem out = alg.zero();
  const auto& c = alg.g().structure(a, b);
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c[k] != 0) out += alg.gt(k, r, c[k]);
  return out;
}

}  // namespace

TEST(ToroidalBracket, DerivativeOnLoop) {
  ToroidalAlgebra alg(cfg(XKind::W, 2));
  for (std::size_t a = 0; a < alg.gdim(); ++a) {
    EXPECT_EQ(bracket(alg, alg.vf(td(2, {0, 0}, 0)), alg.gt(a, MultiIndex{1, 0})), alg.gt(a, MultiIndex{0, 0}));
    EXPECT_TRUE(bracket(alg, alg.vf(td(2, {0, 0}, 1)), alg.gt(a, MultiIndex{1, 0})).is_zero());
    // [t^r d_i, x (x) t_i] = x (x) t^r
    EXPECT_EQ(bracket(alg, alg.vf(td(2, {1, 1}, 0)), alg.gt(a, MultiIndex{1, 0})), alg.gt(a, MultiIndex{1, 1}));
  }
}

TEST(ToroidalBracket, LoopAndCentralRelations) {
  ToroidalAlgebra alg(cfg(XKind::S, 3));
  for (std::size_t a = 0; a < alg.gdim(); ++a) {
    EXPECT_TRUE(bracket(alg, alg.k(MultiIndex{1, 0, 0}, 1), alg.gt(a, MultiIndex{0, 1, 0})).is_zero());
    EXPECT_TRUE(bracket(alg, alg.k(MultiIndex{0, 0, 0}, 0), alg.gt(a, MultiIndex{0, 0, 0})).is_zero());
    for (std::size_t b = 0; b < alg.gdim(); ++b)
      EXPECT_EQ(bracket(alg, alg.gt(a, MultiIndex{1, 0, 0}), alg.gt(b, MultiIndex{0, 1, 0})),
                g_bracket_times(alg, a, b, MultiIndex{1, 1, 0}));
  }
  EXPECT_TRUE(bracket(alg, alg.k(MultiIndex{1, 0, 0}, 0), alg.k(MultiIndex{0, 2, 0}, 2)).is_zero());
  // vector fields act on t^s K_j through the derivative of the coefficient
  EXPECT_EQ(bracket(alg, alg.vf(td(3, {0, 0, 0}, 1)), alg.k(MultiIndex{0, 2, 0}, 2)), alg.k(MultiIndex{0, 1, 0}, 2, 2));
}

TEST(ToroidalBracket, ConfigMismatchThrows) {
  ToroidalAlgebra a(cfg(XKind::W, 2)), b(cfg(XKind::W, 3));
  EXPECT_THROW(bracket(a, a.vf(td(2, {0, 0}, 0)), b.vf(td(3, {0, 0, 0}, 0))), std::invalid_argument);
}

TEST(GradedSlice, Dimensions) {
  ToroidalAlgebra alg(cfg(XKind::W, 2, 3));
  EXPECT_EQ(alg.graded_slice(-1).dim(), 2u);
  EXPECT_EQ(alg.graded_slice(0).dim(), 9u);
  EXPECT_EQ(alg.graded_slice(-2).dim(), 0u);
  EXPECT_EQ(alg.graded_slice(-7).dim(), 0u);
  EXPECT_THROW(alg.graded_slice(4), std::out_of_range);
  // degree d: W part 2*#(d+1), loop part 3*#(d), central part 2*#(d)
  for (int d = 1; d <= 3; ++d)
    EXPECT_EQ(alg.graded_slice(d).dim(), static_cast<std::size_t>(2 * monomial_count(2, d + 1) + 5 * monomial_count(2, d)));

  ToroidalAlgebra h(cfg(XKind::H, 2, 2));
  EXPECT_EQ(h.graded_slice(0).dim(), 3u + 3u + 2u);
  ToroidalAlgebra s(cfg(XKind::S, 3, 2, 3));
  EXPECT_EQ(s.graded_slice(0).dim(), 8u + 8u + 3u);
}

TEST(GradedSlice, CoordinatesRoundTrip) {
  ToroidalAlgebra alg(cfg(XKind::H, 2, 3));
  for (int d = -1; d <= 3; ++d) {
    const auto& sl = alg.graded_slice(d);
    for (std::size_t k = 0; k < sl.dim(); ++k) {
      auto c = alg.slice_coordinates(sl.basis[k], d);
      for (std::size_t j = 0; j < c.size(); ++j) EXPECT_EQ(c[j], Rational(j == k ? 1 : 0));
    }
  }
  // t1 d1 alone is not Hamiltonian
  EXPECT_FALSE(alg.in_slice(alg.vf(td(2, {1, 0}, 0)), 0));
  EXPECT_THROW(alg.slice_coordinates(alg.vf(td(2, {1, 0}, 0)), 0), std::domain_error);
}

TEST(NormalOrder, Examples) {
  ToroidalAlgebra alg(cfg(XKind::W, 2));
  const std::size_t a = 0;
  NormalOrdered no = normal_order(alg, MultiIndex{1, 0}, alg.gt(a, MultiIndex{1, 0}));
  ASSERT_EQ(no.size(), 2u);
  EXPECT_EQ(no.at(MultiIndex{1, 0}), alg.gt(a, MultiIndex{1, 0}));
  EXPECT_EQ(no.at(MultiIndex{0, 0}), alg.gt(a, MultiIndex{0, 0}));

  NormalOrdered id = normal_order(alg, MultiIndex{0, 0}, alg.gt(a, MultiIndex{2, 1}));
  ASSERT_EQ(id.size(), 1u);
  EXPECT_EQ(id.at(MultiIndex{0, 0}), alg.gt(a, MultiIndex{2, 1}));

  ToroidalElem k = alg.k(MultiIndex{1, 1}, 0);
  NormalOrdered four = normal_order(alg, MultiIndex{1, 1}, k);
  EXPECT_EQ(four.size(), 4u);
  EXPECT_EQ(four, normal_order_by_brackets(alg, MultiIndex{1, 1}, k));
  EXPECT_EQ(four.at(MultiIndex{0, 0}), alg.k(MultiIndex{0, 0}, 0));
}

TEST(NormalOrder, ClosedFormMatchesBracketOracle) {
  ToroidalAlgebra alg(cfg(XKind::W, 2));
  for (const auto& r : monomials_up_to(2, 3))
    for (const auto& s : monomials_up_to(2, 3)) {
      ToroidalElem x = alg.gt(1, s, 3);
      EXPECT_EQ(normal_order(alg, r, x), normal_order_by_brackets(alg, r, x)) << r.str() << " " << s.str();
      ToroidalElem k = alg.k(s, 1);
      EXPECT_EQ(normal_order(alg, r, k), normal_order_by_brackets(alg, r, k));
    }
}

TEST(SemiInfinite, TraceExamples) {
  ToroidalAlgebra alg(cfg(XKind::W, 2));
  // [t1^2 d1, d1] = -2 t1 d1
  const VectorField x = td(2, {2, 0}, 0), y = td(2, {0, 0}, 0);
  EXPECT_EQ(bracket(x, y), td(2, {1, 0}, 0, -2));
  EXPECT_EQ(adjoint_trace_pairing(alg, alg.vf(x), alg.vf(y)), Rational(-2));
  EXPECT_EQ(semi_infinite_character(alg, alg.vf(bracket(x, y))), Rational(-2));
  EXPECT_EQ(adjoint_trace_pairing(alg, alg.vf(td(2, {2, 0}, 0)), alg.vf(td(2, {0, 0}, 1))), Rational(0));
  EXPECT_EQ(semi_infinite_character(alg, alg.vf(td(2, {1, 0}, 0))), Rational(1));
  EXPECT_EQ(semi_infinite_character(alg, alg.vf(td(2, {1, 0}, 1))), Rational(0));
  EXPECT_EQ(semi_infinite_character(alg, alg.gt(0, MultiIndex{0, 0})), Rational(0));
  EXPECT_EQ(semi_infinite_character(alg, alg.k(MultiIndex{0, 0}, 1)), Rational(0));
  EXPECT_THROW(adjoint_trace_pairing(alg, alg.vf(td(2, {0, 0}, 0)), alg.vf(td(2, {0, 0}, 0))), std::invalid_argument);

  ToroidalAlgebra h(cfg(XKind::H, 2));
  for (const auto& e : h.graded_slice(0).basis) EXPECT_EQ(semi_infinite_character(h, e), Rational(0));
  EXPECT_EQ(semi_infinite_weight(XKind::W, 3), (Weight{1, 1, 1}));
  EXPECT_EQ(semi_infinite_weight(XKind::S, 3), (Weight{0, 0}));
  EXPECT_EQ(semi_infinite_weight(XKind::H, 4), (Weight{0, 0}));
}

TEST(Weights, MuKAndExceptionalIndex) {
  EXPECT_EQ(mu_k(XKind::W, 3, 2), (Weight{1, 1, 0}));
  EXPECT_EQ(mu_k(XKind::S, 3, 3), (Weight{0, 0}));
  EXPECT_EQ(mu_k(XKind::S, 3, 1), (Weight{1, 0}));
  EXPECT_EQ(mu_k(XKind::H, 4, 2), (Weight{1, 1}));
  EXPECT_EQ(n_x(XKind::W, 3), 3);
  EXPECT_EQ(n_x(XKind::S, 3), 2);
  EXPECT_EQ(n_x(XKind::H, 4), 2);

  AlgebraConfig w2 = cfg(XKind::W, 2);
  EXPECT_EQ(exceptional_index(w2, LabeledWeight{{0}, {1, 0}, {0, 0}}), 1);
  EXPECT_EQ(exceptional_index(w2, LabeledWeight{{0}, {1, 1}, {0, 0}}), std::nullopt);  // k = n is not exceptional for W
  EXPECT_EQ(exceptional_index(w2, LabeledWeight{{1}, {1, 0}, {0, 0}}), std::nullopt);
  EXPECT_EQ(exceptional_index(w2, LabeledWeight{{0}, {1, 0}, {1, 0}}), std::nullopt);
  AlgebraConfig h2 = cfg(XKind::H, 2);
  EXPECT_EQ(exceptional_index(h2, LabeledWeight{{0}, {1}, {0, 0}}), 1);
  EXPECT_THROW(check_weight(w2, LabeledWeight{{0}, {0, 1}, {0, 0}}), std::invalid_argument);
  EXPECT_THROW(check_weight(w2, LabeledWeight{{0, 0}, {1, 0}, {0, 0}}), std::invalid_argument);
}

TEST(Suites, PassOnSmallConfigs) {
  for (auto c : {cfg(XKind::W, 2, 3), cfg(XKind::S, 3, 2), cfg(XKind::H, 2, 3)}) {
    ToroidalAlgebra alg(c);
    for (const Report& r : {verify_jacobi(alg, 2, c.D), verify_closure(alg, c.D), verify_central(alg), verify_grading(alg),
                            verify_si2(alg), verify_generation(alg), verify_normal_order(alg, 2), verify_degree_zero(alg)}) {
      EXPECT_TRUE(r.passed()) << describe(c) << " " << r.to_table();
      EXPECT_GT(r.checked, 0) << r.suite;
    }
  }
}

TEST(Config, Validation) {
  EXPECT_THROW(validate(cfg(XKind::H, 3)), std::invalid_argument);
  EXPECT_THROW(validate(AlgebraConfig{XKind::W, 2, 1, 3}), std::invalid_argument);
  EXPECT_THROW(validate(AlgebraConfig{XKind::W, 2, 2, -1}), std::invalid_argument);
  EXPECT_NO_THROW(validate(cfg(XKind::S, 2)));
}
