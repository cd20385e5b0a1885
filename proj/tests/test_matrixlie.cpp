#include "polytor/matrixlie.hpp"

#include <gtest/gtest.h>

using namespace polytor;

namespace {

long total(const std::map<Weight, long>& m) {
  long s = 0;
  for (const auto& [w, k] : m) s += k;
  return s;
}

// rho([x_a, x_b]) = [rho(x_a), rho(x_b)] on every pair of basis elements.
void expect_representation(const IrrepModule& v) {
  const MatLieAlg& g = v.algebra();
  for (std::size_t a = 0; a < g.dim(); ++a)
    for (std::size_t b = 0; b < g.dim(); ++b) {
      Mat lhs = commutator(v.rho(a), v.rho(b));
      Mat rhs = Mat::Zero(v.dim(), v.dim());
      const auto& c = g.structure(a, b);
      for (std::size_t k = 0; k < c.size(); ++k)
        if (c[k] != 0) rhs += v.rho(k) * c[k];
      EXPECT_EQ(lhs, rhs) << g.basis_names()[a] << " " << g.basis_names()[b];
    }
}

}  // namespace

TEST(MatLieAlg, Dimensions) {
  EXPECT_EQ(build_algebra(LieKind::gl, 3).dim(), 9u);
  EXPECT_EQ(build_algebra(LieKind::sl, 3).dim(), 8u);
  EXPECT_EQ(build_algebra(LieKind::sp, 4).dim(), 10u);
  EXPECT_EQ(build_algebra(LieKind::sp, 2).dim(), 3u);
  EXPECT_EQ(build_algebra(LieKind::sl, 3).rank(), 2);
  EXPECT_EQ(build_algebra(LieKind::sp, 4).rank(), 2);
  EXPECT_EQ(build_algebra(LieKind::sl, 4).positive_roots().size(), 6u);
  EXPECT_EQ(build_algebra(LieKind::sp, 4).positive_roots().size(), 4u);
  EXPECT_THROW(build_algebra(LieKind::sp, 3), std::invalid_argument);
}

TEST(MatLieAlg, MembershipAndCoordinates) {
  MatLieAlg sl3 = build_algebra(LieKind::sl, 3);
  EXPECT_TRUE(sl3.contains(unit_matrix(3, 0, 0) - unit_matrix(3, 2, 2)));
  EXPECT_FALSE(sl3.contains(unit_matrix(3, 0, 0)));
  EXPECT_THROW(sl3.coordinates(unit_matrix(3, 1, 1)), std::domain_error);
  MatLieAlg sp4 = build_algebra(LieKind::sp, 4);
  EXPECT_TRUE(sp4.contains(unit_matrix(4, 0, 0) - unit_matrix(4, 2, 2)));
  EXPECT_FALSE(sp4.contains(unit_matrix(4, 0, 1)));
}

TEST(Irrep, Gl3AdjointLikeExample) {
  MatLieAlg gl3 = build_algebra(LieKind::gl, 3);
  IrrepModule v = irrep(gl3, {2, 1, 0});
  EXPECT_EQ(v.dim(), 8u);
  auto census = v.weight_census();
  EXPECT_EQ(census.at({1, 1, 1}), 2);
  EXPECT_EQ(census.at({2, 1, 0}), 1);
  EXPECT_EQ(census.at({0, 1, 2}), 1);
  expect_representation(v);
}

TEST(Irrep, Sp4Examples) {
  MatLieAlg sp4 = build_algebra(LieKind::sp, 4);
  IrrepModule five = irrep(sp4, {1, 1});
  EXPECT_EQ(five.dim(), 5u);
  EXPECT_EQ(five.weight_census().at({0, 0}), 1);
  IrrepModule four = irrep(sp4, {1, 0});
  EXPECT_EQ(four.dim(), 4u);
  expect_representation(five);
  expect_representation(four);
  EXPECT_THROW(irrep(sp4, {0, 1}), std::invalid_argument);
}

TEST(Irrep, Sl2AndSl3) {
  MatLieAlg sl2 = build_algebra(LieKind::sl, 2);
  EXPECT_EQ(irrep(sl2, {3}).dim(), 4u);
  MatLieAlg sl3 = build_algebra(LieKind::sl, 3);
  IrrepModule adj = irrep(sl3, sl_from_fundamental({1, 1}));
  EXPECT_EQ(adj.dim(), 8u);
  EXPECT_EQ(adj.weight_census().at({0, 0}), 2);
  expect_representation(adj);
}

TEST(Freudenthal, MatchesExplicitModuleCensus) {
  struct Case {
    LieKind kind;
    int size;
    Weight hw;
  };
  std::vector<Case> cases = {
      {LieKind::gl, 2, {3, -1}}, {LieKind::gl, 3, {2, 1, 0}}, {LieKind::gl, 3, {1, 0, -1}}, {LieKind::sl, 3, {2, 1}},
      {LieKind::sl, 3, {2, 0}},  {LieKind::sl, 4, {1, 1, 0}}, {LieKind::sp, 4, {1, 1}},     {LieKind::sp, 4, {2, 0}},
      {LieKind::sp, 4, {2, 1}},  {LieKind::sp, 2, {3}},
  };
  for (const auto& c : cases) {
    MatLieAlg g = build_algebra(c.kind, c.size);
    auto fr = weight_multiplicities(g, c.hw);
    EXPECT_EQ(fr, irrep(g, c.hw).weight_census()) << to_string(c.kind) << c.size;
    EXPECT_EQ(Integer(total(fr)), weyl_dim(g, c.hw));
  }
}

TEST(WeylDim, KnownValues) {
  EXPECT_EQ(weyl_dim(build_algebra(LieKind::sl, 3), sl_from_fundamental({1, 1})), 8);
  EXPECT_EQ(weyl_dim(build_algebra(LieKind::sl, 3), sl_from_fundamental({2, 0})), 6);
  EXPECT_EQ(weyl_dim(build_algebra(LieKind::sl, 4), sl_from_fundamental({0, 1, 0})), 6);
  EXPECT_EQ(weyl_dim(build_algebra(LieKind::sp, 4), {2, 0}), 10);
  EXPECT_EQ(weyl_dim(build_algebra(LieKind::sp, 6), {1, 1, 1}), 14);
  EXPECT_EQ(weyl_dim(build_algebra(LieKind::gl, 3), {5, 5, 5}), 1);
}

TEST(Weights, FundamentalCoordinates) {
  EXPECT_EQ(sl_from_fundamental({1, 0}), (Weight{1, 0}));
  EXPECT_EQ(sl_from_fundamental({0, 1}), (Weight{1, 1}));
  EXPECT_EQ(sl_from_fundamental({2, 3}), (Weight{5, 3}));
  for (Weight a : {Weight{0, 0, 1}, Weight{2, 1, 0}, Weight{1, 1, 1}}) EXPECT_EQ(sl_to_fundamental(sl_from_fundamental(a)), a);
}

TEST(Weights, DualIsInvolution) {
  EXPECT_EQ(dual_weight(LieKind::gl, {1, 0, 0}), (Weight{0, 0, -1}));
  EXPECT_EQ(dual_weight(LieKind::sl, sl_from_fundamental({1, 0})), sl_from_fundamental({0, 1}));
  EXPECT_EQ(dual_weight(LieKind::sp, {2, 1}), (Weight{2, 1}));
  for (Weight w : {Weight{3, 1, -2}, Weight{0, 0, 0}, Weight{1, 1, 0}})
    EXPECT_EQ(dual_weight(LieKind::gl, dual_weight(LieKind::gl, w)), w);
  for (Weight w : {Weight{3, 1}, Weight{4, 4}}) EXPECT_EQ(dual_weight(LieKind::sl, dual_weight(LieKind::sl, w)), w);
}

TEST(Weights, RestrictAndLift) {
  MatLieAlg sl3 = build_algebra(LieKind::sl, 3);
  EXPECT_EQ(sl3.restrict({2, 1, 1}), (Weight{1, 0}));
  EXPECT_EQ(sl3.to_gl({2, 1}), (Weight{2, 1, 0}));
  MatLieAlg sp4 = build_algebra(LieKind::sp, 4);
  EXPECT_EQ(sp4.restrict({1, 0, 0, 1}), (Weight{1, -1}));
  EXPECT_TRUE(sp4.is_dominant({2, 1}));
  EXPECT_FALSE(sp4.is_dominant({1, 2}));
  EXPECT_FALSE(sl3.is_dominant({-1, 0}));
}
