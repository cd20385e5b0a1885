#include "polytor/rational.hpp"
#include "polytor/sparse.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace polytor;
using V = SparseVec<Rational>;
using M = SparseMat<Rational>;

namespace {

M dense(const std::vector<std::vector<int>>& rows) {
  std::vector<std::vector<Rational>> r;
  for (const auto& row : rows) r.emplace_back(row.begin(), row.end());
  return M::from_dense(r, rows.front().size());
}

V vec(const std::vector<int>& xs) { return V::from_dense(std::vector<Rational>(xs.begin(), xs.end())); }

// Plain dense Gauss-Jordan, used as an independent reference for rref.
std::vector<std::vector<Rational>> gauss_jordan(std::vector<std::vector<Rational>> a) {
  const std::size_t rows = a.size(), cols = a.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    Rational inv = Rational(1) / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  a.resize(r);
  return a;
}

}  // namespace

TEST(Rational, CanonicalForm) {
  Rational q = parse_rational("-6/4");
  EXPECT_EQ(to_string(q), "-3/2");
  EXPECT_EQ(to_string(parse_rational("-8/4")), "-2");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
  EXPECT_THROW(parse_rational("3/-4"), std::invalid_argument);
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
}

TEST(SparseVec, NoStoredZeros) {
  V v = vec({1, 0, 2});
  EXPECT_EQ(v.nnz(), 2u);
  v.axpy(Rational(-2), vec({0, 0, 1}));
  EXPECT_EQ(v.nnz(), 1u);
  v.set(0, Rational(0));
  EXPECT_TRUE(v.empty());
}

TEST(Rref, Examples) {
  auto id = rref(dense({{1, 0}, {0, 1}}));
  EXPECT_EQ(id.rank, 2u);
  EXPECT_EQ(id.pivots, (std::vector<std::size_t>{0, 1}));

  auto dep = rref(dense({{1, 2}, {2, 4}}));
  EXPECT_EQ(dep.rank, 1u);
  EXPECT_EQ(dep.reduced.rows.at(0), vec({1, 2}));
  EXPECT_EQ(dep.pivots, (std::vector<std::size_t>{0}));

  auto perm = rref(dense({{0, 1}, {1, 0}}));
  EXPECT_EQ(perm.rank, 2u);
  EXPECT_EQ(perm.reduced, dense({{1, 0}, {0, 1}}));
}

TEST(Rref, MatchesDenseGaussJordanAndIsIdempotent) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<std::vector<Rational>> a(5, std::vector<Rational>(6));
    for (auto& row : a)
      for (auto& x : row) x = entry(rng);
    if (trial % 3 == 0) a[4] = a[0];
    M m = M::from_dense(a, 6);
    auto r = rref(m);
    auto ref = gauss_jordan(a);
    ASSERT_EQ(r.rank, ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i) EXPECT_EQ(r.reduced.rows[i], V::from_dense(ref[i]));
    EXPECT_EQ(rref(r.reduced).reduced, r.reduced);
  }
}

TEST(SpanContains, Examples) {
  EXPECT_TRUE(span_contains(dense({{1, 0}, {0, 1}}), vec({3, -5})));
  EXPECT_TRUE(span_contains(dense({{1, 2}}), vec({2, 4})));
  EXPECT_FALSE(span_contains(dense({{1, 2}}), vec({1, 0})));
  EXPECT_THROW(span_contains(dense({{1, 2}}), vec({1, 0, 0})), std::invalid_argument);
}

TEST(SolveLinear, Examples) {
  auto x = solve_linear(dense({{1, 0}, {0, 1}}), vec({4, -1}));
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, vec({4, -1}));

  M a = dense({{1, 1}});
  auto y = solve_linear(a, vec({2}));
  ASSERT_TRUE(y);
  EXPECT_EQ(a.apply(*y), vec({2}));

  EXPECT_FALSE(solve_linear(dense({{1}, {1}}), vec({1, 2})));
  EXPECT_THROW(solve_linear(a, vec({1, 2})), std::invalid_argument);
}

TEST(SolveLinear, SubstitutionReproducesRandomRhs) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<std::vector<Rational>> a(4, std::vector<Rational>(5));
    for (auto& row : a)
      for (auto& x : row) x = entry(rng);
    M m = M::from_dense(a, 5);
    std::vector<Rational> x0(5);
    for (auto& x : x0) x = entry(rng);
    V b = m.apply(V::from_dense(x0));
    auto x = solve_linear(m, b);
    ASSERT_TRUE(x);
    EXPECT_EQ(m.apply(*x), b);
  }
}

TEST(CoordinateSystem, RecoversCombination) {
  std::vector<V> vs = {vec({1, 1, 0}), vec({0, 1, 1})};
  CoordinateSystem<Rational> cs(vs, 3);
  auto c = cs.coordinates(vec({2, 5, 3}));
  EXPECT_EQ(c, (std::vector<Rational>{2, 3}));
  EXPECT_THROW(cs.coordinates(vec({1, 0, 0})), std::domain_error);
  EXPECT_THROW(CoordinateSystem<Rational>({vec({1, 2}), vec({2, 4})}, 2), std::invalid_argument);
}
