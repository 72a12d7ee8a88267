#include <gtest/gtest.h>

#include "heron/decomposition.hpp"
#include "heron/paper_tables.hpp"
#include "properties.hpp"

using heron::CoprimeFactorization;
using heron::Int;
using heron::QuadSolution;
using heron::Triangle;

namespace {

CoprimeFactorization tuple(std::int64_t d, std::array<std::int64_t, 3> D,
                           std::array<std::int64_t, 3> dd, std::array<std::int64_t, 3> ks,
                           std::int64_t k) {
  return {d, D[0], D[1], D[2], dd[0], dd[1], dd[2], ks[0], ks[1], ks[2], k};
}

}  // namespace

TEST(Decompose, Examples) {
  EXPECT_EQ(heron::decompose(Triangle(5, 4, 3)), tuple(2, {1, 2, 3}, {1, 1, 1}, {1, 1, 1}, 1));
  EXPECT_EQ(heron::decompose(Triangle(20, 15, 7)), tuple(2, {1, 3, 7}, {1, 1, 2}, {1, 1, 1}, 1));
  const auto f = heron::decompose(Triangle(25, 17, 12));
  EXPECT_EQ(f.d, 2);
  EXPECT_EQ(f.D1, 1);
  EXPECT_EQ(f.D2, 1);
  EXPECT_EQ(f.D3, 3);
  EXPECT_EQ(f.d12, 2);
  EXPECT_EQ(f.d23, 5);
  EXPECT_EQ(f.k, 3);
  EXPECT_THROW(heron::decompose(Triangle(1, 1, 1)), heron::IrrationalAreaError);
}

TEST(Decompose, FollowsSideOrder) {
  const auto f = heron::decompose(Triangle(3, 4, 5));
  EXPECT_EQ(f.D1, 3);
  EXPECT_EQ(f.D3, 1);
}

TEST(Reconstruct, Examples) {
  for (const auto& row : heron::paper::factorization_table) {
    if (row.area == 114 || row.area == 126) continue;  // printed with errata
    const auto r = heron::reconstruct_from_factorization(tuple(
        row.d, {row.D1, row.D2, row.D3}, {row.d12, row.d13, row.d23}, {row.k1, row.k2, row.k3},
        row.k));
    EXPECT_EQ(r.triangle, Triangle(row.a, row.b, row.c));
    EXPECT_EQ(r.area, row.area);
  }
  const auto r = heron::reconstruct_from_factorization(tuple(2, {2, 1, 11}, {1, 1, 1}, {1, 3, 1}, 1));
  EXPECT_EQ(r.triangle, Triangle(20, 13, 11));
  EXPECT_EQ(r.area, 66);
  EXPECT_THROW(
      heron::reconstruct_from_factorization(tuple(2, {1, 1, 19}, {1, 1, 1}, {1, 3, 1}, 1)),
      heron::InvariantError);
}

TEST(Violations, DetectsBrokenTuples) {
  auto f = heron::decompose(Triangle(5, 4, 3));
  EXPECT_TRUE(heron::factorization_violations(f).empty());
  f.d12 = 3;
  EXPECT_FALSE(heron::factorization_violations(f).empty());
  f = heron::decompose(Triangle(5, 4, 3));
  f.d = 3;
  EXPECT_FALSE(heron::factorization_violations(f).empty());
}

TEST(Solid, Examples) {
  auto w = heron::classify_solid_rectangular(Triangle(8, 5, 5));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->solution, QuadSolution(1, 2, 2, 3));
  EXPECT_EQ(w->d, 2);
  EXPECT_EQ(heron::solid_area(w->solution, w->d), 12);

  w = heron::classify_solid_rectangular(Triangle(72, 45, 45));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->solution, QuadSolution(1, 2, 2, 3));
  EXPECT_EQ(w->d, 18);

  w = heron::classify_solid_rectangular(Triangle(16, 10, 10));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->d, 4);
  EXPECT_EQ(heron::solid_area(w->solution, w->d), 48);
  EXPECT_EQ(heron::witness_triangle(*w), Triangle(16, 10, 10));

  EXPECT_FALSE(heron::classify_solid_rectangular(Triangle(5, 4, 3)));
  EXPECT_FALSE(heron::extract_quad_solution(heron::decompose(Triangle(5, 4, 3))));
}

TEST(Congruences, EvenPatterns) {
  auto f = tuple(2, {1, 1, 1}, {2, 1, 1}, {1, 2, 1}, 1);
  EXPECT_TRUE(heron::even_pattern_allowed(f));  // (d12, k2)
  f = tuple(2, {1, 1, 1}, {2, 1, 1}, {1, 1, 2}, 1);
  EXPECT_FALSE(heron::even_pattern_allowed(f));  // k3 is not an index of d12
  f = tuple(2, {2, 1, 1}, {1, 1, 1}, {2, 1, 1}, 1);
  EXPECT_TRUE(heron::even_pattern_allowed(f));  // (D1, k1)
  f = tuple(2, {1, 1, 1}, {1, 1, 1}, {2, 2, 1}, 1);
  EXPECT_FALSE(heron::even_pattern_allowed(f));  // two k's
  f = tuple(2, {2, 1, 1}, {1, 2, 1}, {2, 1, 1}, 1);
  EXPECT_FALSE(heron::even_pattern_allowed(f));  // three even
}

TEST(Congruences, TwoModFourPattern) {
  EXPECT_TRUE(heron::two_mod_four_pattern(heron::decompose(Triangle(5, 4, 3))));
  EXPECT_TRUE(heron::two_mod_four_pattern(heron::decompose(Triangle(20, 15, 7))));
  EXPECT_FALSE(heron::two_mod_four_pattern(heron::decompose(Triangle(8, 5, 5))));
}

TEST(Congruences, UnitDView) {
  const auto f = heron::decompose(Triangle(8, 5, 5));
  const auto v = heron::unit_d_view(f);
  ASSERT_TRUE(v);
  EXPECT_EQ(v->t, 3);
  EXPECT_TRUE(v->identity_holds);
  EXPECT_FALSE(heron::unit_d_view(heron::decompose(Triangle(5, 4, 3))));
}

TEST(Properties, Lemma1) { EXPECT_EQ(props::lemma1_mod8(), props::Failures{}); }

TEST(Properties, TrianglesToPerimeter500) {
  const props::Failures f = props::triangle_invariants(500);
  EXPECT_TRUE(f.empty()) << f.size() << " failures, first: " << (f.empty() ? "" : f.front());
}
