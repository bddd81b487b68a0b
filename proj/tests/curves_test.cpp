// Copyright 2026 The Incidence Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>

#include "gtest/gtest.h"
#include "incidence/curves.hpp"
#include "incidence/extremal.hpp"
#include "incidence/incidence.hpp"
#include "incidence/random.hpp"
#include "tower_shapes.hpp"

namespace incidence {
namespace {

FieldElement q(long v) { return FieldElement::from_int(TowerDescriptor::rationals(), v); }
Point pt(long x, long y) { return {q(x), q(y)}; }

Curve circle(long r2) { return Curve::make(TowerDescriptor::rationals(), {{2, 0, q(1)}, {0, 2, q(1)}, {0, 0, q(-r2)}}); }

TEST(OnCurve, Examples) {
  const auto parabola = Curve::make(TowerDescriptor::rationals(), {{0, 1, q(1)}, {2, 0, q(-1)}, {0, 0, q(-1)}});
  EXPECT_TRUE(on_curve(pt(1, 2), parabola));
  EXPECT_TRUE(on_curve(pt(1, 1), circle(2)));
  EXPECT_FALSE(on_curve(pt(0, 0), circle(2)));
}

TEST(OnCurve, TowerMismatch) {
  const auto k = TowerDescriptor::transcendental({"t"});
  const Point p{FieldElement::generator(k, "t"), FieldElement::zero(k)};
  EXPECT_THROW(on_curve(p, circle(1)), TowerMismatch);
}

TEST(CurveForm, NormalizedAndMerged) {
  const auto c = Curve::make(TowerDescriptor::rationals(), {{0, 0, q(4)}, {1, 1, q(2)}, {0, 0, q(-2)}, {2, 0, q(0)}});
  ASSERT_EQ(c.terms().size(), 2u);
  EXPECT_EQ(c.terms()[0].x_exp, 1u);
  EXPECT_TRUE(c.terms()[0].coeff.is_one());
  EXPECT_EQ(c.terms()[1].coeff, q(1));
  EXPECT_EQ(c.degree(), 2u);
  EXPECT_THROW(Curve::make(TowerDescriptor::rationals(), {{1, 0, q(1)}, {1, 0, q(-1)}}), GeometryError);
}

TEST(CurveForm, ScalarMultiplesAreEqual) {
  for (const auto& shape : testing::standard_shapes()) {
    std::mt19937_64 rng(shape.name.size());
    for (int i = 0; i < 20; ++i) {
      std::vector<CurveTerm> terms;
      for (unsigned e = 0; e < 3; ++e) terms.push_back({e, 2 - e, random_element(shape.tower, rng)});
      terms.push_back({0, 0, random_element(shape.tower, rng)});
      bool all_zero = true;
      for (const auto& t : terms) all_zero = all_zero && t.coeff.is_zero();
      if (all_zero) continue;
      const auto s = random_nonzero(shape.tower, rng);
      auto scaled = terms;
      for (auto& t : scaled) t.coeff *= s;
      const auto c = Curve::make(shape.tower, terms), cs = Curve::make(shape.tower, scaled);
      ASSERT_EQ(c, cs) << shape.name;
      const Point p{random_element(shape.tower, rng), random_element(shape.tower, rng)};
      ASSERT_EQ(on_curve(p, c), on_curve(p, cs));
    }
  }
}

TEST(Monomials, ParseAndFormat) {
  EXPECT_EQ(parse_monomial("x^2*y"), std::make_pair(2u, 1u));
  EXPECT_EQ(parse_monomial("y^3"), std::make_pair(0u, 3u));
  EXPECT_EQ(parse_monomial("1"), std::make_pair(0u, 0u));
  EXPECT_EQ(parse_monomial("x * x"), std::make_pair(2u, 0u));
  EXPECT_EQ(parse_monomial(monomial_key(3, 4)), std::make_pair(3u, 4u));
  for (const char* bad : {"", "z", "x^", "x*", "x^y", "2*x", "x^12345"}) EXPECT_THROW(parse_monomial(bad), SyntaxError) << bad;
}

TEST(CountCurveIncidences, Examples) {
  std::vector<Curve> family;
  for (long b = 0; b <= 2; ++b)
    family.push_back(Curve::make(TowerDescriptor::rationals(), {{0, 1, q(1)}, {2, 0, q(-1)}, {0, 0, q(-b)}}));
  const std::vector<Point> pts{pt(0, 0), pt(0, 1), pt(0, 2)};
  EXPECT_EQ(count_curve_incidences(pts, family), 3u);
  EXPECT_EQ(count_curve_incidences(pts, {}), 0u);

  const auto grid = generate_configuration(FamilyId::st_grid, 2);
  std::vector<Curve> lines;
  for (const auto& l : grid.lines()) lines.push_back(Curve::from_line(l));
  EXPECT_EQ(count_curve_incidences(grid.points(), lines), 16u);
  EXPECT_EQ(count_incidences_naive(grid), 16u);
}

TEST(CountCurveIncidences, LinesAgreeWithLineEngine) {
  for (const auto& shape : testing::standard_shapes()) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 5; ++i) {
      const auto cfg = random_configuration(shape.tower, 15, 15, rng);
      std::vector<Curve> curves;
      for (const auto& l : cfg.lines()) curves.push_back(Curve::from_line(l));
      ASSERT_EQ(count_curve_incidences(cfg.points(), curves), count_incidences_naive(cfg)) << shape.name;
      ASSERT_EQ(curves.empty() || curves.front().terms().front().x_exp + curves.front().terms().front().y_exp == 1,
                true);
    }
  }
}

TEST(CurveBoundRatio, Values) {
  EXPECT_DOUBLE_EQ(curve_bound_ratio(0, 0, 0, 2, 0.0), 0.0);
  // k = 2: m^{2/3} n^{2/3} + m + n with m = n = 8 -> 16 + 16 = 32
  EXPECT_NEAR(curve_bound_ratio(32, 8, 8, 2, 0.0), 1.0, 1e-12);
}

TEST(DofCheck, LinesInGeneralPosition) {
  std::mt19937_64 rng(5);
  const auto pts = random_general_position(8, rng);
  std::vector<Curve> lines;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) lines.push_back(Curve::from_line(line_through(pts[i], pts[j])));
  EXPECT_TRUE(dof_check(pts, lines, 2, 1).empty());
}

TEST(DofCheck, TwoConicsThroughFourPoints) {
  const std::vector<Point> pts{pt(1, 1), pt(1, -1), pt(-1, 1), pt(-1, -1)};
  const std::vector<Curve> conics{circle(2),
                                  Curve::make(TowerDescriptor::rationals(), {{2, 0, q(1)}, {0, 2, q(-1)}})};
  const auto v = dof_check(pts, conics, 4, 1);
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v.front().kind, DofViolation::Kind::subset);
  EXPECT_EQ(v.front().points, (std::vector<std::size_t>{0, 1, 2, 3}));
  EXPECT_EQ(v.front().curves, (std::vector<std::size_t>{0, 1}));
}

TEST(DofCheck, DisjointCircles) {
  std::vector<Point> pts{pt(1, 0), pt(0, 1), pt(-1, 0), pt(0, -1), pt(2, 0), pt(0, 2), pt(-2, 0), pt(0, -2)};
  const std::vector<Curve> circles{circle(1), circle(4)};
  EXPECT_TRUE(dof_check(pts, circles, 3, 2).empty());
}

TEST(DofCheck, PairWitness) {
  // two parallel-free lines meeting at the origin, checked with s = 0 via k large
  const std::vector<Point> pts{pt(0, 0), pt(1, 1), pt(2, 2)};
  const std::vector<Curve> curves{circle(2), Curve::make(TowerDescriptor::rationals(), {{1, 0, q(1)}, {0, 1, q(-1)}})};
  const auto v = dof_check(pts, curves, 3, 1);
  // circle(2) contains (1,1) only; the diagonal contains all three; they share one point
  EXPECT_TRUE(v.empty());
  const std::vector<Curve> dup{curves[1], Curve::make(TowerDescriptor::rationals(), {{2, 0, q(1)}, {1, 1, q(-1)}})};
  const auto w = dof_check(pts, dup, 3, 2);
  ASSERT_EQ(w.size(), 1u);
  EXPECT_EQ(w[0].kind, DofViolation::Kind::pair);
  EXPECT_EQ(w[0].points, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(DofCheck, GridLinesHaveTwoDegreesOfFreedom) {
  for (unsigned n = 1; n <= 3; ++n) {
    const auto grid = generate_configuration(FamilyId::st_grid, n);
    std::vector<Curve> lines;
    for (const auto& l : grid.lines()) lines.push_back(Curve::from_line(l));
    EXPECT_TRUE(dof_check(grid.points(), lines, 2, 1).empty()) << n;
  }
}

TEST(DofCheck, GuardAndArguments) {
  std::vector<Point> pts;
  for (long i = 0; i < 200; ++i) pts.push_back(pt(i, i * i));
  const std::vector<Curve> one{circle(1)};
  EXPECT_THROW(dof_check(pts, one, 4, 1), GuardExceeded);
  EXPECT_NO_THROW(dof_check(pts, one, 2, 1));
  EXPECT_THROW(dof_check(pts, one, 0, 1), InvalidArgument);
  EXPECT_THROW(dof_check(pts, one, 2, 0), InvalidArgument);
  EXPECT_DOUBLE_EQ(binomial(200, 4), 64684950.0);
}

}  // namespace
}  // namespace incidence
