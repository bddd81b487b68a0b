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
#include <string>

#include "gtest/gtest.h"
#include "incidence/field_element.hpp"
#include "incidence/random.hpp"
#include "tower_shapes.hpp"

namespace incidence {
namespace {

using K = GeneratorKind;

TowerPtr QT() { return TowerDescriptor::transcendental({"t"}); }
TowerPtr Sqrt2() { return TowerDescriptor::make({{"s", K::algebraic, {"-2", "0", "1"}}}); }

TEST(ParseElement, CancelsCommonFactor) {
  const auto k = QT();
  EXPECT_EQ(parse_element("(t^2-1)/(t+1)", k), parse_element("t - 1", k));
  EXPECT_EQ(parse_element("(t^2-1)/(t+1)", k).encoding(), "t - 1");
}

TEST(ParseElement, ZeroHasUnitDenominator) {
  const auto e = parse_element("0/5", QT());
  EXPECT_TRUE(e.is_zero());
  const auto& fr = std::get<detail::FractionRep>(e.value().rep);
  EXPECT_TRUE(fr.num.empty());
  ASSERT_EQ(fr.den.size(), 1u);
  EXPECT_EQ(std::get<Rational>(fr.den[0].rep), 1);
  EXPECT_EQ(e.encoding(), "0");
}

TEST(ParseElement, DivisionByZeroExpression) {
  EXPECT_THROW(parse_element("1/(t-t)", QT()), DivisionByZero);
  EXPECT_THROW(parse_element("3/0", TowerDescriptor::rationals()), DivisionByZero);
}

TEST(ParseElement, SyntaxErrors) {
  const auto k = QT();
  for (const char* bad : {"", "t+", "(t", "t)", "2^t", "t^-1", "3 4", "t**2", "1.5"})
    EXPECT_THROW(parse_element(bad, k), SyntaxError) << bad;
  EXPECT_THROW(parse_element("u + 1", k), UnknownGeneratorError);
}

TEST(ParseElement, GrammarPrecedence) {
  const auto q = TowerDescriptor::rationals();
  EXPECT_EQ(parse_element("-2^2", q).encoding(), "-4");
  EXPECT_EQ(parse_element("2*3+4", q).encoding(), "10");
  EXPECT_EQ(parse_element("2 * (3 + 4)", q).encoding(), "14");
  EXPECT_EQ(parse_element("1/2/3", q).encoding(), "1/6");
  EXPECT_EQ(parse_element("3 - -2", q).encoding(), "5");
  EXPECT_EQ(parse_element("  6 / 4 ", q).encoding(), "3/2");
}

TEST(Arith, Examples) {
  const auto k = QT();
  const auto t = FieldElement::generator(k, "t");
  const auto one = FieldElement::one(k);
  EXPECT_EQ(arith(t + one, t - one, ArithOp::mul), parse_element("t^2 - 1", k));

  const auto r2 = Sqrt2();
  const auto s = FieldElement::generator(r2, "s");
  EXPECT_EQ((s * s).encoding(), "2");
  EXPECT_EQ(arith(FieldElement::one(r2), FieldElement::one(r2) + s, ArithOp::div), s - FieldElement::one(r2));
  EXPECT_THROW(arith(s, FieldElement::zero(r2), ArithOp::div), DivisionByZero);
}

// (a + b s) in Q[s]/(s^2 - 2), multiplied by hand.
struct QuadPair {
  Rational a, b;
  QuadPair operator*(const QuadPair& o) const { return {a * o.a + 2 * b * o.b, a * o.b + b * o.a}; }
};

TEST(Arith, InverseInQuadraticFieldMatchesHandOracle) {
  const QuadPair one_plus_s{1, 1}, s_minus_one{-1, 1};
  const QuadPair prod = one_plus_s * s_minus_one;
  EXPECT_EQ(prod.a, 1);
  EXPECT_EQ(prod.b, 0);
  const auto r2 = Sqrt2();
  const auto inv = parse_element("1/(1+s)", r2);
  EXPECT_EQ(inv, parse_element("-1 + s", r2));
  // a + b s inverted by the library agrees with (a - b s)/(a^2 - 2 b^2).
  for (long a = -3; a <= 3; ++a) {
    for (long b = -3; b <= 3; ++b) {
      if (a == 0 && b == 0) continue;
      const Rational norm = Rational(a * a - 2 * b * b);
      const auto got = FieldElement::from_int(r2, a) + FieldElement::from_int(r2, b) * FieldElement::generator(r2, "s");
      const auto want = FieldElement::from_rational(r2, Rational(a) / norm) -
                        FieldElement::from_rational(r2, Rational(b) / norm) * FieldElement::generator(r2, "s");
      EXPECT_EQ(got.inverse(), want) << a << " " << b;
    }
  }
}

TEST(IsZero, Examples) {
  const auto k = QT();
  EXPECT_TRUE(parse_element("(t^2-1) - (t+1)*(t-1)", k).is_zero());
  EXPECT_FALSE(parse_element("t - 1", k).is_zero());
  EXPECT_TRUE(parse_element("s^2 - 2", Sqrt2()).is_zero());
}

TEST(Tower, ValidationErrors) {
  EXPECT_THROW(TowerDescriptor::transcendental({"t", "t"}), InvalidTower);
  EXPECT_THROW(TowerDescriptor::transcendental({"2t"}), InvalidTower);
  EXPECT_THROW(TowerDescriptor::make({{"s", K::algebraic, {"-2", "0", "3"}}}), InvalidTower);  // not monic
  EXPECT_THROW(TowerDescriptor::make({{"s", K::algebraic, {"-2", "1"}}}), InvalidTower);       // degree 1
  EXPECT_THROW(TowerDescriptor::make({{"s", K::algebraic, {"0", "0", "1"}}}), InvalidTower);   // s^2
  EXPECT_THROW(TowerDescriptor::make({{"s", K::algebraic, {"1", "2", "1"}}}), InvalidTower);   // (s+1)^2
  EXPECT_THROW(TowerDescriptor::make({{"s", K::algebraic, {"-u", "0", "1"}}, {"u", K::transcendental, {}}}),
               InvalidTower);  // references a later generator
  EXPECT_THROW(TowerDescriptor::make({{"t", K::transcendental, {"1"}}}), InvalidTower);
}

TEST(Tower, SquarefreeOverTranscendentalBase) {
  // s^2 - t^2 = (s - t)(s + t) is squarefree but reducible; s^2 - 2ts + t^2 is not squarefree.
  EXPECT_NO_THROW(TowerDescriptor::make({{"t", K::transcendental, {}}, {"s", K::algebraic, {"-t^2", "0", "1"}}}));
  EXPECT_THROW(TowerDescriptor::make({{"t", K::transcendental, {}}, {"s", K::algebraic, {"t^2", "-2*t", "1"}}}),
               InvalidTower);
}

TEST(Tower, ReducibleMinimalPolynomialReportsFactor) {
  const auto k = TowerDescriptor::make({{"s", K::algebraic, {"-1", "0", "1"}}});
  try {
    parse_element("1/(s-1)", k);
    FAIL() << "expected ZeroDivisorError";
  } catch (const ZeroDivisorError& e) {
    EXPECT_EQ(e.generator(), "s");
    EXPECT_EQ(e.factor(), "s - 1");
  }
  // Elements coprime to the factors still invert.
  EXPECT_EQ(parse_element("1/(s+2)", k) * parse_element("s+2", k), FieldElement::one(k));

  const auto kt = TowerDescriptor::make({{"t", K::transcendental, {}}, {"s", K::algebraic, {"-t^2", "0", "1"}}});
  EXPECT_THROW(parse_element("1/(s+t)", kt), ZeroDivisorError);
}

TEST(Tower, MismatchIsAnError) {
  const auto a = parse_element("t", QT());
  const auto b = parse_element("u", TowerDescriptor::transcendental({"u"}));
  EXPECT_THROW(a + b, TowerMismatch);
  EXPECT_FALSE(a == b);
  // Equal descriptions built separately are the same field.
  EXPECT_EQ(parse_element("t", QT()) + parse_element("1", QT()), parse_element("t+1", QT()));
}

TEST(Format, ReadableCanonicalText) {
  const auto k = QT();
  EXPECT_EQ(parse_element("2/(2*t+2)", k).encoding(), "1/(t + 1)");
  EXPECT_EQ(parse_element("-t/(t+1)", k).encoding(), "(-t)/(t + 1)");
  EXPECT_EQ(parse_element("(3*t^2 - t)/2", k).encoding(), "(3*t^2 - t)/2");
  EXPECT_EQ(parse_element("t/(2*t - 4)", k).encoding(), "t/(2*t - 4)");
  const auto ts = TowerDescriptor::make({{"t", K::transcendental, {}}, {"s", K::algebraic, {"-t", "0", "1"}}});
  EXPECT_EQ(parse_element("s^3", ts).encoding(), "t*s");
  EXPECT_EQ(parse_element("(t+1)*s + 1/t", ts).encoding(), "(t + 1)*s + (1/t)");
}

// ---------------------------------------------------------------------------
// Property tests over each tower shape

class FieldProperties : public ::testing::TestWithParam<testing::TowerShape> {};

constexpr int kIterations = 300;

TEST_P(FieldProperties, Axioms) {
  const auto& k = GetParam().tower;
  std::mt19937_64 rng(0xA11CE);
  for (int i = 0; i < kIterations; ++i) {
    const auto a = random_element(k, rng), b = random_element(k, rng), c = random_element(k, rng);
    ASSERT_TRUE(((a + b) + c - (a + (b + c))).is_zero());
    ASSERT_TRUE(((a * b) * c - a * (b * c)).is_zero());
    ASSERT_TRUE((a + b - (b + a)).is_zero());
    ASSERT_TRUE((a * b - b * a).is_zero());
    ASSERT_TRUE((a * (b + c) - (a * b + a * c)).is_zero());
    ASSERT_TRUE((a + (-a)).is_zero());
    if (!a.is_zero()) {
      ASSERT_TRUE((a * a.inverse() - FieldElement::one(k)).is_zero()) << a;
    }
  }
}

TEST_P(FieldProperties, CanonicalFormIsUnique) {
  const auto& k = GetParam().tower;
  std::mt19937_64 rng(0xB0B);
  for (int i = 0; i < kIterations; ++i) {
    const auto a = random_element(k, rng);
    const auto c = random_nonzero(k, rng);
    // Half of the pairs are equal by construction, through a different route.
    const auto b = (i % 2 == 0) ? (a * c + c) / c - FieldElement::one(k) : random_element(k, rng);
    ASSERT_EQ((a - b).is_zero(), a.encoding() == b.encoding()) << a << " vs " << b;
    ASSERT_EQ((a - b).is_zero(), a == b);
    if (a == b) {
      ASSERT_EQ(a.hash(), b.hash());
    }
  }
}

TEST_P(FieldProperties, ParseFormatRoundTrip) {
  const auto& k = GetParam().tower;
  std::mt19937_64 rng(0xF00D);
  for (int i = 0; i < kIterations; ++i) {
    const auto a = random_element(k, rng);
    const auto back = parse_element(a.encoding(), k);
    ASSERT_EQ(back, a) << a.encoding();
    ASSERT_EQ(back.encoding(), a.encoding());
  }
}

TEST_P(FieldProperties, ProductOverFactorReduces) {
  const auto& k = GetParam().tower;
  std::mt19937_64 rng(0x5EED);
  for (int i = 0; i < kIterations / 3; ++i) {
    const auto p = random_polynomial(k, rng);
    const auto q = random_polynomial(k, rng);
    if (q.is_zero()) continue;
    const std::string ps = p.encoding(), qs = q.encoding();
    ASSERT_EQ(parse_element("(" + ps + ")*(" + qs + ")/(" + qs + ")", k), parse_element(ps, k));
  }
}

INSTANTIATE_TEST_SUITE_P(Shapes, FieldProperties, ::testing::ValuesIn(testing::standard_shapes()),
                         [](const auto& info) { return info.param.name; });

}  // namespace
}  // namespace incidence
