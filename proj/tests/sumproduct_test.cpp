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

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "gtest/gtest.h"
#include "incidence/extremal.hpp"
#include "incidence/random.hpp"
#include "incidence/sumproduct.hpp"

namespace incidence {
namespace {

const TowerPtr& Q() { return TowerDescriptor::rationals(); }

ElementSet ints(const std::vector<long>& v) {
  ElementSet s;
  for (long x : v) s.insert(FieldElement::from_int(Q(), x));
  return s;
}

// Brute-force sizes on machine integers.
std::pair<std::size_t, std::size_t> brute_sizes(const std::vector<long>& a) {
  std::set<long> sums, prods;
  for (long x : a)
    for (long y : a) sums.insert(x + y), prods.insert(x * y);
  return {sums.size(), prods.size()};
}

std::vector<long> range(long lo, long hi) {
  std::vector<long> v;
  for (long x = lo; x <= hi; ++x) v.push_back(x);
  return v;
}

TEST(Sumset, Examples) {
  EXPECT_EQ(sumset(ints({1, 2, 3})), ints({2, 3, 4, 5, 6}));
  EXPECT_EQ(sumset(ints({0})), ints({0}));
  const auto k = TowerDescriptor::transcendental({"t"});
  const auto t = FieldElement::generator(k, "t");
  const auto s = sumset(ElementSet(k, {t, -t}));
  EXPECT_EQ(s.size(), 3u);
  EXPECT_TRUE(s.contains(t + t));
  EXPECT_TRUE(s.contains(FieldElement::zero(k)));
  EXPECT_TRUE(s.contains(-(t + t)));
}

TEST(Productset, Examples) {
  EXPECT_EQ(productset(ints({1, 2, 3})), ints({1, 2, 3, 4, 6, 9}));
  EXPECT_EQ(brute_sizes(range(1, 10)).second, 42u);
  EXPECT_EQ(productset(ints(range(1, 10))).size(), 42u);
  EXPECT_EQ(productset(ints({0, 1})), ints({0, 1}));
}

TEST(EsReport, Examples) {
  const auto r = es_report(ints(range(1, 10)));
  EXPECT_EQ(r.size_sum, 19u);
  EXPECT_EQ(r.size_prod, 42u);
  EXPECT_NEAR(r.exponent_ratio, 42.0 / std::pow(10.0, 14.0 / 11.0), 1e-9 * r.exponent_ratio);
  EXPECT_NEAR(r.exponent_ratio, 2.2415, 1e-4);

  const auto two = es_report(ints({1, 2}));
  EXPECT_EQ(two.size_sum, 3u);
  EXPECT_EQ(two.size_prod, 3u);
  EXPECT_NEAR(two.exponent_ratio, 3.0 / std::pow(2.0, 14.0 / 11.0), 1e-12);
  EXPECT_NEAR(two.exponent_ratio, 1.24163, 1e-5);

  std::vector<long> gp;
  for (long i = 0; i < 10; ++i) gp.push_back(1L << i);
  const auto [bs, bp] = brute_sizes(gp);
  const auto g = es_report(generate_set(FamilyId::geometric_progression, 10));
  EXPECT_EQ(g.size_prod, bp);
  EXPECT_EQ(g.size_sum, bs);
  EXPECT_EQ(g.size_prod, 19u);
  EXPECT_EQ(g.size_sum, 55u);

  EXPECT_THROW(es_report(ints({5})), InvalidArgument);
}

TEST(SumProduct, BruteForceAgreement) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> d(-30, 30);
  for (int i = 0; i < 30; ++i) {
    std::vector<long> v;
    for (int j = 0; j < 12; ++j) v.push_back(d(rng));
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    const auto [bs, bp] = brute_sizes(v);
    const auto a = ints(v);
    ASSERT_EQ(sumset(a).size(), bs);
    ASSERT_EQ(productset(a).size(), bp);
    ASSERT_GE(sumset(a).size(), 2 * a.size() - 1);  // ordered field
  }
}

TEST(SumProduct, PropertiesOverTowers) {
  const auto k = TowerDescriptor::make({{"t", GeneratorKind::transcendental, {}},
                                        {"s", GeneratorKind::algebraic, {"-t", "0", "1"}}});
  std::mt19937_64 rng(32);
  RandomElementOptions opt;
  opt.max_degree = 1;
  opt.coeff_bound = 2;
  opt.fractions = false;
  for (int i = 0; i < 10; ++i) {
    std::vector<FieldElement> v;
    for (int j = 0; j < 8; ++j) v.push_back(random_element(k, rng, opt));
    const ElementSet a(k, v);
    const auto n = a.size();
    const auto s = sumset(a), p = productset(a);
    ASSERT_LE(s.size(), n * (n - 1) / 2 + n);
    ASSERT_LE(p.size(), n * n);

    std::shuffle(v.begin(), v.end(), rng);
    const ElementSet b(k, v);
    ASSERT_EQ(sumset(b), s);
    ASSERT_EQ(productset(b), p);

    const auto lambda = random_nonzero(k, rng, opt);
    ElementSet scaled(k);
    for (const auto& e : a.elements()) scaled.insert(lambda * e);
    ASSERT_EQ(sumset(scaled).size(), s.size());
    ASSERT_EQ(productset(scaled).size(), p.size());
  }
}

TEST(ElementSet, DeduplicatesByCanonicalEquality) {
  const auto k = TowerDescriptor::transcendental({"t"});
  ElementSet s(k);
  EXPECT_TRUE(s.insert(parse_element("(t^2-1)/(t-1)", k)));
  EXPECT_FALSE(s.insert(parse_element("t+1", k)));
  EXPECT_EQ(s.size(), 1u);
}

}  // namespace
}  // namespace incidence
