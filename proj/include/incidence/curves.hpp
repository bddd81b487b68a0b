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

#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "incidence/geometry.hpp"

namespace incidence {

class GuardExceeded : public Error {
 public:
  using Error::Error;
};

struct CurveTerm {
  unsigned x_exp = 0;
  unsigned y_exp = 0;
  FieldElement coeff;

  unsigned degree() const noexcept { return x_exp + y_exp; }
  friend bool operator==(const CurveTerm&, const CurveTerm&) = default;
};

/// Sum of c_ij x^i y^j over a tower. Terms are kept in graded order
/// (higher total degree first, then higher power of x) with the leading
/// coefficient scaled to 1; for degree one this is the line convention.
class Curve {
 public:
  /// Combines like terms, drops zeros and normalizes. Throws GeometryError
  /// for the zero polynomial.
  static Curve make(const TowerPtr& tower, std::vector<CurveTerm> terms) {
    for (const auto& t : terms) require_same_tower(t.coeff.tower(), tower);
    std::sort(terms.begin(), terms.end(), [](const CurveTerm& a, const CurveTerm& b) {
      return std::tuple(a.degree(), a.x_exp) > std::tuple(b.degree(), b.x_exp);
    });
    std::vector<CurveTerm> merged;
    for (auto& t : terms) {
      if (!merged.empty() && merged.back().x_exp == t.x_exp && merged.back().y_exp == t.y_exp)
        merged.back().coeff += t.coeff;
      else
        merged.push_back(std::move(t));
    }
    std::erase_if(merged, [](const CurveTerm& t) { return t.coeff.is_zero(); });
    if (merged.empty()) throw GeometryError("curve: zero polynomial");
    if (!merged.front().coeff.is_one()) {
      const FieldElement s = merged.front().coeff.inverse();
      for (auto& t : merged) t.coeff *= s;
    }
    return Curve(tower, std::move(merged));
  }

  static Curve from_line(const Line& l) {
    return make(l.tower(), {{1, 0, l.a()}, {0, 1, l.b()}, {0, 0, l.c()}});
  }

  const TowerPtr& tower() const noexcept { return tower_; }
  const std::vector<CurveTerm>& terms() const noexcept { return terms_; }
  unsigned degree() const noexcept { return terms_.front().degree(); }

  /// Value of the polynomial at (x, y).
  FieldElement evaluate(const FieldElement& x, const FieldElement& y) const {
    FieldElement acc = FieldElement::zero(tower_);
    for (const auto& t : terms_) {
      FieldElement m = t.coeff;
      if (t.x_exp) m *= x.pow(t.x_exp);
      if (t.y_exp) m *= y.pow(t.y_exp);
      acc += m;
    }
    return acc;
  }

  friend bool operator==(const Curve& a, const Curve& b) {
    return same_tower(a.tower_, b.tower_) && a.terms_ == b.terms_;
  }

 private:
  Curve(TowerPtr tower, std::vector<CurveTerm> terms) : tower_(std::move(tower)), terms_(std::move(terms)) {}

  TowerPtr tower_;
  std::vector<CurveTerm> terms_;
};

/// Parses a monomial key such as "x^2*y", "y^3", "x^1*y^0" or "1".
inline std::pair<unsigned, unsigned> parse_monomial(std::string_view key) {
  unsigned xe = 0, ye = 0;
  auto fail = [&]() -> std::pair<unsigned, unsigned> {
    throw SyntaxError("invalid monomial '" + std::string(key) + "'");
  };
  std::string compact;
  for (char ch : key)
    if (ch != ' ') compact += ch;
  if (compact.empty()) return fail();
  if (compact == "1") return {0, 0};
  std::size_t pos = 0;
  while (pos < compact.size()) {
    const char var = compact[pos++];
    if (var != 'x' && var != 'y') return fail();
    unsigned e = 1;
    if (pos < compact.size() && compact[pos] == '^') {
      ++pos;
      const std::size_t start = pos;
      while (pos < compact.size() && std::isdigit(static_cast<unsigned char>(compact[pos]))) ++pos;
      if (pos == start || pos - start > 4) return fail();
      e = static_cast<unsigned>(std::stoul(compact.substr(start, pos - start)));
    }
    (var == 'x' ? xe : ye) += e;
    if (pos < compact.size()) {
      if (compact[pos] != '*') return fail();
      ++pos;
      if (pos == compact.size()) return fail();
    }
  }
  return {xe, ye};
}

inline std::string monomial_key(unsigned x_exp, unsigned y_exp) {
  return "x^" + std::to_string(x_exp) + "*y^" + std::to_string(y_exp);
}

inline bool on_curve(const Point& p, const Curve& c) {
  require_same_tower(p.x.tower(), c.tower());
  return c.evaluate(p.x, p.y).is_zero();
}

inline std::uint64_t count_curve_incidences(std::span<const Point> points, std::span<const Curve> curves) {
  std::uint64_t n = 0;
  for (const auto& c : curves)
    for (const auto& p : points)
      if (on_curve(p, c)) ++n;
  return n;
}

/// incidences / (m^{k/(2k-1)+eps} n^{(2k-2)/(2k-1)} + m + n), reported only.
inline double curve_bound_ratio(std::uint64_t incidences, std::uint64_t m, std::uint64_t n, unsigned k, double eps) {
  const double denom_exp = 2.0 * k - 1.0;
  const double bound = std::pow(static_cast<double>(m), k / denom_exp + eps) *
                           std::pow(static_cast<double>(n), (2.0 * k - 2.0) / denom_exp) +
                       static_cast<double>(m) + static_cast<double>(n);
  return bound > 0 ? static_cast<double>(incidences) / bound : 0.0;
}

struct DofViolation {
  enum class Kind {
    subset,  // k points lying on more than s curves
    pair,    // two curves sharing more than s points
  };
  Kind kind;
  std::vector<std::size_t> points;  // indices into P
  std::vector<std::size_t> curves;  // indices into C

  friend bool operator==(const DofViolation&, const DofViolation&) = default;
};

inline constexpr double kDofGuard = 1e7;

/// C(n, k) as a double, saturating rather than overflowing.
inline double binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return std::round(r);
}

/// Exhaustive check that (P, C) has k degrees of freedom and multiplicity
/// type s: every k-subset of P lies on at most s curves, and every pair of
/// distinct curves shares at most s points of P. Returns all witnesses.
/// Throws GuardExceeded when C(|P|, k) * |C| > 10^7.
inline std::vector<DofViolation> dof_check(std::span<const Point> points, std::span<const Curve> curves,
                                           unsigned k, unsigned s) {
  if (k < 1 || s < 1) throw InvalidArgument("dof_check: k and s must be at least 1");
  const double work = binomial(points.size(), k) * static_cast<double>(curves.size());
  if (work > kDofGuard)
    throw GuardExceeded("dof_check: C(|P|, k) * |C| = " + std::to_string(work) + " exceeds 1e7");

  // on[c][p]
  std::vector<std::vector<char>> on(curves.size(), std::vector<char>(points.size(), 0));
  for (std::size_t c = 0; c < curves.size(); ++c)
    for (std::size_t p = 0; p < points.size(); ++p) on[c][p] = on_curve(points[p], curves[c]) ? 1 : 0;

  std::vector<DofViolation> out;
  if (k <= points.size()) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
      std::vector<std::size_t> containing;
      for (std::size_t c = 0; c < curves.size(); ++c)
        if (std::all_of(idx.begin(), idx.end(), [&](std::size_t p) { return on[c][p] != 0; })) containing.push_back(c);
      if (containing.size() > s) out.push_back({DofViolation::Kind::subset, idx, std::move(containing)});
      // next combination
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == points.size() - k + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  for (std::size_t a = 0; a < curves.size(); ++a) {
    for (std::size_t b = a + 1; b < curves.size(); ++b) {
      std::vector<std::size_t> shared;
      for (std::size_t p = 0; p < points.size(); ++p)
        if (on[a][p] && on[b][p]) shared.push_back(p);
      if (shared.size() > s) out.push_back({DofViolation::Kind::pair, std::move(shared), {a, b}});
    }
  }
  return out;
}

}  // namespace incidence
