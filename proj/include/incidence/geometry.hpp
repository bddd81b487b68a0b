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

#include <array>
#include <cstddef>
#include <functional>
#include <ostream>
#include <unordered_set>
#include <utility>
#include <vector>

#include "incidence/field_element.hpp"

namespace incidence {

struct Point {
  FieldElement x;
  FieldElement y;

  friend bool operator==(const Point&, const Point&) = default;
  std::size_t hash() const noexcept { return hash_combine(x.hash(), y.hash()); }
};

/// The line a*x + b*y + c = 0, scaled so that the first nonzero of (a, b)
/// is 1. Every projective class has exactly one such representative.
class Line {
 public:
  /// Throws GeometryError when a = b = 0.
  static Line canonical(const FieldElement& a, const FieldElement& b, const FieldElement& c) {
    require_same_tower(a.tower(), b.tower());
    require_same_tower(a.tower(), c.tower());
    if (!a.is_zero()) {
      if (a.is_one()) return Line(a, b, c);
      const FieldElement s = a.inverse();
      return Line(FieldElement::one(a.tower()), b * s, c * s);
    }
    if (b.is_zero()) throw GeometryError("degenerate line: a = b = 0");
    if (b.is_one()) return Line(a, b, c);
    const FieldElement s = b.inverse();
    return Line(a, FieldElement::one(a.tower()), c * s);
  }

  const FieldElement& a() const noexcept { return a_; }
  const FieldElement& b() const noexcept { return b_; }
  const FieldElement& c() const noexcept { return c_; }
  const TowerPtr& tower() const noexcept { return a_.tower(); }

  friend bool operator==(const Line&, const Line&) = default;
  std::size_t hash() const noexcept { return hash_combine(hash_combine(a_.hash(), b_.hash()), c_.hash()); }

 private:
  Line(FieldElement a, FieldElement b, FieldElement c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {}

  FieldElement a_;
  FieldElement b_;
  FieldElement c_;
};

inline Line canonical_line(const FieldElement& a, const FieldElement& b, const FieldElement& c) {
  return Line::canonical(a, b, c);
}

inline std::ostream& operator<<(std::ostream& os, const Point& p) { return os << "(" << p.x << ", " << p.y << ")"; }
inline std::ostream& operator<<(std::ostream& os, const Line& l) {
  return os << "[" << l.a() << ", " << l.b() << ", " << l.c() << "]";
}

}  // namespace incidence

template <>
struct std::hash<incidence::Point> {
  std::size_t operator()(const incidence::Point& p) const noexcept { return p.hash(); }
};
template <>
struct std::hash<incidence::Line> {
  std::size_t operator()(const incidence::Line& l) const noexcept { return l.hash(); }
};

namespace incidence {

/// a*x + b*y + c == 0, decided exactly.
inline bool incident(const Point& p, const Line& l) {
  require_same_tower(p.x.tower(), l.tower());
  require_same_tower(p.y.tower(), l.tower());
  if (l.b().is_zero()) return (p.x + l.c()).is_zero();  // canonical vertical line has a = 1
  FieldElement s = l.b() * p.y + l.c();
  if (!l.a().is_zero()) s += p.x;  // a is 1 whenever it is nonzero
  return s.is_zero();
}

inline Line line_through(const Point& p, const Point& q) {
  if (p == q) throw GeometryError("line_through: equal points");
  const FieldElement dx = q.x - p.x;
  const FieldElement dy = q.y - p.y;
  return canonical_line(dy, -dx, dx * p.y - dy * p.x);
}

/// Finite sets of points and lines over one tower, kept in insertion order.
/// Repeated inserts are dropped and counted.
class Configuration {
 public:
  explicit Configuration(TowerPtr tower = TowerDescriptor::rationals()) : tower_(std::move(tower)) {}

  const TowerPtr& tower() const noexcept { return tower_; }
  const std::vector<Point>& points() const noexcept { return points_; }
  const std::vector<Line>& lines() const noexcept { return lines_; }

  /// Returns false (and bumps the duplicate counter) if already present.
  bool add_point(Point p) {
    require_same_tower(p.x.tower(), tower_);
    require_same_tower(p.y.tower(), tower_);
    if (!point_index_.insert(p).second) {
      ++duplicate_points_;
      return false;
    }
    points_.push_back(std::move(p));
    return true;
  }

  bool add_line(Line l) {
    require_same_tower(l.tower(), tower_);
    if (!line_index_.insert(l).second) {
      ++duplicate_lines_;
      return false;
    }
    lines_.push_back(std::move(l));
    return true;
  }

  std::size_t duplicate_points() const noexcept { return duplicate_points_; }
  std::size_t duplicate_lines() const noexcept { return duplicate_lines_; }

  friend bool operator==(const Configuration& a, const Configuration& b) {
    return same_tower(a.tower_, b.tower_) && a.points_ == b.points_ && a.lines_ == b.lines_;
  }

 private:
  TowerPtr tower_;
  std::vector<Point> points_;
  std::vector<Line> lines_;
  std::unordered_set<Point> point_index_;
  std::unordered_set<Line> line_index_;
  std::size_t duplicate_points_ = 0;
  std::size_t duplicate_lines_ = 0;
};

using Matrix2 = std::array<std::array<FieldElement, 2>, 2>;
using Vector2 = std::array<FieldElement, 2>;

/// Applies p -> M p + v to every point and the matching contragredient map
/// (a, b) -> (a, b) M^{-1}, c -> c - (a, b) M^{-1} v to every line, so
/// incidence is preserved pair by pair. Throws GeometryError if M is singular.
inline Configuration affine_transform(const Configuration& cfg, const Matrix2& m, const Vector2& v) {
  const FieldElement det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  if (det.is_zero()) throw GeometryError("affine_transform: singular matrix");
  const FieldElement inv_det = det.inverse();
  const Matrix2 mi{{{m[1][1] * inv_det, -m[0][1] * inv_det}, {-m[1][0] * inv_det, m[0][0] * inv_det}}};

  Configuration out(cfg.tower());
  for (const auto& p : cfg.points())
    out.add_point({m[0][0] * p.x + m[0][1] * p.y + v[0], m[1][0] * p.x + m[1][1] * p.y + v[1]});
  for (const auto& l : cfg.lines()) {
    const FieldElement a = l.a() * mi[0][0] + l.b() * mi[1][0];
    const FieldElement b = l.a() * mi[0][1] + l.b() * mi[1][1];
    out.add_line(canonical_line(a, b, l.c() - a * v[0] - b * v[1]));
  }
  return out;
}

}  // namespace incidence
