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
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "incidence/fingerprint.hpp"
#include "incidence/geometry.hpp"

namespace incidence {

/// Exact incidence count together with the Szemeredi-Trotter ratios.
struct IncidenceReport {
  std::uint64_t m = 0;
  std::uint64_t n = 0;
  std::uint64_t incidences = 0;
  double st_bound = 0.0;                  // m^{2/3} n^{2/3} + m + n
  double st_ratio = 0.0;                  // incidences / st_bound
  std::optional<double> main_term_ratio;  // incidences / (m^{2/3} n^{2/3}); absent if m or n is 0

  friend bool operator==(const IncidenceReport&, const IncidenceReport&) = default;
};

/// (mn)^{2/3}, computed as cbrt(mn)^2.
inline double main_term(std::uint64_t m, std::uint64_t n) {
  const double c = std::cbrt(static_cast<double>(m) * static_cast<double>(n));
  return c * c;
}

inline IncidenceReport make_incidence_report(std::uint64_t m, std::uint64_t n, std::uint64_t incidences) {
  IncidenceReport r;
  r.m = m;
  r.n = n;
  r.incidences = incidences;
  const double main = main_term(m, n);
  r.st_bound = main + static_cast<double>(m) + static_cast<double>(n);
  r.st_ratio = r.st_bound > 0 ? static_cast<double>(incidences) / r.st_bound : 0.0;
  if (m > 0 && n > 0) r.main_term_ratio = static_cast<double>(incidences) / main;
  return r;
}

/// Thread count from $INCIDENCE_THREADS, else the hardware concurrency.
inline std::size_t default_thread_count() {
  if (const char* env = std::getenv("INCIDENCE_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// The definition, literally: every (point, line) pair through incident().
inline std::uint64_t count_incidences_naive(const Configuration& cfg) {
  std::uint64_t count = 0;
  for (const auto& p : cfg.points())
    for (const auto& l : cfg.lines())
      if (incident(p, l)) ++count;
  return count;
}

/// Exact incidence tests against precomputed fingerprints. A nonzero
/// fingerprint of a*x + b*y + c settles a pair immediately; everything else
/// goes through incident().
class IncidenceMatcher {
 public:
  explicit IncidenceMatcher(const TowerPtr& tower) : fp_(Fingerprint::for_tower(tower)) {}

  struct PointImage {
    bool valid = false;
    std::uint64_t x = 0, y = 0;
  };
  struct LineImage {
    bool valid = false;
    std::uint64_t a = 0, b = 0, c = 0;
  };

  PointImage image(const Point& p) const {
    if (!fp_) return {};
    const auto x = (*fp_)(p.x), y = (*fp_)(p.y);
    if (!x || !y) return {};
    return {true, *x, *y};
  }
  LineImage image(const Line& l) const {
    if (!fp_) return {};
    const auto a = (*fp_)(l.a()), b = (*fp_)(l.b()), c = (*fp_)(l.c());
    if (!a || !b || !c) return {};
    return {true, *a, *b, *c};
  }

  static bool maybe_incident(const PointImage& p, const LineImage& l) {
    if (!p.valid || !l.valid) return true;
    using F = Fingerprint;
    return F::add(F::add(F::mul(l.a, p.x), F::mul(l.b, p.y)), l.c) == 0;
  }

  static bool test(const Point& p, const PointImage& pi, const Line& l, const LineImage& li) {
    return maybe_incident(pi, li) && incident(p, l);
  }

 private:
  std::optional<Fingerprint> fp_;
};

namespace detail {

template <class Fn>
void parallel_blocks(std::size_t count, std::size_t threads, Fn&& fn) {
  threads = std::max<std::size_t>(1, std::min(threads, count));
  if (threads <= 1) {
    fn(0, std::size_t{0}, count);
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (count + threads - 1) / threads;
  for (std::size_t t = 0; t < threads; ++t) {
    const std::size_t lo = std::min(count, t * chunk), hi = std::min(count, lo + chunk);
    pool.emplace_back([&fn, t, lo, hi] { fn(t, lo, hi); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace detail

/// Exact count with the fingerprint filter; the line list is split into
/// contiguous blocks, one per thread.
inline IncidenceReport count_incidences(const Configuration& cfg, std::size_t threads = default_thread_count()) {
  const IncidenceMatcher matcher(cfg.tower());
  const auto& pts = cfg.points();
  const auto& lines = cfg.lines();
  std::vector<IncidenceMatcher::PointImage> pimg;
  pimg.reserve(pts.size());
  for (const auto& p : pts) pimg.push_back(matcher.image(p));

  std::vector<std::uint64_t> partial(std::max<std::size_t>(1, threads), 0);
  detail::parallel_blocks(lines.size(), threads, [&](std::size_t t, std::size_t lo, std::size_t hi) {
    std::uint64_t local = 0;
    for (std::size_t j = lo; j < hi; ++j) {
      const auto li = matcher.image(lines[j]);
      for (std::size_t i = 0; i < pts.size(); ++i)
        if (IncidenceMatcher::test(pts[i], pimg[i], lines[j], li)) ++local;
    }
    partial[t] = local;
  });
  std::uint64_t total = 0;
  for (auto v : partial) total += v;
  return make_incidence_report(pts.size(), lines.size(), total);
}

/// Full m x n matrix, row per point.
inline std::vector<std::vector<bool>> incidence_matrix(const Configuration& cfg) {
  const IncidenceMatcher matcher(cfg.tower());
  std::vector<IncidenceMatcher::LineImage> limg;
  for (const auto& l : cfg.lines()) limg.push_back(matcher.image(l));
  std::vector<std::vector<bool>> out;
  out.reserve(cfg.points().size());
  for (const auto& p : cfg.points()) {
    const auto pi = matcher.image(p);
    std::vector<bool> row(cfg.lines().size());
    for (std::size_t j = 0; j < row.size(); ++j) row[j] = IncidenceMatcher::test(p, pi, cfg.lines()[j], limg[j]);
    out.push_back(std::move(row));
  }
  return out;
}

struct RichLineRecord {
  Line line;
  std::uint64_t richness = 0;  // >= 2

  friend bool operator==(const RichLineRecord&, const RichLineRecord&) = default;
};

/// Number of points of `pts` on each of `lines`.
inline std::vector<std::uint64_t> richness_of(std::span<const Point> pts, std::span<const Line> lines) {
  if (pts.empty() || lines.empty()) return std::vector<std::uint64_t>(lines.size(), 0);
  const IncidenceMatcher matcher(pts.front().x.tower());
  std::vector<IncidenceMatcher::PointImage> pimg;
  pimg.reserve(pts.size());
  for (const auto& p : pts) pimg.push_back(matcher.image(p));
  std::vector<std::uint64_t> out(lines.size(), 0);
  for (std::size_t j = 0; j < lines.size(); ++j) {
    const auto li = matcher.image(lines[j]);
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (IncidenceMatcher::test(pts[i], pimg[i], lines[j], li)) ++out[j];
  }
  return out;
}

/// Every line through at least two of `points` (assumed distinct), in
/// order of first appearance among pairs (i < j). Richness is recounted by
/// membership; pair multiplicities must agree with C(richness, 2) or a
/// std::logic_error is thrown.
inline std::vector<RichLineRecord> connecting_lines(std::span<const Point> points) {
  std::vector<Line> lines;
  std::vector<std::uint64_t> pair_counts;
  std::unordered_map<Line, std::size_t> index;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      Line l = line_through(points[i], points[j]);
      auto [it, inserted] = index.try_emplace(l, lines.size());
      if (inserted) {
        lines.push_back(std::move(l));
        pair_counts.push_back(0);
      }
      ++pair_counts[it->second];
    }
  }
  const auto rich = richness_of(points, lines);
  std::vector<RichLineRecord> out;
  out.reserve(lines.size());
  for (std::size_t k = 0; k < lines.size(); ++k) {
    if (rich[k] < 2 || rich[k] * (rich[k] - 1) / 2 != pair_counts[k])
      throw std::logic_error("connecting_lines: pair multiplicity disagrees with richness");
    out.push_back({std::move(lines[k]), rich[k]});
  }
  return out;
}

struct RichLinesResult {
  std::vector<RichLineRecord> records;
  double ratio = 0.0;  // |records| / (m^2/n^3 + m/n)
};

/// Lines of cfg carrying at least `n` of its points. Throws InvalidArgument
/// for n < 2.
inline RichLinesResult rich_lines(const Configuration& cfg, std::uint64_t n) {
  if (n < 2) throw InvalidArgument("rich_lines: n must be at least 2");
  const auto rich = richness_of(cfg.points(), cfg.lines());
  RichLinesResult out;
  for (std::size_t j = 0; j < rich.size(); ++j)
    if (rich[j] >= n) out.records.push_back({cfg.lines()[j], rich[j]});
  const double m = static_cast<double>(cfg.points().size());
  const double nd = static_cast<double>(n);
  const double bound = m * m / (nd * nd * nd) + m / nd;
  out.ratio = bound > 0 ? static_cast<double>(out.records.size()) / bound : 0.0;
  return out;
}

struct BeckReport {
  std::uint64_t m = 0;
  std::uint64_t max_richness = 0;  // 0 when there are no connecting lines
  std::uint64_t num_connecting_lines = 0;

  friend bool operator==(const BeckReport&, const BeckReport&) = default;
};

inline BeckReport beck_report(std::span<const Point> points) {
  const auto lines = connecting_lines(points);
  BeckReport r;
  r.m = points.size();
  r.num_connecting_lines = lines.size();
  for (const auto& rec : lines) r.max_richness = std::max(r.max_richness, rec.richness);
  return r;
}

}  // namespace incidence
