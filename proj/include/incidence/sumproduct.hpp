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
#include <unordered_set>
#include <utility>
#include <vector>

#include "incidence/field_element.hpp"

namespace incidence {

/// Finite subset of a tower, deduplicated by canonical equality and kept
/// in insertion order. No ordering of elements is assumed.
class ElementSet {
 public:
  explicit ElementSet(TowerPtr tower = TowerDescriptor::rationals()) : tower_(std::move(tower)) {}
  ElementSet(TowerPtr tower, const std::vector<FieldElement>& elems) : tower_(std::move(tower)) {
    for (const auto& e : elems) insert(e);
  }

  bool insert(const FieldElement& e) {
    require_same_tower(e.tower(), tower_);
    if (!index_.insert(e).second) return false;
    elems_.push_back(e);
    return true;
  }

  bool contains(const FieldElement& e) const { return index_.count(e) > 0; }
  std::size_t size() const noexcept { return elems_.size(); }
  bool empty() const noexcept { return elems_.empty(); }
  const std::vector<FieldElement>& elements() const noexcept { return elems_; }
  const TowerPtr& tower() const noexcept { return tower_; }

  /// Same tower and same members, ignoring order.
  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    if (!same_tower(a.tower_, b.tower_) || a.size() != b.size()) return false;
    return std::all_of(a.elems_.begin(), a.elems_.end(), [&](const auto& e) { return b.contains(e); });
  }

 private:
  TowerPtr tower_;
  std::vector<FieldElement> elems_;
  std::unordered_set<FieldElement> index_;
};

namespace detail {
template <class Op>
ElementSet pairwise(const ElementSet& a, Op op) {
  ElementSet out(a.tower());
  const auto& e = a.elements();
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i; j < e.size(); ++j) out.insert(op(e[i], e[j]));
  return out;
}
}  // namespace detail

/// A + A. Both operations are commutative, so unordered pairs suffice.
inline ElementSet sumset(const ElementSet& a) {
  return detail::pairwise(a, [](const FieldElement& x, const FieldElement& y) { return x + y; });
}

/// A * A.
inline ElementSet productset(const ElementSet& a) {
  return detail::pairwise(a, [](const FieldElement& x, const FieldElement& y) { return x * y; });
}

struct SumProductReport {
  std::uint64_t size_a = 0;
  std::uint64_t size_sum = 0;
  std::uint64_t size_prod = 0;
  double exponent_ratio = 0.0;  // max(|A+A|, |A.A|) / |A|^{14/11}, constant taken as 1
};

inline constexpr double kSumProductExponent = 14.0 / 11.0;

/// Throws InvalidArgument when |A| < 2.
inline SumProductReport es_report(const ElementSet& a) {
  if (a.size() < 2) throw InvalidArgument("es_report: |A| must be at least 2");
  SumProductReport r;
  r.size_a = a.size();
  r.size_sum = sumset(a).size();
  r.size_prod = productset(a).size();
  r.exponent_ratio = static_cast<double>(std::max(r.size_sum, r.size_prod)) /
                     std::pow(static_cast<double>(r.size_a), kSumProductExponent);
  return r;
}

}  // namespace incidence
