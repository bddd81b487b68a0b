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

// A configuration over Q(t) with both incidences and non-incidences,
// specialized at random rational values of t.

#include <iostream>

#include "incidence/specialize.hpp"

int main() {
  using namespace incidence;
  const TowerPtr k = TowerDescriptor::transcendental({"t"});
  auto e = [&](const char* s) { return parse_element(s, k); };

  Configuration cfg(k);
  cfg.add_point({e("t"), e("t^2")});
  cfg.add_point({e("2*t"), e("4*t^2")});
  cfg.add_point({e("0"), e("0")});
  cfg.add_line(canonical_line(e("t"), e("-1"), e("0")));
  cfg.add_line(canonical_line(e("2*t"), e("-1"), e("0")));

  const auto spec = generic_specialize(cfg, /*seed=*/7);
  std::cout << "assignment: t = " << spec.assignment.at("t") << "\n";
  for (const auto& p : spec.config.points()) std::cout << "  point " << p << "\n";
  for (const auto& l : spec.config.lines()) std::cout << "  line  " << l << "\n";

  const auto report = invariance_check(cfg, 100, 0);
  std::cout << report.passes << "/" << report.trials << " specializations preserve the incidence matrix\n";
  return report.ok() ? 0 : 1;
}
