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

// Modular fingerprints of tower elements: a ring homomorphism into Z/p,
// p = 2^61 - 1, that sends each transcendental generator to a fixed
// pseudorandom residue. If the image of a*x + b*y + c is nonzero the
// exact value is nonzero as well; a zero image proves nothing.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "incidence/field_element.hpp"

namespace incidence {

class Fingerprint {
 public:
  static constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

  static std::uint64_t mul(std::uint64_t a, std::uint64_t b) noexcept {
    const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    std::uint64_t r = static_cast<std::uint64_t>(p & kPrime) + static_cast<std::uint64_t>(p >> 61);
    if (r >= kPrime) r -= kPrime;
    return r;
  }
  static std::uint64_t add(std::uint64_t a, std::uint64_t b) noexcept {
    std::uint64_t r = a + b;
    if (r >= kPrime) r -= kPrime;
    return r;
  }
  static std::uint64_t pow(std::uint64_t b, std::uint64_t e) noexcept {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }
  static std::uint64_t inverse(std::uint64_t a) noexcept { return pow(a, kPrime - 2); }

  /// Returns nothing for towers with algebraic generators.
  static std::optional<Fingerprint> for_tower(const TowerPtr& tower, std::uint64_t seed = 0x1f2e3d4c5b6a7988ULL) {
    if (!tower->purely_transcendental()) return std::nullopt;
    Fingerprint fp;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> dist(2, kPrime - 1);
    for (std::size_t i = 0; i < tower->size(); ++i) fp.points_.push_back(dist(rng));
    return fp;
  }

  /// Image of `e`, or nothing if a denominator maps to zero.
  std::optional<std::uint64_t> operator()(const FieldElement& e) const {
    return eval(e.tower()->levels(), e.value());
  }

 private:
  Fingerprint() = default;

  static std::optional<std::uint64_t> eval_rational(const Rational& q) {
    const std::uint64_t den = mpz_fdiv_ui(q.get_den_mpz_t(), kPrime);
    if (den == 0) return std::nullopt;
    const std::uint64_t num = mpz_fdiv_ui(q.get_num_mpz_t(), kPrime);
    return mul(num, inverse(den));
  }

  std::optional<std::uint64_t> eval_poly(detail::Levels f, const detail::Poly& p, std::uint64_t at) const {
    std::uint64_t acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
      const auto c = eval(f, *it);
      if (!c) return std::nullopt;
      acc = add(mul(acc, at), *c);
    }
    return acc;
  }

  std::optional<std::uint64_t> eval(detail::Levels lv, const detail::Value& v) const {
    if (lv.empty()) return eval_rational(std::get<Rational>(v.rep));
    const auto& fr = std::get<detail::FractionRep>(v.rep);
    const std::uint64_t at = points_[lv.size() - 1];
    const auto num = eval_poly(detail::below(lv), fr.num, at);
    if (!num) return std::nullopt;
    const auto den = eval_poly(detail::below(lv), fr.den, at);
    if (!den || *den == 0) return std::nullopt;
    return mul(*num, inverse(*den));
  }

  std::vector<std::uint64_t> points_;
};

}  // namespace incidence
