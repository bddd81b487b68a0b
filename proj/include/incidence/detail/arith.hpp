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

// Recursive arithmetic for a tower Q = F_0 ⊂ F_1 ⊂ ... ⊂ F_k.
//
// A value of F_L is stored according to the kind of the L-th generator g:
//   level 0        a reduced Rational
//   transcendental num/den with num, den ∈ F_{L-1}[g], gcd(num, den) = 1
//                  and den monic
//   algebraic      a polynomial in F_{L-1}[g] of degree < deg(minpoly)
// Each representative is unique, so structural equality is field equality.
//
// Every function takes the span of levels [1..L] describing F_L; the
// coefficient field of F_L is the prefix span with the last level dropped.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "incidence/errors.hpp"
#include "incidence/rational.hpp"

namespace incidence {

enum class GeneratorKind { transcendental, algebraic };

namespace detail {

struct Value;
/// Dense polynomial, ascending coefficients, no trailing zeros; {} is 0.
using Poly = std::vector<Value>;

struct AlgebraicRep {
  Poly coeffs;
};

struct FractionRep {
  Poly num;
  Poly den;
};

struct Value {
  std::variant<Rational, AlgebraicRep, FractionRep> rep;
};

inline bool operator==(const Value& a, const Value& b);

inline bool operator==(const AlgebraicRep& a, const AlgebraicRep& b) { return a.coeffs == b.coeffs; }
inline bool operator==(const FractionRep& a, const FractionRep& b) {
  return a.num == b.num && a.den == b.den;
}
inline bool operator==(const Value& a, const Value& b) {
  if (a.rep.index() != b.rep.index()) return false;
  switch (a.rep.index()) {
    case 0: return std::get<0>(a.rep) == std::get<0>(b.rep);
    case 1: return std::get<1>(a.rep) == std::get<1>(b.rep);
    default: return std::get<2>(a.rep) == std::get<2>(b.rep);
  }
}

struct Level {
  std::string name;
  GeneratorKind kind = GeneratorKind::transcendental;
  Poly minpoly;  // over the level below; monic; algebraic only
};

using Levels = std::span<const Level>;

inline Levels below(Levels lv) { return lv.first(lv.size() - 1); }

inline std::size_t hash_value(const Value& v) noexcept;

inline std::size_t hash_poly(const Poly& p) noexcept {
  std::size_t h = p.size();
  for (const auto& c : p) h = hash_combine(h, hash_value(c));
  return h;
}

inline std::size_t hash_value(const Value& v) noexcept {
  switch (v.rep.index()) {
    case 0: return incidence::hash_value(std::get<0>(v.rep));
    case 1: return hash_combine(0x51, hash_poly(std::get<1>(v.rep).coeffs));
    default: {
      const auto& f = std::get<2>(v.rep);
      return hash_combine(hash_combine(0x77, hash_poly(f.num)), hash_poly(f.den));
    }
  }
}

// ---------------------------------------------------------------------------
// Constructors

inline Value zero(Levels lv);
inline Value one(Levels lv);

inline Value from_rational(Levels lv, const Rational& q) {
  if (lv.empty()) return Value{q};
  const Levels f = below(lv);
  if (lv.back().kind == GeneratorKind::algebraic) {
    if (q == 0) return Value{AlgebraicRep{}};
    return Value{AlgebraicRep{{from_rational(f, q)}}};
  }
  if (q == 0) return Value{FractionRep{{}, {one(f)}}};
  return Value{FractionRep{{from_rational(f, Rational(q.get_num()))}, {from_rational(f, Rational(q.get_den()))}}};
}

inline Value zero(Levels lv) { return from_rational(lv, Rational(0)); }
inline Value one(Levels lv) { return from_rational(lv, Rational(1)); }

/// The top generator of `lv` as an element of F_L.
inline Value generator(Levels lv) {
  const Levels f = below(lv);
  Poly x{zero(f), one(f)};
  if (lv.back().kind == GeneratorKind::algebraic) return Value{AlgebraicRep{std::move(x)}};
  return Value{FractionRep{std::move(x), {one(f)}}};
}

/// Embeds an element of F_{L-1} into F_L.
inline Value lift_one(Levels lv, Value v, bool v_is_zero) {
  const Levels f = below(lv);
  if (lv.back().kind == GeneratorKind::algebraic) {
    Poly p;
    if (!v_is_zero) p.push_back(std::move(v));
    return Value{AlgebraicRep{std::move(p)}};
  }
  if (v_is_zero) return Value{FractionRep{{}, {one(f)}}};
  // split v into integral numerator and denominator
  if (f.empty()) {
    const auto& q = std::get<Rational>(v.rep);
    return Value{FractionRep{{Value{Rational(q.get_num())}}, {Value{Rational(q.get_den())}}}};
  }
  if (f.back().kind == GeneratorKind::algebraic) return Value{FractionRep{{std::move(v)}, {one(f)}}};
  auto& fr = std::get<FractionRep>(v.rep);
  const Levels g = below(f);
  return Value{FractionRep{{Value{FractionRep{std::move(fr.num), {one(g)}}}},
                           {Value{FractionRep{std::move(fr.den), {one(g)}}}}}};
}

inline bool is_zero(Levels lv, const Value& v) {
  if (lv.empty()) return sgn(std::get<Rational>(v.rep)) == 0;
  if (lv.back().kind == GeneratorKind::algebraic) return std::get<AlgebraicRep>(v.rep).coeffs.empty();
  return std::get<FractionRep>(v.rep).num.empty();
}

/// Embeds an element of F_from into F_L (from <= L).
inline Value lift(Levels lv, std::size_t from, Value v) {
  for (std::size_t level = from + 1; level <= lv.size(); ++level) {
    const Levels cur = lv.first(level);
    const bool z = is_zero(below(cur), v);
    v = lift_one(cur, std::move(v), z);
  }
  return v;
}

inline bool is_one(Levels lv, const Value& v) { return v == one(lv); }

/// The value as a rational constant, if it is one.
inline std::optional<Rational> as_rational(Levels lv, const Value& v) {
  if (lv.empty()) return std::get<Rational>(v.rep);
  const Levels f = below(lv);
  const Poly* p = nullptr;
  if (lv.back().kind == GeneratorKind::algebraic) {
    p = &std::get<AlgebraicRep>(v.rep).coeffs;
  } else {
    const auto& fr = std::get<FractionRep>(v.rep);
    if (fr.den.size() != 1 || fr.num.size() > 1) return std::nullopt;
    if (fr.num.empty()) return Rational(0);
    auto n = as_rational(f, fr.num.front());
    auto d = as_rational(f, fr.den.front());
    if (!n || !d) return std::nullopt;
    return Rational(*n / *d);
  }
  if (p->empty()) return Rational(0);
  if (p->size() > 1) return std::nullopt;
  return as_rational(f, p->front());
}

// ---------------------------------------------------------------------------
// Field operations (forward declarations; polynomial helpers use them)

inline Value add(Levels lv, const Value& a, const Value& b);
inline Value neg(Levels lv, const Value& a);
inline Value sub(Levels lv, const Value& a, const Value& b);
inline Value mul(Levels lv, const Value& a, const Value& b);
inline Value inv(Levels lv, const Value& a);

// ---------------------------------------------------------------------------
// Dense univariate polynomials over the field described by `f`

inline void trim(Levels f, Poly& p) {
  while (!p.empty() && is_zero(f, p.back())) p.pop_back();
}

inline long degree(const Poly& p) { return static_cast<long>(p.size()) - 1; }

inline Poly padd(Levels f, const Poly& a, const Poly& b) {
  const Poly& longer = a.size() >= b.size() ? a : b;
  const Poly& shorter = a.size() >= b.size() ? b : a;
  Poly r = longer;
  for (std::size_t i = 0; i < shorter.size(); ++i) r[i] = add(f, r[i], shorter[i]);
  trim(f, r);
  return r;
}

inline Poly pneg(Levels f, const Poly& a) {
  Poly r;
  r.reserve(a.size());
  for (const auto& c : a) r.push_back(neg(f, c));
  return r;
}

inline Poly psub(Levels f, const Poly& a, const Poly& b) { return padd(f, a, pneg(f, b)); }

inline Poly pscale(Levels f, const Poly& a, const Value& c) {
  if (is_zero(f, c)) return {};
  if (is_one(f, c)) return a;
  Poly r;
  r.reserve(a.size());
  for (const auto& x : a) r.push_back(mul(f, x, c));
  trim(f, r);
  return r;
}

inline Poly pmul(Levels f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, zero(f));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (is_zero(f, a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = add(f, r[i + j], mul(f, a[i], b[j]));
  }
  trim(f, r);
  return r;
}

/// Quotient and remainder; `b` must be nonzero. Inverting lc(b) may raise
/// ZeroDivisorError when F is not actually a field.
inline std::pair<Poly, Poly> pdivmod(Levels f, Poly a, const Poly& b) {
  if (b.empty()) throw DivisionByZero();
  if (a.size() < b.size()) return {Poly{}, std::move(a)};
  const bool monic = is_one(f, b.back());
  const Value lc_inv = monic ? one(f) : inv(f, b.back());
  Poly q(a.size() - b.size() + 1, zero(f));
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const Value c = monic ? a.back() : mul(f, a.back(), lc_inv);
    for (std::size_t i = 0; i + 1 < b.size(); ++i)
      a[shift + i] = sub(f, a[shift + i], mul(f, c, b[i]));
    a.pop_back();
    trim(f, a);
    q[shift] = c;
  }
  trim(f, q);
  return {std::move(q), std::move(a)};
}

inline Poly pmod(Levels f, Poly a, const Poly& b) { return pdivmod(f, std::move(a), b).second; }
inline Poly pquo(Levels f, Poly a, const Poly& b) { return pdivmod(f, std::move(a), b).first; }

inline Poly pmonic(Levels f, const Poly& a) {
  if (a.empty() || is_one(f, a.back())) return a;
  return pscale(f, a, inv(f, a.back()));
}

namespace ring {
inline Poly field_gcd(Levels f, const Poly& a, const Poly& b);
}

inline bool is_one_poly(Levels f, const Poly& p) { return p.size() == 1 && is_one(f, p[0]); }

/// Monic gcd; gcd(0, 0) = 0.
inline Poly pgcd(Levels f, Poly a, Poly b) {
  // Euclid over K(t) swells badly; go through K[t] instead.
  if (!f.empty() && f.back().kind == GeneratorKind::transcendental && !a.empty() && !b.empty())
    return ring::field_gcd(f, a, b);
  while (!b.empty()) {
    Poly r = pmod(f, std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  return pmonic(f, a);
}

struct ExtendedGcd {
  Poly gcd;  // monic
  Poly s;    // s*a + t*b = gcd
  Poly t;
};

inline ExtendedGcd pxgcd(Levels f, Poly a, Poly b) {
  Poly s0{one(f)}, s1, t0, t1{one(f)};
  while (!b.empty()) {
    auto [q, r] = pdivmod(f, a, b);
    Poly s2 = psub(f, s0, pmul(f, q, s1));
    Poly t2 = psub(f, t0, pmul(f, q, t1));
    a = std::move(b);
    b = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (a.empty()) return {{}, std::move(s0), std::move(t0)};
  const Value c = inv(f, a.back());
  return {pscale(f, a, c), pscale(f, s0, c), pscale(f, t0, c)};
}

inline Poly pderivative(Levels f, const Poly& a) {
  Poly r;
  for (std::size_t i = 1; i < a.size(); ++i)
    r.push_back(mul(f, a[i], from_rational(f, Rational(static_cast<long>(i)))));
  trim(f, r);
  return r;
}


// ---------------------------------------------------------------------------
// Integral elements. A transcendental level stores num/den in R[t], where R
// is Z over Q, the whole field over an algebraic level, and R'[t'] over
// another transcendental level. Integral values are ordinary canonical values
// (integers, or fractions with den == 1), so field ops double as ring ops.

namespace ring {

inline bool is_field(Levels f) { return !f.empty() && f.back().kind == GeneratorKind::algebraic; }

inline Poly gcd_poly(Levels f, Poly a, Poly b);
inline Poly pdiv_exact(Levels f, Poly a, const Poly& b);

inline Value integral(Levels f, Poly p) { return Value{FractionRep{std::move(p), {one(below(f))}}}; }

/// Inverse of the unit part of a nonzero integral value: sign over Z, the
/// value itself over a field, recursively the leading coefficient otherwise.
inline Value unit_inverse(Levels f, const Value& a) {
  if (f.empty()) return Value{Rational(sgn(std::get<Rational>(a.rep)) < 0 ? -1 : 1)};
  if (is_field(f)) return inv(f, a);
  const Levels g = below(f);
  return integral(f, {unit_inverse(g, std::get<FractionRep>(a.rep).num.back())});
}

/// a / b where b divides a in R_f.
inline Value div_exact(Levels f, const Value& a, const Value& b) {
  if (f.empty()) return Value{Rational(std::get<Rational>(a.rep) / std::get<Rational>(b.rep))};
  if (is_field(f)) return mul(f, a, inv(f, b));
  return integral(f, pdiv_exact(below(f), std::get<FractionRep>(a.rep).num, std::get<FractionRep>(b.rep).num));
}

/// Normalized gcd in R_f; gcd(0, 0) = 0.
inline Value gcd(Levels f, const Value& a, const Value& b) {
  if (f.empty()) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), std::get<Rational>(a.rep).get_num_mpz_t(), std::get<Rational>(b.rep).get_num_mpz_t());
    return Value{Rational(g)};
  }
  if (is_field(f)) return is_zero(f, a) && is_zero(f, b) ? zero(f) : one(f);
  return integral(f, gcd_poly(below(f), std::get<FractionRep>(a.rep).num, std::get<FractionRep>(b.rep).num));
}

inline bool unit_is_one(Levels f, const Value& a) { return is_one(f, unit_inverse(f, a)); }

/// Scales p so that its leading coefficient has unit part 1.
inline Poly normalize_unit(Levels f, Poly p) {
  if (p.empty()) return p;
  const Value u = unit_inverse(f, p.back());
  if (!is_one(f, u))
    for (auto& c : p) c = mul(f, c, u);
  return p;
}

inline Poly pdiv_exact(Levels f, Poly a, const Poly& b) {
  if (b.size() == 1 && is_one(f, b[0])) return a;
  if (a.size() < b.size()) return {};
  Poly q(a.size() - b.size() + 1, zero(f));
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const Value c = div_exact(f, a.back(), b.back());
    for (std::size_t i = 0; i + 1 < b.size(); ++i)
      if (!is_zero(f, b[i])) a[shift + i] = sub(f, a[shift + i], mul(f, c, b[i]));
    a.pop_back();
    trim(f, a);
    q[shift] = c;
  }
  trim(f, q);
  return q;
}

inline Value content(Levels f, const Poly& p) {
  Value g = zero(f);
  for (const auto& c : p) {
    g = gcd(f, g, c);
    if (is_one(f, g)) break;
  }
  return g;
}

inline Poly primitive_part(Levels f, Poly p) {
  if (p.empty()) return p;
  const Value c = content(f, p);
  if (!is_one(f, c))
    for (auto& x : p) x = div_exact(f, x, c);
  return normalize_unit(f, std::move(p));
}

// a := lc(b)^k * a mod b, leading terms cancelled one at a time.
inline Poly pseudo_rem(Levels f, Poly a, const Poly& b) {
  const Value& lb = b.back();
  const bool unit = is_one(f, lb);
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const Value la = a.back();
    if (!unit)
      for (std::size_t i = 0; i + 1 < a.size(); ++i)
        if (!is_zero(f, a[i])) a[i] = mul(f, a[i], lb);
    for (std::size_t i = 0; i + 1 < b.size(); ++i)
      if (!is_zero(f, b[i])) a[shift + i] = sub(f, a[shift + i], mul(f, la, b[i]));
    a.pop_back();
    trim(f, a);
  }
  return a;
}

/// Normalized gcd in R_f[x]: content gcd times primitive PRS.
inline Poly gcd_poly(Levels f, Poly a, Poly b) {
  if (a.empty()) return normalize_unit(f, std::move(b));
  if (b.empty()) return normalize_unit(f, std::move(a));
  if (is_field(f)) {
    while (!b.empty()) {
      Poly r = pmod(f, std::move(a), b);
      a = std::move(b);
      b = std::move(r);
    }
    return pmonic(f, a);
  }
  const Value c = gcd(f, content(f, a), content(f, b));
  if (a.size() == 1 || b.size() == 1) return {c};
  a = primitive_part(f, std::move(a));
  b = primitive_part(f, std::move(b));
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    Poly r = primitive_part(f, pseudo_rem(f, std::move(a), b));
    a = std::move(b);
    b = std::move(r);
  }
  if (!is_one(f, c))
    for (auto& x : a) x = mul(f, x, c);
  return a;
}

/// Scales p over F_f into R_f[x]; the factor is irrelevant up to units.
inline Poly clear_denominators(Levels f, const Poly& p) {
  if (f.empty()) {
    Integer l(1);
    for (const auto& v : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), std::get<Rational>(v.rep).get_den_mpz_t());
    Poly out;
    for (const auto& v : p) out.push_back(Value{Rational(std::get<Rational>(v.rep) * l)});
    return out;
  }
  if (is_field(f)) return p;
  const Levels g = below(f);
  Poly l{one(g)};
  for (const auto& v : p) {
    const Poly& d = std::get<FractionRep>(v.rep).den;
    if (!(d.size() == 1 && is_one(g, d[0]))) l = pmul(g, pdiv_exact(g, l, gcd_poly(g, l, d)), d);
  }
  Poly out;
  for (const auto& v : p) {
    const auto& fr = std::get<FractionRep>(v.rep);
    out.push_back(fr.num.empty() ? zero(f) : integral(f, pmul(g, fr.num, pdiv_exact(g, l, fr.den))));
  }
  return out;
}

/// Monic gcd over the field F_f, computed in R_f[x].
inline Poly field_gcd(Levels f, const Poly& a, const Poly& b) {
  return pmonic(f, gcd_poly(f, clear_denominators(f, a), clear_denominators(f, b)));
}

}  // namespace ring

// ---------------------------------------------------------------------------
// Formatting

inline std::string format(Levels lv, const Value& v);

inline bool is_simple_token(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char ch) {
    return (ch >= '0' && ch <= '9') || (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') ||
           ch == '_' || ch == '^';
  });
}

inline std::string wrap(const std::string& s) { return is_simple_token(s) ? s : "(" + s + ")"; }

/// Polynomial in `var` with coefficients over `f`, highest degree first.
inline std::string format_poly(Levels f, const Poly& p, const std::string& var) {
  if (p.empty()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = p.size(); k-- > 0;) {
    const Value& c = p[k];
    if (is_zero(f, c)) continue;
    std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    bool negative = false;
    std::string body;
    if (auto q = as_rational(f, c)) {
      negative = sgn(*q) < 0;
      const Rational mag = abs(*q);
      if (k > 0 && mag == 1)
        body = mono;
      else
        body = to_string(mag) + (k > 0 ? "*" + mono : "");
    } else {
      const std::string cs = wrap(format(f, c));
      body = k > 0 ? cs + "*" + mono : cs;
    }
    if (first)
      out += negative ? "-" + body : body;
    else
      out += (negative ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

inline std::string format(Levels lv, const Value& v) {
  if (lv.empty()) return to_string(std::get<Rational>(v.rep));
  const Levels f = below(lv);
  const std::string& var = lv.back().name;
  if (lv.back().kind == GeneratorKind::algebraic) return format_poly(f, std::get<AlgebraicRep>(v.rep).coeffs, var);
  const auto& fr = std::get<FractionRep>(v.rep);
  std::string n = format_poly(f, fr.num, var);
  if (is_one_poly(f, fr.den)) return n;
  return wrap(n) + "/" + wrap(format_poly(f, fr.den, var));
}

// ---------------------------------------------------------------------------
// Field operations

namespace frac {

inline Value make(Poly num, Poly den) { return Value{FractionRep{std::move(num), std::move(den)}}; }

inline bool is_unit_den(Levels f, const Poly& d) { return d.size() == 1 && is_one(f, d[0]); }

/// Reduces num/den in R[t] and fixes the unit of den.
inline Value normalize(Levels lv, Poly num, Poly den) {
  const Levels f = below(lv);
  if (num.empty()) return zero(lv);
  Poly g = ring::gcd_poly(f, num, den);
  if (!is_unit_den(f, g)) {
    num = ring::pdiv_exact(f, std::move(num), g);
    den = ring::pdiv_exact(f, std::move(den), g);
  }
  const Value u = ring::unit_inverse(f, den.back());
  if (!is_one(f, u)) {
    num = pscale(f, num, u);
    den = pscale(f, den, u);
  }
  return make(std::move(num), std::move(den));
}

inline Value add(Levels lv, const FractionRep& a, const FractionRep& b) {
  const Levels f = below(lv);
  if (a.num.empty()) return Value{b};
  if (b.num.empty()) return Value{a};
  const bool a_int = is_unit_den(f, a.den);
  const bool b_int = is_unit_den(f, b.den);
  if (a.den == b.den) {
    Poly num = padd(f, a.num, b.num);
    if (a_int) return num.empty() ? zero(lv) : make(std::move(num), a.den);
    return normalize(lv, std::move(num), a.den);
  }
  // gcd(a.num + b.num*a.den, a.den) = gcd(a.num, a.den) = 1
  if (b_int) return make(padd(f, a.num, pmul(f, b.num, a.den)), a.den);
  if (a_int) return make(padd(f, b.num, pmul(f, a.num, b.den)), b.den);
  Poly g = ring::gcd_poly(f, a.den, b.den);
  if (is_unit_den(f, g)) {
    Poly num = padd(f, pmul(f, a.num, b.den), pmul(f, b.num, a.den));
    if (num.empty()) return zero(lv);
    return make(std::move(num), pmul(f, a.den, b.den));
  }
  Poly bq = ring::pdiv_exact(f, b.den, g);
  Poly aq = ring::pdiv_exact(f, a.den, g);
  Poly num = padd(f, pmul(f, a.num, bq), pmul(f, b.num, aq));
  return normalize(lv, std::move(num), pmul(f, a.den, bq));
}

inline Value mul(Levels lv, const FractionRep& a, const FractionRep& b) {
  const Levels f = below(lv);
  if (a.num.empty() || b.num.empty()) return zero(lv);
  Poly an = a.num, ad = a.den, bn = b.num, bd = b.den;
  auto cancel = [&](Poly& n, Poly& d) {
    if (is_unit_den(f, d)) return;
    Poly g = ring::gcd_poly(f, n, d);
    if (!is_unit_den(f, g)) {
      n = ring::pdiv_exact(f, std::move(n), g);
      d = ring::pdiv_exact(f, std::move(d), g);
    }
  };
  cancel(an, bd);
  cancel(bn, ad);
  // units of cancelled factors are 1, so the product den stays normalized
  return make(pmul(f, an, bn), pmul(f, ad, bd));
}

inline Value inv(Levels lv, const FractionRep& a) {
  const Levels f = below(lv);
  const Value u = ring::unit_inverse(f, a.num.back());
  if (is_one(f, u)) return make(a.den, a.num);
  return make(pscale(f, a.den, u), pscale(f, a.num, u));
}

}  // namespace frac

inline Value add(Levels lv, const Value& a, const Value& b) {
  if (lv.empty()) return Value{Rational(std::get<Rational>(a.rep) + std::get<Rational>(b.rep))};
  if (lv.back().kind == GeneratorKind::algebraic)
    return Value{AlgebraicRep{padd(below(lv), std::get<AlgebraicRep>(a.rep).coeffs,
                                   std::get<AlgebraicRep>(b.rep).coeffs)}};
  return frac::add(lv, std::get<FractionRep>(a.rep), std::get<FractionRep>(b.rep));
}

inline Value neg(Levels lv, const Value& a) {
  if (lv.empty()) return Value{Rational(-std::get<Rational>(a.rep))};
  if (lv.back().kind == GeneratorKind::algebraic)
    return Value{AlgebraicRep{pneg(below(lv), std::get<AlgebraicRep>(a.rep).coeffs)}};
  const auto& fr = std::get<FractionRep>(a.rep);
  return frac::make(pneg(below(lv), fr.num), fr.den);
}

inline Value sub(Levels lv, const Value& a, const Value& b) { return add(lv, a, neg(lv, b)); }

inline Value mul(Levels lv, const Value& a, const Value& b) {
  if (lv.empty()) return Value{Rational(std::get<Rational>(a.rep) * std::get<Rational>(b.rep))};
  const Levels f = below(lv);
  if (lv.back().kind == GeneratorKind::algebraic) {
    Poly p = pmul(f, std::get<AlgebraicRep>(a.rep).coeffs, std::get<AlgebraicRep>(b.rep).coeffs);
    if (p.size() >= lv.back().minpoly.size()) p = pmod(f, std::move(p), lv.back().minpoly);
    return Value{AlgebraicRep{std::move(p)}};
  }
  return frac::mul(lv, std::get<FractionRep>(a.rep), std::get<FractionRep>(b.rep));
}

inline Value inv(Levels lv, const Value& a) {
  if (is_zero(lv, a)) throw DivisionByZero();
  if (lv.empty()) return Value{Rational(1 / std::get<Rational>(a.rep))};
  const Levels f = below(lv);
  if (lv.back().kind == GeneratorKind::algebraic) {
    const Poly& m = lv.back().minpoly;
    ExtendedGcd e = pxgcd(f, std::get<AlgebraicRep>(a.rep).coeffs, m);
    if (e.gcd.size() > 1) throw ZeroDivisorError(lv.back().name, format_poly(f, e.gcd, lv.back().name));
    Poly s = e.s.size() >= m.size() ? pmod(f, std::move(e.s), m) : std::move(e.s);
    return Value{AlgebraicRep{std::move(s)}};
  }
  return frac::inv(lv, std::get<FractionRep>(a.rep));
}

inline Value div(Levels lv, const Value& a, const Value& b) { return mul(lv, a, inv(lv, b)); }

inline Value pow(Levels lv, Value base, unsigned long exp) {
  Value result = one(lv);
  while (exp > 0) {
    if (exp & 1UL) result = mul(lv, result, base);
    exp >>= 1;
    if (exp > 0) base = mul(lv, base, base);
  }
  return result;
}

}  // namespace detail
}  // namespace incidence
