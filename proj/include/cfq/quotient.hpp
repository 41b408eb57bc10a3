// Copyright 2026 The cfq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
// implied. See the License for the specific language governing
// permissions and limitations under the License.

#ifndef CFQ_QUOTIENT_H_
#define CFQ_QUOTIENT_H_

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <tuple>
#include <vector>

#include "cfq/errors.hpp"
#include "cfq/modarith.hpp"

namespace cfq {

// Label (m, a, b) of the curve y^m = (-1)^(a+b) x^a (1-x)^b. A label is
// valid when 0 < a, b < m, a + b is nonzero mod m, and gcd(m, a, b, a+b)
// equals 1 (enforced in the literal four-argument form).
struct QuotientLabel {
  int64_t m = 0;
  int64_t a = 0;
  int64_t b = 0;

  friend bool operator==(const QuotientLabel&, const QuotientLabel&) = default;
  friend auto operator<=>(const QuotientLabel&, const QuotientLabel&) = default;
};

// Third exponent c with a + b + c = 0 mod m, as a residue in [1, m).
inline int64_t ThirdExponent(const QuotientLabel& q) {
  return Mod(-q.a - q.b, q.m);
}

// The unordered exponent triple {a, b, c}, sorted ascending.
inline std::array<int64_t, 3> ExponentTriple(const QuotientLabel& q) {
  std::array<int64_t, 3> t = {q.a, q.b, ThirdExponent(q)};
  std::sort(t.begin(), t.end());
  return t;
}

// Validates and normalizes (m, a, b): a and b are reduced into 1..m-1.
inline QuotientLabel ValidateLabel(int64_t m, int64_t a, int64_t b) {
  if (m < 3) Fail(errc::range_violation, "level m must be at least 3");
  a = Mod(a, m);
  b = Mod(b, m);
  if (a == 0 || b == 0)
    Fail(errc::range_violation, "exponent is 0 mod m");
  if ((a + b) % m == 0)
    Fail(errc::degenerate_triple, "a + b is 0 mod m");
  int64_t g = std::gcd(std::gcd(m, a), std::gcd(b, a + b));
  if (g != 1) Fail(errc::gcd_violation, "gcd(m, a, b, a+b) exceeds 1");
  return QuotientLabel{m, a, b};
}

inline bool IsValidLabel(int64_t m, int64_t a, int64_t b) {
  if (m < 3) return false;
  a = Mod(a, m);
  b = Mod(b, m);
  if (a == 0 || b == 0 || (a + b) % m == 0) return false;
  return std::gcd(std::gcd(m, a), std::gcd(b, a + b)) == 1;
}

// Weak triple check used by character-level operations: the three
// exponents a, b, a+b must be nonzero mod m, with no gcd constraint.
inline bool IsCharTriple(int64_t m, int64_t a, int64_t b) {
  if (m < 3) return false;
  return Mod(a, m) != 0 && Mod(b, m) != 0 && Mod(a + b, m) != 0;
}

inline QuotientLabel ValidateCharTriple(int64_t m, int64_t a, int64_t b) {
  if (m < 3) Fail(errc::range_violation, "level m must be at least 3");
  a = Mod(a, m);
  b = Mod(b, m);
  if (a == 0 || b == 0)
    Fail(errc::range_violation, "character exponent is 0 mod m");
  if ((a + b) % m == 0)
    Fail(errc::degenerate_triple, "character exponent a + b is 0 mod m");
  return QuotientLabel{m, a, b};
}

inline int64_t Genus(const QuotientLabel& q) {
  int64_t s = std::gcd(q.m, q.a) + std::gcd(q.m, q.b) +
              std::gcd(q.m, ThirdExponent(q));
  return (q.m - s + 2) / 2;
}

// Smallest unit t with t * {a, b, c} = {a2, b2, c2} mod m as multisets,
// or nullopt. The unit multiplies the first label's triple.
inline std::optional<int64_t> EquivalenceUnit(const QuotientLabel& q,
                                              const QuotientLabel& q2) {
  if (q.m != q2.m) Fail(errc::mismatched_level, "labels at different levels");
  const int64_t m = q.m;
  const std::array<int64_t, 3> src = ExponentTriple(q);
  const std::array<int64_t, 3> dst = ExponentTriple(q2);
  for (int64_t t = 1; t < m; ++t) {
    if (std::gcd(t, m) != 1) continue;
    std::array<int64_t, 3> scaled = {Mod(t * src[0], m), Mod(t * src[1], m),
                                     Mod(t * src[2], m)};
    std::sort(scaled.begin(), scaled.end());
    if (scaled == dst) return t;
  }
  return std::nullopt;
}

// Lexicographically least sorted triple over all unit scalings; the label
// is formed from its first two entries.
inline QuotientLabel CanonicalRep(const QuotientLabel& q) {
  const int64_t m = q.m;
  const std::array<int64_t, 3> base = ExponentTriple(q);
  std::array<int64_t, 3> best = {m, m, m};
  for (int64_t t = 1; t < m; ++t) {
    if (std::gcd(t, m) != 1) continue;
    std::array<int64_t, 3> scaled = {Mod(t * base[0], m), Mod(t * base[1], m),
                                     Mod(t * base[2], m)};
    std::sort(scaled.begin(), scaled.end());
    if (scaled < best) best = scaled;
  }
  return QuotientLabel{m, best[0], best[1]};
}

// Exactly two hyperelliptic shapes exist: (a,b) ~ (1,1), and for even
// m = 2n also (a,b) ~ (1,n).
inline bool IsHyperelliptic(const QuotientLabel& q) {
  const int64_t m = q.m;
  if (EquivalenceUnit(q, QuotientLabel{m, 1, 1}).has_value()) return true;
  if (m % 2 == 0 &&
      EquivalenceUnit(q, QuotientLabel{m, 1, m / 2}).has_value())
    return true;
  return false;
}

// All (r, s) with 0 < r, s, r+s < m and b r = a s mod m, sorted. The count
// equals the genus.
inline std::vector<std::pair<int64_t, int64_t>> DifferentialBasis(
    const QuotientLabel& q) {
  std::vector<std::pair<int64_t, int64_t>> out;
  for (int64_t r = 1; r < q.m; ++r) {
    for (int64_t s = 1; r + s < q.m; ++s) {
      if (Mod(q.b * r - q.a * s, q.m) == 0) out.emplace_back(r, s);
    }
  }
  return out;
}

// Sorted canonical representatives of all valid-label classes at level m.
inline std::vector<QuotientLabel> EnumerateClasses(int64_t m) {
  std::vector<bool> seen(static_cast<size_t>(m) * m, false);
  std::vector<QuotientLabel> out;
  const std::vector<int64_t> units = Units(m);
  for (int64_t a = 1; a < m; ++a) {
    for (int64_t b = 1; b < m; ++b) {
      if (seen[a * m + b] || !IsValidLabel(m, a, b)) continue;
      const QuotientLabel q{m, a, b};
      const std::array<int64_t, 3> base = ExponentTriple(q);
      std::array<int64_t, 3> best = {m, m, m};
      for (int64_t t : units) {
        std::array<int64_t, 3> tr = {Mod(t * base[0], m), Mod(t * base[1], m),
                                     Mod(t * base[2], m)};
        std::sort(tr.begin(), tr.end());
        if (tr < best) best = tr;
        // Mark every ordered pair drawn from the scaled triple.
        const std::array<std::pair<int64_t, int64_t>, 6> pairs = {{
            {tr[0], tr[1]}, {tr[0], tr[2]}, {tr[1], tr[0]},
            {tr[1], tr[2]}, {tr[2], tr[0]}, {tr[2], tr[1]},
        }};
        for (const auto& [x, y] : pairs) seen[x * m + y] = true;
      }
      out.push_back(QuotientLabel{m, best[0], best[1]});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Quotient label reached through y -> y^d for a divisor d of m. With
// A = <da>, B = <db>, C = <dc> all nonzero and e = gcd(m, A, B, C), the
// result is (m/e, A/e, B/e). The gcd includes m so the reduced level is
// always integral; on canonical class representatives the extra argument
// never changes the value.
inline QuotientLabel Subcover(const QuotientLabel& q, int64_t d) {
  if (d < 1 || q.m % d != 0 || d == q.m)
    Fail(errc::range_violation, "d must be a proper divisor of m");
  const int64_t m = q.m;
  const int64_t A = Mod(d * q.a, m);
  const int64_t B = Mod(d * q.b, m);
  const int64_t C = Mod(d * ThirdExponent(q), m);
  if (A == 0 || B == 0 || C == 0)
    Fail(errc::degenerate_subcover, "an exponent vanishes under d");
  const int64_t e = std::gcd(std::gcd(m, A), std::gcd(B, C));
  return QuotientLabel{m / e, A / e, B / e};
}

}  // namespace cfq

#endif  // CFQ_QUOTIENT_H_
