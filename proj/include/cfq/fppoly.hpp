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

#ifndef CFQ_FPPOLY_H_
#define CFQ_FPPOLY_H_

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "cfq/cyclotomic.hpp"
#include "cfq/errors.hpp"
#include "cfq/modarith.hpp"

namespace cfq {
namespace fppoly {

// Dense polynomial over F_p, constant term first, no trailing zeros.
using Poly = std::vector<int64_t>;

inline void Trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int64_t Degree(const Poly& a) {
  return static_cast<int64_t>(a.size()) - 1;
}

inline Poly Mul(const Poly& a, const Poly& b, int64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
  }
  Trim(out);
  return out;
}

// Remainder of a modulo g. The top term cancels exactly on every round,
// so each round shortens a.
inline Poly Rem(Poly a, const Poly& g, int64_t p) {
  Trim(a);
  const int64_t dg = Degree(g);
  const int64_t lead_inv = InverseMod(g.back(), p);
  while (Degree(a) >= dg) {
    const int64_t k = Degree(a) - dg;
    const int64_t c = MulMod(a.back(), lead_inv, p);
    for (int64_t j = 0; j <= dg; ++j) {
      a[k + j] = Mod(a[k + j] - c * g[j], p);
    }
    Trim(a);
  }
  return a;
}

inline Poly MulMods(const Poly& a, const Poly& b, const Poly& g, int64_t p) {
  return Rem(Mul(a, b, p), g, p);
}

inline Poly PowMods(Poly base, int64_t exp, const Poly& g, int64_t p) {
  Poly r = {1};
  base = Rem(std::move(base), g, p);
  while (exp > 0) {
    if (exp & 1) r = MulMods(r, base, g, p);
    base = MulMods(base, base, g, p);
    exp >>= 1;
  }
  return r;
}

inline Poly MakeMonic(Poly a, int64_t p) {
  Trim(a);
  if (a.empty()) return a;
  const int64_t inv = InverseMod(a.back(), p);
  for (int64_t& c : a) c = MulMod(c, inv, p);
  return a;
}

inline Poly Gcd(Poly a, Poly b, int64_t p) {
  Trim(a);
  Trim(b);
  while (!b.empty()) {
    Poly r = Rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return MakeMonic(std::move(a), p);
}

inline Poly Sub(Poly a, const Poly& b, int64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t j = 0; j < b.size(); ++j) a[j] = Mod(a[j] - b[j], p);
  Trim(a);
  return a;
}

namespace internal {

// Splits a squarefree product of irreducibles of common degree f by the
// Cantor-Zassenhaus method. Randomness comes from a fixed-seed generator
// so factor discovery order is reproducible; the final ordering is by
// sorted coefficient list regardless.
inline void EqualDegreeSplit(const Poly& h, int64_t f, int64_t p,
                             std::mt19937_64& rng, std::vector<Poly>& out) {
  if (Degree(h) == f) {
    out.push_back(MakeMonic(h, p));
    return;
  }
  const int64_t n = Degree(h);
  while (true) {
    Poly r(n, 0);
    for (int64_t j = 0; j < n; ++j) {
      r[j] = static_cast<int64_t>(rng() % static_cast<uint64_t>(p));
    }
    Trim(r);
    if (r.empty() || Degree(r) < 1) continue;
    Poly g = Gcd(h, r, p);
    if (Degree(g) > 0 && Degree(g) < n) {
      // A lucky gcd already splits.
    } else if (p == 2) {
      // Trace map: w = r + r^2 + r^4 + ... (f terms), gcd(w, h).
      Poly w = {};
      Poly cur = Rem(r, h, p);
      for (int64_t t = 0; t < f; ++t) {
        w = Sub(std::move(w), cur, p);  // subtraction = addition mod 2
        cur = MulMods(cur, cur, h, p);
      }
      g = Gcd(h, w, p);
    } else {
      // w = r^((p^f - 1) / 2) - 1, gcd(w, h).
      int64_t e = 1;
      for (int64_t t = 0; t < f; ++t) e *= p;
      Poly w = PowMods(r, (e - 1) / 2, h, p);
      w = Sub(std::move(w), Poly{1}, p);
      g = Gcd(h, w, p);
    }
    if (Degree(g) > 0 && Degree(g) < n) {
      Poly q = h;
      // q = h / g by repeated subtraction via long division.
      Poly quot(q.size() - g.size() + 1, 0);
      for (int64_t k = static_cast<int64_t>(quot.size()) - 1; k >= 0; --k) {
        const int64_t c = q[k + g.size() - 1];
        quot[k] = c;
        if (c == 0) continue;
        for (size_t j = 0; j < g.size(); ++j) {
          q[k + j] = Mod(q[k + j] - c * g[j], p);
        }
      }
      Trim(quot);
      EqualDegreeSplit(g, f, p, rng, out);
      EqualDegreeSplit(quot, f, p, rng, out);
      return;
    }
  }
}

}  // namespace internal

// Monic irreducible factors of the m-th cyclotomic polynomial mod p, each
// of degree equal to the order of p mod m, sorted by coefficient list.
inline std::vector<Poly> FactorCyclotomicModP(int64_t m, int64_t p) {
  if (m % p == 0) Fail(errc::ramified_prime, "p divides m");
  const int64_t f = OrderMod(Mod(p, m), m);
  // The splitting exponent is (p^f - 1) / 2; guard the power.
  int64_t n = 1;
  for (int64_t t = 0; t < f; ++t) {
    if (n > (int64_t{1} << 60) / p)
      Fail(errc::invalid_range, "residue field too large to factor");
    n *= p;
  }
  const std::vector<int64_t>& zc = CyclotomicPolynomial(m);
  Poly target(zc.size());
  for (size_t j = 0; j < zc.size(); ++j) target[j] = Mod(zc[j], p);
  Trim(target);
  std::vector<Poly> out;
  std::mt19937_64 rng(0xCF90CF90ULL);
  internal::EqualDegreeSplit(target, f, p, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fppoly
}  // namespace cfq

#endif  // CFQ_FPPOLY_H_
