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

#ifndef CFQ_MODARITH_H_
#define CFQ_MODARITH_H_

#include <cstdint>
#include <numeric>
#include <vector>

#include "cfq/errors.hpp"

namespace cfq {

// Canonical residue of x mod m in [0, m).
inline int64_t Mod(int64_t x, int64_t m) {
  int64_t r = x % m;
  return r < 0 ? r + m : r;
}

// Representative of x mod m in [1, m]; 0 maps to m. Used where the source
// convention indexes automorphisms by residues 1..m.
inline int64_t ModOneToM(int64_t x, int64_t m) {
  int64_t r = Mod(x, m);
  return r == 0 ? m : r;
}

inline int64_t MulMod(int64_t a, int64_t b, int64_t m) {
  return static_cast<int64_t>(
      static_cast<__int128>(a) * static_cast<__int128>(b) % m);
}

inline int64_t PowMod(int64_t base, int64_t exp, int64_t m) {
  int64_t r = 1 % m;
  base = Mod(base, m);
  while (exp > 0) {
    if (exp & 1) r = MulMod(r, base, m);
    base = MulMod(base, base, m);
    exp >>= 1;
  }
  return r;
}

inline bool IsUnit(int64_t t, int64_t m) { return std::gcd(Mod(t, m), m) == 1; }

// Units of Z/m in increasing order.
inline std::vector<int64_t> Units(int64_t m) {
  std::vector<int64_t> out;
  for (int64_t t = 1; t < m; ++t)
    if (std::gcd(t, m) == 1) out.push_back(t);
  if (m == 1) out.push_back(0);
  return out;
}

inline int64_t EulerPhi(int64_t m) {
  int64_t result = m;
  int64_t n = m;
  for (int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

inline int64_t InverseMod(int64_t a, int64_t m) {
  int64_t g = m, x = 0, x1 = 1, a1 = Mod(a, m);
  while (a1 != 0) {
    int64_t q = g / a1;
    g -= q * a1;
    std::swap(g, a1);
    x -= q * x1;
    std::swap(x, x1);
  }
  if (g != 1) Fail(errc::non_unit, "no inverse mod m");
  return Mod(x, m);
}

// Multiplicative order of a mod m; requires gcd(a, m) = 1.
inline int64_t OrderMod(int64_t a, int64_t m) {
  if (!IsUnit(a, m)) Fail(errc::non_unit, "order of a non-unit");
  int64_t cur = Mod(a, m);
  int64_t ord = 1;
  while (cur != 1 % m) {
    cur = MulMod(cur, a, m);
    ++ord;
  }
  return ord;
}

inline bool IsPrime(int64_t n) {
  if (n < 2) return false;
  for (int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline int64_t BinomialCoefficient(int64_t n, int64_t k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  int64_t r = 1;
  for (int64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

}  // namespace cfq

#endif  // CFQ_MODARITH_H_
