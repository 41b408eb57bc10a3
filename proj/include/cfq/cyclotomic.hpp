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

#ifndef CFQ_CYCLOTOMIC_H_
#define CFQ_CYCLOTOMIC_H_

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <vector>

#include "cfq/errors.hpp"
#include "cfq/modarith.hpp"

namespace cfq {

namespace internal {

inline std::vector<int64_t> ComputeCyclotomic(int64_t m) {
  std::vector<int64_t> poly(m + 1, 0);
  poly[0] = -1;
  poly[m] = 1;
  for (int64_t d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    const std::vector<int64_t> div = ComputeCyclotomic(d);
    // Exact long division, quotient replaces poly.
    std::vector<int64_t> quot(poly.size() - div.size() + 1, 0);
    std::vector<int64_t> rem = poly;
    for (int64_t k = static_cast<int64_t>(quot.size()) - 1; k >= 0; --k) {
      const int64_t c = rem[k + div.size() - 1];
      quot[k] = c;
      if (c == 0) continue;
      for (size_t j = 0; j < div.size(); ++j) rem[k + j] -= c * div[j];
    }
    poly = quot;
  }
  return poly;
}

}  // namespace internal

// Integer coefficients of the m-th cyclotomic polynomial, constant term
// first, computed by exact division of x^m - 1 by the lower-level
// cyclotomic polynomials. Memoized per thread; callers hold plain copies.
inline const std::vector<int64_t>& CyclotomicPolynomial(int64_t m) {
  thread_local std::vector<std::vector<int64_t>> cache;
  if (static_cast<size_t>(m) >= cache.size()) cache.resize(m + 1);
  if (cache[m].empty()) cache[m] = internal::ComputeCyclotomic(m);
  return cache[m];
}

// Element of Z[zeta_m] in the power basis 1, zeta, ..., zeta^(phi(m)-1).
// The coefficient type is a template parameter so that Euler-factor
// accumulation can run over arbitrary-precision integers.
template <typename T = int64_t>
struct CycloInt {
  int64_t level = 0;
  std::vector<T> coeffs;  // size phi(level)

  friend bool operator==(const CycloInt&, const CycloInt&) = default;

  bool is_rational() const {
    for (size_t j = 1; j < coeffs.size(); ++j)
      if (coeffs[j] != 0) return false;
    return true;
  }
};

namespace internal {

// Reduces an integer polynomial in zeta_m (any length) to the power
// basis, in place of the leading coefficients.
template <typename T>
std::vector<T> ReduceModCyclotomic(std::vector<T> c, int64_t m) {
  const std::vector<int64_t>& cp = CyclotomicPolynomial(m);
  const size_t d = cp.size() - 1;
  if (c.size() < d) c.resize(d, T(0));
  for (size_t k = c.size() - 1; k >= d; --k) {
    const T t = c[k];
    if (t != 0) {
      c[k] = T(0);
      for (size_t j = 0; j < d; ++j) c[k - d + j] -= t * T(cp[j]);
    }
    if (k == d) break;
  }
  c.resize(d);
  return c;
}

}  // namespace internal

template <typename T = int64_t>
CycloInt<T> MakeCycloInt(int64_t m, std::vector<T> raw) {
  return CycloInt<T>{m, internal::ReduceModCyclotomic(std::move(raw), m)};
}

template <typename T>
CycloInt<T> CycloZero(int64_t m) {
  return CycloInt<T>{m, std::vector<T>(EulerPhi(m), T(0))};
}

// Widens (or narrows) the coefficient type; the value is unchanged.
template <typename To, typename From>
CycloInt<To> ConvertCoeffs(const CycloInt<From>& v) {
  CycloInt<To> out{v.level, std::vector<To>(v.coeffs.size())};
  for (size_t j = 0; j < v.coeffs.size(); ++j) out.coeffs[j] = To(v.coeffs[j]);
  return out;
}

template <typename T>
CycloInt<T> CycloOne(int64_t m) {
  CycloInt<T> one = CycloZero<T>(m);
  one.coeffs[0] = T(1);
  return one;
}

template <typename T>
CycloInt<T> Add(const CycloInt<T>& u, const CycloInt<T>& v) {
  if (u.level != v.level) Fail(errc::mismatched_level, "cyclotomic add");
  CycloInt<T> out = u;
  for (size_t j = 0; j < out.coeffs.size(); ++j) out.coeffs[j] += v.coeffs[j];
  return out;
}

template <typename T>
CycloInt<T> Sub(const CycloInt<T>& u, const CycloInt<T>& v) {
  if (u.level != v.level) Fail(errc::mismatched_level, "cyclotomic sub");
  CycloInt<T> out = u;
  for (size_t j = 0; j < out.coeffs.size(); ++j) out.coeffs[j] -= v.coeffs[j];
  return out;
}

template <typename T>
CycloInt<T> Mul(const CycloInt<T>& u, const CycloInt<T>& v) {
  if (u.level != v.level) Fail(errc::mismatched_level, "cyclotomic mul");
  std::vector<T> acc(u.coeffs.size() + v.coeffs.size() - 1, T(0));
  for (size_t i = 0; i < u.coeffs.size(); ++i) {
    if (u.coeffs[i] == 0) continue;
    for (size_t j = 0; j < v.coeffs.size(); ++j) {
      acc[i + j] += u.coeffs[i] * v.coeffs[j];
    }
  }
  return CycloInt<T>{u.level, internal::ReduceModCyclotomic(std::move(acc),
                                                            u.level)};
}

// Image under zeta -> zeta^k for a unit k, reduced to the power basis.
template <typename T>
CycloInt<T> GaloisApply(int64_t k, const CycloInt<T>& v) {
  const int64_t m = v.level;
  if (!IsUnit(k, m)) Fail(errc::non_unit, "galois exponent must be a unit");
  std::vector<T> acc(m, T(0));
  for (size_t j = 0; j < v.coeffs.size(); ++j) {
    acc[Mod(static_cast<int64_t>(j) * k, m)] += v.coeffs[j];
  }
  return CycloInt<T>{m, internal::ReduceModCyclotomic(std::move(acc), m)};
}

// Numerical value under zeta -> exp(2 pi i k / m).
template <typename T>
std::complex<double> Embed(const CycloInt<T>& v, int64_t k) {
  const double two_pi = 6.283185307179586476925286766559;
  std::complex<double> acc(0.0, 0.0);
  for (size_t j = 0; j < v.coeffs.size(); ++j) {
    const double ang =
        two_pi *
        static_cast<double>(Mod(k * static_cast<int64_t>(j), v.level)) /
        static_cast<double>(v.level);
    acc += static_cast<double>(v.coeffs[j]) *
           std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return acc;
}

// Relative tolerance of the absolute-value test in every embedding.
inline constexpr double kWeilRelTol = 1e-9;

// True when |v|^2 = N in every primitive embedding, within kWeilRelTol
// relative to max(1, N).
template <typename T>
bool WeilCheck(const CycloInt<T>& v, int64_t n) {
  const double target = static_cast<double>(n);
  const double tol = kWeilRelTol * std::max(1.0, target);
  for (int64_t k = 1; k < v.level; ++k) {
    if (std::gcd(k, v.level) != 1) continue;
    const std::complex<double> x = Embed(v, k);
    if (std::abs(std::norm(x) - target) > tol) return false;
  }
  return true;
}

}  // namespace cfq

#endif  // CFQ_CYCLOTOMIC_H_
