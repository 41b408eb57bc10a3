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

#ifndef CFQ_JACOBI_H_
#define CFQ_JACOBI_H_

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <utility>
#include <vector>

#include "cfq/cyclotomic.hpp"
#include "cfq/errors.hpp"
#include "cfq/modarith.hpp"
#include "cfq/quotient.hpp"
#include "cfq/residue_field.hpp"

namespace cfq {

using BigInt = boost::multiprecision::cpp_int;

// Jacobi sums over one residue field, sharing the character table across
// exponent pairs.
class JacobiEvaluator {
 public:
  explicit JacobiEvaluator(const ResidueFieldSpec& spec)
      : spec_(spec), field_(spec), chi_(spec, field_) {}

  // chi_ refers to field_, so the evaluator must stay in place.
  JacobiEvaluator(const JacobiEvaluator&) = delete;
  JacobiEvaluator& operator=(const JacobiEvaluator&) = delete;

  const ResidueFieldSpec& spec() const { return spec_; }
  const ResidueField& field() const { return field_; }
  const PowerResidueChar& chi() const { return chi_; }

  // tau_{a,b} = -(sum over z outside {0,1} of chi^a(z) chi^b(1-z)).
  CycloInt<int64_t> Sum(int64_t a, int64_t b) const {
    const QuotientLabel t = ValidateCharTriple(spec_.m, a, b);
    const int64_t m = spec_.m;
    std::vector<int64_t> counts(m, 0);
    const int64_t one = field_.one();
    for (int64_t z = 1; z < field_.size(); ++z) {
      if (z == one) continue;
      const int64_t k =
          Mod(t.a * chi_.ChiExp(z) + t.b * chi_.ChiExp(field_.Sub(one, z)), m);
      counts[k] += 1;
    }
    std::vector<int64_t> raw(m, 0);
    for (int64_t k = 0; k < m; ++k) raw[k] = -counts[k];
    return MakeCycloInt<int64_t>(m, std::move(raw));
  }

 private:
  ResidueFieldSpec spec_;
  ResidueField field_;
  PowerResidueChar chi_;
};

inline CycloInt<int64_t> JacobiSum(const ResidueFieldSpec& spec, int64_t a,
                                   int64_t b) {
  return JacobiEvaluator(spec).Sum(a, b);
}

// Euler factor at p of a product of Jacobi-sum Hecke characters: the
// polynomial prod over residue fields of (1 - tau T^f) where tau is the
// product of the requested Jacobi sums on that field.
struct LocalFactor {
  int64_t m = 0;
  int64_t p = 0;
  std::vector<BigInt> poly;  // coefficient of T^k at position k

  friend bool operator==(const LocalFactor&, const LocalFactor&) = default;
};

// Checks p against the residue-field size cap and returns N = p^f.
inline int64_t ResidueFieldSize(int64_t m, int64_t p) {
  if (p < 2) Fail(errc::invalid_range, "p must be a prime");
  if (m % p == 0) Fail(errc::ramified_prime, "p divides m");
  const int64_t f = OrderMod(p, m);
  int64_t n = 1;
  for (int64_t t = 0; t < f; ++t) {
    if (n > kResidueFieldCap / p)
      Fail(errc::invalid_range, "residue field exceeds size cap");
    n *= p;
  }
  return n;
}

// Expands prod over specs of (1 - tau_spec T^f) and certifies that every
// T-coefficient is a rational integer.
inline LocalFactor AssembleLocalFactor(int64_t m, int64_t p, int64_t f,
                                       const std::vector<CycloInt<BigInt>>&
                                           spec_products) {
  std::vector<CycloInt<BigInt>> tpoly{CycloOne<BigInt>(m)};
  for (const CycloInt<BigInt>& tau : spec_products) {
    std::vector<CycloInt<BigInt>> next(tpoly.size() + f, CycloZero<BigInt>(m));
    for (size_t j = 0; j < tpoly.size(); ++j) {
      next[j] = Add(next[j], tpoly[j]);
      next[j + f] = Sub(next[j + f], Mul(tpoly[j], tau));
    }
    tpoly = std::move(next);
  }
  LocalFactor out{m, p, {}};
  out.poly.reserve(tpoly.size());
  for (const CycloInt<BigInt>& c : tpoly) {
    if (!c.is_rational())
      Fail(errc::non_integral_coefficients,
           "local factor coefficient is not a rational integer");
    out.poly.push_back(c.coeffs[0]);
  }
  return out;
}

inline LocalFactor ComputeLocalFactor(
    int64_t m, const std::vector<std::pair<int64_t, int64_t>>& chars,
    int64_t p) {
  if (chars.empty())
    Fail(errc::invalid_range, "need at least one character pair");
  for (const auto& [a, b] : chars) ValidateCharTriple(m, a, b);
  ResidueFieldSize(m, p);
  std::vector<CycloInt<BigInt>> spec_products;
  int64_t f = 0;
  for (const ResidueFieldSpec& spec : ResidueFields(m, p)) {
    const JacobiEvaluator eval(spec);
    CycloInt<BigInt> tau = CycloOne<BigInt>(m);
    for (const auto& [a, b] : chars) {
      tau = Mul(tau, ConvertCoeffs<BigInt>(eval.Sum(a, b)));
    }
    spec_products.push_back(std::move(tau));
    f = spec.f;
  }
  return AssembleLocalFactor(m, p, f, spec_products);
}

}  // namespace cfq

#endif  // CFQ_JACOBI_H_
