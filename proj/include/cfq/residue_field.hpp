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

#ifndef CFQ_RESIDUE_FIELD_H_
#define CFQ_RESIDUE_FIELD_H_

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "cfq/errors.hpp"
#include "cfq/fppoly.hpp"
#include "cfq/modarith.hpp"

namespace cfq {

// Size cap for residue fields in character sums; past it, double-precision
// embedding checks lose their margin and full-field sums get slow.
inline constexpr int64_t kResidueFieldCap = 1000000;

// Table-based character evaluation is used up to this field size.
inline constexpr int64_t kDlogTableCap = int64_t{1} << 20;

// One prime of Z[zeta_m] above p, identified with a monic irreducible
// factor g of the m-th cyclotomic polynomial mod p. The class of x in
// F_p[x]/(g) realizes zeta_m with exact multiplicative order m.
struct ResidueFieldSpec {
  int64_t m = 0;
  int64_t p = 0;
  int64_t f = 0;          // residue degree = order of p mod m
  fppoly::Poly g;         // defining polynomial, constant first
  int64_t index = 0;      // position in the sorted factor list
  int64_t N = 0;          // p^f

  friend bool operator==(const ResidueFieldSpec&,
                         const ResidueFieldSpec&) = default;
};

// One spec per irreducible factor of the m-th cyclotomic polynomial mod
// p, phi(m)/f of them, ordered by sorted coefficient lists.
inline std::vector<ResidueFieldSpec> ResidueFields(int64_t m, int64_t p) {
  if (m % p == 0) Fail(errc::ramified_prime, "p divides m");
  const std::vector<fppoly::Poly> factors = fppoly::FactorCyclotomicModP(m, p);
  const int64_t f = fppoly::Degree(factors.front());
  int64_t n = 1;
  for (int64_t t = 0; t < f; ++t) n *= p;
  std::vector<ResidueFieldSpec> out;
  out.reserve(factors.size());
  for (size_t i = 0; i < factors.size(); ++i) {
    out.push_back(ResidueFieldSpec{m, p, f, factors[i],
                                   static_cast<int64_t>(i), n});
  }
  return out;
}

// Arithmetic in F_p[x]/(g) with elements packed as base-p integers, digit
// i holding the coefficient of x^i.
class ResidueField {
 public:
  explicit ResidueField(const ResidueFieldSpec& spec)
      : p_(spec.p), f_(spec.f), n_(spec.N), g_(spec.g) {}

  int64_t p() const { return p_; }
  int64_t f() const { return f_; }
  int64_t size() const { return n_; }
  int64_t zero() const { return 0; }
  int64_t one() const { return 1; }

  // The class of x, the canonical m-th root of unity.
  int64_t x_class() const {
    if (f_ == 1) return Mod(-g_[0], p_);
    return p_;  // digits (0, 1, 0, ...)
  }

  int64_t Add(int64_t u, int64_t v) const {
    int64_t out = 0;
    int64_t scale = 1;
    for (int64_t i = 0; i < f_; ++i) {
      out += ((u % p_ + v % p_) % p_) * scale;
      u /= p_;
      v /= p_;
      scale *= p_;
    }
    return out;
  }

  int64_t Sub(int64_t u, int64_t v) const {
    int64_t out = 0;
    int64_t scale = 1;
    for (int64_t i = 0; i < f_; ++i) {
      out += Mod(u % p_ - v % p_, p_) * scale;
      u /= p_;
      v /= p_;
      scale *= p_;
    }
    return out;
  }

  int64_t Mul(int64_t u, int64_t v) const {
    std::vector<int64_t> acc(2 * f_ - 1, 0);
    std::vector<int64_t> ud(f_), vd(f_);
    for (int64_t i = 0; i < f_; ++i) {
      ud[i] = u % p_;
      u /= p_;
      vd[i] = v % p_;
      v /= p_;
    }
    for (int64_t i = 0; i < f_; ++i) {
      if (ud[i] == 0) continue;
      for (int64_t j = 0; j < f_; ++j) {
        acc[i + j] = (acc[i + j] + ud[i] * vd[j]) % p_;
      }
    }
    for (int64_t d = 2 * f_ - 2; d >= f_; --d) {
      const int64_t c = acc[d];
      if (c == 0) continue;
      acc[d] = 0;
      for (int64_t j = 0; j < f_; ++j) {
        acc[d - f_ + j] = Mod(acc[d - f_ + j] - c * g_[j], p_);
      }
    }
    int64_t out = 0;
    for (int64_t i = f_ - 1; i >= 0; --i) out = out * p_ + acc[i];
    return out;
  }

  int64_t Pow(int64_t u, int64_t e) const {
    int64_t r = one();
    while (e > 0) {
      if (e & 1) r = Mul(r, u);
      u = Mul(u, u);
      e >>= 1;
    }
    return r;
  }

 private:
  int64_t p_;
  int64_t f_;
  int64_t n_;
  fppoly::Poly g_;
};

// Power residue character of order m on the residue field: chi(z) is the
// unique power of the class of x equal to z^((N-1)/m). Evaluation goes
// through a full discrete-log table for fields up to kDlogTableCap and
// through per-element exponentiation with root matching otherwise.
class PowerResidueChar {
 public:
  PowerResidueChar(const ResidueFieldSpec& spec, const ResidueField& field)
      : m_(spec.m), field_(field) {
    const int64_t n = field.size();
    step_ = (n - 1) / m_;
    if ((n - 1) % m_ != 0)
      Fail(errc::ramified_prime, "field order incompatible with level");
    // Powers of the canonical root, for root matching.
    const int64_t zeta = field.x_class();
    int64_t cur = field.one();
    for (int64_t k = 0; k < m_; ++k) {
      root_exp_[cur] = k;
      cur = field.Mul(cur, zeta);
    }
    if (cur != field.one())
      Fail(errc::ramified_prime, "class of x does not have order m");
    if (n <= kDlogTableCap) {
      BuildTable();
    }
  }

  // Character exponent k in 0..m-1 with chi(z) = zeta^k; z must be a
  // nonzero field element.
  int64_t ChiExp(int64_t z) const {
    if (z == field_.zero()) Fail(errc::zero_argument, "chi of zero");
    if (!table_.empty()) return table_[z];
    const int64_t w = field_.Pow(z, step_);
    const auto it = root_exp_.find(w);
    if (it == root_exp_.end())
      Fail(errc::zero_argument, "character value off the root cycle");
    return it->second;
  }

  const ResidueField& field() const { return field_; }
  int64_t level() const { return m_; }

 private:
  void BuildTable() {
    const int64_t n = field_.size();
    // Find a multiplicative generator by order checking.
    std::vector<int64_t> prime_factors;
    int64_t r = n - 1;
    for (int64_t d = 2; d * d <= r; ++d) {
      if (r % d == 0) {
        prime_factors.push_back(d);
        while (r % d == 0) r /= d;
      }
    }
    if (r > 1) prime_factors.push_back(r);
    int64_t gen = 0;
    for (int64_t cand = 2; cand < n; ++cand) {
      bool ok = true;
      for (int64_t q : prime_factors) {
        if (field_.Pow(cand, (n - 1) / q) == field_.one()) {
          ok = false;
          break;
        }
      }
      if (ok) {
        gen = cand;
        break;
      }
    }
    // Walk the full cycle once: table_[z] = chi exponent of z.
    const int64_t e0 = [&] {
      // dlog of the canonical root along the generator cycle.
      int64_t cur = field_.one();
      for (int64_t e = 0; e < n - 1; ++e) {
        if (cur == field_.x_class()) return e;
        cur = field_.Mul(cur, gen);
      }
      Fail(errc::ramified_prime, "root not in multiplicative group");
    }();
    const int64_t w = e0 / step_;
    const int64_t winv = InverseMod(w, m_);
    table_.assign(n, 0);
    int64_t cur = field_.one();
    for (int64_t e = 0; e < n - 1; ++e) {
      table_[cur] = Mod(e * winv, m_);
      cur = field_.Mul(cur, gen);
    }
  }

  int64_t m_;
  const ResidueField& field_;
  int64_t step_;
  std::unordered_map<int64_t, int64_t> root_exp_;
  std::vector<int64_t> table_;
};

}  // namespace cfq

#endif  // CFQ_RESIDUE_FIELD_H_
