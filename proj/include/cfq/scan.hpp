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

#ifndef CFQ_SCAN_H_
#define CFQ_SCAN_H_

#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "cfq/errors.hpp"
#include "cfq/modarith.hpp"
#include "cfq/quotient.hpp"

namespace cfq {

// Automorphism sigma_{i,j}: (x, y) -> (zeta^i x, zeta^j y), i and j taken
// as residues in 1..m (m plays the role of 0).
struct AutLabel {
  int64_t i = 0;
  int64_t j = 0;

  friend bool operator==(const AutLabel&, const AutLabel&) = default;
  friend auto operator<=>(const AutLabel&, const AutLabel&) = default;
};

// Multiset of residues mod m, stored as per-residue counts.
struct ResidueMultiset {
  int64_t level = 0;
  std::vector<int64_t> counts;

  int64_t cardinality() const {
    int64_t n = 0;
    for (int64_t c : counts) n += c;
    return n;
  }
  bool contains_zero() const { return !counts.empty() && counts[0] > 0; }

  friend bool operator==(const ResidueMultiset&,
                         const ResidueMultiset&) = default;
};

struct TangentSpectrum {
  QuotientLabel quotient;
  AutLabel aut;
  ResidueMultiset exponents;
  bool contains_unit = false;
};

// Exponents of sigma_{i,j} on the eigenbasis of V: (i r + j s) mod m per
// basis element. Cardinality equals the genus.
inline ResidueMultiset VExponents(const QuotientLabel& q, const AutLabel& a) {
  ResidueMultiset out{q.m, std::vector<int64_t>(q.m, 0)};
  for (const auto& [r, s] : DifferentialBasis(q)) {
    ++out.counts[Mod(a.i * r + a.j * s, q.m)];
  }
  return out;
}

inline ResidueMultiset DualExponents(const ResidueMultiset& v) {
  ResidueMultiset out{v.level, std::vector<int64_t>(v.level, 0)};
  for (int64_t e = 0; e < v.level; ++e) {
    out.counts[Mod(-e, v.level)] += v.counts[e];
  }
  return out;
}

namespace internal {

// Expands a count vector into an explicit element list.
inline std::vector<int64_t> Elements(const ResidueMultiset& v) {
  std::vector<int64_t> out;
  out.reserve(v.cardinality());
  for (int64_t e = 0; e < v.level; ++e)
    for (int64_t c = 0; c < v.counts[e]; ++c) out.push_back(e);
  return out;
}

}  // namespace internal

// Sums over all k-element position subsets of v. Cardinality C(n, k);
// k = 0 yields {0}.
inline ResidueMultiset WedgeExponents(const ResidueMultiset& v, int64_t k) {
  const int64_t n = v.cardinality();
  if (k < 0 || k > n) Fail(errc::k_out_of_range, "wedge degree out of range");
  const int64_t m = v.level;
  const std::vector<int64_t> elems = internal::Elements(v);
  ResidueMultiset out{m, std::vector<int64_t>(m, 0)};
  std::vector<int64_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k == 0) {
    out.counts[0] = 1;
    return out;
  }
  while (true) {
    int64_t sum = 0;
    for (int64_t i : idx) sum += elems[i];
    ++out.counts[Mod(sum, m)];
    int64_t pos = k - 1;
    while (pos >= 0 && idx[pos] == n - k + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int64_t t = pos + 1; t < k; ++t) idx[t] = idx[t - 1] + 1;
  }
  return out;
}

// Tangent exponents of the intermediate Jacobian at sigma: the pairwise
// sums of wedge(V, g-2) with wedge(V*, g-1), together with the pairwise
// sums of wedge(V, g-3) with wedge(V*, g). Cardinality is
// C(g,2) g + C(g,3).
inline TangentSpectrum TangentExponents(const QuotientLabel& q,
                                        const AutLabel& a) {
  const int64_t g = Genus(q);
  if (g < 3) Fail(errc::genus_too_small, "tangent spectrum needs genus >= 3");
  const int64_t m = q.m;
  const ResidueMultiset v = VExponents(q, a);
  const ResidueMultiset vd = DualExponents(v);
  TangentSpectrum out;
  out.quotient = q;
  out.aut = a;
  out.exponents = ResidueMultiset{m, std::vector<int64_t>(m, 0)};
  const auto accumulate = [&](const ResidueMultiset& lhs,
                              const ResidueMultiset& rhs) {
    for (int64_t x = 0; x < m; ++x) {
      if (lhs.counts[x] == 0) continue;
      for (int64_t y = 0; y < m; ++y) {
        if (rhs.counts[y] == 0) continue;
        out.exponents.counts[Mod(x + y, m)] += lhs.counts[x] * rhs.counts[y];
      }
    }
  };
  accumulate(WedgeExponents(v, g - 2), WedgeExponents(vd, g - 1));
  accumulate(WedgeExponents(v, g - 3), WedgeExponents(vd, g));
  out.contains_unit = out.exponents.contains_zero();
  return out;
}

namespace internal {

// Counting form of the residue-0 membership test, equivalent to
// TangentExponents(...).contains_unit. A (g-2)-subset sum of V plus a
// (g-1)-subset sum of V* is S - e_i - e_j + e_k - S, so the first summand
// hits 0 exactly when e_i + e_j = e_k for distinct positions i, j and an
// arbitrary position k; the second summand hits 0 exactly when a distinct
// position triple sums to 0.
inline bool TangentHasZero(int64_t m, const std::vector<int64_t>& exps) {
  const size_t g = exps.size();
  std::vector<int32_t> cnt(m, 0);
  for (int64_t e : exps) ++cnt[e];
  for (size_t i = 0; i < g; ++i) {
    for (size_t j = i + 1; j < g; ++j) {
      if (cnt[Mod(exps[i] + exps[j], m)] > 0) return true;
      const int64_t t = Mod(-exps[i] - exps[j], m);
      int32_t need = 1;
      if (exps[i] == t) ++need;
      if (exps[j] == t) ++need;
      if (cnt[t] >= need) return true;
    }
  }
  return false;
}

}  // namespace internal

inline bool IsBeauvilleWitness(const QuotientLabel& q, const AutLabel& a) {
  const int64_t g = Genus(q);
  if (g < 3) Fail(errc::genus_too_small, "witness test needs genus >= 3");
  std::vector<int64_t> exps;
  exps.reserve(g);
  for (const auto& [r, s] : DifferentialBasis(q)) {
    exps.push_back(Mod(a.i * r + a.j * s, q.m));
  }
  return !internal::TangentHasZero(q.m, exps);
}

// Lexicographically first (i, j) in 1..m squared that is a witness, by a
// literal pass over all automorphisms.
inline std::optional<AutLabel> FirstWitness(const QuotientLabel& q) {
  const int64_t g = Genus(q);
  if (g < 3) Fail(errc::genus_too_small, "witness scan needs genus >= 3");
  const auto basis = DifferentialBasis(q);
  std::vector<int64_t> exps(basis.size());
  for (int64_t i = 1; i <= q.m; ++i) {
    for (int64_t j = 1; j <= q.m; ++j) {
      for (size_t n = 0; n < basis.size(); ++n) {
        exps[n] = Mod(i * basis[n].first + j * basis[n].second, q.m);
      }
      if (!internal::TangentHasZero(q.m, exps)) return AutLabel{i, j};
    }
  }
  return std::nullopt;
}

// Same answer as FirstWitness through the residue collapse: the exponent
// list of sigma_{i,j} depends only on u = (i a + j b) mod m, because any
// solution (i, j) of i a + j b = u acts identically on every basis pair
// (r, s) with b r = a s mod m.
inline std::optional<AutLabel> FirstWitnessCollapsed(const QuotientLabel& q) {
  const int64_t g = Genus(q);
  if (g < 3) Fail(errc::genus_too_small, "witness scan needs genus >= 3");
  const int64_t m = q.m;
  const auto basis = DifferentialBasis(q);
  std::vector<bool> witness_u(m, false);
  std::vector<int64_t> exps(basis.size());
  for (int64_t u = 0; u < m; ++u) {
    // Any (i, j) in 1..m with i a + j b = u mod m.
    std::optional<AutLabel> rep;
    for (int64_t i = 1; i <= m && !rep; ++i) {
      const int64_t rem = Mod(u - i * q.a, m);
      for (int64_t j = 1; j <= m; ++j) {
        if (Mod(j * q.b, m) == rem) {
          rep = AutLabel{i, j};
          break;
        }
      }
    }
    if (!rep) continue;
    for (size_t n = 0; n < basis.size(); ++n) {
      exps[n] = Mod(rep->i * basis[n].first + rep->j * basis[n].second, m);
    }
    witness_u[u] = !internal::TangentHasZero(m, exps);
  }
  for (int64_t i = 1; i <= m; ++i) {
    for (int64_t j = 1; j <= m; ++j) {
      if (witness_u[Mod(i * q.a + j * q.b, m)]) return AutLabel{i, j};
    }
  }
  return std::nullopt;
}

}  // namespace cfq

#endif  // CFQ_SCAN_H_
