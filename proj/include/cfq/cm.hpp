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

#ifndef CFQ_CM_H_
#define CFQ_CM_H_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "cfq/errors.hpp"
#include "cfq/modarith.hpp"
#include "cfq/quotient.hpp"

namespace cfq {

// CM type of the new part: units h mod m with <ha> + <hb> < m, where <.>
// is the representative in 1..m-1. Defined for character triples, so
// labels with a common exponent divisor are accepted.
struct CMType {
  int64_t level = 0;
  std::vector<int64_t> members;  // sorted units

  friend bool operator==(const CMType&, const CMType&) = default;
};

struct Stabilizer {
  int64_t level = 0;
  std::vector<int64_t> members;  // sorted units, a subgroup

  friend bool operator==(const Stabilizer&, const Stabilizer&) = default;
};

// Grossencharacter infinity type: one exponent pair per conjugate pair
// {h, m-h} of embeddings, ordered by ascending smaller representative.
struct InfinityType {
  int64_t level = 0;
  std::vector<std::pair<int64_t, int64_t>> pairs;

  friend bool operator==(const InfinityType&, const InfinityType&) = default;
};

inline CMType ComputeCMType(const QuotientLabel& q) {
  CMType out{q.m, {}};
  for (int64_t h = 1; h < q.m; ++h) {
    if (std::gcd(h, q.m) != 1) continue;
    const int64_t ha = Mod(h * q.a, q.m);
    const int64_t hb = Mod(h * q.b, q.m);
    if (ha + hb < q.m) out.members.push_back(h);
  }
  return out;
}

inline Stabilizer ComputeStabilizer(const QuotientLabel& q) {
  const CMType h = ComputeCMType(q);
  Stabilizer out{q.m, {}};
  for (int64_t w = 1; w < q.m; ++w) {
    if (std::gcd(w, q.m) != 1) continue;
    std::vector<int64_t> scaled;
    scaled.reserve(h.members.size());
    for (int64_t x : h.members) scaled.push_back(Mod(w * x, q.m));
    std::sort(scaled.begin(), scaled.end());
    if (scaled == h.members) out.members.push_back(w);
  }
  return out;
}

// The new part is simple exactly when the stabilizer is trivial.
inline bool IsSimple(const QuotientLabel& q) {
  return ComputeStabilizer(q).members.size() == 1;
}

// Smallest unit t with t * cm_type(q) = cm_type(q2) setwise, or nullopt.
// Equality of CM types up to unit scaling detects isogeny of new parts.
inline std::optional<int64_t> IsogenyUnit(const QuotientLabel& q,
                                          const QuotientLabel& q2) {
  if (q.m != q2.m) Fail(errc::mismatched_level, "labels at different levels");
  const int64_t m = q.m;
  const CMType src = ComputeCMType(q);
  const CMType dst = ComputeCMType(q2);
  for (int64_t t = 1; t < m; ++t) {
    if (std::gcd(t, m) != 1) continue;
    std::vector<int64_t> scaled;
    scaled.reserve(src.members.size());
    for (int64_t x : src.members) scaled.push_back(Mod(t * x, m));
    std::sort(scaled.begin(), scaled.end());
    if (scaled == dst.members) return t;
  }
  return std::nullopt;
}

// Canonical representatives of the non-hyperelliptic classes at level m
// whose new part is isogenous to that of (m, 1, 1).
inline std::vector<QuotientLabel> HyperellipticIsogenyClasses(int64_t m) {
  std::vector<QuotientLabel> out;
  const QuotientLabel base{m, 1, 1};
  for (const QuotientLabel& q : EnumerateClasses(m)) {
    if (IsHyperelliptic(q)) continue;
    if (IsogenyUnit(base, q).has_value()) out.push_back(q);
  }
  return out;
}

// True when no subcover of q is non-hyperelliptic of lower genus. Genus
// at most 2 never obstructs. Hyperelliptic input is rejected.
inline bool IsMinimal(const QuotientLabel& q) {
  if (IsHyperelliptic(q))
    Fail(errc::hyperelliptic_input, "minimality applies to non-hyperelliptic");
  const int64_t g = Genus(q);
  for (int64_t d = 2; d < q.m; ++d) {
    if (q.m % d != 0) continue;
    QuotientLabel sub;
    try {
      sub = Subcover(q, d);
    } catch (const Error& e) {
      if (e.code() == errc::degenerate_subcover) continue;
      throw;
    }
    const int64_t gs = Genus(sub);
    if (gs < 3 || gs >= g) continue;
    if (!IsHyperelliptic(sub)) return false;
  }
  return true;
}

// Infinity type of the Jacobi-sum character attached to (m, a, b): the
// conjugate pair {h, m-h} contributes [1, 0] when h lies in the CM type
// and [0, 1] otherwise.
inline InfinityType ComputeInfinityType(const QuotientLabel& q) {
  const CMType h = ComputeCMType(q);
  InfinityType out{q.m, {}};
  for (int64_t x = 1; 2 * x < q.m; ++x) {
    if (std::gcd(x, q.m) != 1) continue;
    const bool in = std::binary_search(h.members.begin(), h.members.end(), x);
    out.pairs.emplace_back(in ? 1 : 0, in ? 0 : 1);
  }
  return out;
}

inline InfinityType ProductInfinityType(const std::vector<InfinityType>& v) {
  if (v.empty()) Fail(errc::mismatched_level, "empty infinity type product");
  InfinityType out = v.front();
  for (size_t n = 1; n < v.size(); ++n) {
    if (v[n].level != out.level || v[n].pairs.size() != out.pairs.size())
      Fail(errc::mismatched_level, "infinity types at different levels");
    for (size_t k = 0; k < out.pairs.size(); ++k) {
      out.pairs[k].first += v[n].pairs[k].first;
      out.pairs[k].second += v[n].pairs[k].second;
    }
  }
  return out;
}

}  // namespace cfq

#endif  // CFQ_CM_H_
