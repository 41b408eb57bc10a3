# Copyright 2026 The cfq Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#
# Reference implementations used to freeze expected values for the C++ test
# suite.  Everything here is written for clarity, not speed, and is kept
# independent of the C++ sources: when a C++ test hard-codes a value, the
# scripts next to this module are the place it came from.

import itertools
import math
from fractions import Fraction


def red(x, m):
    """Representative of x mod m in 1..m-1 (0 means divisible)."""
    return x % m


def units(m):
    return [t for t in range(1, m) if math.gcd(t, m) == 1]


def valid(m, a, b):
    a %= m
    b %= m
    if a == 0 or b == 0:
        return False
    if (a + b) % m == 0:
        return False
    # literal four-argument form; equals gcd(m, a, b)
    return math.gcd(math.gcd(math.gcd(m, a), b), a + b) == 1


def third(m, a, b):
    return (-a - b) % m


def triple(m, a, b):
    return (a % m, b % m, third(m, a, b))


def genus(m, a, b):
    c = third(m, a, b)
    return (m - (math.gcd(m, a) + math.gcd(m, b) + math.gcd(m, c)) + 2) // 2


def equivalence_unit(m, a, b, a2, b2):
    """Smallest unit t with t*(a,b,c) = (a2,b2,c2) as multisets, else None."""
    src = sorted(triple(m, a, b))
    dst = sorted(triple(m, a2, b2))
    for t in units(m):
        if sorted((t * x) % m for x in src) == dst:
            return t
    return None


def canonical(m, a, b):
    best = None
    tri = triple(m, a, b)
    for t in units(m):
        cand = tuple(sorted((t * x) % m for x in tri))
        if best is None or cand < best:
            best = cand
    return (m, best[0], best[1])


def is_hyperelliptic(m, a, b):
    if equivalence_unit(m, a, b, 1, 1) is not None:
        return True
    if m % 2 == 0 and equivalence_unit(m, a, b, 1, m // 2) is not None:
        return True
    return False


def differential_basis(m, a, b):
    out = []
    for r in range(1, m):
        for s in range(1, m - r):
            if (b * r - a * s) % m == 0:
                out.append((r, s))
    return out


def enumerate_classes(m):
    seen = set()
    for a in range(1, m):
        for b in range(1, m):
            if valid(m, a, b):
                seen.add(canonical(m, a, b))
    return sorted(seen)


def subcover(m, a, b, d):
    """Image label under y -> y^d for d | m; None when an exponent dies."""
    A, B, C = (d * a) % m, (d * b) % m, (d * third(m, a, b)) % m
    if A == 0 or B == 0 or C == 0:
        return None
    e = math.gcd(math.gcd(m, A), math.gcd(B, C))
    return (m // e, A // e, B // e)


# --- automorphism eigenvalue bookkeeping -----------------------------------

def diff_exponents(m, a, b, i, j):
    return [(i * r + j * s) % m for (r, s) in differential_basis(m, a, b)]


def wedge_sums(elems, k, m):
    return [sum(c) % m for c in itertools.combinations(elems, k)]


def tangent_has_unit_eigenvalue(m, exps):
    """True iff residue 0 appears in the induced tangent multiset."""
    g = len(exps)
    v = exps
    vd = [(-x) % m for x in exps]
    s1a = wedge_sums(v, g - 2, m)
    s1b = wedge_sums(vd, g - 1, m)
    for x in s1a:
        for y in s1b:
            if (x + y) % m == 0:
                return True
    s2a = wedge_sums(v, g - 3, m)
    s2b = wedge_sums(vd, g, m)
    for x in s2a:
        for y in s2b:
            if (x + y) % m == 0:
                return True
    return False


def tangent_zero_fast(m, exps):
    """Counting form of the residue-0 test.

    Complements: a (g-2)-subset sum is S - e_i - e_j over the distinct
    complement pair, a (g-1)-cosubset sum of the dual is e_k - S, so the
    first summand hits 0 iff e_i + e_j = e_k for distinct i, j and any k.
    The second summand hits 0 iff some distinct triple sums to 0.
    """
    g = len(exps)
    cnt = [0] * m
    for x in exps:
        cnt[x] += 1
    for i in range(g):
        for j in range(i + 1, g):
            if cnt[(exps[i] + exps[j]) % m] > 0:
                return True
            t = (-exps[i] - exps[j]) % m
            need = 1 + (exps[i] == t) + (exps[j] == t)
            if cnt[t] >= need:
                return True
    return False


def witness_collapsed_fast(m, a, b):
    """witness_collapsed with the counting tangent test."""
    if genus(m, a, b) < 3:
        return None
    basis = differential_basis(m, a, b)
    good = set()
    for u in range(m):
        i, j = solve_iu(m, a, b, u)
        exps = [(i * r + j * s) % m for (r, s) in basis]
        if not tangent_zero_fast(m, exps):
            good.add(u)
    if not good:
        return None
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            if (i * a + j * b) % m in good:
                return (i, j)
    return None


def witness_full_scan(m, a, b):
    """First (i,j) in [1..m]^2, lexicographic, whose tangent avoids residue 0."""
    if genus(m, a, b) < 3:
        return None
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            exps = diff_exponents(m, a, b, i, j)
            if not tangent_has_unit_eigenvalue(m, exps):
                return (i, j)
    return None


def witness_collapsed(m, a, b):
    """Same answer as the full scan via the i*a+j*b residue collapse."""
    if genus(m, a, b) < 3:
        return None
    good = set()
    for u in range(m):
        i, j = solve_iu(m, a, b, u)
        exps = diff_exponents(m, a, b, i, j)
        if not tangent_has_unit_eigenvalue(m, exps):
            good.add(u)
    if not good:
        return None
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            if (i * a + j * b) % m in good:
                return (i, j)
    return None


def solve_iu(m, a, b, u):
    for i in range(1, m + 1):
        r = (u - i * a) % m
        if r % math.gcd(b, m) == 0:
            for j in range(1, m + 1):
                if (j * b) % m == r % m:
                    return (i, j)
    raise AssertionError("no solution; gcd(a,b,m) must be 1")


# --- CM types ---------------------------------------------------------------

def cm_type(m, a, b):
    return sorted(h for h in units(m) if (h * a) % m + (h * b) % m < m)


def stabilizer(m, a, b):
    H = set(cm_type(m, a, b))
    return sorted(t for t in units(m) if {(t * h) % m for h in H} == H)


def isogeny_unit(m, a, b, a2, b2):
    H = cm_type(m, a, b)
    H2 = set(cm_type(m, a2, b2))
    for t in units(m):
        if {(t * h) % m for h in H} == H2:
            return t
    return None


def infinity_type(m, a, b):
    H = set(cm_type(m, a, b))
    out = []
    for h in range(1, m // 2 + 1):
        if math.gcd(h, m) != 1:
            continue
        out.append([1, 0] if h in H else [0, 1])
    return out


def is_minimal(m, a, b):
    g = genus(m, a, b)
    for d in range(2, m):
        if m % d != 0:
            continue
        sub = subcover(m, a, b, d)
        if sub is None:
            continue
        sm, sa, sb = sub
        if genus(sm, sa, sb) >= 3 and genus(sm, sa, sb) < g \
                and not is_hyperelliptic(sm, sa, sb):
            return False
    return True
