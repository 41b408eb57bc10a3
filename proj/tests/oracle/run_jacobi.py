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
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
# implied. See the License for the specific language governing
# permissions and limitations under the License.

"""Reference computation of Jacobi sums and local Euler factors.

Residue fields are modeled as F_p[x]/(g) for g an irreducible factor of
the m-th cyclotomic polynomial mod p, factors sorted by coefficient
list. The m-th root of unity is the class of x. Values frozen here seed
the C++ test expectations.
"""

import cmath
import math
from itertools import product as iproduct

from sympy import GF, Poly, Symbol, cyclotomic_poly, factorint

X = Symbol("x")


def phi(m):
    return sum(1 for k in range(1, m + 1) if math.gcd(k, m) == 1)


def cyclo_coeffs(m):
    """Integer coefficients of the m-th cyclotomic polynomial, constant first."""
    return [int(c) for c in reversed(Poly(cyclotomic_poly(m, X), X).all_coeffs())]


def cyclo_factors_mod_p(m, p):
    """Monic irreducible factors of the m-th cyclotomic polynomial mod p,
    each as a constant-first coefficient list, sorted."""
    poly = Poly(cyclotomic_poly(m, X), X, domain=GF(p))
    fl = poly.factor_list()[1]
    out = []
    for f, mult in fl:
        assert mult == 1, "cyclotomic polynomial must be squarefree mod p"
        coeffs = [int(c) % p for c in reversed(f.all_coeffs())]
        out.append(coeffs)
    out.sort()
    return out


class ResidueField:
    """F_p[x]/(g), elements as constant-first tuples of length deg(g)."""

    def __init__(self, p, g):
        self.p = p
        self.g = list(g)
        self.f = len(g) - 1
        self.N = p ** self.f

    def mul(self, u, v):
        p, f, g = self.p, self.f, self.g
        acc = [0] * (2 * f - 1)
        for i, ui in enumerate(u):
            if ui:
                for j, vj in enumerate(v):
                    acc[i + j] = (acc[i + j] + ui * vj) % p
        for d in range(2 * f - 2, f - 1, -1):
            c = acc[d]
            if c:
                acc[d] = 0
                for j in range(f):
                    acc[d - f + j] = (acc[d - f + j] - c * g[j]) % p
        return tuple(acc[:f])

    def pow(self, u, e):
        r = tuple([1] + [0] * (self.f - 1))
        b = u
        while e:
            if e & 1:
                r = self.mul(r, b)
            b = self.mul(b, b)
            e >>= 1
        return r

    def elements(self):
        for tup in iproduct(range(self.p), repeat=self.f):
            yield tup

    def one(self):
        return tuple([1] + [0] * (self.f - 1))

    def zero(self):
        return tuple([0] * self.f)

    def x_class(self):
        if self.f == 1:
            return ((-self.g[0]) % self.p,)
        return tuple([0, 1] + [0] * (self.f - 2))

    def order(self, u):
        n = self.N - 1
        o = n
        for q in factorint(n):
            while o % q == 0 and self.pow(u, o // q) == self.one():
                o //= q
        return o

    def generator(self):
        for cand in self.elements():
            if cand == self.zero():
                continue
            if self.order(cand) == self.N - 1:
                return cand
        raise AssertionError("no generator")


class CharTable:
    """Power residue character of order m on F^x via a discrete log table."""

    def __init__(self, field, m):
        self.field = field
        self.m = m
        N = field.N
        assert (N - 1) % m == 0
        h = field.generator()
        dlog = {}
        cur = field.one()
        for e in range(N - 1):
            dlog[cur] = e
            cur = field.mul(cur, h)
        e0 = dlog[field.x_class()]
        step = (N - 1) // m
        assert e0 % step == 0
        w = e0 // step
        assert math.gcd(w, m) == 1
        self.winv = pow(w, -1, m)
        self.dlog = dlog

    def chi_exp(self, z):
        """k with z^((N-1)/m) = x_class^k."""
        return (self.dlog[z] * self.winv) % self.m


def reduce_mod_cyclo(coeffs, m):
    """Reduce an integer polynomial in zeta_m to the power basis of length phi(m)."""
    cp = cyclo_coeffs(m)
    d = len(cp) - 1
    c = list(coeffs)
    for k in range(len(c) - 1, d - 1, -1):
        t = c[k]
        if t:
            c[k] = 0
            for j in range(d):
                c[k - d + j] -= t * cp[j]
    c = c[:d]
    while len(c) < d:
        c.append(0)
    return c


def jacobi_sum(field, chart, m, a, b):
    """-sum over z != 0,1 of chi^a(z) chi^b(1-z), as a power basis vector."""
    counts = [0] * m
    one = field.one()
    zero = field.zero()
    p = field.p
    for z in field.elements():
        if z == zero or z == one:
            continue
        omz = tuple((o - zi) % p for o, zi in zip(one, z))
        k = (a * chart.chi_exp(z) + b * chart.chi_exp(omz)) % m
        counts[k] += 1
    return reduce_mod_cyclo([-c for c in counts], m)


def weil_check(vec, m, N, rtol=1e-9):
    for k in range(1, m):
        if math.gcd(k, m) != 1:
            continue
        z = cmath.exp(2j * cmath.pi * k / m)
        val = sum(c * z ** j for j, c in enumerate(vec))
        if abs(abs(val) ** 2 - N) > rtol * max(1.0, N):
            return False
    return True


def galois_apply(k, vec, m):
    """zeta^j -> zeta^(jk mod m), collected then reduced."""
    acc = [0] * m
    for j, c in enumerate(vec):
        acc[(j * k) % m] += c
    return reduce_mod_cyclo(acc, m)


def cyclo_mul(u, v, m):
    acc = [0] * (len(u) + len(v) - 1)
    for i, ui in enumerate(u):
        if ui:
            for j, vj in enumerate(v):
                acc[i + j] += ui * vj
    return reduce_mod_cyclo(acc, m)


def local_factor(m, chars, p):
    """Product over specs of (1 - (prod_i tau_i) T^f) as integer coefficients."""
    d = phi(m)
    factors = cyclo_factors_mod_p(m, p)
    f = len(factors[0]) - 1
    polyT = [[0] * d for _ in range(d + 1)]
    polyT[0][0] = 1
    cur_deg = 0
    for g in factors:
        field = ResidueField(p, g)
        chart = CharTable(field, m)
        tau = [1] + [0] * (d - 1)
        for (a, b) in chars:
            tau = cyclo_mul(tau, jacobi_sum(field, chart, m, a, b), m)
        nxt = [[0] * d for _ in range(d + 1)]
        for td in range(cur_deg + 1):
            if any(polyT[td]):
                for j in range(d):
                    nxt[td][j] += polyT[td][j]
                shifted = cyclo_mul(polyT[td], tau, m)
                for j in range(d):
                    nxt[td + f][j] -= shifted[j]
        polyT = nxt
        cur_deg += f
    coeffs = []
    for td in range(cur_deg + 1):
        vec = polyT[td]
        assert all(c == 0 for c in vec[1:]), f"non-integral T^{td}: {vec}"
        coeffs.append(vec[0])
    return coeffs


def main():
    print("== F_64 brute force: m=9, p=2, chars (1,2),(2,4),(5,1) ==")
    g9 = cyclo_factors_mod_p(9, 2)
    print("factors of Phi_9 mod 2:", g9)
    assert g9 == [[1, 0, 0, 1, 0, 0, 1]]
    field = ResidueField(2, g9[0])
    chart = CharTable(field, 9)
    taus = {}
    for (a, b) in ((1, 2), (2, 4), (5, 1)):
        taus[(a, b)] = jacobi_sum(field, chart, 9, a, b)
        print(f"tau_{a},{b} =", taus[(a, b)], "weil:", weil_check(taus[(a, b)], 9, 64))
    prod = [1, 0, 0, 0, 0, 0]
    for v in taus.values():
        prod = cyclo_mul(prod, v, 9)
    print("product:", prod)
    print("local factor m=9 p=2:", local_factor(9, [(1, 2), (2, 4), (5, 1)], 2))

    print()
    print("== m=9 local factors of the triple at p = 5, 7, 17, 19 ==")
    for p in (5, 7, 17, 19):
        lf = local_factor(9, [(1, 2), (2, 4), (5, 1)], p)
        print(f"p={p}:", lf)

    print()
    print("== m=9, p=19 spec/table goldens ==")
    fac19 = cyclo_factors_mod_p(9, 19)
    print("factors:", fac19)
    field0 = ResidueField(19, fac19[0])
    chart0 = CharTable(field0, 9)
    t12 = jacobi_sum(field0, chart0, 9, 1, 2)
    print("tau_{1,2}(spec0) =", t12, "weil:", weil_check(t12, 9, 19))
    t21 = jacobi_sum(field0, chart0, 9, 2, 1)
    print("symmetry tau12==tau21:", t12 == t21)
    ok = True
    for k in (1, 2, 4, 5, 7, 8):
        lhs = galois_apply(k, t12, 9)
        rhs = jacobi_sum(field0, chart0, 9, (k * 1) % 9, (k * 2) % 9)
        if lhs != rhs:
            ok = False
            print("conjugation FAIL k=", k, lhs, rhs)
    print("conjugation equivariance all k:", ok)

    print()
    print("== m=12 triple local factor at p=13 ==")
    print("p=13:", local_factor(12, [(1, 3), (5, 3), (2, 6)], 13))

    print()
    print("== m=12 norm compatibility at p = 1 mod 12, p <= 200 ==")
    for p in (13, 37, 61, 73, 97, 109, 157, 181, 193):
        fac12 = cyclo_factors_mod_p(12, p)
        fac6 = cyclo_factors_mod_p(6, p)
        all_ok = True
        for g12 in fac12:
            r12 = (-g12[0]) % p
            r6 = (r12 * r12) % p
            g6 = [(-r6) % p, 1]
            assert g6 in fac6
            f12 = ResidueField(p, g12)
            c12 = CharTable(f12, 12)
            t26 = jacobi_sum(f12, c12, 12, 2, 6)
            f6 = ResidueField(p, g6)
            c6 = CharTable(f6, 6)
            t13 = jacobi_sum(f6, c6, 6, 1, 3)
            lift = [0] * 5
            for j, c in enumerate(t13):
                lift[2 * j] += c
            lifted = reduce_mod_cyclo(lift, 12)
            if lifted != t26:
                all_ok = False
                print("NORM FAIL", p, g12, t26, lifted)
        print(f"p={p}: norm compatibility {'ok' if all_ok else 'FAIL'}")

    print()
    print("== Weil sweep samples, m in {7,9,12,15} ==")
    samples = {
        7: (2, 3, 11, 13, 29, 43),
        9: (2, 7, 17, 19, 37),
        12: (5, 7, 11, 13, 37),
        15: (2, 7, 11, 19, 31, 61),
    }
    for m, primes in samples.items():
        for p in primes:
            if m % p == 0:
                continue
            facs = cyclo_factors_mod_p(m, p)
            field = ResidueField(p, facs[0])
            if field.N > 10 ** 6:
                continue
            chart = CharTable(field, m)
            bad = 0
            for a in range(1, m):
                for b in range(1, m):
                    if a % m == 0 or b % m == 0 or (a + b) % m == 0:
                        continue
                    v = jacobi_sum(field, chart, m, a, b)
                    if not weil_check(v, m, field.N):
                        bad += 1
            print(f"m={m} p={p} N={field.N}: weil failures {bad}")


if __name__ == "__main__":
    main()
