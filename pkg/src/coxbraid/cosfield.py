"""Exact arithmetic in Z[2cos(pi/L)].

Reflection representations of Coxeter groups need the numbers 2cos(pi/m)
for every finite entry m of the Coxeter matrix.  All of them live in the
ring Z[theta] where theta = 2cos(pi/L) and L is the lcm of the finite
entries: 2cos(pi/m) = D_{L/m}(theta) with D_k the degree-k Dickson
polynomial (D_k(2cos x) = 2cos(kx)).

Elements are coefficient tuples of fixed length d = deg(minpoly(theta)),
reduced modulo the (monic, integer) minimal polynomial.  Because the
modulus is irreducible, an element is zero exactly when its tuple is zero,
so sign determination only has to separate a provably nonzero value from
zero: evaluate with interval arithmetic over a certified isolating
interval of theta and bisect until the sign resolves.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

Elem = tuple  # coefficient tuple over Z, length = field degree


def _trim(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_div_exact(a: list[int], b: list[int]) -> list[int]:
    # exact division of integer polynomials, b monic up to +-1 leading coeff
    a = list(a)
    lead = b[-1]
    q = [0] * (len(a) - len(b) + 1)
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1]
        if c == 0:
            continue
        assert c % lead == 0
        c //= lead
        q[i] = c
        for j, y in enumerate(b):
            a[i + j] -= c * y
    assert not any(a)
    return q


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> tuple[int, ...]:
    """Coefficients (ascending) of the n-th cyclotomic polynomial."""
    p = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            p = _poly_div_exact(p, list(cyclotomic(d)))
    return tuple(p)


def min_poly_two_cos(L: int) -> tuple[int, ...]:
    """Monic integer minimal polynomial (ascending coeffs) of 2cos(pi/L)."""
    if L == 1:
        return (2, 1)  # theta = -2
    if L == 2:
        return (0, 1)  # theta = 0
    # Phi_{2L}(x) is palindromic of even degree 2n; write it as
    # x^n * q(x + 1/x) using the basis x^{n-k} (x^2+1)^k, k = n..0.
    p = list(cyclotomic(2 * L))
    n = (len(p) - 1) // 2
    q = [0] * (n + 1)
    for k in range(n, -1, -1):
        basis = _poly_mul([0] * (n - k) + [1], _pow_x2p1(k))
        c = p[n + k]
        q[k] = c
        if c:
            for j, y in enumerate(basis):
                p[j] -= c * y
    assert not any(p)
    return tuple(q)


@lru_cache(maxsize=None)
def _pow_x2p1(k: int) -> tuple[int, ...]:
    if k == 0:
        return (1,)
    return tuple(_poly_mul(list(_pow_x2p1(k - 1)), [1, 0, 1]))


def _eval_fraction(p: tuple[int, ...], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _sturm_chain(p: list[Fraction]) -> list[list[Fraction]]:
    def deriv(q):
        return [i * c for i, c in enumerate(q)][1:]

    def rem(a, b):
        a = list(a)
        while len(a) >= len(b) and any(a):
            while a and a[-1] == 0:
                a.pop()
            if len(a) < len(b):
                break
            c = a[-1] / b[-1]
            shift = len(a) - len(b)
            for j, y in enumerate(b):
                a[shift + j] -= c * y
            a.pop()
        while a and a[-1] == 0:
            a.pop()
        return a

    chain = [list(p), deriv(list(p))]
    while chain[-1]:
        r = [-c for c in rem(chain[-2], chain[-1])]
        if not r:
            break
        chain.append(r)
    return chain


def _sign_changes(chain, x: Fraction) -> int:
    signs = []
    for q in chain:
        v = Fraction(0)
        for c in reversed(q):
            v = v * x + c
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(p: tuple[int, ...], lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots of p in (lo, hi], by Sturm's theorem."""
    chain = _sturm_chain([Fraction(c) for c in p])
    return _sign_changes(chain, lo) - _sign_changes(chain, hi)


class CosField:
    """The ring Z[2cos(pi/L)] with decidable signs.

    For L <= 2 the generator is rational (-2 or 0) and the degree is 1.
    """

    def __init__(self, L: int):
        if L < 1:
            raise ValueError("L must be >= 1")
        self.L = L
        self.minpoly = min_poly_two_cos(L)
        self.degree = len(self.minpoly) - 1
        d = self.degree
        self.zero: Elem = (0,) * d
        self.one: Elem = (1,) + (0,) * (d - 1)
        if d == 1:
            self.theta: Elem = (-self.minpoly[0],)
        else:
            self.theta = (0, 1) + (0,) * (d - 2)
        self._iso = self._isolating_interval()
        self._dickson_cache: dict[int, Elem] = {}

    def _isolating_interval(self) -> tuple[Fraction, Fraction]:
        approx = 2.0 * math.cos(math.pi / self.L)
        eps = Fraction(1, 10**9)
        lo = Fraction(approx).limit_denominator(10**12) - eps
        hi = Fraction(approx).limit_denominator(10**12) + eps
        assert count_real_roots(self.minpoly, lo, hi) == 1
        assert _eval_fraction(self.minpoly, lo) * _eval_fraction(self.minpoly, hi) < 0
        return lo, hi

    def from_int(self, n: int) -> Elem:
        return (n,) + (0,) * (self.degree - 1)

    def add(self, a: Elem, b: Elem) -> Elem:
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a: Elem, b: Elem) -> Elem:
        return tuple(x - y for x, y in zip(a, b))

    def neg(self, a: Elem) -> Elem:
        return tuple(-x for x in a)

    def mul(self, a: Elem, b: Elem) -> Elem:
        d = self.degree
        if d == 1:
            return (a[0] * b[0],)
        conv = [0] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    conv[i + j] += x * y
        mp = self.minpoly
        for i in range(2 * d - 2, d - 1, -1):
            c = conv[i]
            if c:
                conv[i] = 0
                off = i - d
                for j in range(d):
                    conv[off + j] -= c * mp[j]
        return tuple(conv[:d])

    def mul_int(self, a: Elem, n: int) -> Elem:
        return tuple(n * x for x in a)

    def two_cos_pi_over(self, m: int | None) -> Elem:
        """2cos(pi/m) as a ring element; m=None means the infinite bond (value 2)."""
        if m is None:
            return self.from_int(2)
        if m in self._dickson_cache:
            return self._dickson_cache[m]
        assert self.L % m == 0, (self.L, m)
        k = self.L // m
        prev, cur = self.from_int(2), self.theta  # D_0, D_1
        for _ in range(k):
            prev, cur = cur, self.sub(self.mul(self.theta, cur), prev)
        self._dickson_cache[m] = prev
        return prev

    def is_zero(self, a: Elem) -> bool:
        return not any(a)

    def sign(self, a: Elem) -> int:
        if not any(a):
            return 0
        if not any(a[1:]):
            return 1 if a[0] > 0 else -1
        lo, hi = self._iso
        mp = self.minpoly
        sign_lo = 1 if _eval_fraction(mp, lo) > 0 else -1
        while True:
            vlo, vhi = self._interval_eval(a, lo, hi)
            if vlo > 0:
                return 1
            if vhi < 0:
                return -1
            mid = (lo + hi) / 2
            vm = _eval_fraction(mp, mid)
            if vm == 0:
                v = self._exact_eval(a, mid)
                return 1 if v > 0 else -1  # nonzero: minpoly irreducible
            if (1 if vm > 0 else -1) == sign_lo:
                lo = mid
            else:
                hi = mid

    def _interval_eval(self, a: Elem, lo: Fraction, hi: Fraction):
        vlo = vhi = Fraction(0)
        for c in reversed(a):
            cands = (vlo * lo, vlo * hi, vhi * lo, vhi * hi)
            vlo, vhi = min(cands) + c, max(cands) + c
        return vlo, vhi

    def _exact_eval(self, a: Elem, x: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(a):
            acc = acc * x + c
        return acc

    def to_float(self, a: Elem) -> float:
        t = 2.0 * math.cos(math.pi / self.L)
        acc = 0.0
        for c in reversed(a):
            acc = acc * t + c
        return acc

    def __repr__(self):
        return f"CosField(L={self.L}, degree={self.degree})"
