"""Exact arithmetic in cyclotomic fields Q(zeta_m).

Elements are stored in the power basis 1, x, ..., x^(phi(m)-1) modulo the
m-th cyclotomic polynomial.  Coefficients are Python ints whenever possible
and :class:`fractions.Fraction` otherwise, so integer normals stay cheap.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Sequence

Poly = tuple  # low-to-high coefficients


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _trim(p: Sequence) -> tuple:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def poly_mul(a: Sequence, b: Sequence) -> tuple:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def poly_sub(a: Sequence, b: Sequence) -> tuple:
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim(x - y for x, y in zip(a, b))


def poly_divmod(a: Sequence, b: Sequence) -> tuple[tuple, tuple]:
    """Long division over Q; ``b`` must be nonzero."""
    b = _trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = [Fraction(x) for x in _trim(a)]
    lead = Fraction(b[-1])
    q = [Fraction(0)] * max(len(r) - len(b) + 1, 0)
    while len(r) >= len(b) and r:
        shift = len(r) - len(b)
        c = r[-1] / lead
        q[shift] = c
        for i, y in enumerate(b):
            r[shift + i] -= c * y
        r = list(_trim(r))
    return _trim(_norm(x) for x in q), _trim(_norm(x) for x in r)


def totient(m: int) -> int:
    return sum(1 for k in range(1, m + 1) if gcd(k, m) == 1)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple:
    """Integer coefficients of Phi_m, lowest degree first.

    Computed by dividing x^m - 1 by Phi_d for every proper divisor d of m.
    """
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"cyclotomic order must be a positive integer, got {m!r}")
    num = (-1,) + (0,) * (m - 1) + (1,)
    for d in range(1, m):
        if m % d == 0:
            num, rem = poly_divmod(num, cyclotomic_polynomial(d))
            assert not rem
    return tuple(int(c) for c in num)


@lru_cache(maxsize=None)
def _reduction_table(m: int) -> tuple:
    """Rows x^k mod Phi_m for 0 <= k < 2*phi(m) - 1."""
    phi = cyclotomic_polynomial(m)
    deg = len(phi) - 1
    rows = []
    cur = [0] * deg
    cur[0] = 1
    for _ in range(max(2 * deg - 1, 1)):
        rows.append(tuple(cur))
        # multiply by x, then fold the overflow through Phi_m (monic)
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for i in range(deg):
                cur[i] -= top * phi[i]
    return tuple(rows)


class CycElem:
    """An element of Q(zeta_m), immutable."""

    __slots__ = ("order", "coeffs", "_hash")

    def __init__(self, order: int, coeffs: Sequence = ()):
        deg = len(cyclotomic_polynomial(order)) - 1
        cs = [_norm(Fraction(c)) if isinstance(c, Fraction) else c for c in coeffs]
        if len(cs) > deg:
            cs = list(_reduce(order, cs))
        cs = cs + [0] * (deg - len(cs))
        self.order = order
        self.coeffs = tuple(cs)
        self._hash = None

    @classmethod
    def from_int(cls, order: int, value) -> "CycElem":
        return cls(order, (value,))

    @classmethod
    def zeta(cls, order: int, power: int = 1) -> "CycElem":
        """zeta_m ** power."""
        power %= order
        return cls(order, _reduce(order, (0,) * power + (1,)))

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    def _coerce(self, other) -> "CycElem":
        if isinstance(other, CycElem):
            if other.order != self.order:
                raise ValueError(
                    f"cyclotomic order mismatch: {self.order} vs {other.order}")
            return other
        if isinstance(other, (int, Fraction)):
            return CycElem(self.order, (other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycElem(self.order, [_norm(a + b) for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycElem(self.order, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycElem(self.order, [_norm(a - b) for a, b in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycElem(self.order, _reduce(self.order, poly_mul(self.coeffs, other.coeffs)))

    __rmul__ = __mul__

    def inverse(self) -> "CycElem":
        if not self:
            raise ZeroDivisionError("inverse of zero in Q(zeta_%d)" % self.order)
        # extended Euclid: s*a + t*Phi = g, g a nonzero constant
        a = _trim(self.coeffs)
        b = cyclotomic_polynomial(self.order)
        r0, r1 = b, a
        s0, s1 = (), (1,)
        while len(r1) > 1:
            q, r = poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, poly_sub(s0, poly_mul(q, s1))
        c = Fraction(r1[0])
        return CycElem(self.order, [_norm(Fraction(x) / c) for x in s1])

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return CycElem(self.order, (other,)) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = CycElem(self.order, (1,))
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.coeffs[0] == other and not any(self.coeffs[1:])
        if not isinstance(other, CycElem):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.order, self.coeffs))
        return self._hash

    def embed(self, k: int) -> "CycElem":
        """Image under Q(zeta_m) -> Q(zeta_{km}), zeta_m -> zeta_{km}^k."""
        spread = [0] * ((len(self.coeffs) - 1) * k + 1)
        for i, c in enumerate(self.coeffs):
            spread[i * k] = c
        return CycElem(self.order * k, _reduce(self.order * k, spread))

    def to_complex(self) -> complex:
        import cmath
        z = cmath.exp(2j * cmath.pi / self.order)
        return sum(complex(float(c)) * z ** i for i, c in enumerate(self.coeffs))

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}{'*' + mono if mono else ''}")
        body = " + ".join(terms).replace("+ -", "- ") if terms else "0"
        return f"CycElem[{self.order}]({body})"


def _reduce(m: int, poly: Sequence) -> tuple:
    table = _reduction_table(m)
    deg = len(table[0])
    if len(poly) > len(table):
        # rare path: reduce via long division
        _, r = poly_divmod(poly, cyclotomic_polynomial(m))
        return tuple(r) + (0,) * (deg - len(r))
    out = [0] * deg
    for k, c in enumerate(poly):
        if c == 0:
            continue
        if k < deg:
            out[k] += c
        else:
            for i, t in enumerate(table[k]):
                if t:
                    out[i] += c * t
    return tuple(_norm(x) for x in out)


def cyc_arith(a: CycElem, b: CycElem | None, op: str) -> CycElem:
    """Dispatch helper: ``op`` is one of ``add``, ``mul``, ``inverse``."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "inverse":
        return a.inverse()
    raise ValueError(f"unknown operation {op!r}")


def common_order(*orders: int) -> int:
    out = 1
    for m in orders:
        out = out * m // gcd(out, m)
    return out
