"""Exact Gaussian elimination over Q, Q(zeta_m) and prime fields F_p.

The generic routines work on any element type that supports ``+ - * /`` and
truth testing (Fraction, CycElem).  The prime-field routines work on plain
ints and reduce modulo ``p`` at each step.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .cyclotomic import CycElem


def is_prime(p: int) -> bool:
    if not isinstance(p, int) or p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def check_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"modulus {p!r} is not prime")


# -- generic fields ---------------------------------------------------------

def rref(rows: Sequence[Sequence]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form; pivots are the first nonzero entries.

    Returns the nonzero reduced rows and their pivot columns.
    """
    work = [[Fraction(x) if isinstance(x, int) else x for x in r] for r in rows]
    if not work:
        return [], []
    ncols = len(work[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(work)) if work[i][c]), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        inv = 1 / work[r][c]
        work[r] = [x * inv for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c]:
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return work[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


def rank_cyc(matrix: Sequence[Sequence[CycElem]]) -> int:
    """Exact rank of a matrix with entries in one cyclotomic field."""
    return rank(matrix)


def nullspace(rows: Sequence[Sequence], ncols: int, one=1, zero=0) -> list[list]:
    """Basis of {v : M v = 0} over the field of the entries."""
    red, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for row, pc in zip(red, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def rank_q(rows: Sequence[Sequence]) -> int:
    return rank([[Fraction(x) for x in r] for r in rows])


def cyc_coordinates(basis: Sequence[Sequence[CycElem]], v: Sequence[CycElem]):
    """Coefficients c with sum c_i basis_i = v, or None if v is not in the span.

    ``basis`` must be linearly independent.
    """
    k = len(basis)
    if k == 0:
        return [] if not any(v) else None
    order = v[0].order
    zero = CycElem(order)
    # columns are basis vectors: solve B^T c = v via the augmented system
    aug = [[basis[j][i] for j in range(k)] + [v[i]] for i in range(len(v))]
    red, pivots = rref(aug)
    if k in pivots:
        return None
    coeffs = [zero] * k
    for row, pc in zip(red, pivots):
        coeffs[pc] = row[k]
    return coeffs


# -- prime fields -----------------------------------------------------------

def rref_mod_p(rows: Sequence[Sequence[int]], ncols: int, p: int):
    """RREF over F_p; returns (reduced rows, pivot columns)."""
    check_prime(p)
    work = [[x % p for x in r] for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(work)) if work[i][c]), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        inv = pow(work[r][c], p - 2, p)
        work[r] = [(x * inv) % p for x in work[r]]
        prow = work[r]
        for i in range(len(work)):
            f = work[i][c]
            if i != r and f:
                work[i] = [(x - f * y) % p for x, y in zip(work[i], prow)]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return work[:r], pivots


def rank_mod_p(rows: Sequence[Sequence[int]], ncols: int, p: int) -> int:
    return len(rref_mod_p(rows, ncols, p)[1])


def nullspace_mod_p(rows: Sequence[Sequence[int]], ncols: int, p: int) -> list[list[int]]:
    """Basis of the right kernel over F_p; its size is ncols - rank."""
    red, pivots = rref_mod_p(rows, ncols, p)
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [0] * ncols
        v[f] = 1
        for row, pc in zip(red, pivots):
            v[pc] = (-row[f]) % p
        basis.append(v)
    return basis


@dataclass(frozen=True)
class PrimeFieldMatrix:
    p: int
    rows: tuple
    ncols: int = field(default=-1)

    def __post_init__(self):
        check_prime(self.p)
        rows = tuple(tuple(x % self.p for x in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if self.ncols < 0:
            if not rows:
                raise ValueError("ncols is required for a matrix without rows")
            object.__setattr__(self, "ncols", len(rows[0]))
        if any(len(r) != self.ncols for r in rows):
            raise ValueError("ragged matrix")

    def rank(self) -> int:
        return rank_mod_p(self.rows, self.ncols, self.p)

    def nullspace(self) -> list[list[int]]:
        return nullspace_mod_p(self.rows, self.ncols, self.p)
