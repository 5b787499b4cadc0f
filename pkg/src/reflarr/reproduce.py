"""Golden tables for the Aomoto-Betti classification and full monomial monodromy.

GOLDEN_VERSION is bumped whenever a transcribed value changes.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import catalog
from .arrangement import compute_flat_table
from .monodromy import char_poly, profile_for
from .orlik_solomon import aomoto_h1
from .resonance import beta_p

GOLDEN_VERSION = 1
PRIMES = (2, 3, 5, 7)
RANKS = (3, 4, 5)

# Exceptional arrangements: beta_2 != 0 only for the Hessian (value 2);
# G31, G32, G33 and the Hessian have beta_p = 0 for every other prime.
EXCEPTIONAL = {
    "G31": {2: 0, 3: 0, 5: 0, 7: 0},
    "G32": {2: 0, 3: 0, 5: 0, 7: 0},
    "G33": {2: 0, 3: 0, 5: 0, 7: 0},
    "hessian": {2: 2, 3: 0, 5: 0, 7: 0},
}


def expected_beta(family: str, m: int | None, l: int | None, p: int) -> int:
    """Classification of beta_p for reflection arrangements of rank >= 3."""
    if family in EXCEPTIONAL:
        return EXCEPTIONAL[family][p]
    if p != 3:
        # p > 3 always vanishes; beta_2 != 0 only for the Hessian
        return 0
    if family == "full-monomial":
        return 1 if (l == 3 and m % 3 == 1) else 0
    if family == "monomial":
        if l == 3:
            return 2 if m % 3 == 0 else 1
        if l == 4:
            return 1
        return 0
    raise ValueError(f"no golden value for family {family!r}")


def expected_char_poly_factors(m: int, l: int) -> list[tuple[str, int]]:
    """Delta(t) for A(m,1,l), l in {3, 4}."""
    n = l + m * l * (l - 1) // 2
    out = [("t-1", n - 1)]
    if l == 3 and m % 3 == 1:
        out.append(("Phi_3", 1))
    return out


@dataclass
class Row:
    instance: str
    n: int
    p: int
    beta: int
    beta_aomoto: int
    expected: int

    @property
    def ok(self) -> bool:
        return self.beta == self.expected == self.beta_aomoto


def beta_table_instances(m_max: int = 7) -> list[str]:
    specs = []
    for l in RANKS:
        for m in range(2, m_max + 1):
            specs.append(f"monomial:{m}:{l}")
            specs.append(f"full-monomial:{m}:{l}")
    return specs + ["G31", "G32", "G33", "hessian"]


def beta_table_rows(m_max: int = 7):
    for text in beta_table_instances(m_max):
        spec = catalog.FamilySpec.parse(text)
        arr = catalog.build(spec)
        flats = compute_flat_table(arr)
        for p in PRIMES:
            yield Row(text, arr.n, p, beta_p(arr, p, flats).value, aomoto_h1(arr, flats, p),
                      expected_beta(spec.family, spec.m, spec.l, p))


@dataclass
class PolyRow:
    instance: str
    n: int
    computed: str
    expected: list
    complete: bool
    factors: list

    @property
    def ok(self) -> bool:
        return self.complete and self.factors == self.expected


def char_poly_rows(m_max: int = 7, ranks=(3, 4)):
    for l in ranks:
        for m in range(2, m_max + 1):
            arr = catalog.full_monomial(m, l)
            cp = char_poly(profile_for(arr))
            yield PolyRow(f"full-monomial:{m}:{l}", arr.n, str(cp),
                          [list(f) for f in expected_char_poly_factors(m, l)], cp.complete,
                          [list(f) for f in cp.factors()])
