"""Builders for the reflection arrangements used throughout the package.

Labels follow a fixed scheme so hyperplanes can be addressed by name:

* ``H3``          coordinate hyperplane z_3 = 0
* ``H12^5``       z_1 - w^5 z_2 = 0
* ``Ha(1,0,3)``   an "alpha" hyperplane of G31, G33 or the Hessian arrangement
* ``H2^(0,1)``    the hyperplanes H_{2^{ab}} of G32
"""

from __future__ import annotations

import itertools
import re
from collections import Counter
from dataclasses import dataclass
from math import comb

from .arrangement import Arrangement, FlatTable, Hyperplane
from .cyclotomic import CycElem

FAMILIES = ("braid", "monomial", "full-monomial", "G31", "G32", "G33", "hessian")


@dataclass(frozen=True)
class FamilySpec:
    family: str
    m: int | None = None
    l: int | None = None

    def __post_init__(self):
        f = self.family
        if f not in FAMILIES:
            raise ValueError(f"unknown family {f!r}")
        if f == "braid":
            if self.l is None or self.l < 2:
                raise ValueError("braid requires l >= 2")
        elif f == "monomial":
            if self.m is None or self.l is None or self.m < 1 or self.l < 2:
                raise ValueError("monomial requires m >= 1, l >= 2")
        elif f == "full-monomial":
            if self.m is None or self.l is None or self.m < 2 or self.l < 2:
                raise ValueError("full-monomial requires m >= 2, l >= 2")
        if self.l is not None and self.l > 9:
            raise ValueError("labels assume single-digit coordinate indices (l <= 9)")

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        """Parse ``braid:l``, ``monomial:m:l``, ``full-monomial:m:l``, ``G31``, ..."""
        parts = text.strip().split(":")
        try:
            if parts[0] == "braid" and len(parts) == 2:
                return cls("braid", 1, int(parts[1]))
            if parts[0] in ("monomial", "full-monomial") and len(parts) == 3:
                return cls(parts[0], int(parts[1]), int(parts[2]))
            if parts[0] in ("G31", "G32", "G33", "hessian") and len(parts) == 1:
                return cls(parts[0])
        except ValueError as exc:
            raise ValueError(f"bad family spec {text!r}: {exc}") from None
        raise ValueError(f"bad family spec {text!r}")

    def __str__(self):
        if self.family == "braid":
            return f"braid:{self.l}"
        if self.family in ("monomial", "full-monomial"):
            return f"{self.family}:{self.m}:{self.l}"
        return self.family


def _vec(order: int, l: int, entries: dict) -> tuple:
    """Normal vector with {coordinate index (0-based): CycElem or int}."""
    zero = CycElem(order)
    out = [zero] * l
    for k, v in entries.items():
        out[k] = v if isinstance(v, CycElem) else CycElem(order, (v,))
    return tuple(out)


def _coordinate(order: int, l: int, i: int) -> Hyperplane:
    return Hyperplane(f"H{i}", _vec(order, l, {i - 1: 1}))


def _root(order: int, l: int, i: int, j: int, alpha: int, w_order: int) -> Hyperplane:
    # z_i - w^alpha z_j with w a primitive w_order-th root, w_order | order
    w = CycElem.zeta(order, (order // w_order) * alpha)
    return Hyperplane(f"H{i}{j}^{alpha}", _vec(order, l, {i - 1: 1, j - 1: -w}))


def monomial(m: int, l: int) -> Arrangement:
    """A(m,m,l): z_i - w^a z_j, 1 <= i < j <= l, a in Z/m."""
    FamilySpec("monomial", m, l)
    hyps = [_root(m, l, i, j, a, m)
            for i, j in itertools.combinations(range(1, l + 1), 2) for a in range(m)]
    return Arrangement(l, m, tuple(hyps), family=f"monomial:{m}:{l}", is_reflection=True)


def braid(l: int) -> Arrangement:
    arr = monomial(1, l)
    return Arrangement(arr.ambient_dim, 1, arr.hyperplanes, family=f"braid:{l}",
                       is_reflection=True)


def full_monomial(m: int, l: int) -> Arrangement:
    """A(m,1,l): the coordinate hyperplanes followed by A(m,m,l)."""
    FamilySpec("full-monomial", m, l)
    hyps = [_coordinate(m, l, i) for i in range(1, l + 1)]
    hyps += monomial(m, l).hyperplanes
    return Arrangement(l, m, tuple(hyps), family=f"full-monomial:{m}:{l}", is_reflection=True)


def g31() -> Arrangement:
    """A(G31) in C^4 over Q(i)."""
    m, l = 4, 4
    hyps = [_coordinate(m, l, i) for i in range(1, 5)]
    hyps += [_root(m, l, i, j, b, 4)
             for i, j in itertools.combinations(range(1, 5), 2) for b in range(4)]
    for a2, a3, a4 in itertools.product(range(4), repeat=3):
        if (a2 + a3 + a4) % 2:
            continue
        normal = _vec(m, l, {0: 1, 1: CycElem.zeta(m, a2), 2: CycElem.zeta(m, a3),
                             3: CycElem.zeta(m, a4)})
        hyps.append(Hyperplane(f"Ha({a2},{a3},{a4})", normal))
    return Arrangement(l, m, tuple(hyps), family="G31", is_reflection=True)


def g32() -> Arrangement:
    """A(G32) in C^4 over Q(zeta_3)."""
    m, l = 3, 4
    w = lambda k: CycElem.zeta(m, k)  # noqa: E731
    hyps = [_coordinate(m, l, i) for i in range(1, 5)]
    # (coordinate positions, signs) for H_{1^{ab}} .. H_{4^{ab}}
    shapes = {
        1: ((1, 2, 3), (1, 1, 1)),
        2: ((0, 2, 3), (1, 1, -1)),
        3: ((0, 1, 3), (1, -1, 1)),
        4: ((0, 1, 2), (1, 1, -1)),
    }
    for i, (pos, sign) in shapes.items():
        for a, b in itertools.product(range(3), repeat=2):
            normal = _vec(m, l, {pos[0]: sign[0], pos[1]: w(a) * sign[1],
                                 pos[2]: w(b) * sign[2]})
            hyps.append(Hyperplane(f"H{i}^({a},{b})", normal))
    return Arrangement(l, m, tuple(hyps), family="G32", is_reflection=True)


def g33() -> Arrangement:
    """A(G33), written in C^6 with the equations used in the literature."""
    m, l = 3, 6
    hyps = [_root(m, l, i, j, b, 3)
            for i, j in itertools.combinations(range(1, 5), 2) for b in range(3)]
    for alpha in itertools.product(range(3), repeat=4):
        if sum(alpha) % 3:
            continue
        entries = {k: CycElem.zeta(m, a) for k, a in enumerate(alpha)}
        entries.update({4: 1, 5: 1})
        hyps.append(Hyperplane("Ha(" + ",".join(map(str, alpha)) + ")",
                               _vec(m, l, entries)))
    return Arrangement(l, m, tuple(hyps), family="G33", is_reflection=True)


def hessian() -> Arrangement:
    """The 12 lines of the four singular triangles of the Hesse pencil.

    z1 z2 z3 = 0 together with z1 + w^a z2 + w^b z3 = 0, (a, b) in (Z/3)^2.
    """
    m, l = 3, 3
    hyps = [_coordinate(m, l, i) for i in range(1, 4)]
    for a, b in itertools.product(range(3), repeat=2):
        normal = _vec(m, l, {0: 1, 1: CycElem.zeta(m, a), 2: CycElem.zeta(m, b)})
        hyps.append(Hyperplane(f"Ha({a},{b})", normal))
    return Arrangement(l, m, tuple(hyps), family="hessian", is_reflection=True)


def build(spec: FamilySpec | str) -> Arrangement:
    if isinstance(spec, str):
        spec = FamilySpec.parse(spec)
    f = spec.family
    if f == "braid":
        return braid(spec.l)
    if f == "monomial":
        return monomial(spec.m, spec.l)
    if f == "full-monomial":
        return full_monomial(spec.m, spec.l)
    return {"G31": g31, "G32": g32, "G33": g33, "hessian": hessian}[f]()


# -- flat census --------------------------------------------------------------

_COORD = re.compile(r"^H(\d)$")
_ROOT = re.compile(r"^H(\d)(\d)\^(\d+)$")


def flat_type(labels: list[str]) -> str:
    """Classify a flat of a (full) monomial arrangement by its member labels."""
    coords, pairs = [], set()
    for lab in labels:
        if mo := _COORD.match(lab):
            coords.append(int(mo.group(1)))
        elif mo := _ROOT.match(lab):
            pairs.add((int(mo.group(1)), int(mo.group(2))))
        else:
            return f"size-{len(labels)}"
    if len(coords) == 2 and len(pairs) == 1:
        return "I_a"
    if len(coords) == 1 and len(pairs) == 1 and coords[0] not in pairs.pop():
        return "I_d"
    if not coords:
        if len(pairs) == 1:
            return "II"
        if len(pairs) == 3 and len(set(itertools.chain(*pairs))) == 3:
            return "I_b"
        if len(pairs) == 2 and len(set(itertools.chain(*pairs))) == 4:
            return "I_c"
    if len(coords) == 2 and not pairs:
        return "coord-pair"
    return f"size-{len(labels)}"


def observed_census(arr: Arrangement, flats: FlatTable) -> dict:
    """{type: (count, multiplicity)} from a computed flat table."""
    labels = arr.labels
    seen: dict[str, Counter] = {}
    for X in flats.flats:
        t = flat_type([labels[i] for i in X.members])
        seen.setdefault(t, Counter())[X.multiplicity] += 1
    out = {}
    for t, mults in seen.items():
        if len(mults) != 1:
            raise AssertionError(f"flats of type {t} have mixed multiplicities {dict(mults)}")
        (mult, count), = mults.items()
        out[t] = (count, mult)
    return out


def expected_flat_census(spec: FamilySpec | str) -> dict:
    """Closed-form rank-2 flat census {type: (count, multiplicity)}."""
    if isinstance(spec, str):
        spec = FamilySpec.parse(spec)
    if spec.family not in ("braid", "monomial", "full-monomial"):
        raise ValueError(f"no closed-form census for {spec.family}")
    m, l = spec.m, spec.l
    out = {}
    if spec.family == "full-monomial":
        out["I_a"] = (comb(l, 2), m + 2)
        out["I_d"] = (l * comb(l - 1, 2) * m, 2)
    elif m >= 2:
        out["II"] = (comb(l, 2), m)
    if l >= 3:
        out["I_b"] = (comb(l, 3) * m * m, 3)
    if l >= 4:
        out["I_c"] = (comb(l, 2) * comb(l - 2, 2) // 2 * m * m, 2)
    return {k: v for k, v in out.items() if v[0]}


def census_pair_total(census: dict) -> int:
    return sum(count * comb(mult, 2) for count, mult in census.values())
