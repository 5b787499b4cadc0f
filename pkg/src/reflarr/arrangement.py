"""Central hyperplane arrangements and their rank-2 flats."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Sequence

from .cyclotomic import CycElem
from .linalg import cyc_coordinates, rank_cyc, rref


class ArrangementError(ValueError):
    """Raised when an arrangement fails validation or an operation's precondition."""


@dataclass(frozen=True)
class Hyperplane:
    label: str
    normal: tuple  # of CycElem

    def __post_init__(self):
        object.__setattr__(self, "normal", tuple(self.normal))


@dataclass(frozen=True)
class Arrangement:
    ambient_dim: int
    cyclotomic_order: int
    hyperplanes: tuple
    family: str | None = None
    is_reflection: bool = False

    def __post_init__(self):
        object.__setattr__(self, "hyperplanes", tuple(self.hyperplanes))

    @classmethod
    def from_normals(cls, normals: Iterable[Sequence], order: int = 1,
                     labels: Sequence[str] | None = None, **meta) -> "Arrangement":
        """Build from normals whose entries are ints or power-basis coefficient lists."""
        normals = [list(v) for v in normals]
        ambient = len(normals[0]) if normals else 0
        hyps = []
        for i, v in enumerate(normals):
            vec = tuple(x if isinstance(x, CycElem) else
                        CycElem(order, x if isinstance(x, (list, tuple)) else (x,))
                        for x in v)
            label = labels[i] if labels else f"H{i + 1}"
            hyps.append(Hyperplane(label, vec))
        return cls(ambient, order, tuple(hyps), **meta)

    @property
    def n(self) -> int:
        return len(self.hyperplanes)

    @property
    def labels(self) -> list[str]:
        return [h.label for h in self.hyperplanes]

    def normals(self) -> list[tuple]:
        return [h.normal for h in self.hyperplanes]

    def index(self, label: str) -> int:
        for i, h in enumerate(self.hyperplanes):
            if h.label == label:
                return i
        raise KeyError(label)

    def subarrangement(self, indices: Sequence[int]) -> "Arrangement":
        return Arrangement(self.ambient_dim, self.cyclotomic_order,
                           tuple(self.hyperplanes[i] for i in indices),
                           family=None, is_reflection=False)

    def permuted(self, perm: Sequence[int]) -> "Arrangement":
        return Arrangement(self.ambient_dim, self.cyclotomic_order,
                           tuple(self.hyperplanes[i] for i in perm),
                           family=self.family, is_reflection=self.is_reflection)

    def __repr__(self):
        tag = self.family or "arrangement"
        return f"<Arrangement {tag}: n={self.n} in C^{self.ambient_dim}, Q(zeta_{self.cyclotomic_order})>"


def validate(arr: Arrangement) -> list[str]:
    """Return the list of violations; an empty list means the arrangement is usable."""
    problems = []
    if arr.n == 0:
        problems.append("empty arrangement: at least one hyperplane is required")
    if arr.ambient_dim < 1:
        problems.append("ambient dimension must be at least 1")
    seen = {}
    for i, h in enumerate(arr.hyperplanes):
        if h.label in seen:
            problems.append(f"label collision: {h.label!r} used by hyperplanes {seen[h.label]} and {i}")
        seen.setdefault(h.label, i)
        if len(h.normal) != arr.ambient_dim:
            problems.append(f"{h.label}: normal has length {len(h.normal)}, expected {arr.ambient_dim}")
            continue
        if any(not isinstance(x, CycElem) or x.order != arr.cyclotomic_order for x in h.normal):
            problems.append(f"{h.label}: entries are not in Q(zeta_{arr.cyclotomic_order})")
            continue
        if not any(h.normal):
            problems.append(f"{h.label}: zero normal")
    if problems:
        return problems
    keys = {}
    for i, h in enumerate(arr.hyperplanes):
        k = _line_key(h.normal)
        if k in keys:
            problems.append(f"duplicate hyperplane: {h.label} is proportional to "
                            f"{arr.hyperplanes[keys[k]].label}")
        else:
            keys[k] = i
    return problems


def require_valid(arr: Arrangement) -> None:
    problems = validate(arr)
    if problems:
        raise ArrangementError("; ".join(problems))


def _line_key(v: Sequence[CycElem]) -> tuple:
    red, _ = rref([v])
    return tuple(x.coeffs for x in red[0])


def arrangement_rank(arr: Arrangement) -> int:
    return rank_cyc(arr.normals())


@dataclass(frozen=True)
class Flat2:
    members: tuple  # sorted hyperplane indices

    @property
    def multiplicity(self) -> int:
        return len(self.members)


@dataclass
class FlatTable:
    flats: list
    pair_index: dict = field(default_factory=dict)
    n: int = 0

    def flat_of(self, i: int, j: int) -> Flat2:
        if i > j:
            i, j = j, i
        return self.flats[self.pair_index[(i, j)]]

    def flats_through(self, i: int) -> list[Flat2]:
        return [X for X in self.flats if i in X.members]

    def multiplicities(self) -> list[int]:
        return [X.multiplicity for X in self.flats]

    def pair_count_ok(self) -> bool:
        return sum(comb(X.multiplicity, 2) for X in self.flats) == comb(self.n, 2)

    def to_json(self, arr: Arrangement) -> dict:
        labels = arr.labels
        return {"flats": [{"members": [labels[i] for i in X.members],
                           "multiplicity": X.multiplicity} for X in self.flats]}


def _plane_key(u: Sequence[CycElem], v: Sequence[CycElem]) -> tuple:
    # the RREF of a rank-2 matrix is a canonical name for its row space
    red, pivots = rref([u, v])
    if len(pivots) != 2:
        raise ArrangementError("two hyperplanes are proportional")
    return tuple(tuple(x.coeffs for x in row) for row in red)


def compute_flat_table(arr: Arrangement) -> FlatTable:
    """All rank-2 flats X with their full member sets A_X."""
    n = arr.n
    if n < 2:
        return FlatTable([], {}, n)
    normals = arr.normals()
    groups: dict[tuple, set] = {}
    pair_key = {}
    for i in range(n):
        for j in range(i + 1, n):
            if (i, j) in pair_key:
                continue
            key = _plane_key(normals[i], normals[j])
            members = groups.get(key)
            if members is None:
                members = groups[key] = {i, j}
            else:
                members.update((i, j))
            pair_key[(i, j)] = key
            # every later hyperplane already in this span shares the flat; mark its pairs
            for a in list(members):
                for b in list(members):
                    if a < b:
                        pair_key.setdefault((a, b), key)
    flats = sorted((Flat2(tuple(sorted(m))) for m in groups.values()),
                   key=lambda X: X.members)
    index_of = {X.members: k for k, X in enumerate(flats)}
    key_to_idx = {key: index_of[tuple(sorted(m))] for key, m in groups.items()}
    pair_index = {pair: key_to_idx[key] for pair, key in pair_key.items()}
    return FlatTable(flats, pair_index, n)


def flats_by_membership(arr: Arrangement) -> FlatTable:
    """Reference computation: for each pair, test every hyperplane with a rank-3 check.

    Quadratically more rank computations than :func:`compute_flat_table`;
    used as an independent cross-check on small arrangements.
    """
    n = arr.n
    normals = arr.normals()
    found: dict[tuple, int] = {}
    flats: list[Flat2] = []
    pair_index = {}
    for i in range(n):
        for j in range(i + 1, n):
            members = tuple(k for k in range(n)
                            if k in (i, j) or rank_cyc([normals[i], normals[j], normals[k]]) == 2)
            if members not in found:
                found[members] = len(flats)
                flats.append(Flat2(members))
            pair_index[(i, j)] = found[members]
    order = sorted(range(len(flats)), key=lambda k: flats[k].members)
    remap = {old: new for new, old in enumerate(order)}
    return FlatTable([flats[k] for k in order],
                     {p: remap[k] for p, k in pair_index.items()}, n)


def restrict_to_flat(arr: Arrangement, X: Flat2, flats: FlatTable | None = None) -> Arrangement:
    """The localization A_X, keeping labels."""
    flats = flats if flats is not None else compute_flat_table(arr)
    if X not in flats.flats:
        raise ArrangementError(f"{X} is not a rank-2 flat of this arrangement")
    return arr.subarrangement(X.members)


def basis_indices(normals: Sequence[Sequence[CycElem]]) -> list[int]:
    """Greedy basis: first index set whose normals are independent and span."""
    basis: list[int] = []
    for i, v in enumerate(normals):
        if rank_cyc([normals[b] for b in basis] + [v]) > len(basis):
            basis.append(i)
    return basis


def decompose(arr: Arrangement) -> list[list[int]]:
    """Connected components of the matroid of normals, as sorted index lists."""
    normals = arr.normals()
    basis = basis_indices(normals)
    parent = list(range(arr.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    bset = set(basis)
    bvecs = [normals[b] for b in basis]
    for f in range(arr.n):
        if f in bset:
            continue
        coeffs = cyc_coordinates(bvecs, normals[f])
        circuit = [f] + [basis[k] for k, c in enumerate(coeffs) if c]
        for e in circuit[1:]:
            parent[find(e)] = find(f)
    comps: dict[int, list[int]] = {}
    for i in range(arr.n):
        comps.setdefault(find(i), []).append(i)
    return sorted(comps.values(), key=lambda c: c[0])


def is_decomposable(arr: Arrangement) -> bool:
    return len(decompose(arr)) > 1
