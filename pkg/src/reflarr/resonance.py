"""Mod-p cocycle spaces, Aomoto-Betti numbers, and the vanishing criteria."""

from __future__ import annotations

from dataclasses import dataclass, field

from .arrangement import Arrangement, FlatTable, compute_flat_table, decompose
from .linalg import check_prime, nullspace_mod_p, rref_mod_p


@dataclass
class CocycleSpace:
    p: int
    basis: list  # rows of the reduced basis, length n each
    n: int

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, eta) -> bool:
        from .linalg import rank_mod_p
        return rank_mod_p(self.basis + [list(eta)], self.n, self.p) == self.dim


@dataclass
class BettiNumber:
    p: int
    value: int
    dim_Zp: int
    witness: list | None = None


def zeq_rows(flats: FlatTable, p: int) -> list[list[int]]:
    """Constraint rows cutting out Z_p(A) inside F_p^A, one block per flat."""
    n = flats.n
    rows = []
    for X in flats.flats:
        mem = X.members
        if X.multiplicity % p == 0:
            row = [0] * n
            for h in mem:
                row[h] = 1
            rows.append(row)
        else:
            h0 = mem[0]
            for h in mem[1:]:
                row = [0] * n
                row[h0] = 1
                row[h] = p - 1
                rows.append(row)
    return rows


def cocycle_space(arr: Arrangement, flats: FlatTable | None, p: int) -> CocycleSpace:
    check_prime(p)
    flats = flats if flats is not None else compute_flat_table(arr)
    basis = nullspace_mod_p(zeq_rows(flats, p), arr.n, p)
    # a canonical basis: RREF of the kernel vectors
    red, _ = rref_mod_p(basis, arr.n, p)
    return CocycleSpace(p, red, arr.n)


def _witness(space: CocycleSpace) -> list | None:
    ones = [1] * space.n
    for v in space.basis:
        c = v[0]
        if any((x - c * o) % space.p for x, o in zip(v, ones)):
            return v
    return None


def beta_p(arr: Arrangement, p: int, flats: FlatTable | None = None) -> BettiNumber:
    space = cocycle_space(arr, flats, p)
    value = space.dim - 1
    return BettiNumber(p, value, space.dim, _witness(space) if value > 0 else None)


# -- graphs -------------------------------------------------------------------

@dataclass
class GammaGraph:
    kind: str  # "mod" for Gamma_k, "eq" for Gamma_(k)
    k: int
    n: int
    edges: set = field(default_factory=set)

    def components(self) -> list[list[int]]:
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in self.edges:
            parent[find(a)] = find(b)
        comps: dict[int, list[int]] = {}
        for v in range(self.n):
            comps.setdefault(find(v), []).append(v)
        return sorted(comps.values(), key=lambda c: c[0])

    def is_connected(self) -> bool:
        return len(self.components()) == 1


def _edge_rule(kind: str, k: int):
    if kind == "eq":
        return lambda mult: mult == k
    if kind != "mod":
        raise ValueError(f"unknown graph kind {kind!r}")
    if k == 2:
        return lambda mult: mult % 2 == 1 or mult == 2
    return lambda mult: mult % k != 0


def gamma_graph(arr: Arrangement, flats: FlatTable | None, kind: str, k: int) -> GammaGraph:
    """Gamma_k (``kind="mod"``) or Gamma_(k) (``kind="eq"``) on the hyperplanes."""
    if k < 2:
        raise ValueError("graph parameter k must be at least 2")
    flats = flats if flats is not None else compute_flat_table(arr)
    keep = _edge_rule(kind, k)
    edges = set()
    for X in flats.flats:
        if keep(X.multiplicity):
            mem = X.members
            for i, a in enumerate(mem):
                for b in mem[i + 1:]:
                    edges.add((a, b))
    return GammaGraph(kind, k, arr.n, edges)


def m_p_of(arr: Arrangement, flats: FlatTable | None, h: int, p: int) -> int:
    """1 + sum of (|A_X| - 1) over flats X through H with p not dividing |A_X|."""
    flats = flats if flats is not None else compute_flat_table(arr)
    return 1 + sum(X.multiplicity - 1 for X in flats.flats_through(h)
                   if X.multiplicity % p)


@dataclass
class Criterion:
    name: str
    fires: bool
    conclusion: str


def vanishing_report(arr: Arrangement, flats: FlatTable | None, p: int,
                     components: list | None = None) -> list[Criterion]:
    """Evaluate every combinatorial sufficient condition for beta_p = 0."""
    check_prime(p)
    flats = flats if flats is not None else compute_flat_table(arr)
    n = arr.n
    comps = components if components is not None else decompose(arr)
    mults = flats.multiplicities()
    mp = [m_p_of(arr, flats, h, p) for h in range(n)]
    out = []

    def add(name, fires):
        out.append(Criterion(name, bool(fires),
                             f"beta_{p} = 0" if fires else "no conclusion"))

    add("count: |A| not divisible by p", n % p != 0)
    add("product: arrangement decomposes", len(comps) > 1)
    add("graph: Gamma_p connected", gamma_graph(arr, flats, "mod", p).is_connected())
    add("graph: Gamma_(2) connected", gamma_graph(arr, flats, "eq", 2).is_connected())
    add("graph: p divides no flat multiplicity", all(x % p for x in mults))
    # compare 2*m_p > n and 3*m_p > n to stay in integers
    add("fraction: m_p(H) > |A|/2 for all H", all(2 * v > n for v in mp))
    no_pr = all(not (x % p == 0 and x // p > 1) for x in mults)
    add("fraction: m_p(H) > |A|/3 for all H, no flats of multiplicity p*r (r > 1)",
        no_pr and all(3 * v > n for v in mp))
    return out


def any_criterion_fires(report: list[Criterion]) -> bool:
    return any(c.fires for c in report)


def betti_report(arr: Arrangement, p: int, flats: FlatTable | None = None,
                 with_aomoto: bool = True) -> dict:
    """The JSON-ready Betti report for one prime."""
    from .orlik_solomon import aomoto_h1

    flats = flats if flats is not None else compute_flat_table(arr)
    b = beta_p(arr, p, flats)
    crit = vanishing_report(arr, flats, p)
    if any_criterion_fires(crit) and b.value != 0:
        raise AssertionError(f"vanishing criterion fired but beta_{p} = {b.value}")
    report = {
        "prime": p,
        "dim_Zp": b.dim_Zp,
        "beta": b.value,
        "witness": (dict(zip(arr.labels, b.witness)) if b.witness is not None else None),
        "criteria": [{"name": c.name, "fires": c.fires, "conclusion": c.conclusion}
                     for c in crit],
    }
    if with_aomoto:
        report["beta_via_aomoto"] = aomoto_h1(arr, flats, p)
    return report


def primes_up_to(n: int) -> list[int]:
    return [q for q in range(2, n + 1) if all(q % r for r in range(2, int(q ** 0.5) + 1))]


def rank_two_beta(m: int, p: int) -> int:
    """beta_p of a pencil of m >= 2 lines: m - 2 when p | m, else 0."""
    return m - 2 if m % p == 0 else 0


__all__ = [
    "CocycleSpace", "BettiNumber", "GammaGraph", "Criterion", "cocycle_space", "beta_p",
    "gamma_graph", "m_p_of", "vanishing_report", "betti_report", "zeq_rows",
]
