"""Multinets: the weighted-partition axiom, concrete constructions, and a net search."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .arrangement import Arrangement, FlatTable, compute_flat_table
from .linalg import check_prime, rank_mod_p, rank_q
from .orlik_solomon import is_isotropic


class MultinetError(ValueError):
    pass


@dataclass(frozen=True)
class Multinet:
    """A partition of the hyperplanes (by label) into k blocks with positive weights."""

    blocks: tuple  # tuple of tuples of labels
    mult: dict = field(default_factory=dict)  # label -> weight; missing means 1

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(tuple(b) for b in self.blocks))
        object.__setattr__(self, "mult", dict(self.mult))

    @property
    def k(self) -> int:
        return len(self.blocks)

    def weight(self, label: str) -> int:
        return self.mult.get(label, 1)

    def check_shape(self, arr: Arrangement) -> None:
        if self.k < 3:
            raise MultinetError(f"a multinet needs at least 3 blocks, got {self.k}")
        if any(not b for b in self.blocks):
            raise MultinetError("empty block")
        flat = [lab for b in self.blocks for lab in b]
        if len(flat) != len(set(flat)):
            raise MultinetError("blocks overlap")
        if set(flat) != set(arr.labels):
            missing = set(arr.labels) - set(flat)
            extra = set(flat) - set(arr.labels)
            raise MultinetError(f"blocks do not partition the arrangement "
                                f"(missing {sorted(missing)}, unknown {sorted(extra)})")
        bad = {lab: w for lab, w in self.mult.items()
               if not isinstance(w, int) or w < 1 or lab not in set(flat)}
        if bad:
            raise MultinetError(f"weights must be positive integers on known labels: {bad}")

    def phi(self, arr: Arrangement) -> "PhiMap":
        self.check_shape(arr)
        where = {lab: a for a, b in enumerate(self.blocks) for lab in b}
        return PhiMap(tuple(where[lab] for lab in arr.labels),
                      tuple(self.weight(lab) for lab in arr.labels), self.k)

    def relabeled(self, perm) -> "Multinet":
        """Same multinet with blocks listed in the order ``perm``."""
        return Multinet(tuple(self.blocks[i] for i in perm), self.mult)

    def to_json(self) -> dict:
        return {"blocks": [list(b) for b in self.blocks],
                "multiplicities": {lab: w for lab, w in sorted(self.mult.items()) if w != 1}}

    @classmethod
    def from_json(cls, data: dict) -> "Multinet":
        return cls(tuple(tuple(b) for b in data["blocks"]),
                   {k: int(v) for k, v in data.get("multiplicities", {}).items()})


@dataclass(frozen=True)
class PhiMap:
    """phi: H_1(M) -> H_1(S), a_H -> m_H c_{block(H)}, by hyperplane index."""

    block: tuple
    weight: tuple
    k: int


@dataclass
class MultinetReport:
    valid: bool
    k: int
    cross_flat_values: dict  # flat members (labels) -> n_X
    failures: list
    reduced: bool
    reduced_mod: list  # h >= 2 with all weights = 1 (mod h), up to max weight

    def to_json(self) -> dict:
        return {
            "valid": self.valid,
            "k": self.k,
            "cross_flats": [{"members": list(m), "n_X": v}
                            for m, v in self.cross_flat_values.items()],
            "failures": [{"members": list(m), "block_sums": s} for m, s in self.failures],
            "reduced": self.reduced,
            "reduced_mod": self.reduced_mod,
        }


def reduced_moduli(weights) -> list[int]:
    """All h >= 2 with every weight congruent to 1 mod h (empty if all weights are 1)."""
    g = 0
    for w in weights:
        g = gcd(g, w - 1)
    if g == 0:
        return []
    return [h for h in range(2, g + 1) if g % h == 0]


def is_h_reduced(net: Multinet, arr: Arrangement, h: int) -> bool:
    return all((net.weight(lab) - 1) % h == 0 for lab in arr.labels)


def verify(arr: Arrangement, flats: FlatTable | None, net: Multinet) -> MultinetReport:
    """Check the block-sum axiom on every flat met by two different blocks."""
    net.check_shape(arr)
    flats = flats if flats is not None else compute_flat_table(arr)
    phi = net.phi(arr)
    labels = arr.labels
    values, failures = {}, []
    for X in flats.flats:
        sums = [0] * net.k
        for h in X.members:
            sums[phi.block[h]] += phi.weight[h]
        if sum(1 for s in sums if s) < 2:
            continue
        key = tuple(labels[h] for h in X.members)
        if len(set(sums)) == 1:
            values[key] = sums[0]
        else:
            failures.append((key, sums))
    weights = [net.weight(lab) for lab in labels]
    return MultinetReport(not failures, net.k, values, failures,
                          all(w == 1 for w in weights), reduced_moduli(weights))


# -- constructions ------------------------------------------------------------

def _root_label(i, j, a):
    return f"H{i}{j}^{a}"


def fy_monomial_3net(m: int) -> Multinet:
    """3-net on A(m,m,3): one block per pair {i, j}."""
    return Multinet(tuple(tuple(_root_label(i, j, a) for a in range(m))
                          for i, j in ((1, 2), (1, 3), (2, 3))))


def mod3_net(m: int) -> Multinet:
    """3-net on A(3n,3n,3) colouring H_{ij^a} by a mod 3, with a -> -a on the pair {1,3}."""
    if m % 3:
        raise MultinetError(f"mod3_net needs 3 | m, got m = {m}")
    blocks = [[], [], []]
    for i, j in ((1, 2), (1, 3), (2, 3)):
        for a in range(m):
            colour = (-a if (i, j) == (1, 3) else a) % 3
            blocks[colour].append(_root_label(i, j, a))
    return Multinet(tuple(tuple(b) for b in blocks))


def pairs_net(m: int) -> Multinet:
    """3-net on A(m,m,4): blocks pair up complementary index pairs."""
    blocks = []
    for (i, j), (k, h) in (((1, 2), (3, 4)), ((1, 3), (2, 4)), ((1, 4), (2, 3))):
        blocks.append(tuple(_root_label(i, j, a) for a in range(m))
                      + tuple(_root_label(k, h, a) for a in range(m)))
    return Multinet(tuple(blocks))


def full_monomial_multinet(m: int) -> Multinet:
    """3-multinet on A(m,1,3): block i holds H_i (weight m) and every H_{jk^a}, {j,k} = [3] - i."""
    blocks, mult = [], {}
    for i, (j, k) in ((1, (2, 3)), (2, (1, 3)), (3, (1, 2))):
        blocks.append((f"H{i}",) + tuple(_root_label(j, k, a) for a in range(m)))
        mult[f"H{i}"] = m
    return Multinet(tuple(blocks), mult)


def hessian_4net() -> Multinet:
    """The four triangles: z1 z2 z3 = 0 and, for each c, the lines with a + b = c (mod 3)."""
    blocks = [("H1", "H2", "H3")]
    for c in range(3):
        blocks.append(tuple(f"Ha({a},{b})" for a in range(3) for b in range(3)
                            if (a + b) % 3 == c))
    return Multinet(tuple(blocks))


# -- search -------------------------------------------------------------------

class SearchGuardError(ValueError):
    pass


def search_nets(arr: Arrangement, flats: FlatTable | None, k: int, max_results: int | None = None,
                max_n: int = 30) -> list[Multinet]:
    """All reduced k-multinets up to relabelling of blocks, by backtracking.

    Hyperplanes are assigned in index order; a hyperplane may open at most one
    new block, which fixes the block labelling (blocks ordered by least member).
    A flat met by two blocks must end with |A_X|/k members in every block, so
    partial assignments exceeding that are cut.
    """
    if k < 3:
        raise ValueError("k must be at least 3")
    if arr.n > max_n:
        raise SearchGuardError(f"search over n = {arr.n} hyperplanes exceeds the guard "
                               f"max_n = {max_n}")
    flats = flats if flats is not None else compute_flat_table(arr)
    n = arr.n
    through = [[] for _ in range(n)]
    for fi, X in enumerate(flats.flats):
        for h in X.members:
            through[h].append(fi)
    mults = [X.multiplicity for X in flats.flats]
    counts = [[0] * k for _ in flats.flats]
    assign = [-1] * n
    results: list[Multinet] = []
    labels = arr.labels

    def ok(fi):
        c = counts[fi]
        present = sum(1 for x in c if x)
        if present < 2:
            return True
        if mults[fi] % k:
            return False
        target = mults[fi] // k
        return max(c) <= target

    def rec(h, used):
        if max_results is not None and len(results) >= max_results:
            return
        if n - h < k - used:
            return
        if h == n:
            blocks = [[] for _ in range(k)]
            for i, b in enumerate(assign):
                blocks[b].append(labels[i])
            results.append(Multinet(tuple(tuple(b) for b in blocks)))
            return
        for b in range(min(used + 1, k)):
            assign[h] = b
            good = True
            for fi in through[h]:
                counts[fi][b] += 1
            for fi in through[h]:
                if not ok(fi):
                    good = False
                    break
            if good:
                rec(h + 1, max(used, b + 1))
            for fi in through[h]:
                counts[fi][b] -= 1
            assign[h] = -1

    rec(0, 0)
    return results


# -- pulled-back subspaces ----------------------------------------------------

def multinet_subspace(arr: Arrangement, net: Multinet, field="Q") -> list[list]:
    """Basis of im(phi*) in field^A: eta_H = m_H * x_{block(H)} with sum(x) = 0."""
    phi = net.phi(arr)
    if field not in ("Q", None, 0):
        check_prime(field)
        if not is_h_reduced(net, arr, field):
            raise MultinetError(f"pulling back over F_{field} needs a {field}-reduced multinet")
    basis = []
    for alpha in range(net.k - 1):
        v = []
        for h in range(arr.n):
            b = phi.block[h]
            x = 1 if b == alpha else (-1 if b == net.k - 1 else 0)
            w = phi.weight[h] * x
            v.append(Fraction(w) if field in ("Q", None, 0) else w % field)
        basis.append(v)
    return basis


def subspace_intersection_dim(u: list[list], v: list[list], field="Q") -> int:
    """dim(U cap V) = dim U + dim V - dim(U + V)."""
    if field in ("Q", None, 0):
        r = rank_q
        return r(u) + r(v) - r(u + v)
    n = len(u[0])
    return (rank_mod_p(u, n, field) + rank_mod_p(v, n, field)
            - rank_mod_p(u + v, n, field))


def reduced_net_consequences(arr: Arrangement, flats: FlatTable | None, net: Multinet,
                           check_betti: bool = True) -> list[dict]:
    """Claims implied by a verified k-multinet with all weights = 1 (mod k).

    e_d > 0 for every divisor d > 1 of k, beta_p >= 1 for every prime p | k;
    each beta claim is checked against the computed value.
    """
    from .resonance import beta_p

    flats = flats if flats is not None else compute_flat_table(arr)
    report = verify(arr, flats, net)
    if not report.valid:
        raise MultinetError("multinet axiom fails")
    k = net.k
    if not is_h_reduced(net, arr, k):
        raise MultinetError(f"weights are not all 1 mod {k}")
    claims = [{"claim": f"e_{d} > 0", "d": d} for d in range(2, k + 1) if k % d == 0]
    for p in range(2, k + 1):
        if k % p or any(p % q == 0 for q in range(2, p)):
            continue
        claim = {"claim": f"beta_{p} >= 1", "p": p}
        if check_betti:
            value = beta_p(arr, p, flats).value
            claim["computed"] = value
            if value < 1:
                raise AssertionError(f"multinet predicts beta_{p} >= 1 but computed {value}")
        claims.append(claim)
    return claims


def subspace_is_isotropic(arr: Arrangement, flats: FlatTable | None, net: Multinet,
                          field="Q") -> bool:
    return is_isotropic(arr, flats, field, multinet_subspace(arr, net, field))
