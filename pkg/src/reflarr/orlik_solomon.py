"""Degree <= 2 of the Orlik-Solomon algebra: cup products and the Aomoto complex.

Degree-two classes are stored flat by flat.  For a rank-2 flat X with least
member H0, the X-component has one coordinate per member H != H0, the
coefficient of e_{H0} e_H.  Since e_H e_K = e_{H0} e_K - e_{H0} e_H inside X,
the cup product of two one-classes has X-coordinate

    sigma_X * tau_H - tau_X * sigma_H,    sigma_X = sum of sigma over A_X.

Coefficients live in Q (``field="Q"``) or in F_p (``field=p``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .arrangement import Arrangement, FlatTable, compute_flat_table
from .linalg import check_prime, rank_mod_p, rank_q


def _normalize_field(field):
    if field in ("Q", None, 0):
        return "Q"
    check_prime(field)
    return field


def _coerce(field, x):
    return Fraction(x) if field == "Q" else x % field


@dataclass(frozen=True)
class DegreeTwoClass:
    field: object
    components: tuple  # one tuple per flat, in flat-table order

    def is_zero(self) -> bool:
        return not any(any(c) for c in self.components)

    def __neg__(self):
        return DegreeTwoClass(self.field, tuple(tuple(_coerce(self.field, -x) for x in comp)
                                                for comp in self.components))

    def __eq__(self, other):
        return (isinstance(other, DegreeTwoClass) and self.field == other.field
                and self.components == other.components)

    def __hash__(self):
        return hash(self.components)


def cup(arr: Arrangement, flats: FlatTable | None, field, sigma: Sequence, tau: Sequence
        ) -> DegreeTwoClass:
    field = _normalize_field(field)
    flats = flats if flats is not None else compute_flat_table(arr)
    s = [_coerce(field, x) for x in sigma]
    t = [_coerce(field, x) for x in tau]
    comps = []
    for X in flats.flats:
        sx = sum(s[h] for h in X.members)
        tx = sum(t[h] for h in X.members)
        comps.append(tuple(_coerce(field, sx * t[h] - tx * s[h]) for h in X.members[1:]))
    return DegreeTwoClass(field, tuple(comps))


def cup_with_rows(flats: FlatTable, sigma: Sequence, field) -> list[list]:
    """Matrix of tau -> sigma . tau, one row per basis element of degree two."""
    field = _normalize_field(field)
    n = flats.n
    s = [_coerce(field, x) for x in sigma]
    rows = []
    for X in flats.flats:
        sx = sum(s[k] for k in X.members)
        for h in X.members[1:]:
            row = [0] * n
            row[h] += sx
            for k in X.members:
                row[k] -= s[h]
            rows.append([_coerce(field, x) for x in row])
    return rows


def degree_two_dim(flats: FlatTable) -> int:
    return sum(X.multiplicity - 1 for X in flats.flats)


def aomoto_h1(arr: Arrangement, flats: FlatTable | None, p: int) -> int:
    """dim H^1 of (A^*(F_p), sigma_p .): kernel of cup with sigma_p, modulo sigma_p."""
    check_prime(p)
    flats = flats if flats is not None else compute_flat_table(arr)
    rows = cup_with_rows(flats, [1] * arr.n, p)
    kernel = arr.n - (rank_mod_p(rows, arr.n, p) if rows else 0)
    return kernel - 1


def _rank(field, vectors, n):
    if not vectors:
        return 0
    return rank_q(vectors) if field == "Q" else rank_mod_p(vectors, n, field)


def is_isotropic(arr: Arrangement, flats: FlatTable | None, field, basis: Sequence[Sequence]
                 ) -> bool:
    """True iff every pairwise cup product of the (independent) basis vanishes."""
    field = _normalize_field(field)
    flats = flats if flats is not None else compute_flat_table(arr)
    vecs = [[_coerce(field, x) for x in v] for v in basis]
    if _rank(field, vecs, arr.n) != len(vecs):
        raise ValueError("isotropy test needs linearly independent classes")
    for i in range(len(vecs)):
        for j in range(i + 1, len(vecs)):
            if not cup(arr, flats, field, vecs[i], vecs[j]).is_zero():
                return False
    return True


def nabla_wedge_phi(flats: FlatTable, block: Sequence[int], weight: Sequence[int], k: int
                    ) -> list[dict]:
    """Image of each degree-two homology generator under wedge^2(phi) o nabla.

    The generator dual to e_{H0} e_H in flat X maps under the comultiplication
    to sum_{K in A_X, K != H} a_K ^ a_H.  Then phi sends a_K to m_K c_{block(K)}
    in H_1(S) = Z<c_1..c_k>/(sum c), which we write in the basis c_1..c_{k-1}.
    Each image is returned as {(alpha, beta): coefficient} with alpha < beta.
    """

    def phi(h):
        # vector in Z^(k-1)
        v = [0] * (k - 1)
        a = block[h]
        if a == k - 1:
            v = [-weight[h]] * (k - 1)
        else:
            v[a] = weight[h]
        return v

    images = []
    for X in flats.flats:
        for h in X.members[1:]:
            acc: dict = {}
            ph = phi(h)
            for kk in X.members:
                if kk == h:
                    continue
                pk = phi(kk)
                # pk ^ ph in the basis c_a ^ c_b, a < b
                for a in range(k - 1):
                    for b in range(a + 1, k - 1):
                        c = pk[a] * ph[b] - pk[b] * ph[a]
                        if c:
                            acc[(a, b)] = acc.get((a, b), 0) + c
            images.append({key: v for key, v in acc.items() if v})
    return images


def nabla_check(arr: Arrangement, flats: FlatTable | None, phi_map) -> bool:
    """Whether wedge^2(phi) o nabla vanishes, cross-checked against cup isotropy.

    ``phi_map`` carries ``block`` (block index per hyperplane), ``weight`` and ``k``.
    """
    flats = flats if flats is not None else compute_flat_table(arr)
    images = nabla_wedge_phi(flats, phi_map.block, phi_map.weight, phi_map.k)
    dual_verdict = all(not img for img in images)
    # pull back a basis of H^1(S, Q) and test the cup product directly
    pulled = []
    for alpha in range(phi_map.k - 1):
        v = []
        for h in range(arr.n):
            b = phi_map.block[h]
            x = 1 if b == alpha else (-1 if b == phi_map.k - 1 else 0)
            v.append(phi_map.weight[h] * x)
        pulled.append(v)
    cup_verdict = is_isotropic(arr, flats, "Q", pulled)
    if dual_verdict != cup_verdict:
        raise AssertionError("comultiplication and cup product disagree on isotropy")
    return dual_verdict
