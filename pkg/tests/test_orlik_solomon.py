from fractions import Fraction
import itertools
import random

import pytest

from reflarr.arrangement import compute_flat_table
from reflarr.linalg import rank_q
from reflarr.multinet import Multinet, fy_monomial_3net, hessian_4net
from reflarr.orlik_solomon import (aomoto_h1, cup, cup_with_rows, degree_two_dim, is_isotropic,
                                   nabla_check)
from reflarr.resonance import beta_p, cocycle_space

from conftest import built, generic3, random_rank3


def rewrite_cup(flats, sigma, tau):
    """Oracle: expand sigma ^ tau in e_a e_b, then rewrite inside each pencil.

    For a < b in flat X with least member H0, e_a e_b = e_H0 e_b - e_H0 e_a.
    """
    coords = {}
    n = flats.n
    for a in range(n):
        for b in range(a + 1, n):
            c = Fraction(sigma[a]) * tau[b] - Fraction(sigma[b]) * tau[a]
            if not c:
                continue
            X = flats.flat_of(a, b)
            h0 = X.members[0]
            terms = [(b, c)] if a == h0 else [(b, c), (a, -c)]
            for h, v in terms:
                key = (X.members, h)
                coords[key] = coords.get(key, 0) + v
    return [tuple(coords.get((X.members, h), 0) for h in X.members[1:]) for X in flats.flats]


def os_relations(flats):
    """Rows of d(e_a e_b e_c) for triples inside one flat, in the basis e_a e_b (a < b)."""
    n = flats.n
    pairs = list(itertools.combinations(range(n), 2))
    col = {pq: i for i, pq in enumerate(pairs)}
    rows = []
    for X in flats.flats:
        for a, b, c in itertools.combinations(X.members, 3):
            row = [0] * len(pairs)
            row[col[(b, c)]] += 1
            row[col[(a, c)]] -= 1
            row[col[(a, b)]] += 1
            rows.append(row)
    return pairs, rows


def random_cases(count):
    rng = random.Random(11)
    cases = []
    specs = ["monomial:2:3", "monomial:3:3", "full-monomial:2:3", "hessian"]
    for i in range(count):
        if i % 2:
            arr, flats = built(specs[i % len(specs)])
        else:
            arr = random_rank3(i, count=1)[0]
            flats = compute_flat_table(arr)
        sigma = [rng.randint(-3, 3) for _ in range(arr.n)]
        tau = [rng.randint(-3, 3) for _ in range(arr.n)]
        cases.append((arr, flats, sigma, tau))
    return cases


@pytest.mark.parametrize("case", random_cases(120))
def test_cup_formula_matches_rewriting(case):
    arr, flats, sigma, tau = case
    got = cup(arr, flats, "Q", sigma, tau).components
    assert list(got) == rewrite_cup(flats, sigma, tau)


@pytest.mark.parametrize("spec", ["monomial:2:3", "full-monomial:2:3", "hessian"])
def test_relations_span_the_kernel(spec):
    """The closed form, as a map on the exterior square, kills exactly the OS relations."""
    arr, flats = built(spec)
    n = arr.n
    pairs, rels = os_relations(flats)
    images = []
    for a, b in pairs:
        ea = [int(i == a) for i in range(n)]
        eb = [int(i == b) for i in range(n)]
        images.append([x for comp in cup(arr, flats, "Q", ea, eb).components for x in comp])
    rank_map = rank_q(images)
    assert rank_map == degree_two_dim(flats)
    assert len(pairs) - rank_q(rels) == degree_two_dim(flats)
    for row in rels:
        total = [sum(c * img[k] for c, img in zip(row, images)) for k in range(len(images[0]))]
        assert not any(total)


def test_brieskorn_dimension():
    _, flats = built("full-monomial:4:3")
    assert degree_two_dim(flats) == 3 * 5 + 16 * 2 + 12 * 1


def test_cup_antisymmetric_and_self_zero():
    arr, flats = built("monomial:3:3")
    rng = random.Random(5)
    s = [rng.randint(-4, 4) for _ in range(arr.n)]
    t = [rng.randint(-4, 4) for _ in range(arr.n)]
    assert cup(arr, flats, "Q", s, s).is_zero()
    assert cup(arr, flats, "Q", s, t) == -cup(arr, flats, "Q", t, s)
    assert cup(arr, flats, 3, s, t) == -cup(arr, flats, 3, t, s)


def test_multiplicity_two_component():
    arr, flats = generic3()
    s, t = [2, 5, -1], [3, 1, 4]
    comps = cup(arr, flats, "Q", s, t).components
    for X, comp in zip(flats.flats, comps):
        h, k = X.members
        assert comp == (s[h] * t[k] - s[k] * t[h],)
    assert not cup(arr, flats, "Q", s, t).is_zero()


@pytest.mark.parametrize("spec,p", [("monomial:3:3", 3), ("hessian", 2), ("full-monomial:4:3", 3)])
def test_sigma_kills_cocycles(spec, p):
    arr, flats = built(spec)
    for eta in cocycle_space(arr, flats, p).basis:
        assert cup(arr, flats, p, [1] * arr.n, eta).is_zero()


@pytest.mark.parametrize("spec,p,value", [("monomial:3:3", 3, 2), ("hessian", 2, 2),
                                          ("G33", 2, 0), ("G33", 3, 0), ("G33", 5, 0)])
def test_aomoto_examples(spec, p, value):
    arr, flats = built(spec)
    assert aomoto_h1(arr, flats, p) == value == beta_p(arr, p, flats).value


def test_isotropy_examples():
    arr, flats = generic3()
    assert not is_isotropic(arr, flats, "Q", [[1, 0, 0], [0, 1, 0]])
    with pytest.raises(ValueError):
        is_isotropic(arr, flats, "Q", [[1, 0, 0], [2, 0, 0]])


@pytest.mark.parametrize("spec,p", [("monomial:3:3", 3), ("hessian", 2), ("monomial:6:3", 3)])
def test_sigma_and_witness_span(spec, p):
    arr, flats = built(spec)
    w = beta_p(arr, p, flats).witness
    assert is_isotropic(arr, flats, p, [[1] * arr.n, w])


def test_cup_rows_match_cup():
    arr, flats = built("full-monomial:3:3")
    rng = random.Random(2)
    s = [rng.randint(0, 4) for _ in range(arr.n)]
    t = [rng.randint(0, 4) for _ in range(arr.n)]
    rows = cup_with_rows(flats, s, 5)
    flat = [x for comp in cup(arr, flats, 5, s, t).components for x in comp]
    assert [sum(a * b for a, b in zip(r, t)) % 5 for r in rows] == flat


@pytest.mark.parametrize("spec,net", [("hessian", hessian_4net()), ("monomial:3:3", fy_monomial_3net(3))])
def test_nabla_agrees_with_cup(spec, net):
    arr, flats = built(spec)
    assert nabla_check(arr, flats, net.phi(arr))


def test_nabla_detects_bad_partition():
    arr, flats = generic3()
    net = Multinet((("H1",), ("H2",), ("H3",)))
    assert not nabla_check(arr, flats, net.phi(arr))
