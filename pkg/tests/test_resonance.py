import random

import pytest
from hypothesis import given, settings, strategies as st

from reflarr.resonance import (any_criterion_fires, beta_p, betti_report, cocycle_space,
                               gamma_graph, m_p_of, rank_two_beta, vanishing_report)

from conftest import built, generic3, pencil, random_rank3


def satisfies_zeq(flats, eta, p):
    for X in flats.flats:
        vals = [eta[h] % p for h in X.members]
        if X.multiplicity % p == 0:
            if sum(vals) % p:
                return False
        elif len(set(vals)) != 1:
            return False
    return True


@pytest.mark.parametrize("spec,p,dim", [("monomial:3:3", 3, 3), ("hessian", 2, 3),
                                        ("full-monomial:4:3", 3, 2)])
def test_cocycle_space_dims(spec, p, dim):
    arr, flats = built(spec)
    space = cocycle_space(arr, flats, p)
    assert space.dim == dim
    assert space.contains([1] * arr.n)
    for v in space.basis:
        assert satisfies_zeq(flats, v, p)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_pencil_of_p_lines(p):
    arr, flats = pencil(p)
    assert cocycle_space(arr, flats, p).dim == p - 1


@pytest.mark.parametrize("p", [2, 3, 5])
def test_generic_triple_constants_only(p):
    arr, flats = generic3()
    assert cocycle_space(arr, flats, p).dim == 1


@pytest.mark.parametrize("spec,p,beta", [
    ("full-monomial:4:3", 3, 1), ("monomial:6:3", 3, 2), ("hessian", 2, 2),
    ("monomial:2:4", 3, 1), ("monomial:5:4", 3, 1), ("monomial:7:4", 3, 1),
    ("G31", 2, 0), ("G32", 3, 0), ("G33", 5, 0),
])
def test_beta_examples(spec, p, beta):
    arr, flats = built(spec)
    b = beta_p(arr, p, flats)
    assert b.value == beta
    if beta:
        assert b.witness is not None and satisfies_zeq(flats, b.witness, p)
        assert len(set(b.witness)) > 1
    else:
        assert b.witness is None


@pytest.mark.parametrize("m", range(2, 10))
@pytest.mark.parametrize("p", [2, 3, 5])
def test_rank_two_pencil(m, p):
    arr, flats = pencil(m)
    assert beta_p(arr, p, flats).value == rank_two_beta(m, p) == (m - 2 if m % p == 0 else 0)


def test_rejects_nonprime():
    arr, flats = generic3()
    with pytest.raises(ValueError):
        beta_p(arr, 4, flats)


def test_gamma_graphs():
    arr, flats = built("full-monomial:2:4")
    assert gamma_graph(arr, flats, "eq", 2).is_connected()
    arr, flats = built("full-monomial:4:3")
    assert not gamma_graph(arr, flats, "mod", 3).is_connected()
    arr, flats = pencil(5)
    g = gamma_graph(arr, flats, "mod", 5)
    assert not g.edges and not g.is_connected()
    with pytest.raises(ValueError):
        gamma_graph(arr, flats, "mod", 1)


def test_gamma2_special_rule():
    # multiplicity 2 flats count for Gamma_2 although 2 | 2
    arr, flats = generic3()
    assert gamma_graph(arr, flats, "mod", 2).is_connected()
    arr, flats = pencil(4)
    assert not gamma_graph(arr, flats, "mod", 2).edges


@pytest.mark.parametrize("spec", ["monomial:3:3", "full-monomial:3:4", "hessian", "G32"])
@pytest.mark.parametrize("p", [2, 3, 5])
def test_eq2_edges_inside_mod_p_edges(spec, p):
    arr, flats = built(spec)
    assert gamma_graph(arr, flats, "eq", 2).edges <= gamma_graph(arr, flats, "mod", p).edges


def test_m_p_examples():
    arr, flats = generic3()
    assert all(m_p_of(arr, flats, h, p) == 3 for h in range(3) for p in (3, 5))
    # for p = 2 both flats through H are excluded
    assert all(m_p_of(arr, flats, h, 2) == 1 for h in range(3))
    arr, flats = built("monomial:3:3")
    assert m_p_of(arr, flats, arr.index("H12^0"), 3) == 1
    arr, flats = pencil(7)
    assert m_p_of(arr, flats, 0, 3) == 7


def test_criteria_examples():
    arr, flats = built("full-monomial:2:3")
    rep = vanishing_report(arr, flats, 5)
    assert rep[0].fires and rep[0].conclusion == "beta_5 = 0"
    arr, flats = built("G32")
    rep = vanishing_report(arr, flats, 2)
    assert next(c for c in rep if "Gamma_(2)" in c.name).fires
    arr, flats = built("full-monomial:4:3")
    assert not any_criterion_fires(vanishing_report(arr, flats, 3))


@pytest.mark.parametrize("seed", range(6))
@pytest.mark.parametrize("p", [2, 3, 5])
def test_criteria_sound_on_random(seed, p):
    for arr in random_rank3(seed, count=5):
        r = betti_report(arr, p)
        if any(c["fires"] for c in r["criteria"]):
            assert r["beta"] == 0
        assert r["beta"] == r["beta_via_aomoto"]


@pytest.mark.parametrize("spec", ["monomial:6:3", "hessian", "full-monomial:4:3"])
def test_permutation_invariance(spec):
    arr, flats = built(spec)
    perm = list(range(arr.n))
    random.Random(3).shuffle(perm)
    shuffled = arr.permuted(perm)
    for p in (2, 3):
        assert beta_p(shuffled, p).value == beta_p(arr, p, flats).value


def test_report_shape():
    arr, flats = built("full-monomial:4:3")
    r = betti_report(arr, 3, flats)
    assert set(r) == {"prime", "dim_Zp", "beta", "witness", "criteria", "beta_via_aomoto"}
    assert r["dim_Zp"] == 2 and set(r["witness"]) == set(arr.labels)
    assert len(r["criteria"]) == 7


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6), st.sampled_from([2, 3, 5]))
def test_constants_always_cocycles(seed, p):
    arr = random_rank3(seed, count=1)[0]
    space = cocycle_space(arr, None, p)
    assert space.contains([1] * arr.n)
    assert space.dim >= 1
