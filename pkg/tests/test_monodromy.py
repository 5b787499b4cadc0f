import pytest

from reflarr.arrangement import Arrangement
from reflarr.cyclotomic import totient
from reflarr.monodromy import (InconsistentRules, char_poly, divisor_flat_screen, divisors,
                               monodromy_profile, prime_power, profile_for)
from reflarr.multinet import full_monomial_multinet, hessian_4net
from reflarr.reproduce import expected_char_poly_factors
from reflarr.resonance import beta_p

from conftest import built, generic3


def test_prime_power():
    assert prime_power(8) == (2, 3)
    assert prime_power(7) == (7, 1)
    assert prime_power(12) is None
    assert prime_power(1) is None
    assert divisors(12) == [1, 2, 3, 4, 6, 12]


def test_flat_screen():
    _, flats = built("full-monomial:4:3")
    assert divisor_flat_screen(flats, 6)
    assert not divisor_flat_screen(flats, 5)
    _, flats = built("hessian")
    assert not divisor_flat_screen(flats, 3)
    _, flats = generic3()
    assert divisor_flat_screen(flats, 2)
    for m in range(2, 12):
        _, flats = built(f"full-monomial:{m}:3")
        for d in divisors(m + 2)[1:]:
            if d > 3:
                assert divisor_flat_screen(flats, d)


def test_a413_profile():
    arr, flats = built("full-monomial:4:3")
    prof = profile_for(arr, flats=flats)
    assert prof.e(3).kind == "exact" and prof.e(3).lo == 1 and "R3" in prof.e(3).rules
    assert prof.e(5).value == 0 and "R3" in prof.e(5).rules
    assert prof.e(15).kind == "zero" and prof.e(15).rules == ["R1"]
    assert str(char_poly(prof)) == "(t-1)^14 (t^2 + t + 1)"


def test_a663_profile():
    arr, flats = built("monomial:6:3")
    prof = profile_for(arr, flats=flats)
    assert (prof.e(3).kind, prof.e(3).lo) == ("exact", 2)
    assert prof.e(2).value == 0
    assert prof.e(9).kind == "zero"
    assert prof.e(6).kind == "range"


def test_hessian_profile():
    arr, flats = built("hessian")
    prof = profile_for(arr, [hessian_4net()], flats)
    assert (prof.e(2).kind, prof.e(2).lo) == ("exact", 2)
    e4 = prof.e(4)
    assert (e4.kind, e4.lo, e4.hi) == ("range", 1, 2)
    assert set(e4.rules) == {"R4", "R5"}
    for d in (3, 6, 12):
        assert prof.e(d).kind == "zero"
    cp = char_poly(prof)
    assert not cp.complete and cp.unresolved == [4]


@pytest.mark.parametrize("m,l", [(m, 3) for m in range(2, 8)] + [(m, 4) for m in range(2, 8)])
def test_full_monomial_char_poly(m, l):
    arr, flats = built(f"full-monomial:{m}:{l}")
    cp = char_poly(profile_for(arr, flats=flats))
    assert cp.complete
    assert [list(f) for f in cp.factors()] == [list(f) for f in expected_char_poly_factors(m, l)]
    assert cp.degree() == arr.n - 1 + sum(e * totient(d) for d, e in cp.exponents.items())


def test_small_char_polys():
    arr, flats = built("full-monomial:2:4")
    assert str(char_poly(profile_for(arr, flats=flats))) == "(t-1)^15"
    arr, flats = built("full-monomial:2:3")
    assert str(char_poly(profile_for(arr, flats=flats))) == "(t-1)^8"


def test_expand_matches_factors():
    arr, flats = built("full-monomial:4:3")
    cp = char_poly(profile_for(arr, flats=flats))
    # (t-1)^14 (t^2+t+1) has degree 16 and vanishes at t = 1
    coeffs = cp.expand()
    assert len(coeffs) == 17 and sum(coeffs) == 0 and coeffs[-1] == 1


@pytest.mark.parametrize("spec", ["monomial:3:3", "monomial:6:3", "full-monomial:4:3",
                                  "full-monomial:7:3", "monomial:4:4", "hessian", "G31", "G32",
                                  "G33"])
def test_e_p_equals_beta_p(spec):
    arr, flats = built(spec)
    prof = profile_for(arr, flats=flats)
    for d, s in prof.statuses.items():
        pp = prime_power(d)
        if pp and pp[1] == 1:
            assert s.value == beta_p(arr, d, flats).value


def test_non_reflection_gets_bounds_only():
    arr, flats = built("monomial:3:3")
    plain = Arrangement(arr.ambient_dim, arr.cyclotomic_order, arr.hyperplanes)
    prof = monodromy_profile(plain, flats, {3: 2})
    assert prof.e(3).kind == "range" and prof.e(3).hi == 2 and prof.e(3).rules == ["R4"]


def test_product_zero():
    arr = Arrangement.from_normals([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    prof = monodromy_profile(arr, None, {3: 0})
    assert prof.e(3).kind == "zero" and "R2" in prof.e(3).rules


def test_inconsistent_rules_raise():
    arr, flats = built("full-monomial:4:3")
    with pytest.raises(InconsistentRules):
        # a false beta_3 = 0 against the 3-reduced multinet's lower bound
        monodromy_profile(arr, flats, {3: 0, 5: 0}, [full_monomial_multinet(4)])


def test_missing_beta():
    arr, flats = built("hessian")
    with pytest.raises(KeyError):
        monodromy_profile(arr, flats, {3: 0})


def test_json_shape():
    arr, flats = built("hessian")
    data = profile_for(arr, [hessian_4net()], flats).to_json()
    assert data["e"]["1"] == 11
    assert data["e"]["4"] == {"status": "range", "rules": ["R4", "R5"], "lo": 1, "hi": 2}
    assert data["char_poly"]["unresolved"] == [4]
