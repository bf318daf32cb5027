import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import orbits_by_definition
from permbin.errors import DomainError
from permbin.residue import coprime_lift, g_orbits, normalize, orbit_group, orbit_min, units


def divisor_pairs(limit):
    return [(qm1, d) for qm1 in range(1, limit + 1) for d in range(1, qm1 + 1) if qm1 % d == 0]


def test_normalize_uses_one_to_modulus():
    assert normalize(0, 15) == 15
    assert normalize(15, 15) == 15
    assert normalize(-1, 15) == 14
    assert normalize(16, 15) == 1


def test_coprime_lift_examples():
    assert coprime_lift(1, 98, 7) == 1
    # r = 2 is already coprime to 15, so the least lift is k = 0
    assert coprime_lift(2, 15, 5) == 2
    assert coprime_lift(3, 12, 4) == 7


def test_coprime_lift_rejects_bad_input():
    with pytest.raises(DomainError):
        coprime_lift(2, 12, 4)
    with pytest.raises(DomainError):
        coprime_lift(1, 12, 5)


@given(st.integers(1, 400), st.data())
def test_coprime_lift_postconditions(dividend, data):
    divs = [s for s in range(1, dividend + 1) if dividend % s == 0]
    step = data.draw(st.sampled_from(divs))
    r = data.draw(st.integers(1, 3 * step))
    if math.gcd(r, step) != 1:
        with pytest.raises(DomainError):
            coprime_lift(r, dividend, step)
        return
    s = coprime_lift(r, dividend, step)
    assert (s - r) % step == 0 and math.gcd(s, dividend) == 1
    assert all(math.gcd(r + k * step, dividend) != 1 for k in range((s - r) // step))


def test_orbit_group_members():
    g = orbit_group(15, 3)
    assert {t for t, s in g.members if s == 1} == {1, 11}
    assert {t for t, s in g.members if s == -1} == {4, 14}
    g = orbit_group(8, 1)
    assert g.members == ((1, 1), (7, -1))
    g = orbit_group(15, 15)
    assert g.ambiguous and {t for t, _ in g.members} == set(units(15))
    assert all(s == 1 for _, s in g.members)
    with pytest.raises(DomainError):
        orbit_group(15, 4)


@pytest.mark.parametrize("qm1,d", divisor_pairs(64))
def test_orbit_group_size_and_closure(qm1, d):
    g = orbit_group(qm1, d)
    k = qm1 // d
    expected = [t for t in units(qm1) if (t - 1) % k == 0 or (t + 1) % k == 0]
    assert sorted(t for t, _ in g.members) == expected
    ts = {t for t, _ in g.members}
    assert all(normalize(a * b, qm1) in ts for a in ts for b in ts)


@pytest.mark.parametrize("qm1,d", divisor_pairs(80))
def test_orbits_match_definition(qm1, d):
    got = [list(o) for o in g_orbits(qm1, d)]
    assert got == orbits_by_definition(qm1, d)
    for block in got:
        for n in block:
            assert orbit_min(qm1, d, n) == block[0]


def test_orbits_small_cases():
    assert g_orbits(2, 1) == ((1, 2),)
    assert g_orbits(4, 1) == ((1, 2), (3, 4))
    assert [o[0] for o in g_orbits(4, 1)] == [1, 3]


def test_orbits_q16_d3():
    # 15 -> 14*15 - 3 = 12 (mod 15), so 12 and 15 share an orbit
    assert g_orbits(15, 3) == ((1, 11), (2, 5, 7, 10), (3, 9), (4, 8, 13, 14), (6,), (12, 15))
    assert (14 * 15 - 3) % 15 == 12
