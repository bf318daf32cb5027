import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from permbin.binomial import PBFamilyParams, is_pb_mu_criterion
from permbin.curves import (
    BivariatePoly,
    HasseWeilBound,
    build_G,
    count_offdiagonal_points,
    degree_bound,
    diagnose,
    hasse_weil_lower,
    mu_points,
    numerator_NG,
    poly_divmod,
    poly_eval,
    poly_gcd,
    primitivity_check,
    primitivity_polys,
)
from permbin.errors import CapacityError, DomainError
from permbin.field import field_of_order


def _params(q, n, d, la):
    return PBFamilyParams.with_log(q, 2, n, d, la)


def _unit_norm_logs(q):
    # a^(q+1) = 1 exactly when q-1 divides log a
    return [la for la in range(q * q - 1) if la % (q - 1) == 0]


def _generic_logs(q):
    return [la for la in range(q * q - 1) if la % (q - 1)]


def test_build_G_shapes():
    P = _params(8, 2, 3, 5)
    F, a = P.ctx, P.a
    g = build_G(P)
    assert g.degG == 4
    assert g.P == [1, 0, 0, F.pow(a, 8)]
    assert g.Q == [0, a, 0, 0, 1]
    P = _params(4, 5, 3, 2)
    g = build_G(P)
    assert g.degG == 5
    assert g.P == [0, 0, 1, 0, 0, P.ctx.pow(P.a, 4)]
    assert g.Q == [P.a, 0, 0, 1]


def test_build_G_equal_exponents():
    # n = d: P = a^q X^n + 1, a single nonconstant monomial plus 1
    P = _params(5, 3, 3, 1)
    g = build_G(P)
    assert g.P == [1, 0, 0, P.ctx.pow(P.a, 5)]
    assert g.Q == [P.a, 0, 0, 1]


def test_build_G_rejects_bad_params():
    with pytest.raises(DomainError):
        build_G(PBFamilyParams.with_log(2, 3, 1, 1, 1))
    with pytest.raises(DomainError):
        build_G(_params(4, 1, 5, 1))


@pytest.mark.parametrize("q", [3, 4, 5, 7, 8, 9])
def test_G_agrees_with_binomial_on_mu(q):
    F = field_of_order(q * q)
    mu = mu_points(F, q)
    rng = random.Random(q)
    for _ in range(30):
        d = rng.choice([d for d in range(1, q + 2) if (q + 1) % d == 0])
        n = rng.randrange(1, 2 * q + 2)
        la = rng.choice(_generic_logs(q))
        P = _params(q, n, d, la)
        if not P.admissible():
            continue
        g = build_G(P)
        for x in mu:
            base = F.add(F.pow(x, d), P.a)
            if base == 0:
                continue
            lhs = F.mul(F.pow(x, n), F.pow(base, q - 1))
            assert g(x) == lhs


def test_mu_points_form_the_subgroup():
    F = field_of_order(49)
    mu = mu_points(F, 7)
    assert len(set(mu)) == 8 and all(F.pow(x, 8) == 1 for x in mu)
    with pytest.raises(DomainError):
        mu_points(F, 5)


def test_NG_matches_symbolic_form_q8():
    q, n, d = 8, 2, 3
    for la in range(63):
        P = _params(q, n, d, la)
        F, a = P.ctx, P.a
        aq, aq1 = F.pow(a, q), F.pow(a, q + 1)
        want = {(3, 3): aq, (2, 1): F.add(aq1, 1), (1, 2): F.add(aq1, 1), (3, 0): 1, (0, 3): 1, (0, 0): a}
        N = numerator_NG(build_G(P))
        assert N == BivariatePoly(F, want)


@settings(max_examples=150, deadline=None)
@given(st.sampled_from([3, 4, 5, 7, 8, 9]), st.data())
def test_NG_identity_at_random_points(q, data):
    F = field_of_order(q * q)
    d = data.draw(st.sampled_from([d for d in range(1, q + 2) if (q + 1) % d == 0]))
    n = data.draw(st.integers(1, q * q - 2))
    P = _params(q, n, d, data.draw(st.integers(0, q * q - 2)))
    if not P.admissible():
        return
    g = build_G(P)
    N = numerator_NG(g)
    assert N == N.swapped()
    for _ in range(10):
        x, y = data.draw(st.integers(0, F.qm1)), data.draw(st.integers(0, F.qm1))
        cross = F.sub(F.mul(poly_eval(F, g.P, x), poly_eval(F, g.Q, y)), F.mul(poly_eval(F, g.P, y), poly_eval(F, g.Q, x)))
        assert F.mul(N(x, y), F.sub(x, y)) == cross


def test_degree_bound_sweep_q8():
    q = 8
    for d in (1, 3, 9):
        for n in range(1, q * q):
            for la in range(q * q - 1):
                P = _params(q, n, d, la)
                if not P.admissible():
                    continue
                N = numerator_NG(build_G(P))
                assert N.total_degree <= degree_bound(n, d)


def test_degree_bound_values():
    assert degree_bound(5, 3) == 7
    assert degree_bound(2, 3) == 6


def test_primitivity_examples():
    for la in _generic_logs(8):
        for n in (1, 2, 4, 5):
            assert primitivity_check(_params(8, n, 3, la))
    for la in _generic_logs(9):
        assert primitivity_check(_params(9, 1, 2, la))
    with pytest.raises(DomainError):
        primitivity_check(_params(8, 2, 3, _unit_norm_logs(8)[1]))


def test_primitivity_polys_are_specializations():
    P = _params(8, 2, 3, 5)
    F = P.ctx
    A = F.pow(P.a, 9)
    c2, c1 = primitivity_polys(P)
    assert c2 == [1]
    for x in range(2, F.order):
        xm1 = F.sub(x, 1)
        want = F.add(F.sub(F.mul(A, F.pow(x, 3)), F.mul(A, x)), F.sub(1, F.pow(x, 4)))
        assert F.mul(poly_eval(F, c1, x), xm1) == want
    assert len(poly_gcd(F, c2, c1)) == 1
    assert poly_divmod(F, c1, c2)[1] == []


def test_count_points_edge_cases():
    F = field_of_order(16)
    with pytest.raises(DomainError):
        count_offdiagonal_points(BivariatePoly(F, {}))
    assert count_offdiagonal_points(BivariatePoly(F, {(0, 0): 1})) == 0
    # X + Y vanishes only on the diagonal in characteristic 2
    assert count_offdiagonal_points(BivariatePoly(F, {(1, 0): 1, (0, 1): 1})) == 0
    big = field_of_order(2**13)
    with pytest.raises(CapacityError):
        count_offdiagonal_points(BivariatePoly(big, {(1, 0): 1}))


def test_mu_count_positive_for_non_pb():
    q = 5
    hit = False
    for la in _generic_logs(q):
        P = _params(q, 1, 2, la)
        if not is_pb_mu_criterion(P):
            diag = diagnose(P)
            assert diag.mu_count > 0 and not diag.injective_on_mu
            hit = True
    assert hit


@pytest.mark.parametrize("q", [3, 4, 5, 7])
def test_mu_count_zero_iff_injective(q):
    for d in [d for d in range(1, q + 2) if (q + 1) % d == 0]:
        for n in range(1, 2 * q):
            for la in _generic_logs(q):
                P = _params(q, n, d, la)
                if not P.admissible():
                    continue
                diag = diagnose(P)
                assert (diag.mu_count == 0) == diag.injective_on_mu


def test_diagnose_fields():
    P = _params(4, 13, 3, 5)
    diag = diagnose(P, count_points=True)
    assert diag.delta == 2 * build_G(P).degG - 2
    assert diag.degree <= diag.degree_bound
    assert diag.affine_count is not None and diag.affine_count >= diag.mu_count
    assert set(diag.to_json()) == {"delta", "degree", "degree_bound", "affine_count", "mu_count", "hw_lower", "injective_on_mu"}


def test_bivariate_json_round_trip():
    P = _params(8, 2, 3, 5)
    N = numerator_NG(build_G(P))
    assert BivariatePoly.from_json(N.to_json()) == N


def test_hasse_weil_values():
    assert hasse_weil_lower(16, 2) == HasseWeilBound(12, True, 0.0)
    assert hasse_weil_lower(256, 4).value == 152
    b = hasse_weil_lower(17, 4)
    assert not b.exact and 0 < b.error < 1e-9
    assert abs(b.value - (17 - 6 * 17**0.5 - 8)) <= b.error + 1e-12
    for delta in range(2, 13):
        assert hasse_weil_lower(delta**4, delta).positive
    with pytest.raises(DomainError):
        hasse_weil_lower(0, 3)
