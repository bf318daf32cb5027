import json
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import function_table_naive, is_permutation_naive, naive_field
from permbin.binomial import (
    Binomial,
    PBFamilyParams,
    as_function_table,
    evaluate,
    family,
    from_family,
    is_pb_mu_criterion,
    is_permutation,
    transform_alpha,
    transform_beta,
    transform_gamma,
)
from permbin.errors import CapacityError, DomainError
from permbin.field import field_of_order, make_field, mu_subgroup


def test_normalization_and_invariants():
    F = make_field(2, 4)
    f = Binomial(F, 3, 22, 5, 13)
    assert (f.m0, f.n0, f.a, f.b) == (13, 7, 5, 3)
    assert Binomial(F, 1, 16, 1, 2) == Binomial(F, 1, 1, 1, 2)
    with pytest.raises(DomainError):
        Binomial(F, 0, 3, 1, 1)
    with pytest.raises(DomainError):
        Binomial(F, 1, 15, 1, 1)
    with pytest.raises(DomainError):
        Binomial(F, 1, 17, 1, 2)
    with pytest.raises(DomainError):
        Binomial(F, 16, 3, 1, 1)


def test_from_family_reduces_and_reorders():
    a_log = 5
    f = family(4, 2, 13, 3, a_log)
    F = f.ctx
    assert (f.m0, f.n0) == (13, 7)
    assert f.a == F.xi_pow(a_log) and f.b == 1
    g = family(2, 2, 1, 1, 1)
    assert (g.m0, g.n0, g.a) == (2, 1, 1)


def test_from_family_names_the_failed_condition():
    with pytest.raises(DomainError, match="d\\(q-1\\)"):
        family(4, 2, 1, 5, 0)
    with pytest.raises(DomainError, match="n = 0"):
        family(4, 2, 15, 1, 0)
    with pytest.raises(DomainError, match="n \\+ d\\(q-1\\)"):
        family(4, 2, 6, 3, 0)


def test_evaluate_basics():
    F = make_field(2, 4)
    f = family(4, 2, 13, 3, 2)
    assert evaluate(f, 0) == F.zero()
    assert evaluate(f, 1) == F(f.a) + F(f.b)
    a = F.xi_pow(2)
    for x in mu_subgroup(F, 4):
        assert f(x) == x**13 * (x**9 + F(a))
    with pytest.raises(DomainError):
        evaluate(f, make_field(2, 3).one())


def test_is_permutation_examples():
    F4 = make_field(2, 2)
    assert not is_permutation(Binomial(F4, 1, 2, 1, 1))
    F16 = make_field(2, 4)
    a = F16.xi_pow(5)  # order 3, so a^5 != 1
    assert F16.pow(a, 5) != 1
    assert is_permutation(from_family(PBFamilyParams(4, 2, 13, 3, a)))
    F9 = make_field(3, 2)
    for la in range(8):
        if la % 2:  # a^4 != 1
            assert not is_permutation(family(3, 2, 1, 2, la))
            assert F9.pow(F9.xi_pow(la), 4) != 1


@pytest.mark.parametrize("p,m", [(2, 2), (2, 3), (3, 2), (5, 1), (7, 1), (2, 4)])
def test_is_permutation_against_schoolbook(p, m):
    F = make_field(p, m)
    ref = naive_field(p, m)
    for m0 in range(2, F.qm1):
        for n0 in range(1, m0):
            for la in range(0, F.qm1, 2):
                for lb in range(0, F.qm1, 3):
                    f = Binomial.from_logs(F, la, m0, lb, n0)
                    truth = is_permutation_naive(ref, [(f.a, f.m0), (f.b, f.n0)])
                    assert is_permutation(f) == truth


def test_function_table_matches_schoolbook():
    F = make_field(3, 2)
    ref = naive_field(3, 2)
    f = family(3, 2, 5, 2, 3)
    assert as_function_table(f) == function_table_naive(ref, [(f.a, f.m0), (f.b, f.n0)])
    assert as_function_table(f)[0] == 0
    # exponent 16 = 1 mod 15 gives the same function on F_16
    F16 = make_field(2, 4)
    a = F16.xi_pow(4)
    t1 = as_function_table(Binomial(F16, 1, 10, a, 1))
    t2 = as_function_table(Binomial(F16, 1, 25, a, 16))
    assert t1 == t2


def test_capacity_caps():
    big = make_field(2, 18)
    f = Binomial(big, 1, 3, 1, 1)
    with pytest.raises(CapacityError):
        is_permutation(f)
    with pytest.raises(CapacityError):
        is_pb_mu_criterion(PBFamilyParams(2**21, 2, 1, 3, 1))


def test_mu_criterion_examples():
    F16 = make_field(2, 4)
    assert is_pb_mu_criterion(PBFamilyParams(4, 2, 13, 3, F16.xi_pow(5)))
    for la in range(8):
        if la % 2:
            assert not is_pb_mu_criterion(PBFamilyParams.with_log(3, 2, 1, 2, la))
    # gcd clause short-circuits
    assert not is_pb_mu_criterion(PBFamilyParams.with_log(4, 2, 3, 1, 1))
    with pytest.raises(DomainError):
        is_pb_mu_criterion(PBFamilyParams.with_log(2, 3, 1, 1, 1))


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7])
def test_mu_criterion_agrees_with_brute_force(q):
    F = field_of_order(q * q)
    for d in range(1, q + 2):
        if (q + 1) % d:
            continue
        for n in range(1, q * q):
            for la in range(F.qm1):
                P = PBFamilyParams.with_log(q, 2, n, d, la)
                if not P.admissible():
                    continue
                assert is_pb_mu_criterion(P) == is_permutation(from_family(P)), (n, d, la)


def test_mu_criterion_table_free_path_agrees():
    from permbin.binomial import _mu_check_table_free

    F = field_of_order(49)
    for n in (1, 3, 5):
        for la in range(48):
            a = F.xi_pow(la)
            P = PBFamilyParams(7, 2, n, 2, a)
            if math.gcd(n, 2 * 6) != 1:
                continue
            assert _mu_check_table_free(F, 7, n, 2, a) == is_pb_mu_criterion(P)


def test_transform_identities():
    F = make_field(2, 4)
    f = family(4, 2, 13, 3, 5)
    assert transform_alpha(f, 1) == f
    assert transform_gamma(f, 1, 1) == f
    g = f
    for _ in range(F.m):
        g = transform_beta(g)
    assert g == f
    with pytest.raises(DomainError):
        transform_gamma(f, 1, 3)
    with pytest.raises(DomainError):
        transform_alpha(f, 0)
    with pytest.raises(DomainError):
        transform_gamma(f, 0, 1)


def test_gamma_permutes_the_table():
    F = make_field(2, 4)
    f = family(4, 2, 13, 3, 5)
    g = transform_gamma(f, F.xi_pow(3), 7)
    assert sorted(as_function_table(f)) == sorted(as_function_table(g))


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([4, 5, 7, 8, 9, 11, 13, 16]), st.data())
def test_transforms_preserve_permutation_property(q, data):
    F = field_of_order(q)
    m0 = data.draw(st.integers(2, F.qm1 - 1))
    n0 = data.draw(st.integers(1, m0 - 1))
    la, lb = data.draw(st.integers(0, F.qm1 - 1)), data.draw(st.integers(0, F.qm1 - 1))
    f = Binomial.from_logs(F, la, m0, lb, n0)
    kind = data.draw(st.sampled_from(["alpha", "beta", "gamma"]))
    try:
        if kind == "alpha":
            g = transform_alpha(f, F.xi_pow(data.draw(st.integers(0, F.qm1 - 1))))
        elif kind == "beta":
            g = transform_beta(f)
        else:
            s = data.draw(st.sampled_from([s for s in range(1, F.qm1 + 1) if math.gcd(s, F.qm1) == 1]))
            g = transform_gamma(f, F.xi_pow(data.draw(st.integers(0, F.qm1 - 1))), s)
    except DomainError:
        return  # reduction collided exponents; not a binomial any more
    assert is_permutation(f) == is_permutation(g)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([8, 9, 16, 25]), st.data())
def test_gamma_commutes_with_alpha_and_beta(q, data):
    F = field_of_order(q)
    f = Binomial.from_logs(F, data.draw(st.integers(0, F.qm1 - 1)), 3, data.draw(st.integers(0, F.qm1 - 1)), 1)
    u = F.xi_pow(data.draw(st.integers(0, F.qm1 - 1)))
    v = F.xi_pow(data.draw(st.integers(0, F.qm1 - 1)))
    s = data.draw(st.sampled_from([s for s in range(1, F.qm1) if math.gcd(s, F.qm1) == 1]))
    try:
        lhs = as_function_table(transform_gamma(transform_alpha(f, u), v, s))
        rhs = as_function_table(transform_alpha(transform_gamma(f, v, s), u))
        assert lhs == rhs
        lhs = as_function_table(transform_gamma(transform_beta(f), v, s))
        rhs = as_function_table(transform_beta(transform_gamma(f, v, s)))
        assert lhs == rhs
        lhs = as_function_table(transform_beta(transform_alpha(f, u)))
        rhs = as_function_table(transform_alpha(transform_beta(f), F.pow(u, F.p)))
        assert lhs == rhs
    except DomainError:
        pass


def test_json_round_trip():
    f = family(5, 2, 3, 2, 7)
    doc = json.loads(json.dumps(f.to_json()))
    assert Binomial.from_json(doc) == f
    assert [t["exp"] for t in doc["terms"]] == [f.m0, f.n0]
