import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quadpid import dhstep
from quadpid.dhstep import StepResult, _solve_checked, dh_step, solve_xi, verify_step
from quadpid.errors import (
    DividesAlpha,
    DivisorZero,
    FieldMismatch,
    NotReduced,
    TableIncomplete,
    XiIntegral,
)
from quadpid.normsolve import build_prime_table
from quadpid.quadcore import QuadInt, XiForm, field_params, parse, xi_reduce
from quadpid.zarith import is_prime

from conftest import CERTIFIED, random_element
from oracles import residual_norm_fraction


def residual_norm(a, b, c, f, g, d):
    return Fraction(*dhstep.residual_norm(a, b, c, f, g, d))


def _trace(xi, table):
    trace = []
    gamma, delta = _solve_checked(xi, table, trace)
    return gamma, delta, trace


def test_worked_example(tables):
    f = field_params(14)
    r = dh_step(QuadInt.from_int(137, f), parse("39-1*sqrt(14)", f), tables(14))
    assert r.gamma == QuadInt.from_int(12, f)
    assert r.delta == parse("43+sqrt(14)", f)
    assert r.rho == parse("-19+4*sqrt(14)", f)
    assert r.trace == ("Lemma2",)


def test_gaussian_example(tables):
    f = field_params(-1)
    r = dh_step(QuadInt.from_int(3, f), parse("1+sqrt(-1)", f), tables(-1))
    assert (r.gamma, r.delta, r.rho) == (
        parse("sqrt(-1)", f),
        parse("1+sqrt(-1)", f),
        parse("sqrt(-1)", f),
    )
    assert abs(r.rho.norm()) == 1


def test_lemma3_example(tables):
    f = field_params(14)
    alpha, beta = QuadInt.from_int(137, f), QuadInt.from_int(2, f)
    r = dh_step(alpha, beta, tables(14))
    assert r.trace == ("Lemma3",)
    assert r.gamma == QuadInt.from_int(137, f)
    assert r.delta == QuadInt.from_int((137**2 - 1) // 2, f)
    assert 0 < abs(r.rho.norm()) < 4


def test_solve_xi_examples(tables):
    f = field_params(14)
    g, d = solve_xi(XiForm(39, 1, 11, f), tables(14))
    assert (g, d) == (QuadInt.from_int(12, f), parse("43+sqrt(14)", f))

    f = field_params(-7)
    g, d, trace = _trace(XiForm(1, 1, 4, f), tables(-7))
    assert (g, d) == (QuadInt.from_int(1, f), QuadInt.from_int(0, f))
    assert trace == ["Lemma1C4_1mod8"]
    assert residual_norm(1, 1, 4, f, g, d) == Fraction(1, 2)

    f = field_params(6)
    g, d, trace = _trace(XiForm(1, 1, 2, f), tables(6))
    assert (g, d) == (parse("1-sqrt(6)", f), QuadInt.from_int(-3, f))
    assert trace == ["Lemma3"]
    assert abs(residual_norm(1, 1, 2, f, g, d)) == Fraction(1, 4)


def test_c4_special_5mod8(tables):
    f = field_params(5)
    g, d, trace = _trace(XiForm(1, 1, 4, f), tables(5))
    assert trace == ["Lemma1C4_5mod8"]
    assert abs(residual_norm(1, 1, 4, f, g, d)) == Fraction(1, 4)


def test_c2_ramified(tables):
    f = field_params(14)
    g, d, trace = _trace(XiForm(0, 1, 2, f), tables(14))
    assert trace == ["C2Ramified"]
    assert abs(residual_norm(0, 1, 2, f, g, d)) == Fraction(1, 2)


def test_case_i_split(tables):
    f = field_params(19)
    r = dh_step(parse("1+sqrt(19)", f), QuadInt.from_int(3, f), tables(19))
    assert r.trace == ("CaseISplit",)
    assert verify_step(parse("1+sqrt(19)", f), QuadInt.from_int(3, f), r)


@pytest.mark.parametrize("m", [57, 69])
def test_case_ii_ramified(m, tables):
    f = field_params(m)
    alpha, beta = parse(f"sqrt({m})", f), QuadInt.from_int(3, f)
    r = dh_step(alpha, beta, tables(m))
    assert r.trace == ("CaseIIRamified",)
    assert verify_step(alpha, beta, r)


def test_lemma1_peels_composite(tables):
    f = field_params(14)
    g, d, trace = _trace(XiForm(1, 1, 15, f), tables(14))
    assert trace[0] == "Lemma1Split"
    assert 0 < abs(residual_norm(1, 1, 15, f, g, d)) < 1


def test_lemma1_obstructed_odd_peel(tables):
    # m = 1 (mod 4), a, b odd, c = 2 (mod 4): the factor 2 cannot be peeled
    f = field_params(17)
    g, d, trace = _trace(XiForm(1, 1, 6, f), tables(17))
    assert trace[0] == "Lemma1Split"
    assert 0 < abs(residual_norm(1, 1, 6, f, g, d)) < 1


def test_verify_step_tamper(tables):
    f = field_params(14)
    alpha, beta = QuadInt.from_int(137, f), parse("39-1*sqrt(14)", f)
    r = dh_step(alpha, beta, tables(14))
    assert verify_step(alpha, beta, r)
    one = QuadInt.from_int(1, f)
    assert not verify_step(alpha, beta, StepResult(r.gamma, r.delta + one, r.rho, r.trace))
    zero = QuadInt.from_int(0, f)
    assert not verify_step(alpha, beta, StepResult(zero, zero, zero, r.trace))
    assert not verify_step(alpha, beta, StepResult(r.gamma, r.delta, r.rho + one, r.trace))


def test_errors(tables):
    f = field_params(14)
    t = tables(14)
    a = QuadInt.from_int(6, f)
    with pytest.raises(DivisorZero):
        dh_step(a, QuadInt.from_int(0, f), t)
    with pytest.raises(DividesAlpha):
        dh_step(a, QuadInt.from_int(3, f), t)
    with pytest.raises(NotReduced):
        XiForm(2, 4, 6, f)
    with pytest.raises(XiIntegral):
        solve_xi(XiForm(3, 1, 1, f), t)
    with pytest.raises(XiIntegral):
        solve_xi(XiForm(1, 1, 2, field_params(5)), tables(5))
    with pytest.raises(FieldMismatch):
        solve_xi(XiForm(1, 0, 3, field_params(6)), t)


def test_table_incomplete():
    f = field_params(10)
    t = build_prime_table(f)
    with pytest.raises(TableIncomplete) as ei:
        solve_xi(XiForm(0, 1, 2, f), t)
    assert ei.value.p == 2
    # branches that never consult the table still work
    g, d = solve_xi(XiForm(1, 0, 3, f), t)
    assert 0 < abs(residual_norm(1, 0, 3, f, g, d)) < 1


def _random_prime_above(rng, lo, hi):
    while True:
        c = rng.randrange(lo, hi)
        if is_prime(c):
            return c


@pytest.mark.parametrize("m", [-163, -7, -1, 2, 5, 13, 14, 17, 33, 94])
@given(seed=st.integers(0, 2**32 - 1))
@settings(max_examples=60, deadline=None)
def test_lemma2_window(m, seed, tables):
    f = field_params(m)
    rng = random.Random(seed)
    mu = math.isqrt(abs(f.delta)) + 1
    c = _random_prime_above(rng, mu + 1, mu + 10**4)
    a, b = rng.randint(-10**6, 10**6), rng.randint(-10**6, 10**6)
    if math.gcd(a, b, c) != 1:
        return
    g, d, trace = _trace(XiForm(a, b, c, f), tables(m))
    assert trace == ["Lemma2"]
    n = residual_norm_fraction(a, b, c, m, (g.u, g.v), (d.u, d.v))
    assert 0 < abs(n) < 1


@pytest.mark.parametrize("m", CERTIFIED)
def test_step_contract_sample(m, tables):
    f = field_params(m)
    t = tables(m)
    rng = random.Random(m)
    done = 0
    while done < 300:
        alpha, beta = random_element(rng, f), random_element(rng, f)
        if beta.is_zero() or beta.divides(alpha):
            continue
        r = dh_step(alpha, beta, t)
        assert verify_step(alpha, beta, r)
        xi = xi_reduce(alpha, beta)
        n = residual_norm_fraction(xi.a, xi.b, xi.c, m, (r.gamma.u, r.gamma.v), (r.delta.u, r.delta.v))
        assert n == residual_norm(xi.a, xi.b, xi.c, f, r.gamma, r.delta)
        assert 0 < abs(n) < 1
        assert dh_step(alpha, beta, t) == r
        done += 1
