"""Bezout gcds by iterated reduction steps, and prime elements above the bound."""

from __future__ import annotations

from dataclasses import dataclass

from .dhstep import dh_step
from .errors import BothZero, NoSquareRoot, NormMismatch, NotPrime
from .quadcore import FieldParams, QuadInt, _mk, qi_divides
from .zarith import is_prime, kronecker, sqrt_mod


@dataclass(frozen=True)
class BezoutResult:
    gcd: QuadInt
    lam: QuadInt
    mu: QuadInt
    chain_length: int
    traces: tuple = ()

    # ``lambda`` is a keyword; keep the public name available.
    @property
    def lambda_(self) -> QuadInt:
        return self.lam


def dh_gcd(alpha: QuadInt, beta: QuadInt, table) -> BezoutResult:
    """A generator ``g`` of the ideal ``(alpha, beta)`` with ``alpha*lam + beta*mu = g``.

    Coefficients are carried forward: a step ``rho = r0*gamma - r1*delta``
    gives ``row(rho) = gamma*row(r0) - delta*row(r1)``.

    Stopping when the newest remainder divides the previous one is not enough
    on its own: ``(r1, rho) = (r1, r0*gamma)`` can be a proper sub-ideal. So a
    candidate is accepted only once it divides both inputs; otherwise the
    loop resumes with the input it fails to divide.
    """
    f = alpha.field
    if alpha.is_zero() and beta.is_zero():
        raise BothZero("gcd(0, 0)")
    one, zero = _mk(2, 0, f), _mk(0, 0, beta.field)
    if beta.is_zero():
        return BezoutResult(alpha, one, zero, 0)
    if alpha.is_zero():
        return BezoutResult(beta, zero, one, 0)

    if abs(alpha.norm()) >= abs(beta.norm()):
        r0, row0, r1, row1 = alpha, (one, zero), beta, (zero, one)
    else:
        r0, row0, r1, row1 = beta, (zero, one), alpha, (one, zero)
    inputs = ((alpha, (one, zero)), (beta, (zero, one)))
    traces = []
    while True:
        if qi_divides(r1, r0):
            for h, row in inputs:
                if not qi_divides(r1, h):
                    r0, row0 = h, row
                    break
            else:
                break
            continue
        step = dh_step(r0, r1, table)
        traces.append(step.trace)
        g, d = step.gamma, step.delta
        row_rho = (row0[0] * g - row1[0] * d, row0[1] * g - row1[1] * d)
        r0, row0, r1, row1 = r1, row1, step.rho, row_rho

    lam, mu = row1
    assert alpha * lam + beta * mu == r1
    return BezoutResult(r1, lam, mu, len(traces), tuple(traces))


def prime_element(field: FieldParams, p: int, table) -> QuadInt:
    """An element of norm ``+-p``, found as a generator of ``(p, x - sqrt(m))``."""
    if p == 2 or not is_prime(p):
        raise NotPrime(f"{p} is not an odd prime")
    m = field.m
    if m % p == 0:
        x = 0
    else:
        if kronecker(field.delta, p) == -1:
            raise NoSquareRoot(f"{m} is not a square modulo {p}")
        x = sqrt_mod(m, p)
    alpha = _mk(2 * p, 0, field)
    beta = _mk(2 * x, -2, field)
    pi = dh_gcd(alpha, beta, table).gcd
    if abs(pi.norm()) != p:
        raise NormMismatch(f"gcd({p}, {x}-sqrt({m})) = {pi} has norm {pi.norm()}")
    return pi


def reduce_unit(x: QuadInt, unit: QuadInt) -> QuadInt:
    """Multiply ``x`` by powers of ``unit`` while ``|u| + |v|`` strictly drops."""
    inv = unit.conj() * unit.norm()
    size = abs(x.u) + abs(x.v)
    while True:
        moved = False
        for w in (inv, unit):
            y = x * w
            s = abs(y.u) + abs(y.v)
            if s < size:
                x, size, moved = y, s, True
                break
        if not moved:
            return x
