"""The Dedekind-Hasse reduction step.

Given ``alpha, beta`` in ``D_m`` with ``beta`` not dividing ``alpha``, build
``gamma, delta`` with ``0 < |N(alpha*gamma - beta*delta)| < |N(beta)|``.
Writing ``xi = alpha/beta = (a + b*sqrt(m))/c`` this is the same as
``0 < |N(xi*gamma - delta)| < 1``; :func:`solve_xi` handles that form.

Case tags recorded in ``StepResult.trace``:

``Lemma1Split``      composite ``c`` reduced to a prime (or to 4)
``Lemma1C4_5mod8``   ``c = 4``, ``a, b`` odd, ``m = 5 (mod 8)``
``Lemma1C4_1mod8``   ``c = 4``, ``a, b`` odd, ``m = 1 (mod 8)``
``Lemma2``           prime ``c`` above the Gauss bound
``Lemma3``           prime ``c`` not dividing ``a^2 - m b^2``
``C2Ramified``       ``c = 2``, ``m = 2, 3 (mod 4)``
``CaseISplit``       odd prime ``c`` split in ``D_m``
``CaseIIRamified``   odd prime ``c`` dividing ``m``
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import (
    DivisorZero,
    DividesAlpha,
    FieldMismatch,
    InternalContradiction,
    NotReduced,
    TableIncomplete,
    XiIntegral,
)
from .quadcore import (
    QuadInt,
    XiForm,
    _mk,
    gauss_bound_holds,
    qi_divides,
    qi_exact_div,
    xi_in_ring,
    xi_reduce,
)
from .zarith import egcd2, egcd3, fix_parity, kronecker, smallest_prime_factor

TAGS = (
    "Lemma1Split",
    "Lemma1C4_5mod8",
    "Lemma1C4_1mod8",
    "Lemma2",
    "Lemma3",
    "C2Ramified",
    "CaseISplit",
    "CaseIIRamified",
)


@dataclass(frozen=True)
class StepResult:
    gamma: QuadInt
    delta: QuadInt
    rho: QuadInt
    trace: tuple


def residual_norm(a, b, c, field, gamma: QuadInt, delta: QuadInt):
    """``N(xi*gamma - delta)`` as an exact pair ``(numerator, denominator)``."""
    m = field.m
    p = a * gamma.u + m * b * gamma.v - c * delta.u
    q = a * gamma.v + b * gamma.u - c * delta.v
    return p * p - m * q * q, 4 * c * c


def _check_residual(a, b, c, field, gamma, delta):
    num, den = residual_norm(a, b, c, field, gamma, delta)
    if not 0 < abs(num) < den:
        raise InternalContradiction(
            f"|N(xi*gamma - delta)| = {abs(num)}/{den} for xi=({a}{b:+d}*sqrt({field.m}))/{c}"
        )


def _table_entry(table, p):
    pi = table.get(p)
    if pi is None:
        raise TableIncomplete(p, table.field.m)
    return pi


def _lemma2(a, b, c, field):
    m = field.m
    if field.one_mod_4:
        w = fix_parity(a, b, c, egcd3(a, b, c))
        d, e, f = w.d, w.e, w.f
        x = a * e + m * b * d
        # q = f (mod 2) pins r to one class modulo 2c.
        mod = 2 * c
        r0 = (x - c * f) % mod
        lim, den = 2 * c, 4 * c * c
    else:
        w = egcd3(a, b, c)
        d, e, f = w.d, w.e, w.f
        x = a * e + m * b * d
        mod = c
        r0 = x % mod
        lim, den = c, c * c
    best = None
    for r in (r0 - mod, r0, r0 + mod):
        if abs(r) > lim:
            continue
        n = abs(r * r - m)
        if not 0 < n < den:
            continue
        key = (n, abs(r), r < 0)
        if best is None or key < best[0]:
            best = (key, r)
    if best is None:
        raise InternalContradiction(f"no admissible remainder for c={c}, m={m}")
    r = best[1]
    q = (x - r) // c
    if field.one_mod_4:
        return _mk(e, d, field), _mk(q, -f, field)
    return _mk(2 * e, 2 * d, field), _mk(2 * q, -2 * f, field)


def _lemma3(a, b, c, s, field):
    r = s % c
    if 2 * r > c:
        r -= c
    q = (s - r) // c
    return _mk(2 * a, -2 * b, field), _mk(2 * q, 0, field)


def _c4_special(a, b, field, table, trace):
    m = field.m
    if m % 8 == 5:
        trace.append("Lemma1C4_5mod8")
        s = a * a - m * b * b
        # a, b odd and m = 5 (mod 8) give s = 4 (mod 8)
        return _mk(a, -b, field), _mk((s - 4) // 4, 0, field)
    trace.append("Lemma1C4_1mod8")
    pi = _table_entry(table, 2)
    x, y = pi.u, pi.v
    for sx, sy in ((x, y), (-x, -y), (x, -y), (-x, y)):
        if (a - sx - b + sy) % 4 == 0:
            return _mk(2, 0, field), QuadInt((a - sx) // 2, (b - sy) // 2, field)
    raise InternalContradiction("no sign choice makes delta integral")


def _case_split(a, b, p, field, table):
    pi = _table_entry(table, p)
    x, y = pi.u, pi.v
    if (x * b - y * a) % p:
        y = -y
    assert (x * b - y * a) % p == 0
    z = x * pow(2 * a, -1, p) % p
    du, dv = 2 * a * z - x, 2 * b * z - y
    assert du % p == 0 and dv % p == 0
    return _mk(2 * z, 0, field), QuadInt(du // p, dv // p, field)


def _case_ramified(a, b, p, field, table):
    m = field.m
    pi = _table_entry(table, p)
    big_a = (a * a - m * b * b) // p
    g, r, s = egcd2(big_a, p)
    if g != 1:
        raise InternalContradiction(f"{p}^2 divides a^2 - m b^2")
    eps = 1 if pi.norm() > 0 else -1
    conj_b = _mk(2 * a, -2 * b, field)
    gamma = qi_exact_div(conj_b, pi) * r
    # xi*gamma = A r / pi and p s / pi = eps*conj(pi)*s, so xi*gamma - delta = 1/pi
    delta = pi.conj() * (-eps * s)
    return gamma, delta


def _solve(a, b, c, field, table, trace):
    m = field.m
    odd_ab = a & 1 == 1 and b & 1 == 1
    obstructed = field.one_mod_4 and odd_ab and c % 2 == 0

    if obstructed and c % 4 == 0:
        if c != 4:
            trace.append("Lemma1Split")
            g1, d1 = _c4_special(a, b, field, table, trace)
            return g1 * (c // 4), d1
        return _c4_special(a, b, field, table, trace)

    if obstructed:
        q = smallest_prime_factor(c // 2)
    else:
        q = smallest_prime_factor(c)
    if q != c:
        trace.append("Lemma1Split")
        g1, d1 = _solve(a, b, q, field, table, trace)
        return g1 * (c // q), d1

    p = c
    if not gauss_bound_holds(field, p):
        trace.append("Lemma2")
        return _lemma2(a, b, p, field)
    s = a * a - m * b * b
    if s % p:
        trace.append("Lemma3")
        return _lemma3(a, b, p, s, field)
    if kronecker(field.delta, p) == -1:
        raise InternalContradiction(
            f"{p} divides a^2 - m b^2 although it is inert in D_{m}"
        )
    if p == 2:
        if field.one_mod_4:
            raise InternalContradiction("c = 2 with a = b (mod 2) lies in D_m")
        trace.append("C2Ramified")
        pi = _table_entry(table, 2)
        x, y = pi.u >> 1, pi.v >> 1
        return _mk(2, 0, field), QuadInt(a - x, b - y, field)
    if m % p:
        trace.append("CaseISplit")
        return _case_split(a, b, p, field, table)
    trace.append("CaseIIRamified")
    return _case_ramified(a, b, p, field, table)


def _solve_checked(xi: XiForm, table, trace):
    a, b, c, field = xi.a, xi.b, xi.c, xi.field
    if table.field.m != field.m:
        raise FieldMismatch(f"table for m={table.field.m} used in m={field.m}")
    if gcd(a, b, c) != 1:
        raise NotReduced(f"gcd({a}, {b}, {c}) != 1")
    if xi_in_ring(a, b, c, field):
        raise XiIntegral(f"{xi} lies in D_{field.m}")
    gamma, delta = _solve(a, b, c, field, table, trace)
    _check_residual(a, b, c, field, gamma, delta)
    return gamma, delta


def solve_xi(xi: XiForm, table):
    """``gamma, delta`` in ``D_m`` with ``0 < |N(xi*gamma - delta)| < 1``."""
    return _solve_checked(xi, table, [])


def dh_step(alpha: QuadInt, beta: QuadInt, table) -> StepResult:
    """One reduction step; ``rho = alpha*gamma - beta*delta`` has smaller norm."""
    if beta.is_zero():
        raise DivisorZero("beta = 0")
    if qi_divides(beta, alpha):
        raise DividesAlpha(f"{beta} divides {alpha}")
    xi = xi_reduce(alpha, beta)
    trace = []
    gamma, delta = _solve_checked(xi, table, trace)
    rho = alpha * gamma - beta * delta
    nr, nb = abs(rho.norm()), abs(beta.norm())
    if not 0 < nr < nb:
        raise InternalContradiction(f"|N(rho)| = {nr}, |N(beta)| = {nb}")
    return StepResult(gamma, delta, rho, tuple(trace))


def verify_step(alpha: QuadInt, beta: QuadInt, result: StepResult) -> bool:
    """Independent check of a step: identity for rho and both norm bounds."""
    try:
        rho = alpha * result.gamma - beta * result.delta
    except FieldMismatch:
        return False
    if rho != result.rho:
        return False
    nr = abs(rho.norm())
    return 0 < nr < abs(beta.norm())
