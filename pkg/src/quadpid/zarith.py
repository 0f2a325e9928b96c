"""Rational-integer toolkit.

Extended gcds with fixed witness normalisations, Kronecker symbols, modular
square roots, small-prime sieving and the continued fraction of sqrt(m).
This module imports nothing from the rest of the package at load time.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

from .errors import BothZero, GcdNotOne, NotPrime, ParityUnfixable

_TRIAL_LIMIT = 1 << 20
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


# -- primes ------------------------------------------------------------------


def _trial_is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def is_prime(n: int) -> bool:
    """Trial division below 2**20, Miller-Rabin with fixed bases above.

    The base set is deterministic for every n < 3.3e24.
    """
    if n < _TRIAL_LIMIT:
        return _trial_is_prime(n)
    if n % 2 == 0:
        return False
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def sieve(n: int) -> list[int]:
    """All primes ``<= n``."""
    if n < 2:
        return []
    flags = bytearray([1]) * (n + 1)
    flags[0] = flags[1] = 0
    for i in range(2, isqrt(n) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(range(i * i, n + 1, i)))
    return [i for i, f in enumerate(flags) if f]


_SMALL_PRIMES = sieve(1 << 16)


def smallest_prime_factor(n: int) -> int:
    """Smallest prime dividing ``|n|``, for ``|n| >= 2``."""
    n = abs(n)
    if n < 2:
        raise ValueError("n must satisfy |n| >= 2")
    if n & 1 == 0:
        return 2
    if is_prime(n):
        return n
    for p in _SMALL_PRIMES:
        if p * p > n:
            return n
        if n % p == 0:
            return p
    f = _SMALL_PRIMES[-1] + 2
    while f * f <= n:
        if n % f == 0:
            return f
        f += 2
    return n


def is_squarefree(n: int) -> bool:
    n = abs(n)
    if n == 0:
        return False
    if n % 4 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % (f * f) == 0:
            return False
        if n % f == 0:
            n //= f
        f += 2
    return True


# -- gcds --------------------------------------------------------------------


def egcd2(a: int, b: int):
    """Return ``(g, s, t)`` with ``g = gcd(a, b) > 0`` and ``a*s + b*t = g``.

    Among all witnesses the one with smallest ``|t|`` is returned (ties go to
    smaller ``|s|``), so e.g. ``egcd2(39, 1) == (1, 0, 1)``.
    """
    if a == 0 and b == 0:
        raise BothZero("egcd2(0, 0)")
    if a == 0:
        return abs(b), 0, (1 if b > 0 else -1)
    if b == 0:
        return abs(a), (1 if a > 0 else -1), 0
    old_r, r = a, b
    old_s, s = 1, 0
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
    g = old_r
    if g < 0:
        g, old_s = -g, -old_s
    # t is determined modulo |a|/g
    step = abs(a) // g
    t = ((g - a * old_s) // b) % step
    best = None
    for cand in (t, t - step):
        s_c = (g - b * cand) // a
        key = (abs(cand), abs(s_c))
        if best is None or key < best[0]:
            best = (key, s_c, cand)
    return g, best[1], best[2]


@dataclass(frozen=True)
class EGcd3:
    d: int
    e: int
    f: int

    def check(self, a: int, b: int, c: int) -> bool:
        return a * self.d + b * self.e + c * self.f == 1


def egcd3(a: int, b: int, c: int) -> EGcd3:
    """Witnesses ``d, e, f`` with ``a*d + b*e + c*f = 1``.

    Composed as ``egcd2(a, b) = (g, s, t)`` followed by ``g*k + c*f = 1`` with
    ``f`` taken in ``[-g, -1]``; then ``d = s*k`` and ``e = t*k``.
    """
    if gcd(a, b, c) != 1:
        raise GcdNotOne(f"gcd({a}, {b}, {c}) != 1")
    if a == 0 and b == 0:
        return EGcd3(0, 0, c)
    g, s, t = egcd2(a, b)
    if c == 0:
        return EGcd3(s, t, 0)
    f = (pow(c, -1, g) if g > 1 else 0) - g
    k, rem = divmod(1 - c * f, g)
    assert rem == 0
    out = EGcd3(s * k, t * k, f)
    assert out.check(a, b, c)
    return out


def fix_parity(a: int, b: int, c: int, w: EGcd3) -> EGcd3:
    """Adjust a witness so that ``d = e (mod 2)``, keeping the identity.

    Odd ``c``: ``e += c, f -= b``. Even ``c`` with ``a + b`` odd:
    ``d += b, e -= a``. Even ``c`` with ``a, b`` odd has no such witness
    (``a*d + b*e`` would be even).
    """
    d, e, f = w.d, w.e, w.f
    if (d - e) & 1 == 0:
        return w
    if c & 1:
        out = EGcd3(d, e + c, f - b)
    elif (a + b) & 1:
        out = EGcd3(b + d, e - a, f)
    else:
        raise ParityUnfixable(f"no witness with d = e (mod 2) for ({a}, {b}, {c})")
    assert out.check(a, b, c) and (out.d - out.e) & 1 == 0
    return out


def egcd3_parity(a: int, b: int, c: int, field=None) -> EGcd3:
    """``egcd3`` followed by :func:`fix_parity`; meant for ``m = 1 (mod 4)``."""
    if field is not None and field.m % 4 != 1:
        raise ValueError("parity-adjusted witnesses only apply to m = 1 (mod 4)")
    return fix_parity(a, b, c, egcd3(a, b, c))


# -- quadratic residues ----------------------------------------------------------


def jacobi(a: int, n: int) -> int:
    if n <= 0 or n % 2 == 0:
        raise ValueError("jacobi needs an odd positive modulus")
    a %= n
    acc = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                acc = -acc
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            acc = -acc
        a %= n
    return acc if n == 1 else 0


def kronecker(delta: int, p: int) -> int:
    """Kronecker symbol ``(delta / p)`` for a prime ``p``."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if p == 2:
        if delta % 2 == 0:
            return 0
        return 1 if delta % 8 in (1, 7) else -1
    return jacobi(delta, p)


def _smallest_nonresidue(p: int) -> int:
    z = 2
    while jacobi(z, p) != -1:
        z += 1
    return z


def sqrt_mod(n: int, p: int):
    """Smallest ``x`` in ``[0, p)`` with ``x*x = n (mod p)``, or None.

    Deterministic Tonelli-Shanks using the smallest non-residue.
    """
    if p == 2 or not is_prime(p):
        raise NotPrime(f"{p} is not an odd prime")
    n %= p
    if n == 0:
        return 0
    if jacobi(n, p) != 1:
        return None
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    if s == 1:
        x = pow(n, (p + 1) // 4, p)
    else:
        z = _smallest_nonresidue(p)
        mm, c, t, x = s, pow(z, q, p), pow(n, q, p), pow(n, (q + 1) // 2, p)
        while t != 1:
            i, t2 = 0, t
            while t2 != 1:
                t2 = t2 * t2 % p
                i += 1
            b = pow(c, 1 << (mm - i - 1), p)
            mm, c = i, b * b % p
            t, x = t * c % p, x * b % p
    assert x * x % p == n
    return min(x, p - x)


# -- continued fractions -------------------------------------------------------


@dataclass(frozen=True)
class CFExpansion:
    a0: int
    period: tuple

    def __str__(self):
        return f"[{self.a0}; " + ", ".join(map(str, self.period)) + "]"


def _check_real_m(m: int):
    if m <= 1 or not is_squarefree(m):
        raise ValueError(f"m={m} must be a squarefree integer > 1")


def cfrac_sqrt(m: int) -> CFExpansion:
    """Periodic continued fraction of ``sqrt(m)``."""
    _check_real_m(m)
    a0 = isqrt(m)
    mn, dn, an = 0, 1, a0
    period = []
    while an != 2 * a0:
        mn = dn * an - mn
        dn = (m - mn * mn) // dn
        an = (a0 + mn) // dn
        period.append(an)
    return CFExpansion(a0, tuple(period))


@dataclass(frozen=True)
class FundUnit:
    unit: object  # QuadInt
    norm_sign: int

    def upper_bound(self) -> int:
        """An integer strictly larger than the unit's real embedding."""
        x, y = self.unit.u // 2, self.unit.v // 2
        return x + y * (isqrt(self.unit.field.m) + 1)


def fundamental_unit(m: int) -> FundUnit:
    """Smallest unit ``x + y*sqrt(m) > 1`` of ``Z[sqrt(m)]``.

    Read off the convergent just before the end of the first period.
    """
    from .quadcore import QuadInt, field_params

    cf = cfrac_sqrt(m)
    terms = (cf.a0,) + cf.period[:-1]
    h_prev, h = 1, terms[0]
    k_prev, k = 0, 1
    for a in terms[1:]:
        h_prev, h = h, a * h + h_prev
        k_prev, k = k, a * k + k_prev
    n = h * h - m * k * k
    assert n in (1, -1)
    return FundUnit(QuadInt.from_coords(h, k, field_params(m)), n)
