"""Exact arithmetic in a quadratic field K = Q(sqrt(m)) and its ring of integers.

Every ring element is stored in half-coordinates ``(u + v*sqrt(m))/2``. The
parity of ``(u, v)`` encodes membership in the ring of integers ``D_m``:

* ``m = 1 (mod 4)``: ``u = v (mod 2)``;
* ``m = 2, 3 (mod 4)``: ``u`` and ``v`` both even.

All coordinates are Python ints, so nothing ever overflows.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .errors import (
    DegenerateM,
    DivisorZero,
    FieldMismatch,
    NotDivisible,
    NotIntegral,
    NotReduced,
    NotSquarefree,
    ParseError,
)
from .zarith import is_squarefree


class RingClass(enum.Enum):
    OneMod4 = "OneMod4"
    TwoThreeMod4 = "TwoThreeMod4"


class Sign(enum.Enum):
    Real = "Real"
    Imaginary = "Imaginary"


@dataclass(frozen=True)
class FieldParams:
    m: int
    delta: int
    ring_class: RingClass
    sign: Sign

    @property
    def one_mod_4(self) -> bool:
        return self.ring_class is RingClass.OneMod4

    @property
    def is_real(self) -> bool:
        return self.sign is Sign.Real

    def __str__(self):
        return f"Q(sqrt({self.m}))"


@lru_cache(maxsize=4096)
def field_params(m: int) -> FieldParams:
    """Validate ``m`` and return the parameters of Q(sqrt(m)).

    The discriminant is ``m`` when ``m = 1 (mod 4)`` and ``4m`` otherwise.
    Results are cached, so equal ``m`` give the identical object.
    """
    m = int(m)
    if m in (0, 1):
        raise DegenerateM(f"m={m} does not define a quadratic field")
    if not is_squarefree(m):
        raise NotSquarefree(f"m={m} is not squarefree")
    if m % 4 == 1:
        delta, rc = m, RingClass.OneMod4
    else:
        delta, rc = 4 * m, RingClass.TwoThreeMod4
    return FieldParams(m, delta, rc, Sign.Real if m > 0 else Sign.Imaginary)


def gauss_bound_holds(field: FieldParams, p: int) -> bool:
    """Exact test of ``p <= mu_m`` without any irrational arithmetic.

    ``mu_m`` is ``sqrt(delta/5)`` for real fields and ``sqrt(-delta/3)`` for
    imaginary ones; equality counts as inside the bound.
    """
    if field.m > 0:
        return 5 * p * p <= field.delta
    return 3 * p * p <= -field.delta


def _check_parity(u: int, v: int, field: FieldParams) -> bool:
    if field.ring_class is RingClass.OneMod4:
        return (u - v) & 1 == 0
    return u & 1 == 0 and v & 1 == 0


def _same_field(x: "QuadInt", y: "QuadInt") -> FieldParams:
    f = x.field
    if f is not y.field and f.m != y.field.m:
        raise FieldMismatch(f"{f} vs {y.field}")
    return f


@dataclass(frozen=True, slots=True)
class QuadInt:
    """The element ``(u + v*sqrt(m))/2`` of ``D_m``."""

    u: int
    v: int
    field: FieldParams

    def __post_init__(self):
        if not _check_parity(self.u, self.v, self.field):
            raise NotIntegral(
                f"({self.u}+{self.v}*sqrt({self.field.m}))/2 is not in D_{self.field.m}"
            )

    @classmethod
    def from_int(cls, n: int, field: FieldParams) -> QuadInt:
        return _mk(2 * n, 0, field)

    @classmethod
    def from_coords(cls, a: int, b: int, field: FieldParams) -> QuadInt:
        """``a + b*sqrt(m)`` with integer ``a`` and ``b``."""
        return _mk(2 * a, 2 * b, field)

    @classmethod
    def sqrt_m(cls, field: FieldParams) -> QuadInt:
        return _mk(0, 2, field)

    @property
    def m(self) -> int:
        return self.field.m

    def is_zero(self) -> bool:
        return self.u == 0 and self.v == 0

    def is_rational(self) -> bool:
        return self.v == 0

    def coords(self):
        """Integer coordinates ``(a, b)`` with self = a + b*sqrt(m), or None."""
        if self.u & 1 or self.v & 1:
            return None
        return self.u >> 1, self.v >> 1

    def __add__(self, other):
        if isinstance(other, int):
            return _mk(self.u + 2 * other, self.v, self.field)
        f = _same_field(self, other)
        return _mk(self.u + other.u, self.v + other.v, f)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            return _mk(self.u - 2 * other, self.v, self.field)
        f = _same_field(self, other)
        return _mk(self.u - other.u, self.v - other.v, f)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return _mk(-self.u, -self.v, self.field)

    def __mul__(self, other):
        if isinstance(other, int):
            return _mk(self.u * other, self.v * other, self.field)
        f = _same_field(self, other)
        u1, v1, u2, v2 = self.u, self.v, other.u, other.v
        # Both numerators are divisible by 2 on D_m.
        return _mk((u1 * u2 + f.m * v1 * v2) >> 1, (u1 * v2 + u2 * v1) >> 1, f)

    __rmul__ = __mul__

    def conj(self) -> QuadInt:
        return _mk(self.u, -self.v, self.field)

    def norm(self) -> int:
        return (self.u * self.u - self.field.m * self.v * self.v) >> 2

    def divides(self, other: QuadInt) -> bool:
        return qi_divides(self, other)

    def __floordiv__(self, other):
        if isinstance(other, int):
            other = QuadInt.from_int(other, self.field)
        return qi_exact_div(self, other)

    __truediv__ = __floordiv__

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"QuadInt({render(self)!r})"


def _mk(u: int, v: int, field: FieldParams) -> QuadInt:
    # Skips the parity check; callers guarantee closure.
    obj = object.__new__(QuadInt)
    object.__setattr__(obj, "u", u)
    object.__setattr__(obj, "v", v)
    object.__setattr__(obj, "field", field)
    return obj


@dataclass(frozen=True)
class XiForm:
    """A field element ``(a + b*sqrt(m))/c`` with ``gcd(a, b, c) = 1``, ``c >= 1``."""

    a: int
    b: int
    c: int
    field: FieldParams

    def __post_init__(self):
        if self.c < 1:
            raise ValueError("denominator must be positive")
        if gcd(self.a, self.b, self.c) != 1:
            raise NotReduced(f"gcd({self.a}, {self.b}, {self.c}) != 1")

    def in_ring(self) -> bool:
        """True iff the element lies in ``D_m``."""
        return xi_in_ring(self.a, self.b, self.c, self.field)

    def __str__(self):
        sq = f"sqrt({self.field.m})"
        return f"({self.a}{self.b:+d}*{sq})/{self.c}"


def xi_in_ring(a: int, b: int, c: int, field: FieldParams) -> bool:
    if c == 1:
        return True
    return c == 2 and field.ring_class is RingClass.OneMod4 and a & 1 == 1 and b & 1 == 1


# -- function-style API ------------------------------------------------------


def qi_canon(u: int, v: int, field: FieldParams) -> QuadInt:
    return QuadInt(u, v, field)


def qi_add(x: QuadInt, y: QuadInt) -> QuadInt:
    return x + y


def qi_sub(x: QuadInt, y: QuadInt) -> QuadInt:
    return x - y


def qi_neg(x: QuadInt) -> QuadInt:
    return -x


def qi_mul(x: QuadInt, y: QuadInt) -> QuadInt:
    return x * y


def qi_conj(x: QuadInt) -> QuadInt:
    return x.conj()


def qi_norm(x: QuadInt) -> int:
    return x.norm()


def _quotient_numerators(a: QuadInt, b: QuadInt):
    """Return ``(P, Q, n)`` with ``a/b = (P + Q*sqrt(m)) / (4n)``, ``n = N(b)``."""
    f = _same_field(a, b)
    n = b.norm()
    if n == 0:
        raise DivisorZero("division by zero")
    # a * conj(b) = ((u1 u2 - m v1 v2) + (v1 u2 - u1 v2) sqrt(m)) / 4
    p = a.u * b.u - f.m * a.v * b.v
    q = a.v * b.u - a.u * b.v
    return p, q, n


def qi_divides(b: QuadInt, a: QuadInt) -> bool:
    """True iff ``a / b`` lies in ``D_m``. Raises DivisorZero for ``b = 0``."""
    p, q, n = _quotient_numerators(a, b)
    # Half-coordinates of the quotient are (P/(2n), Q/(2n)).
    d = 2 * n
    if p % d or q % d:
        return False
    return _check_parity(p // d, q // d, b.field)


def qi_exact_div(a: QuadInt, b: QuadInt) -> QuadInt:
    p, q, n = _quotient_numerators(a, b)
    d = 2 * n
    if p % d or q % d:
        raise NotDivisible(f"{b} does not divide {a}")
    u, v = p // d, q // d
    if not _check_parity(u, v, b.field):
        raise NotDivisible(f"{b} does not divide {a}")
    return _mk(u, v, b.field)


def xi_reduce(a: QuadInt, b: QuadInt) -> XiForm:
    """Write ``a/b`` as ``(a' + b'*sqrt(m))/c'`` in lowest terms."""
    p, q, n = _quotient_numerators(a, b)
    c = 4 * n
    if c < 0:
        p, q, c = -p, -q, -c
    g = gcd(p, q, c)
    return XiForm(p // g, q // g, c // g, b.field)


# -- text form -----------------------------------------------------------------


def render(x: QuadInt) -> str:
    sq = f"sqrt({x.field.m})"
    if x.u & 1:
        return f"({x.u}{x.v:+d}*{sq})/2"
    a, b = x.u >> 1, x.v >> 1
    if b == 0:
        return str(a)
    if a == 0:
        return f"{b}*{sq}"
    return f"{a}{b:+d}*{sq}"


_TERM = re.compile(
    r"([+-]?)(?:(\d+)\*?)?sqrt\((-?\d+)\)|([+-]?)(\d+)"
)


def _parse_linear(text: str, field: FieldParams):
    if not text:
        raise ParseError("empty element")
    a = b = 0
    pos = 0
    while pos < len(text):
        mt = _TERM.match(text, pos)
        if mt is None or mt.end() == pos:
            raise ParseError(f"cannot parse {text!r} at offset {pos}")
        if pos > 0 and not (mt.group(1) or mt.group(4)):
            raise ParseError(f"missing operator in {text!r} at offset {pos}")
        if mt.group(3) is not None:
            if int(mt.group(3)) != field.m:
                raise FieldMismatch(f"sqrt({mt.group(3)}) in an element of {field}")
            k = int(mt.group(2)) if mt.group(2) else 1
            b += -k if mt.group(1) == "-" else k
        else:
            k = int(mt.group(5))
            a += -k if mt.group(4) == "-" else k
        pos = mt.end()
    return a, b


def parse(text: str, field: FieldParams) -> QuadInt:
    """Parse the canonical rendering (whitespace-tolerant) back into a QuadInt."""
    if re.search(r"\d\s+\d", text):
        raise ParseError(f"stray whitespace inside a number in {text!r}")
    s = "".join(text.split())
    half = re.fullmatch(r"\((.*)\)/2", s)
    if half:
        u, v = _parse_linear(half.group(1), field)
    else:
        a, b = _parse_linear(s, field)
        u, v = 2 * a, 2 * b
    return QuadInt(u, v, field)
