"""Elements of prime absolute norm and the prime table built from them.

Search is done in the scaled form ``u^2 - m v^2 = +-4p`` over half-coordinates,
with the parity filter of the ring class applied at the end.

Bound for real fields. Let ``eps > 1`` be a unit and ``pi`` a solution. Up to
sign and a power of ``eps`` we may assume ``sqrt(p/eps) <= pi < sqrt(p*eps)``;
then ``|pi'| = p/pi`` lies in the same window, so
``|v| sqrt(m) = |pi - pi'| < 2 sqrt(p*eps)``, i.e. ``v^2 < 4 p eps / m``.
Conjugation makes ``v >= 0``. Every solution orbit therefore meets
``0 <= v <= isqrt(4 p E // m) + 1`` for any integer ``E > eps``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from math import isqrt

from .errors import NotPrime, SearchCapExceeded
from .quadcore import FieldParams, QuadInt, field_params, parse
from .zarith import fundamental_unit, is_prime, kronecker, sieve

DEFAULT_SEARCH_CAP = 10**7


def search_bound(field: FieldParams, p: int) -> int:
    """Largest ``v`` the search has to visit for prime ``p``."""
    m = field.m
    if m < 0:
        return isqrt(4 * p // -m)
    eps_hi = fundamental_unit(m).upper_bound()
    return isqrt(4 * p * eps_hi // m) + 1


def solve_norm_abs(field: FieldParams, p: int, cap: int | None = None):
    """Some ``pi`` in ``D_m`` with ``|N(pi)| = p``, or None if there is none.

    The returned solution has the smallest ``v >= 0``, then the smallest
    ``u >= 0`` (norm ``+p`` first on a tie). Raises SearchCapExceeded instead
    of answering None when the provable bound exceeds ``cap``.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    cap = DEFAULT_SEARCH_CAP if cap is None else cap
    m = field.m
    one_mod_4 = field.one_mod_4
    vmax = search_bound(field, p)
    step = 1 if one_mod_4 else 2
    four_p = 4 * p
    for v in range(0, min(vmax, cap) + 1, step):
        t = m * v * v
        best = None
        for target, sgn in ((t + four_p, 1), (t - four_p, -1)):
            if target < 0:
                continue
            u = isqrt(target)
            if u * u != target:
                continue
            if one_mod_4:
                if (u - v) & 1:
                    continue
            elif u & 1:
                continue
            if best is None or (u, -sgn) < best:
                best = (u, -sgn)
        if best is not None:
            pi = QuadInt(best[0], v, field)
            assert abs(pi.norm()) == p
            return pi
    if vmax > cap:
        raise SearchCapExceeded(
            f"norm search for p={p} in m={m} needs v <= {vmax}, cap is {cap}"
        )
    return None


def primes_upto(field: FieldParams) -> list[int]:
    """Primes ``p`` with ``p <= mu_m``, ascending."""
    if field.m > 0:
        bound = isqrt(field.delta // 5)
    else:
        bound = isqrt(-field.delta // 3)
    return sieve(bound)


def required_primes(field: FieldParams) -> list[int]:
    req = [p for p in primes_upto(field) if kronecker(field.delta, p) != -1]
    if field.m % 8 == 1 and 2 not in req:
        req.insert(0, 2)
    return req


@dataclass(frozen=True)
class PrimeTable:
    field: FieldParams
    required: tuple
    entries: dict = dc_field(default_factory=dict)

    def __post_init__(self):
        for p, pi in self.entries.items():
            assert abs(pi.norm()) == p, (p, pi)

    @property
    def complete(self) -> bool:
        return all(p in self.entries for p in self.required)

    def missing(self) -> list[int]:
        return [p for p in self.required if p not in self.entries]

    def get(self, p: int):
        return self.entries.get(p)

    def to_dict(self) -> dict:
        return {
            "m": self.field.m,
            "delta": self.field.delta,
            "required": list(self.required),
            "entries": {str(p): str(pi) for p, pi in sorted(self.entries.items())},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, doc: dict) -> PrimeTable:
        fp = field_params(int(doc["m"]))
        if int(doc["delta"]) != fp.delta:
            raise ValueError(f"delta {doc['delta']} does not match m={fp.m}")
        entries = {}
        for k, text in doc["entries"].items():
            pi = parse(text, fp)
            if abs(pi.norm()) != int(k):
                raise ValueError(f"entry {k} -> {text} has norm {pi.norm()}")
            entries[int(k)] = pi
        return cls(fp, tuple(int(p) for p in doc["required"]), entries)

    @classmethod
    def from_json(cls, text: str) -> PrimeTable:
        return cls.from_dict(json.loads(text))


def build_prime_table(field: FieldParams, cap: int | None = None) -> PrimeTable:
    """Solve ``|N(pi)| = p`` for every prime the certification needs.

    Required are the non-inert primes up to the Gauss bound, plus ``p = 2``
    whenever ``m = 1 (mod 8)``. Primes without a solution are simply absent.
    """
    req = required_primes(field)
    entries = {}
    for p in req:
        pi = solve_norm_abs(field, p, cap)
        if pi is not None:
            entries[p] = pi
    return PrimeTable(field, tuple(req), entries)
