"""PID certification from a complete prime table.

A certificate is one-directional: ``Inconclusive`` only reports the smallest
required prime with no element of that norm, it never asserts that ``D_m``
fails to be a PID. (For imaginary fields the hypothesis does happen to fail
exactly when the class number exceeds 1, but nothing here relies on that.)
Since a quadratic ring of integers is a UFD exactly when it is a PID, a
``CertifiedPID`` result also certifies unique factorisation.
"""

from __future__ import annotations

import enum
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .normsolve import PrimeTable, build_prime_table
from .quadcore import FieldParams, field_params
from .zarith import is_squarefree


class Status(enum.Enum):
    CertifiedPID = "CertifiedPID"
    Inconclusive = "Inconclusive"


class CorollaryPath(enum.Enum):
    ImaginaryAllInert = "ImaginaryAllInert"
    GeneralTable = "GeneralTable"


@dataclass(frozen=True)
class Certificate:
    field: FieldParams
    status: Status
    witness_table: PrimeTable
    failing_prime: int | None
    corollary_path: CorollaryPath

    @property
    def certified(self) -> bool:
        return self.status is Status.CertifiedPID

    def to_dict(self) -> dict:
        t = self.witness_table.to_dict()
        return {
            "m": self.field.m,
            "delta": self.field.delta,
            "status": self.status.value,
            "corollary_path": self.corollary_path.value,
            "required": t["required"],
            "entries": t["entries"],
            "failing_prime": self.failing_prime,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def summary(self) -> str:
        if not self.certified:
            return f"Inconclusive at p={self.failing_prime}"
        if self.corollary_path is CorollaryPath.ImaginaryAllInert:
            return "CertifiedPID (imaginary, all small primes inert)"
        if not self.witness_table.entries:
            return "CertifiedPID (no prime below the Gauss bound needs a witness)"
        items = ", ".join(
            f"{p} -> {pi}" for p, pi in sorted(self.witness_table.entries.items())
        )
        return f"CertifiedPID (table: {items})"


def certificate_from_table(table: PrimeTable) -> Certificate:
    field = table.field
    missing = table.missing()
    status = Status.Inconclusive if missing else Status.CertifiedPID
    path = (
        CorollaryPath.ImaginaryAllInert
        if field.m < 0 and not table.required
        else CorollaryPath.GeneralTable
    )
    return Certificate(field, status, table, missing[0] if missing else None, path)


def pid_certify(m: int, cap: int | None = None) -> Certificate:
    """Decide whether every required prime has an element of that norm."""
    return certificate_from_table(build_prime_table(field_params(m), cap))


def _candidates(lo: int, hi: int):
    return [m for m in range(lo, hi + 1) if m not in (0, 1) and is_squarefree(m)]


def certify_range(lo: int, hi: int, jobs: int = 1, cap: int | None = None):
    """Certificates for every squarefree ``m`` in ``[lo, hi]`` except 0 and 1."""
    ms = _candidates(lo, hi)
    if jobs <= 1 or len(ms) < 2:
        return [pid_certify(m, cap) for m in ms]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(pid_certify, ms, [cap] * len(ms)))
