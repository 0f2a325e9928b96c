"""Exact arithmetic in quadratic integer rings, Dedekind-Hasse reduction
steps, Bezout gcds and PID certification via the Gauss bound."""

from .certify import Certificate, CorollaryPath, Status, certify_range, pid_certify
from .dhstep import StepResult, dh_step, solve_xi, verify_step
from .euclid import BezoutResult, dh_gcd, prime_element, reduce_unit
from .normsolve import PrimeTable, build_prime_table, primes_upto, solve_norm_abs
from .quadcore import (
    FieldParams,
    QuadInt,
    XiForm,
    field_params,
    gauss_bound_holds,
    parse,
    qi_add,
    qi_canon,
    qi_conj,
    qi_divides,
    qi_exact_div,
    qi_mul,
    qi_neg,
    qi_norm,
    qi_sub,
    render,
    xi_reduce,
)
from .zarith import (
    cfrac_sqrt,
    egcd2,
    egcd3,
    egcd3_parity,
    fundamental_unit,
    kronecker,
    sqrt_mod,
)

__version__ = "0.1.0"
