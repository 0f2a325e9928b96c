import json

import pytest

from quadpid.errors import NotPrime, SearchCapExceeded
from quadpid.normsolve import (
    PrimeTable,
    build_prime_table,
    primes_upto,
    required_primes,
    search_bound,
    solve_norm_abs,
)
from quadpid.quadcore import QuadInt, field_params, parse
from quadpid.zarith import fundamental_unit

from oracles import brute_primes, brute_squarefree, naive_norm_search


def test_solve_examples():
    f = field_params(14)
    assert solve_norm_abs(f, 2) == parse("4+sqrt(14)", f)
    assert solve_norm_abs(field_params(10), 2) is None
    f = field_params(-7)
    assert solve_norm_abs(f, 2) == QuadInt(1, 1, f)
    with pytest.raises(NotPrime):
        solve_norm_abs(f, 4)


def test_solve_m17_two():
    f = field_params(17)
    pi = solve_norm_abs(f, 2)
    assert abs(pi.norm()) == 2
    # (5 + sqrt 17)/2 lies over the conjugate prime
    other = QuadInt(5, 1, f)
    assert other.divides(pi.conj()) and pi.conj().divides(other)


def test_primes_upto():
    assert primes_upto(field_params(14)) == [2, 3]
    assert primes_upto(field_params(-163)) == [2, 3, 5, 7]
    assert primes_upto(field_params(2)) == []


def test_required_primes():
    assert required_primes(field_params(14)) == [2]
    assert required_primes(field_params(17)) == [2]
    assert required_primes(field_params(-7)) == [2]
    assert required_primes(field_params(-163)) == []


def test_build_prime_table():
    t = build_prime_table(field_params(14))
    assert t.required == (2,) and t.entries == {2: parse("4+sqrt(14)", field_params(14))}
    assert t.complete
    t = build_prime_table(field_params(-163))
    assert t.required == () and t.entries == {}
    t = build_prime_table(field_params(10))
    assert not t.complete and t.missing() == [2]


def test_table_json_roundtrip(tmp_path):
    t = build_prime_table(field_params(33))
    doc = json.loads(t.to_json())
    assert doc == {"m": 33, "delta": 33, "required": [2], "entries": {"2": str(t.entries[2])}}
    path = tmp_path / "t.json"
    path.write_text(t.to_json())
    assert PrimeTable.from_json(path.read_text()) == t


def test_table_json_rejects_bad_entry():
    doc = {"m": 14, "delta": 56, "required": [2], "entries": {"2": "3+sqrt(14)"}}
    with pytest.raises(ValueError):
        PrimeTable.from_dict(doc)
    doc = {"m": 14, "delta": 14, "required": [2], "entries": {}}
    with pytest.raises(ValueError):
        PrimeTable.from_dict(doc)


def test_search_cap():
    f = field_params(10)
    assert search_bound(f, 2) == 3
    with pytest.raises(SearchCapExceeded):
        solve_norm_abs(f, 2, cap=1)
    # a hit below the cap is still returned
    assert search_bound(field_params(14), 2) > 2
    assert solve_norm_abs(field_params(14), 2, cap=2) is not None


def test_deterministic_and_unit_stable():
    f = field_params(46)
    pi = solve_norm_abs(f, 2)
    assert solve_norm_abs(f, 2) == pi
    eps = fundamental_unit(46).unit
    assert abs((pi * eps).norm()) == 2


@pytest.mark.parametrize("m", [m for m in range(-200, 0) if brute_squarefree(m)])
def test_imaginary_exhaustive(m):
    f = field_params(m)
    for p in brute_primes(30):
        got = solve_norm_abs(f, p)
        want = naive_norm_search(m, p, cap=200)
        assert (None if got is None else (got.u, got.v)) == want
        # a prime within the Gauss bound is never a norm from an imaginary field
        if 3 * p * p <= -f.delta and -f.delta > 4 * p + 1:
            assert got is None
