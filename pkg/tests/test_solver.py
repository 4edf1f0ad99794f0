import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from arctan_dioph.arith import divisor_count, factorize, is_probable_prime
from arctan_dioph.errors import (
    InvalidK,
    InvalidL,
    NotADivisor,
    NotCoprime,
    NotPrimeCase,
    NotSemiprimeCase,
)
from arctan_dioph.oracle import SearchBound, brute_force_solutions
from arctan_dioph.solver import (
    make_instance,
    prime_case_solutions,
    semiprime_case_solutions,
    solution_for_divisor,
    solve_all,
)

from conftest import scan_divisors


def admissible():
    return st.tuples(
        st.integers(min_value=1, max_value=10**9), st.integers(min_value=1, max_value=10**6)
    ).filter(lambda kl: math.gcd(kl[1], kl[0] ** 2 + 1) == 1)


def test_make_instance():
    assert make_instance(2, 1).n == 5
    assert make_instance(1, 1).n == 2
    with pytest.raises(NotCoprime) as info:
        make_instance(3, 2)
    assert info.value.gcd == 2
    with pytest.raises(InvalidK):
        make_instance(0, 1)
    with pytest.raises(InvalidL):
        make_instance(1, 0)


@pytest.mark.parametrize(
    "k, l, d, pair",
    [(2, 1, 5, (3, 7)), (2, 1, 1, (7, 3)), (4, 2, 1, (38, 9))],
)
def test_solution_for_divisor(k, l, d, pair):
    sol = solution_for_divisor(make_instance(k, l), d)
    assert sol.pair == pair
    assert sol.d * sol.v == k * k + 1


def test_solution_for_divisor_rejects_non_divisor():
    with pytest.raises(NotADivisor):
        solution_for_divisor(make_instance(2, 1), 2)
    with pytest.raises(NotADivisor):
        solution_for_divisor(make_instance(2, 1), 0)


def test_solve_all_small_cases():
    s = solve_all(make_instance(2, 1))
    assert [(x.d, x.x, x.y) for x in s] == [(1, 7, 3), (5, 3, 7)]
    assert s.count == 2
    s = solve_all(make_instance(1, 1))
    assert [(x.d, x.x, x.y) for x in s] == [(1, 3, 2), (2, 2, 3)]


def test_solve_all_k7_against_search():
    # frozen from brute_force_solutions over x, y <= 400
    expected = [(57, 8), (32, 9), (17, 12), (12, 17), (9, 32), (8, 57)]
    assert brute_force_solutions(7, 1, SearchBound(400, 400)) == expected
    s = solve_all(make_instance(7, 1))
    assert [x.d for x in s] == [1, 2, 5, 10, 25, 50]
    assert s.pairs() == expected
    assert s.count == 6


@pytest.mark.parametrize(
    "k, l, expected",
    [(2, 1, [(7, 3), (3, 7)]), (4, 2, [(38, 9), (6, 25)]), (6, 1, [(43, 7), (7, 43)])],
)
def test_prime_case(k, l, expected):
    inst = make_instance(k, l)
    assert prime_case_solutions(inst).pairs() == expected
    assert prime_case_solutions(inst) == solve_all(inst)


def test_prime_case_rejects_composite():
    with pytest.raises(NotPrimeCase):
        prime_case_solutions(make_instance(3, 1))


@pytest.mark.parametrize(
    "k, l, expected",
    [
        (3, 1, [(13, 4), (8, 5), (5, 8), (4, 13)]),
        (3, 7, [(73, 22), (38, 23), (17, 26), (10, 31)]),
    ],
)
def test_semiprime_case(k, l, expected):
    inst = make_instance(k, l)
    assert sorted(brute_force_solutions(k, l, SearchBound(500, 500))) == sorted(expected)
    assert semiprime_case_solutions(inst).pairs() == expected
    assert semiprime_case_solutions(inst) == solve_all(inst)


@pytest.mark.parametrize("k", [2, 7])  # 5 is prime, 50 = 2 * 5^2
def test_semiprime_case_rejects(k):
    with pytest.raises(NotSemiprimeCase):
        semiprime_case_solutions(make_instance(k, 1))


def test_huge_instance_has_no_overflow():
    k = 10**20
    inst = make_instance(k, 3)
    s = solve_all(inst)
    assert s.count == divisor_count(factorize(k * k + 1))
    for sol in s:
        assert sol.x * sol.y - 3 == k * (sol.y + sol.x * 3)


@given(admissible())
def test_solution_invariants(kl):
    k, l = kl
    inst = make_instance(k, l)
    s = solve_all(inst)
    n = k * k + 1
    assert s.count == len(s) == divisor_count(factorize(n))
    ys = [sol.y for sol in s]
    assert ys == sorted(set(ys))
    by_d = {sol.d: sol for sol in s}
    for sol in s:
        assert sol.x * sol.y - l == k * (sol.y + sol.x * l)
        assert math.gcd(l, sol.y) == 1
        assert sol.x > k and sol.y > k * l
        assert (sol.x - k) * sol.d == l * n
        partner = by_d[n // sol.d]
        assert (sol.y - k * l) * (partner.y - k * l) == n


@given(st.integers(min_value=1, max_value=2000))
def test_count_matches_divisor_scan(k):
    assert solve_all(make_instance(k, 1)).count == len(scan_divisors(k * k + 1))


@given(st.integers(min_value=1, max_value=10**6))
def test_symmetry_when_l_is_one(k):
    pairs = set(solve_all(make_instance(k, 1)).pairs())
    assert {(b, a) for a, b in pairs} == pairs


@given(st.integers(min_value=1, max_value=3000), st.integers(min_value=1, max_value=50))
def test_specializations_agree(k, l):
    n = k * k + 1
    if math.gcd(l, n) != 1:
        return
    inst = make_instance(k, l)
    f = factorize(n)
    if is_probable_prime(n):
        assert prime_case_solutions(inst) == solve_all(inst)
    if f.exponents == (1, 1):
        assert semiprime_case_solutions(inst) == solve_all(inst)
