"""Closed-form solutions of ``arctan(1/x) + arctan(l/y) = arctan(1/k)``.

For positive ``k, l`` with ``gcd(l, k**2 + 1) == 1`` the positive solutions
with ``gcd(l, y) == 1`` are in bijection with the positive divisors ``d`` of
``n = k**2 + 1``::

    x = k + l * (n // d)
    y = k * l + d
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .arith import (
    DEFAULT_LIMITS,
    EffortLimits,
    divisor_count,
    divisors,
    factorize,
    gcd,
    is_probable_prime,
)
from .errors import (
    InvalidK,
    InvalidL,
    NotADivisor,
    NotCoprime,
    NotPrimeCase,
    NotSemiprimeCase,
)

__all__ = [
    "ProblemInstance",
    "Solution",
    "SolutionSet",
    "make_instance",
    "prime_case_solutions",
    "semiprime_case_solutions",
    "solution_for_divisor",
    "solve_all",
]


@dataclass(frozen=True)
class ProblemInstance:
    k: int
    l: int
    n: int = field(init=False)

    def __post_init__(self):
        if self.k < 1:
            raise InvalidK(self.k)
        if self.l < 1:
            raise InvalidL(self.l)
        n = self.k * self.k + 1
        g = gcd(self.l, n)
        if g != 1:
            raise NotCoprime(self.k, self.l, g)
        object.__setattr__(self, "n", n)


@dataclass(frozen=True)
class Solution:
    """One solution ``(x, y)`` together with its divisor ``d`` and cofactor ``v = n // d``."""

    d: int
    x: int
    y: int
    v: int

    @property
    def pair(self) -> tuple[int, int]:
        return (self.x, self.y)


@dataclass(frozen=True)
class SolutionSet:
    instance: ProblemInstance
    solutions: tuple[Solution, ...]
    count: int

    def pairs(self) -> list[tuple[int, int]]:
        return [s.pair for s in self.solutions]

    def __len__(self) -> int:
        return len(self.solutions)

    def __iter__(self):
        return iter(self.solutions)


def make_instance(k: int, l: int) -> ProblemInstance:
    """Validate ``(k, l)``.

    Raises InvalidK / InvalidL for zero or negative values and NotCoprime
    when ``gcd(l, k**2 + 1) != 1``.
    """
    return ProblemInstance(k, l)


def _solution(inst: ProblemInstance, d: int) -> Solution:
    k, l, n = inst.k, inst.l, inst.n
    v = n // d
    sol = Solution(d=d, x=k + l * v, y=k * l + d, v=v)
    assert gcd(l, sol.y) == 1, (inst, d)
    return sol


def solution_for_divisor(inst: ProblemInstance, d: int) -> Solution:
    if d < 1 or inst.n % d:
        raise NotADivisor(d, inst.n)
    return _solution(inst, d)


def solve_all(inst: ProblemInstance, limits: EffortLimits = DEFAULT_LIMITS) -> SolutionSet:
    """Every solution of the instance, one per divisor of ``k**2 + 1``, ascending in ``d``.

    Propagates :class:`~arctan_dioph.errors.FactorizationIncomplete`.
    """
    f = factorize(inst.n, limits)
    sols = tuple(_solution(inst, d) for d in divisors(f))
    count = divisor_count(f)
    assert count == len(sols)
    return SolutionSet(inst, sols, count)


def prime_case_solutions(inst: ProblemInstance) -> SolutionSet:
    """The two solutions when ``k**2 + 1`` is prime, without factoring."""
    k, l, n = inst.k, inst.l, inst.n
    if not is_probable_prime(n):
        raise NotPrimeCase(n)
    sols = (
        Solution(d=1, x=k + l * n, y=k * l + 1, v=n),
        Solution(d=n, x=k + l, y=k * l + n, v=1),
    )
    return SolutionSet(inst, sols, 2)


def semiprime_case_solutions(
    inst: ProblemInstance, limits: EffortLimits = DEFAULT_LIMITS
) -> SolutionSet:
    """The four solutions when ``k**2 + 1 = p1 * p2`` with distinct primes ``p1 < p2``."""
    k, l, n = inst.k, inst.l, inst.n
    f = factorize(n, limits)
    if f.exponents != (1, 1):
        raise NotSemiprimeCase(n)
    p1, p2 = f.primes
    sols = (
        Solution(d=1, x=k + l * n, y=k * l + 1, v=n),
        Solution(d=p1, x=k + l * p2, y=k * l + p1, v=p2),
        Solution(d=p2, x=k + l * p1, y=k * l + p2, v=p1),
        Solution(d=n, x=k + l, y=k * l + n, v=1),
    )
    return SolutionSet(inst, sols, 4)
