"""Integer substrate: gcd, exact rationals, primality, factorization, divisors.

Everything here works on Python ints, so there is no overflow anywhere;
``k**2 + 1`` and ``l * (k**2 + 1)`` may be arbitrarily large.
"""

from __future__ import annotations

import math
import os
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterable

import numpy as np

from .errors import FactorizationIncomplete

__all__ = [
    "EffortLimits",
    "Factorization",
    "Rational",
    "divisor_count",
    "divisors",
    "factorize",
    "gcd",
    "is_probable_prime",
]

# Exact rationals, always stored reduced with a positive denominator.
Rational = Fraction

EFFORT_ENV = "ARCTAN_DIOPH_EFFORT_MS"

# Deterministic Miller-Rabin witnesses: correct for every n < 3.3e24.
_SMALL_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_DETERMINISTIC_LIMIT = 1 << 64


@dataclass(frozen=True)
class EffortLimits:
    """Budget for the Pollard-rho stage of :func:`factorize`."""

    max_iterations: int = 10**8
    time_budget_s: float = 30.0
    trial_bound: int = 10**6
    prime_rounds: int = 40

    @classmethod
    def from_env(cls, environ=None, **overrides) -> "EffortLimits":
        """Defaults, with the time budget taken from ``ARCTAN_DIOPH_EFFORT_MS`` if set."""
        environ = os.environ if environ is None else environ
        raw = environ.get(EFFORT_ENV)
        if raw is not None and "time_budget_s" not in overrides:
            try:
                ms = float(raw)
            except ValueError:
                raise ValueError(f"{EFFORT_ENV} must be a number of milliseconds, got {raw!r}")
            if ms <= 0:
                raise ValueError(f"{EFFORT_ENV} must be positive, got {raw!r}")
            overrides["time_budget_s"] = ms / 1000.0
        return cls(**overrides)


DEFAULT_LIMITS = EffortLimits()


def gcd(a: int, b: int) -> int:
    """Greatest common divisor of two naturals; ``gcd(0, 0) == 0``."""
    if a < 0 or b < 0:
        raise ValueError("gcd is defined here for naturals only")
    return math.gcd(a, b)


def _miller_rabin(n: int, d: int, s: int, a: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_probable_prime(n: int, rounds: int = DEFAULT_LIMITS.prime_rounds) -> bool:
    """Miller-Rabin primality test.

    Exact for ``n < 2**64`` (fixed witness set). Above that, the fixed
    witnesses plus random bases up to ``rounds`` in total; the bases are
    seeded from ``n`` so the answer is reproducible.
    """
    if n < 2:
        return False
    for p in _SMALL_WITNESSES:
        if n == p:
            return True
        if n % p == 0:
            return False
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _SMALL_WITNESSES:
        if not _miller_rabin(n, d, s, a):
            return False
    if n < _DETERMINISTIC_LIMIT:
        return True
    rng = random.Random(n)
    for _ in range(max(0, rounds - len(_SMALL_WITNESSES))):
        if not _miller_rabin(n, d, s, rng.randrange(2, n - 1)):
            return False
    return True


@lru_cache(maxsize=32)
def _primes_upto(limit: int) -> tuple[int, ...]:
    sieve = np.ones(limit + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    return tuple(int(p) for p in np.flatnonzero(sieve))


@dataclass(frozen=True)
class Factorization:
    """``n`` as a product of prime powers, primes strictly increasing."""

    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"only positive integers have a factorization, got {self.n}")
        prev = 1
        value = 1
        for p, e in self.factors:
            if p <= prev or e < 1:
                raise ValueError(f"non-canonical factor list {self.factors!r}")
            prev = p
            value *= p**e
        if value != self.n:
            raise ValueError(f"factors {self.factors!r} multiply to {value}, not {self.n}")

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(e for _, e in self.factors)

    def is_squarefree(self) -> bool:
        return all(e == 1 for e in self.exponents)

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return " * ".join(str(p) if e == 1 else f"{p}^{e}" for p, e in self.factors)


def _collect(primes: Iterable[int]) -> tuple[tuple[int, int], ...]:
    counts: dict[int, int] = {}
    for p in primes:
        counts[p] = counts.get(p, 0) + 1
    return tuple(sorted(counts.items()))


class _Budget:
    def __init__(self, limits: EffortLimits):
        self.limits = limits
        self.iterations = 0
        self.deadline = time.monotonic() + limits.time_budget_s

    def spend(self, count: int) -> str | None:
        self.iterations += count
        if self.iterations > self.limits.max_iterations:
            return f"iteration budget of {self.limits.max_iterations} exhausted"
        if time.monotonic() > self.deadline:
            return f"time budget of {self.limits.time_budget_s:g} s exhausted"
        return None


class _OutOfBudget(Exception):
    pass


def _brent(n: int, budget: _Budget, rng: random.Random) -> int:
    """Return a non-trivial factor of the odd composite ``n`` (Brent's rho)."""
    batch = 128
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            reason = budget.spend(r)
            if reason:
                raise _OutOfBudget(reason)
            k = 0
            while k < r and g == 1:
                ys = y
                steps = min(batch, r - k)
                for _ in range(steps):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += steps
                reason = budget.spend(steps)
                if reason and g == 1:
                    raise _OutOfBudget(reason)
            r *= 2
        if g == n:
            # the batched product overshot; step back one at a time
            while True:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
                if g > 1:
                    break
        if g != n:
            return g


def factorize(n: int, limits: EffortLimits = DEFAULT_LIMITS) -> Factorization:
    """Complete prime factorization of ``n >= 1``.

    Trial division by primes up to ``limits.trial_bound``, then Brent's
    variant of Pollard rho on whatever composite cofactor is left. Each
    emitted factor is checked with :func:`is_probable_prime`.

    Raises :class:`FactorizationIncomplete` when the rho stage runs out of
    its iteration or time budget.
    """
    if n < 1:
        raise ValueError(f"factorize needs n >= 1, got {n}")
    found: list[int] = []
    m = n
    exhausted = True
    bound = max(2, limits.trial_bound)
    # sieve only as far as this n needs, in power-of-two steps so the cache stays small
    sieve_to = min(bound, max(1024, 1 << (math.isqrt(n) + 1).bit_length()))
    for p in _primes_upto(sieve_to):
        if p * p > m:
            exhausted = False
            break
        if m % p == 0:
            while m % p == 0:
                m //= p
                found.append(p)
    if m == 1:
        return Factorization(n, _collect(found))
    # no factor below the trial bound: anything under its square is prime
    if not exhausted or m <= sieve_to**2 or is_probable_prime(
        m, limits.prime_rounds
    ):
        found.append(m)
        return Factorization(n, _collect(found))

    budget = _Budget(limits)
    rng = random.Random(n)
    stack = [m]
    while stack:
        c = stack.pop()
        if is_probable_prime(c, limits.prime_rounds):
            found.append(c)
            continue
        root = math.isqrt(c)
        if root * root == c:
            stack += [root, root]
            continue
        try:
            f = _brent(c, budget, rng)
        except _OutOfBudget as exc:
            cofactor = c
            for rest in stack:
                cofactor *= rest
            raise FactorizationIncomplete(n, _collect(found), cofactor, str(exc)) from None
        stack += [f, c // f]
    return Factorization(n, _collect(found))


def divisors(f: Factorization) -> list[int]:
    """All positive divisors of ``f.n`` in increasing order."""
    result = []
    for exps in product(*(range(e + 1) for e in f.exponents)):
        d = 1
        for p, e in zip(f.primes, exps):
            d *= p**e
        result.append(d)
    result.sort()
    return result


def divisor_count(f: Factorization) -> int:
    """Number of positive divisors, the product of ``e + 1`` over the exponents."""
    return math.prod(e + 1 for e in f.exponents)
