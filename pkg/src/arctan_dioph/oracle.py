"""Independent checks for the solver.

Nothing in this module uses the divisor parametrization. ``verify_exact``
evaluates the tangent of the left-hand side as an exact rational, and
``brute_force_solutions`` searches the cleared-denominator equation

    x*y - l == k*(y + x*l)      (equivalently  y*(x - k) == l*(1 + k*x))

directly over ``x``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from . import _kernels
from .arith import DEFAULT_LIMITS, EffortLimits, Rational, gcd
from .solver import ProblemInstance, solve_all

__all__ = [
    "FailureReason",
    "SearchBound",
    "VerificationReport",
    "brute_force_solutions",
    "cross_check",
    "divisor_count_scan",
    "divisor_count_table",
    "verify_exact",
]


@dataclass(frozen=True)
class SearchBound:
    max_x: int
    max_y: int

    def __post_init__(self):
        if self.max_x < 1 or self.max_y < 1:
            raise ValueError(f"search bounds must be >= 1, got {self.max_x} x {self.max_y}")


class FailureReason(enum.Enum):
    X_OUT_OF_RANGE = "x-out-of-range"
    L_OVER_Y_NOT_BELOW_ONE = "l-over-y-not-below-one"
    K_OUT_OF_RANGE = "k-out-of-range"
    ANGLE_SUM_TOO_LARGE = "angle-sum-too-large"
    TANGENT_MISMATCH = "tangent-mismatch"


@dataclass(frozen=True)
class VerificationReport:
    holds: bool
    lhs_tangent: Optional[Rational]
    rhs_tangent: Rational
    domain_ok: bool
    failure_reason: Optional[FailureReason] = None

    def as_dict(self) -> dict:
        return {
            "holds": self.holds,
            "lhs_tangent": None if self.lhs_tangent is None else str(self.lhs_tangent),
            "rhs_tangent": str(self.rhs_tangent),
            "domain_ok": self.domain_ok,
            "failure_reason": None if self.failure_reason is None else self.failure_reason.value,
        }


def verify_exact(x: int, y: int, k: int, l: int) -> VerificationReport:
    """Check ``arctan(1/x) + arctan(l/y) == arctan(1/k)`` with rational arithmetic only.

    The angle conditions are checked algebraically: ``1/x`` and ``1/k`` in
    ``(0, 1]``, ``l/y`` in ``(0, 1)``, and ``x*y > l`` (the tangent-sum
    denominator is positive, so the two angles add up to less than a right
    angle). Then ``(y + l*x) / (x*y - l)`` must equal ``1/k``.
    """
    if min(x, y, k, l) < 1:
        raise ValueError(f"x, y, k, l must all be positive, got {(x, y, k, l)}")
    rhs = Rational(1, k)
    denom = x * y - l
    lhs = Rational(y + l * x, denom) if denom else None

    reason = None
    if not 0 < Rational(1, x) <= 1:
        reason = FailureReason.X_OUT_OF_RANGE
    elif not 0 < Rational(l, y) < 1:
        reason = FailureReason.L_OVER_Y_NOT_BELOW_ONE
    elif not 0 < rhs <= 1:
        reason = FailureReason.K_OUT_OF_RANGE
    elif denom <= 0:
        reason = FailureReason.ANGLE_SUM_TOO_LARGE
    domain_ok = reason is None
    if domain_ok and lhs != rhs:
        reason = FailureReason.TANGENT_MISMATCH
    return VerificationReport(
        holds=reason is None,
        lhs_tangent=lhs,
        rhs_tangent=rhs,
        domain_ok=domain_ok,
        failure_reason=reason,
    )


def _scan_python(k, l, x_lo, x_hi, max_y):
    for x in range(x_lo, x_hi + 1):
        q, r = divmod(l * (1 + k * x), x - k)
        if r == 0 and q <= max_y:
            yield x, q


def brute_force_solutions(
    k: int, l: int, bound: SearchBound, coprime_only: bool = True
) -> list[tuple[int, int]]:
    """All ``(x, y)`` inside ``bound`` with ``x*y - l == k*(y + x*l)``, ascending in ``y``.

    For ``x <= k`` the left side of ``y*(x - k) == l*(1 + k*x)`` is not
    positive, so the scan starts at ``x = k + 1`` and keeps ``x`` whenever
    ``x - k`` divides ``l*(1 + k*x)``. With ``coprime_only`` (the default)
    pairs with ``gcd(l, y) != 1`` are dropped. No coprimality is required of
    ``(k, l)`` themselves.
    """
    if k < 1 or l < 1:
        raise ValueError(f"k and l must be positive, got k={k}, l={l}")
    x_lo, x_hi = k + 1, bound.max_x
    if x_hi < x_lo:
        return []
    if l * (1 + k * x_hi) < _kernels.INT64_SAFE and bound.max_y < _kernels.INT64_SAFE:
        xs, ys = _kernels.backend().scan_x(k, l, x_lo, x_hi, bound.max_y)
        hits = zip(xs.tolist(), ys.tolist())
    else:
        hits = _scan_python(k, l, x_lo, x_hi, bound.max_y)
    pairs = [
        (x, y)
        for x, y in hits
        if x * y > l and (not coprime_only or gcd(l, y) == 1)
    ]
    pairs.sort(key=lambda p: (p[1], p[0]))
    return pairs


def extremal_bound(inst: ProblemInstance) -> SearchBound:
    """Largest ``x`` and ``y`` any solution of ``inst`` can have."""
    k, l, n = inst.k, inst.l, inst.n
    return SearchBound(max_x=k + l * n, max_y=k * l + n)


def cross_check(inst: ProblemInstance, limits: EffortLimits = DEFAULT_LIMITS) -> bool:
    """True iff the solver and the brute-force search return the same solution set."""
    solved = set(solve_all(inst, limits).pairs())
    searched = brute_force_solutions(inst.k, inst.l, extremal_bound(inst))
    return solved == set(searched) and len(searched) == len(solved)


def divisor_count_scan(n: int) -> int:
    """Number of ``d`` in ``1..n`` dividing ``n``, by testing each one."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n < _kernels.INT64_SAFE:
        return int(_kernels.backend().divisor_count_scan(n))
    return sum(1 for d in range(1, n + 1) if n % d == 0)


def divisor_count_table(limit: int):
    """Array ``t`` with ``t[m]`` the number of divisors of ``m`` for ``1 <= m <= limit``.

    Built by marking every multiple of every ``d <= limit``; ``t[0]`` is 0.
    """
    if limit < 0:
        raise ValueError(f"limit must be non-negative, got {limit}")
    return _kernels.backend().divisor_count_table(limit)
