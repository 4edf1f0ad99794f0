"""Identity records: rendering, the classic listing, sweeps, and JSONL catalogs."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator

from .arith import DEFAULT_LIMITS, EffortLimits, gcd
from .errors import (
    ArctanDiophError,
    DuplicateRecord,
    FactorizationIncomplete,
    MalformedLine,
)
from .oracle import verify_exact
from .solver import ProblemInstance, Solution, make_instance, solution_for_divisor, solve_all

__all__ = [
    "IdentityRecord",
    "SweepResult",
    "classic_listing",
    "family_templates",
    "read_catalog",
    "render_identity",
    "sweep",
    "write_catalog",
]

RECORD_KEYS = ("k", "l", "d", "x", "y", "n", "verified", "annotations")
STYLES = ("plain", "latex", "json")

# The published listing prints x = 11 for (k, l, d) = (3, 1, 1); the identity
# only holds with x = 13.
MISPRINT_NOTE = "corrected: published listing prints x=11, exact verification requires x=13"


@dataclass(frozen=True)
class IdentityRecord:
    k: int
    l: int
    d: int
    x: int
    y: int
    n: int
    verified: bool = False
    annotations: tuple[str, ...] = field(default=())

    @property
    def key(self) -> tuple[int, int, int]:
        return (self.k, self.l, self.d)

    @classmethod
    def from_solution(
        cls, inst: ProblemInstance, sol: Solution, annotations: tuple[str, ...] = ()
    ) -> "IdentityRecord":
        holds = verify_exact(sol.x, sol.y, inst.k, inst.l).holds
        return cls(inst.k, inst.l, sol.d, sol.x, sol.y, inst.n, holds, tuple(annotations))

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "l": self.l,
            "d": self.d,
            "x": self.x,
            "y": self.y,
            "n": self.n,
            "verified": self.verified,
            "annotations": list(self.annotations),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, separators=(", ", ": "))

    @classmethod
    def from_dict(cls, obj) -> "IdentityRecord":
        """Parse and check a decoded JSON object; raises ValueError on any inconsistency."""
        if not isinstance(obj, dict):
            raise ValueError("record is not a JSON object")
        if tuple(obj) != RECORD_KEYS:
            raise ValueError(f"expected keys {list(RECORD_KEYS)}, got {list(obj)}")
        for name in RECORD_KEYS[:6]:
            value = obj[name]
            if type(value) is not int or value < 1:
                raise ValueError(f"{name} must be a positive integer, got {value!r}")
        if type(obj["verified"]) is not bool:
            raise ValueError("verified must be a boolean")
        notes = obj["annotations"]
        if not isinstance(notes, list) or not all(isinstance(a, str) for a in notes):
            raise ValueError("annotations must be a list of strings")
        rec = cls(*(obj[name] for name in RECORD_KEYS[:7]), annotations=tuple(notes))
        try:
            sol = solution_for_divisor(make_instance(rec.k, rec.l), rec.d)
        except ArctanDiophError as exc:
            raise ValueError(str(exc)) from None
        if (rec.n, rec.x, rec.y) != (rec.k * rec.k + 1, sol.x, sol.y):
            raise ValueError(f"n, x, y inconsistent with (k, l, d) = {rec.key}")
        return rec


def _rhs_plain(k: int) -> str:
    return "pi/4" if k == 1 else f"arctan(1/{k})"


def render_identity(rec: IdentityRecord, style: str = "plain") -> str:
    if style == "plain":
        return f"arctan(1/{rec.x}) + arctan({rec.l}/{rec.y}) = {_rhs_plain(rec.k)}"
    if style == "latex":
        rhs = r"\frac{\pi}{4}" if rec.k == 1 else rf"\arctan\left(\frac{{1}}{{{rec.k}}}\right)"
        return (
            rf"\[ \arctan\left(\frac{{1}}{{{rec.x}}}\right)"
            rf" + \arctan\left(\frac{{{rec.l}}}{{{rec.y}}}\right) = {rhs} \]"
        )
    if style == "json":
        return rec.to_json()
    raise ValueError(f"unknown style {style!r}; expected one of {STYLES}")


def family_templates() -> list[str]:
    """The two identities valid for every admissible (k, l): divisors 1 and k^2+1."""
    return [
        "arctan(1/(k + l*(k^2+1))) + arctan(l/(k*l + 1)) = arctan(1/k)",
        "arctan(1/(k + l)) + arctan(l/(k*l + k^2 + 1)) = arctan(1/k)",
    ]


# (k, l, d) for the seven numeric identities of the classic listing, in print order.
_CLASSIC = ((1, 1, 1), (2, 1, 5), (3, 1, 1), (3, 1, 2), (4, 2, 1), (4, 2, 17), (6, 1, 1))


def classic_listing() -> list[IdentityRecord]:
    """The seven concrete identities of the classic listing, built through the solver."""
    records = []
    for k, l, d in _CLASSIC:
        inst = make_instance(k, l)
        notes = (MISPRINT_NOTE,) if (k, l, d) == (3, 1, 1) else ()
        records.append(IdentityRecord.from_solution(inst, solution_for_divisor(inst, d), notes))
    return records


@dataclass
class SweepResult:
    records: list[IdentityRecord]
    skipped_not_coprime: int = 0
    incomplete: list[tuple[int, int, str]] = field(default_factory=list)

    def summary(self) -> str:
        return (
            f"{len(self.records)} records, {self.skipped_not_coprime} (k, l) pairs skipped"
            f" (not coprime), {len(self.incomplete)} incomplete factorizations"
        )


def sweep(
    k_range: tuple[int, int],
    l_range: tuple[int, int],
    limits: EffortLimits = DEFAULT_LIMITS,
) -> SweepResult:
    """All verified identities for ``k`` and ``l`` in the inclusive ranges.

    Order is ascending ``k``, then ``l``, then ``d``. Pairs with
    ``gcd(l, k^2+1) != 1`` are counted and skipped, as are instances whose
    ``k^2+1`` could not be factored within ``limits``.
    """
    (k_lo, k_hi), (l_lo, l_hi) = k_range, l_range
    if k_lo < 1 or l_lo < 1 or k_hi < k_lo or l_hi < l_lo:
        raise ValueError(f"ranges must be non-empty and positive, got k={k_range}, l={l_range}")
    result = SweepResult([])
    for k in range(k_lo, k_hi + 1):
        n = k * k + 1
        for l in range(l_lo, l_hi + 1):
            if gcd(l, n) != 1:
                result.skipped_not_coprime += 1
                continue
            inst = make_instance(k, l)
            try:
                sols = solve_all(inst, limits)
            except FactorizationIncomplete as exc:
                result.incomplete.append((k, l, str(exc)))
                continue
            for sol in sols:
                rec = IdentityRecord.from_solution(inst, sol)
                if not rec.verified:
                    raise AssertionError(f"solver emitted an unverifiable identity {rec}")
                result.records.append(rec)
    return result


def _check_unique(records: Iterable[IdentityRecord], seen: set) -> list[IdentityRecord]:
    out = []
    for rec in records:
        if rec.key in seen:
            raise DuplicateRecord(rec.key)
        seen.add(rec.key)
        out.append(rec)
    return out


def write_catalog(path, records: Iterable[IdentityRecord], append: bool = False) -> int:
    """Write records as JSON lines and return how many were written.

    Duplicate ``(k, l, d)`` keys, within ``records`` or against an existing
    file when appending, raise :class:`DuplicateRecord` before anything is
    written.
    """
    path = Path(path)
    seen: set = set()
    if append and path.exists():
        seen.update(rec.key for rec in read_catalog(path))
    records = _check_unique(records, seen)
    with path.open("a" if append else "w", encoding="utf-8", newline="\n") as fh:
        for rec in records:
            fh.write(rec.to_json() + "\n")
        fh.flush()
        os.fsync(fh.fileno())
    return len(records)


def iter_catalog(path) -> Iterator[IdentityRecord]:
    path = Path(path)
    seen: set = set()
    with path.open("r", encoding="utf-8", newline="") as fh:
        for lineno, line in enumerate(fh, start=1):
            partial = not line.endswith("\n")
            try:
                rec = IdentityRecord.from_dict(json.loads(line))
            except ValueError as exc:  # JSONDecodeError is a ValueError
                if partial:
                    # a writer is still appending this line
                    return
                raise MalformedLine(lineno, str(exc)) from None
            if rec.key in seen:
                raise DuplicateRecord(rec.key, lineno)
            seen.add(rec.key)
            yield rec


def read_catalog(path) -> list[IdentityRecord]:
    return list(iter_catalog(path))
