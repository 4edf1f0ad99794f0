"""Exception hierarchy shared by the library and the command line front end."""

from __future__ import annotations


class ArctanDiophError(Exception):
    """Base class for every error raised by this package."""


class FactorizationIncomplete(ArctanDiophError):
    """Effort limits ran out before ``n`` was fully factored.

    ``partial`` holds the ``(prime, exponent)`` pairs found so far and
    ``cofactor`` the part of ``n`` that is still unfactored.
    """

    def __init__(self, n: int, partial, cofactor: int, reason: str):
        self.n = n
        self.partial = tuple(partial)
        self.cofactor = cofactor
        self.reason = reason
        super().__init__(
            f"could not fully factor {n}: {reason}; unfactored cofactor {cofactor}"
        )


class InstanceError(ArctanDiophError, ValueError):
    """An invalid ``(k, l)`` pair."""


class InvalidK(InstanceError):
    def __init__(self, k: int):
        self.k = k
        super().__init__(f"k must be a positive integer, got {k}")


class InvalidL(InstanceError):
    def __init__(self, l: int):
        self.l = l
        super().__init__(f"l must be a positive integer, got {l}")


class NotCoprime(InstanceError):
    """``gcd(l, k**2 + 1) != 1``; the divisor parametrization does not apply."""

    def __init__(self, k: int, l: int, gcd: int):
        self.k, self.l, self.gcd = k, l, gcd
        super().__init__(
            f"gcd(l, k^2 + 1) = gcd({l}, {k * k + 1}) = {gcd}, expected 1"
        )


class NotADivisor(ArctanDiophError, ValueError):
    def __init__(self, d: int, n: int):
        self.d, self.n = d, n
        super().__init__(f"{d} is not a positive divisor of {n}")


class NotPrimeCase(ArctanDiophError, ValueError):
    def __init__(self, n: int):
        self.n = n
        super().__init__(f"k^2 + 1 = {n} is not prime")


class NotSemiprimeCase(ArctanDiophError, ValueError):
    def __init__(self, n: int):
        self.n = n
        super().__init__(f"k^2 + 1 = {n} is not a product of two distinct primes")


class CatalogError(ArctanDiophError):
    """Base class for catalog file problems."""


class DuplicateRecord(CatalogError):
    def __init__(self, key: tuple[int, int, int], line: int | None = None):
        self.key = key
        self.line = line
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"duplicate record for (k, l, d) = {key}{where}")


class MalformedLine(CatalogError):
    def __init__(self, line: int, detail: str):
        self.line = line
        self.detail = detail
        super().__init__(f"malformed catalog line {line}: {detail}")
