"""Exact solutions of arctan(1/x) + arctan(l/y) = arctan(1/k) in positive integers."""

__version__ = "0.1.0"

from .arith import (  # noqa: E402
    EffortLimits,
    Factorization,
    Rational,
    divisor_count,
    divisors,
    factorize,
    gcd,
    is_probable_prime,
)
from .errors import (  # noqa: E402
    DuplicateRecord,
    FactorizationIncomplete,
    InvalidK,
    InvalidL,
    MalformedLine,
    NotADivisor,
    NotCoprime,
    NotPrimeCase,
    NotSemiprimeCase,
)
from .solver import (  # noqa: E402
    ProblemInstance,
    Solution,
    SolutionSet,
    make_instance,
    prime_case_solutions,
    semiprime_case_solutions,
    solution_for_divisor,
    solve_all,
)
from .oracle import (  # noqa: E402
    SearchBound,
    VerificationReport,
    brute_force_solutions,
    cross_check,
    verify_exact,
)
from .catalog import (  # noqa: E402
    IdentityRecord,
    classic_listing,
    read_catalog,
    render_identity,
    sweep,
    write_catalog,
)
