import math

import pytest

from arctan_dioph import _kernels


def trial_division_is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % p for p in range(2, math.isqrt(n) + 1))


def scan_divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def coprime_grid(k_max=25, l_max=10):
    return [
        (k, l)
        for k in range(1, k_max + 1)
        for l in range(1, l_max + 1)
        if math.gcd(l, k * k + 1) == 1
    ]


@pytest.fixture(params=["numba", "numpy"])
def kernel_backend(request, monkeypatch):
    impl = _kernels.numba_impl() if request.param == "numba" else _kernels.numpy_impl
    if impl is None:
        pytest.skip("numba not available")
    monkeypatch.setattr(_kernels, "_active", impl)
    return impl


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
