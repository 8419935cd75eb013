from fractions import Fraction

import pytest

from rbh4.search import scan

ACCEPTANCE = {}


@pytest.fixture(scope="session")
def acceptance():
    """Record a one-line verdict per acceptance criterion for the summary."""

    def record(number, passed, detail):
        ACCEPTANCE[number] = (passed, detail)

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        passed, detail = ACCEPTANCE[number]
        terminalreporter.write_line(
            f"criterion {number}: {'PASS' if passed else 'FAIL'} - {detail}"
        )


_SCANS = {}


def cached_scan(algebra, p, lam, jobs=1):
    key = (algebra, p, lam)
    if key not in _SCANS:
        _SCANS[key] = scan(algebra, p, lam, jobs)
    return _SCANS[key]


@pytest.fixture(scope="session")
def h4minus_f3():
    return cached_scan("h4minus", 3, 1)


@pytest.fixture(scope="session")
def h4_f3():
    return cached_scan("h4", 3, 1)


def to_ef_matrix(matrix):
    # S maps (1, g, e, f)-coordinates to (1, g, x, gx)-coordinates; R_ef = S^-1 R S
    half = Fraction(1, 2)
    S = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 1], [0, 0, 1, -1]]
    S_inv = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, half, half], [0, 0, half, -half]]

    zero = 0 * matrix[0][0]

    def mul(a, b):
        return tuple(
            tuple(sum((a[i][k] * b[k][j] for k in range(4)), zero) for j in range(4)) for i in range(4)
        )

    return mul(mul(S_inv, matrix), S)
