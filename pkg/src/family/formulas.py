"""
Closed forms for cycle vertices of H(n, k, l, n0, t0).

Everything is integer arithmetic; Δ is computed as 4Δ and divided only
after divisibility has been checked.
"""
from fractions import Fraction
from typing import Tuple

from core.exceptions import FamilyParameterError, NonIntegralDeltaError


def tr_closed_form(n: int, k: int, n0: int, t0: int) -> int:
    """Transmission of a cycle vertex of H."""
    square = n * n if n % 2 == 0 else n * n - 1
    # n^2 (or n^2 - 1) is divisible by 4 in both branches
    return square // 4 * (k + n0) + n * (2 * k + t0 - 2)


def delta_times_four(n: int, k: int, n0: int, t0: int) -> int:
    """4Δ_v(H) for a cycle vertex v."""
    tail = 8 * n0 + 32 if n % 2 == 0 else k + 11 * n0 + 34
    return 4 * n * (2 * k + t0 + n0 + 2) - n * n * (n0 - k + 2) - tail


def delta_closed_form(n: int, k: int, n0: int, t0: int) -> int:
    """
    Δ_v(H) = W(H) - W(H - v) for a cycle vertex v.

    Raises:
        NonIntegralDeltaError: if 4Δ is not a multiple of 4
    """
    scaled = delta_times_four(n, k, n0, t0)
    if scaled % 4:
        raise NonIntegralDeltaError((n, k, n0, t0), scaled % 4)
    return scaled // 4


def case_sums(n: int, n0: int) -> Tuple[int, int, int]:
    """
    Total distance increases after deleting a cycle vertex v, split into
    pairs inside the rest of v's cycle (case 1), pairs between that path and
    v's own gadget copy (case 2), and pairs between the path and the other
    n-1 gadget copies (case 3).
    """
    if n < 5:
        raise FamilyParameterError(f"case sums need n >= 5, got {n}")
    if n % 2 == 0:
        case1 = (n * n - 8 * n + 16) // 2
        case3 = n0 * (n * n - 6 * n + 8) // 2
    else:
        case1 = (n * n - 8 * n + 17) // 2
        case3 = n0 * (n * n - 6 * n + 9) // 2
    case2 = 2 * n0 * (n - 1)
    return case1, case2, case3


def case_sums_by_summation(n: int, n0: int) -> Tuple[int, int, int]:
    """The same three totals from the double sums over (i, j)."""
    if n < 5:
        raise FamilyParameterError(f"case sums need n >= 5, got {n}")
    if n % 2 == 0:
        i_max, offset = (n - 4) // 2, n // 2
    else:
        i_max, offset = (n - 3) // 2, (n - 1) // 2
    case1 = case3 = 0
    for i in range(1, i_max + 1):
        for j in range(offset + i + 1, n):
            gap = 2 * j - 2 * i - n
            case1 += min(4, gap)
            case3 += min(2, gap)
    return case1, 2 * n0 * (n - 1), 2 * n0 * case3


def lower_bound(k: int, n0: int) -> Fraction:
    """R_m(H) >= k / (k + n0)."""
    return Fraction(k, k + n0)


def expected_ratio(family: str, parameter: int = 0) -> Fraction:
    """Exact R_m of the named families."""
    if family in ('prop2', 'prop2matching'):
        return Fraction(parameter + 6, 2 * parameter + 11)
    if family == 'prop3':
        return Fraction(parameter, 2 * parameter + 8)
    if family == 'prop4':
        return Fraction(parameter, 2 * parameter + 13)
    if family in ('example497', 'example497-joined'):
        return Fraction(4, 7)
    raise FamilyParameterError(f"no closed-form ratio for family {family!r}")
