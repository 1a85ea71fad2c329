"""Closed-form two-color Ramsey and k-color rainbow-free threshold values.

All arithmetic is exact (Python integers), so no overflow is possible at
any argument size.  Domain checks are strict: the star-plus and path-plus
closed forms start at t = 4 because the t = 3 target degenerates to the
triangle, whose two-color Ramsey number is 6, not 2*3 - 1.
"""

from __future__ import annotations

TARGET_FAMILIES = ("star-plus", "path-plus")


def _check_family(family: str) -> None:
    if family not in TARGET_FAMILIES:
        raise ValueError(f"unknown target family {family!r}, expected one of {TARGET_FAMILIES}")


def _check_t(t: int) -> None:
    if t < 4:
        raise ValueError(f"need t >= 4, got {t}; the t = 3 target is the triangle and follows R = 6")


def gr_value(family: str, t: int, k: int) -> int:
    """Least order forcing, in every k-coloring, a rainbow triangle or a
    monochromatic copy of the family's target on t vertices.

    Even k: 2(t-1) * 5^((k-2)/2) + 1.  Odd k: (t-1) * 5^((k-1)/2) + 1.
    Both families share the same value.
    """
    _check_family(family)
    _check_t(t)
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    if k % 2 == 0:
        return 2 * (t - 1) * 5 ** ((k - 2) // 2) + 1
    return (t - 1) * 5 ** ((k - 1) // 2) + 1


def ramsey_value(family: str, s: int, t: int) -> int:
    """Two-color Ramsey number for a pair of targets from the family on s and
    t vertices: 2*max(s, t) - 1, valid from 4 upward."""
    _check_family(family)
    if s < 4 or t < 4:
        raise ValueError(f"need s, t >= 4, got s={s}, t={t}; the t = 3 target follows R = 6")
    return 2 * max(s, t) - 1


def cycle_ramsey(m: int, n: int) -> int:
    """Two-color Ramsey number of a cycle pair (shorter length m, longer n).

    Odd m: 2n - 1.  Both even: n - 1 + m/2.  m even with n odd: the larger
    of n - 1 + m/2 and 2m - 1.  The classical exceptions (3,3) and (4,4)
    are outside the formula's domain.
    """
    if m < 3:
        raise ValueError(f"need m >= 3, got {m}")
    if m > n:
        raise ValueError(f"need m <= n, got m={m}, n={n}")
    if (m, n) in ((3, 3), (4, 4)):
        raise ValueError(f"the pair ({m}, {n}) is a classical exception outside the formula")
    if m % 2 == 1:
        return 2 * n - 1
    if n % 2 == 0:
        return n - 1 + m // 2
    return max(n - 1 + m // 2, 2 * m - 1)


def even_cycle_gr_bounds(n: int, k: int) -> tuple[int, int]:
    """Lower and upper bounds for the k-color rainbow-free threshold of the
    even cycle on 2n vertices: (n-1)k + n + 1 up to (n-1)k + 3n."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    return (n - 1) * k + n + 1, (n - 1) * k + 3 * n


def describe_gr(family: str, t: int, k: int) -> dict:
    value = gr_value(family, t, k)
    return {"value": value, "branch": "even-k" if k % 2 == 0 else "odd-k"}


def describe_ramsey(family: str, s: int, t: int) -> dict:
    return {"value": ramsey_value(family, s, t), "branch": "linear-in-max"}


def describe_cycle(m: int, n: int) -> dict:
    value = cycle_ramsey(m, n)
    if m % 2 == 1:
        branch = "shorter-odd"
    elif n % 2 == 0:
        branch = "both-even"
    else:
        branch = "shorter-even-longer-odd"
    return {"value": value, "branch": branch}


def describe_even_cycle_bounds(n: int, k: int) -> dict:
    lower, upper = even_cycle_gr_bounds(n, k)
    return {"lower": lower, "upper": upper, "branch": "interval"}
