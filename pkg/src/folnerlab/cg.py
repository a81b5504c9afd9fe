"""Clebsch-Gordan coefficients for SU(2) in the Condon-Shortley convention.

Labels are twice the spin (a = 2*j). Matrix indices are 1-based with
descending weights: index i of the label-a irrep carries m = (a - 2(i-1))/2.
Tables are built by the standard recursion: the highest-weight row is fixed
by requiring J+ to annihilate the top vector (seed positive at maximal m1),
normalized, then lowered with J-. The change of basis is real orthogonal.
"""

from __future__ import annotations

import math

_tables: dict[tuple[int, int, int], list[list[list[float]]]] = {}


def _ap(two_j: int, two_m: int) -> float:
    """Matrix element sqrt(j(j+1) - m(m+1)) of J+, doubled arguments."""
    return math.sqrt((two_j * (two_j + 2) - two_m * (two_m + 2)) / 4.0)


def cg_table(a: int, b: int, c: int) -> list[list[list[float]]]:
    """Table t[i-1][k-1][p-1] = <j_a m_i; j_b m_k | j_c m_p>.

    Requires the triangle condition |a-b| <= c <= a+b with a+b+c even;
    cached per (a, b, c).
    """
    key = (a, b, c)
    if key in _tables:
        return _tables[key]
    if not (abs(a - b) <= c <= a + b and (a + b + c) % 2 == 0):
        raise ValueError(f"labels ({a},{b},{c}) violate the fusion rule")

    # rows indexed by doubled weights; coeff[two_m][two_m1]
    coeff: dict[int, dict[int, float]] = {}
    top: dict[int, float] = {}
    two_m1_max = min(a, c + b)
    two_m1_min = max(-a, c - b)
    top[two_m1_max] = 1.0
    two_m1 = two_m1_max
    while two_m1 > two_m1_min:
        # J+ (top vector) = 0: c_{m1-1} * A+(j1, m1-1) + c_{m1} * A+(j2, c-m1) = 0
        top[two_m1 - 2] = -top[two_m1] * _ap(b, c - two_m1) / _ap(a, two_m1 - 2)
        two_m1 -= 2
    norm = math.sqrt(sum(v * v for v in top.values()))
    coeff[c] = {k: v / norm for k, v in top.items()}

    two_m = c
    while two_m > -c:
        prev = coeff[two_m]
        cur: dict[int, float] = {}
        denom = _ap(c, two_m - 2)  # A-(j_c, m) = A+(j_c, m-1)
        lo = max(-a, (two_m - 2) - b)
        hi = min(a, (two_m - 2) + b)
        for two_m1 in range(lo, hi + 2, 2):
            val = 0.0
            if two_m1 + 2 in prev:
                val += prev[two_m1 + 2] * _ap(a, two_m1)  # A-(j_a, m1+1)
            if two_m1 in prev:
                val += prev[two_m1] * _ap(b, two_m - 2 - two_m1)
            if val:
                cur[two_m1] = val / denom
        coeff[two_m - 2] = cur
        two_m -= 2

    table = [[[0.0] * (c + 1) for _ in range(b + 1)] for _ in range(a + 1)]
    for i in range(a + 1):
        two_m1 = a - 2 * i
        for k in range(b + 1):
            two_m2 = b - 2 * k
            two_m = two_m1 + two_m2
            if abs(two_m) > c:
                continue
            p = (c - two_m) // 2
            table[i][k][p] = coeff[two_m].get(two_m1, 0.0)
    _tables[key] = table
    return table
