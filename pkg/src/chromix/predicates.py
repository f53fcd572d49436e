"""Exact geometric kernel: colour lifting, orientation and in-sphere tests.

All determinants are evaluated over Python integers with fraction-free
(Bareiss) elimination. Rational inputs are scaled to integers first, which
never changes the sign of a predicate.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Sequence

Number = int | Fraction


def det(rows: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix (Bareiss elimination)."""
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        rk = m[k]
        for i in range(k + 1, n):
            ri = m[i]
            a = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * pivot - a * rk[j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1]


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def to_integer_points(points: Sequence[Sequence[Number]]) -> list[tuple[int, ...]]:
    """Scale rational points by the lcm of all denominators."""
    fr = [[Fraction(c) for c in p] for p in points]
    scale = 1
    for p in fr:
        for c in p:
            scale = lcm(scale, c.denominator)
    return [tuple(int(c * scale) for c in p) for p in fr]


def lift_chromatic(a: Sequence[Number], j: int, d: int, s: int, unit: Number = 1) -> tuple:
    """Append the colour offset ``u_j`` to the point ``a``.

    ``u_0`` is the origin of R^s and ``u_j`` is ``unit`` times the ``j``-th
    standard basis vector.
    """
    if len(a) != d:
        raise ValueError(f"point has {len(a)} coordinates, expected {d}")
    if not 0 <= j <= s:
        raise ValueError(f"colour {j} outside 0..{s}")
    tail = [0] * s
    if j > 0:
        tail[j - 1] = unit
    return tuple(a) + tuple(tail)


def orientation_int(pts: Sequence[Sequence[int]]) -> int:
    p0 = pts[0]
    return _sign(det([[x - y for x, y in zip(p, p0)] for p in pts[1:]]))


def insphere_raw(pts: Sequence[Sequence[int]], lifts: Sequence[int],
                 q: Sequence[int], q_lift: int) -> int:
    rows = [[x - y for x, y in zip(p, q)] + [w - q_lift] for p, w in zip(pts, lifts)]
    return _sign(det(rows))


@lru_cache(maxsize=None)
def _insphere_convention(m: int) -> int:
    # simplex {0, N e_i}, probe (1,...,1) lies strictly inside its circumsphere
    n = 4 * m
    pts = [tuple([0] * m)] + [tuple(n if i == k else 0 for i in range(m)) for k in range(m)]
    lifts = [sum(c * c for c in p) for p in pts]
    q = tuple([1] * m)
    raw = insphere_raw(pts, lifts, q, m)
    return raw * orientation_int(pts)


def insphere_int(pts: Sequence[Sequence[int]], lifts: Sequence[int],
                 q: Sequence[int], q_lift: int, orient: int | None = None) -> int:
    """+1 inside, 0 on, -1 outside the sphere through ``pts``.

    ``lifts`` hold the values of a quadratic whose quadratic part is positive
    definite (normally the squared norm), so the test is valid for points given
    in any affine coordinate system.
    """
    if orient is None:
        orient = orientation_int(pts)
    if orient == 0:
        raise ValueError("degenerate simplex: points are affinely dependent")
    m = len(q)
    return insphere_raw(pts, lifts, q, q_lift) * orient * _insphere_convention(m)


def orientation(pts: Sequence[Sequence[Number]]) -> int:
    """Sign of the orientation determinant of ``m+1`` points in R^m."""
    if len(pts) != len(pts[0]) + 1:
        raise ValueError("orientation needs m+1 points in R^m")
    return orientation_int(to_integer_points(pts))


def in_sphere(pts: Sequence[Sequence[Number]], q: Sequence[Number]) -> int:
    """Position of ``q`` relative to the circumsphere of ``pts``."""
    if len(pts) != len(pts[0]) + 1:
        raise ValueError("in_sphere needs m+1 points in R^m")
    ints = to_integer_points(list(pts) + [q])
    lifts = [sum(c * c for c in p) for p in ints]
    return insphere_int(ints[:-1], lifts[:-1], ints[-1], lifts[-1])
