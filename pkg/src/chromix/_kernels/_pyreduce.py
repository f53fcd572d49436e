"""Pure-Python Z/2 column reduction over integer bitsets."""
from __future__ import annotations

from typing import Sequence


def _bits(col: Sequence[int]) -> int:
    x = 0
    for r in col:
        x ^= 1 << r
    return x


def _rows(x: int) -> list[int]:
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


def reduce_boundary(cols: Sequence[Sequence[int]], track_v: bool = False):
    """Standard left-to-right reduction; see ``chromix._kernels.reduce_boundary``."""
    n = len(cols)
    R = [_bits(c) for c in cols]
    V = [1 << j for j in range(n)] if track_v else None
    lows = [-1] * n
    owner: dict[int, int] = {}
    for j in range(n):
        x = R[j]
        v = V[j] if track_v else 0
        while x:
            low = x.bit_length() - 1
            k = owner.get(low)
            if k is None:
                owner[low] = j
                lows[j] = low
                break
            x ^= R[k]
            if track_v:
                v ^= V[k]
        R[j] = x
        if track_v:
            V[j] = v
    return lows, [_rows(x) for x in R], ([_rows(v) for v in V] if track_v else None)
