"""Brute-force rank functions of the six persistence modules.

Each rank is a dimension count of explicit cycle and boundary spaces built by
Gaussian elimination over Z/2 (chains are int bitsets over filtration
positions). Nothing here shares code with the reduction algorithms.
"""
from __future__ import annotations

from typing import Iterable

from .core import DiagramPoint, Filtration, PersistenceDiagram
from .persistence import MODULES, FilteredPair

DEFAULT_MAX_SIMPLICES = 300


class _Echelon:
    """Incremental Z/2 row-echelon basis keyed by leading bit."""

    __slots__ = ("rows",)

    def __init__(self, vecs: Iterable[int] = ()):
        self.rows: dict[int, int] = {}
        for v in vecs:
            self.add(v)

    def copy(self) -> "_Echelon":
        e = _Echelon()
        e.rows = dict(self.rows)
        return e

    def add(self, v: int) -> bool:
        rows = self.rows
        while v:
            top = v.bit_length() - 1
            r = rows.get(top)
            if r is None:
                rows[top] = v
                return True
            v ^= r
        return False

    def __len__(self) -> int:
        return len(self.rows)


def _kernel_timed(items, mask: int):
    """Kernel of ``v -> v & mask`` on timed generators.

    ``items`` are ``(time, vec, carrier)`` in time order; returns the timed
    carriers of a kernel basis, each available from its time onwards.
    """
    piv: dict[int, tuple[int, int]] = {}
    out = []
    for t, vec, car in items:
        v = vec & mask
        while v:
            top = v.bit_length() - 1
            hit = piv.get(top)
            if hit is None:
                piv[top] = (v, car)
                break
            v ^= hit[0]
            car ^= hit[1]
        if not v and car:
            out.append((t, car))
    return out


class RankOracle:
    """All ranks ``r(i, j)``, ``0 <= i <= j <= n``, for each module and degree."""

    def __init__(self, P: FilteredPair, max_simplices: int | None = DEFAULT_MAX_SIMPLICES):
        n = len(P)
        if max_simplices is not None and n > max_simplices:
            raise ValueError(f"{n} simplices exceed the oracle size guard of {max_simplices}")
        self.P = P
        self.n = n
        self.top = max(P.top_dim, 0)
        self._cache: dict[tuple[str, int], list[list[int]]] = {}
        self._L = 0
        for q in range(n):
            if P.in_L[q]:
                self._L |= 1 << q
        self._all = (1 << n) - 1

    def _bvec(self, q: int) -> int:
        v = 0
        for r in self.P.boundary[q]:
            v ^= 1 << r
        return v

    def _cells(self, p: int, only_L: bool = False):
        P = self.P
        return [q for q in range(self.n) if P.dims[q] == p and (P.in_L[q] or not only_L)]

    def _cycles(self, p: int, only_L: bool = False, mask: int | None = None):
        mask = self._all if mask is None else mask
        items = [(q + 1, self._bvec(q), 1 << q) for q in self._cells(p, only_L)]
        return _kernel_timed(items, mask)

    def _boundaries(self, p: int, only_L: bool = False):
        return [(q + 1, self._bvec(q)) for q in self._cells(p + 1, only_L)]

    def _spaces(self, module: str, p: int):
        """Timed generators of the step-i space X and step-j space T."""
        if module == "domain":
            return self._cycles(p, True), self._boundaries(p, True)
        if module == "codomain":
            return self._cycles(p), self._boundaries(p)
        if module == "relative":
            X = self._cycles(p, mask=self._all & ~self._L)
            T = self._boundaries(p) + [(q + 1, 1 << q) for q in self._cells(p, True)]
            return X, T
        if module == "image":
            return self._cycles(p, True), self._boundaries(p)
        if module == "kernel":
            items = [(t, v, v) for t, v in self._boundaries(p)]
            X = _kernel_timed(items, self._all & ~self._L)
            return X, self._boundaries(p, True)
        if module == "cokernel":
            return self._cycles(p), self._boundaries(p) + self._cycles(p, True)
        raise ValueError(f"unknown module {module!r}")

    def ranks(self, module: str, p: int) -> list[list[int]]:
        key = (module, p)
        if key in self._cache:
            return self._cache[key]
        n = self.n
        X, T = self._spaces(module, p)
        X = sorted(X, key=lambda it: it[0])
        T = sorted(T, key=lambda it: it[0])
        # rank of T_j alone
        t_rank = []
        e = _Echelon()
        k = 0
        for j in range(n + 1):
            while k < len(T) and T[k][0] <= j:
                e.add(T[k][1])
                k += 1
            t_rank.append(len(e))
        table = [[0] * (n + 1) for _ in range(n + 1)]
        for i in range(n + 1):
            e = _Echelon(v for t, v in X if t <= i)
            k = 0
            while k < len(T) and T[k][0] <= i:
                e.add(T[k][1])
                k += 1
            for j in range(i, n + 1):
                while k < len(T) and T[k][0] <= j:
                    e.add(T[k][1])
                    k += 1
                table[i][j] = len(e) - t_rank[j]
        self._cache[key] = table
        return table

    def rank(self, module: str, p: int, i: int, j: int) -> int:
        if not 0 <= i <= j <= self.n:
            raise ValueError("need 0 <= i <= j <= n")
        if p < 0:
            return 0
        return self.ranks(module, p)[i][j]

    def betti(self, module: str, p: int, i: int) -> int:
        return self.rank(module, p, i, i)

    def betti_series(self, module: str, p: int) -> list[int]:
        """``r(i, i)`` for every step ``i``, without building the full table."""
        n = self.n
        if p < 0:
            return [0] * (n + 1)
        X, T = self._spaces(module, p)
        X = sorted(X, key=lambda it: it[0])
        T = sorted(T, key=lambda it: it[0])
        both, alone = _Echelon(), _Echelon()
        out = []
        kx = kt = 0
        for i in range(n + 1):
            while kt < len(T) and T[kt][0] <= i:
                both.add(T[kt][1])
                alone.add(T[kt][1])
                kt += 1
            while kx < len(X) and X[kx][0] <= i:
                both.add(X[kx][1])
                kx += 1
            out.append(len(both) - len(alone))
        return out

    def diagram(self, module: str, p: int) -> PersistenceDiagram:
        """Diagram recovered by inclusion-exclusion over the rank function."""
        n = self.n
        P = self.P
        r = self.ranks(module, p) if p >= 0 else None

        def R(i, j):
            if j > n:
                return 0
            return r[i][j]

        pts = []
        for i in range(1, n + 1):
            for j in range(i + 1, n + 2):
                mu = R(i, j - 1) - R(i, j) - R(i - 1, j - 1) + R(i - 1, j)
                if mu < 0:
                    raise AssertionError(f"negative multiplicity at ({i}, {j}) for {module}")
                if mu == 0:
                    continue
                b = P.values[i - 1]
                d = None if j == n + 1 else P.values[j - 1]
                if d is not None and d == b:
                    continue
                ds = None if j == n + 1 else P.simplices[j - 1]
                pts.extend([DiagramPoint(b, d, P.simplices[i - 1], ds)] * mu)
        dg = PersistenceDiagram(p, tuple(pts))
        return PersistenceDiagram(p, tuple(dg.sorted_points()))

    def diagrams(self) -> dict[str, list[PersistenceDiagram]]:
        return {m: [self.diagram(m, p) for p in range(self.top + 1)] for m in MODULES}


def rank_oracle(F: Filtration, L, module: str, p: int, i: int, j: int, M=None,
                max_simplices: int | None = DEFAULT_MAX_SIMPLICES) -> int:
    """Rank of the ``i -> j`` structure map of one of the six modules."""
    return RankOracle(FilteredPair.from_filtration(F, L, M), max_simplices).rank(module, p, i, j)


def oracle_diagrams(F: Filtration, L, M=None,
                    max_simplices: int | None = DEFAULT_MAX_SIMPLICES) -> dict[str, list[PersistenceDiagram]]:
    return RankOracle(FilteredPair.from_filtration(F, L, M), max_simplices).diagrams()
