"""Delaunay and chromatic Delaunay mosaics.

The Delaunay triangulation is built by randomized incremental insertion with
full conflict lists (Clarkson-Shor style) over exact integer predicates. The
convex-hull boundary is closed off with "ghost" simplices through a symbolic
vertex at infinity, which is the lifted-hull picture seen from below. Inputs
that span a lower-dimensional affine subspace are handled by projecting onto
a coordinate subspace on which the projection is injective and keeping the
true squared norm as the lifting function.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .core import (
    ChromaticPointSet,
    GenericityError,
    GenericityReport,
    SimplicialComplex,
)
from .predicates import insphere_int, lift_chromatic, orientation_int, to_integer_points

INF = -1


@dataclass
class Triangulation:
    dim: int
    simplices: list[tuple[int, ...]]
    degenerate: list[tuple[int, ...]] = field(default_factory=list)


def _affine_frame(points: Sequence[Sequence[int]], order: Sequence[int]):
    """Greedy affinely independent subset and a coordinate projection for it."""
    m = len(points[0])
    p0 = order[0]
    basis = [p0]
    rows: list[list[Fraction]] = []
    pivots: list[int] = []
    for i in order[1:]:
        if len(rows) == m:
            break
        v = [Fraction(a - b) for a, b in zip(points[i], points[p0])]
        for r, c in zip(rows, pivots):
            if v[c]:
                f = v[c] / r[c]
                v = [x - f * y for x, y in zip(v, r)]
        nz = next((c for c in range(m) if v[c] != 0), None)
        if nz is not None:
            rows.append(v)
            pivots.append(nz)
            basis.append(i)
    # pivot columns of the echelon form give an injective coordinate projection
    return basis, sorted(pivots)


def triangulate(points: Sequence[Sequence[int]], seed: int = 0) -> Triangulation:
    """Delaunay triangulation of distinct integer points in R^m.

    Returns the maximal simplices (as sorted index tuples) and every local
    witness of a degenerate empty sphere found in the final triangulation.
    """
    n = len(points)
    if n == 0:
        return Triangulation(-1, [])
    if len(set(map(tuple, points))) != n:
        raise ValueError("duplicate points")
    order = list(range(n))
    random.Random(seed).shuffle(order)
    basis, cols = _affine_frame(points, order)
    k = len(basis) - 1
    if k == 0:
        return Triangulation(0, [(0,)])

    P = [tuple(p[c] for c in cols) for p in points]
    W = [sum(x * x for x in p) for p in points]
    ref = tuple(sum(P[b][c] for b in basis) for c in range(k))
    scale = k + 1

    simp: dict[int, tuple[int, ...]] = {}
    conf: dict[int, set[int]] = {}
    pconf: list[set[int]] = [set() for _ in range(n)]
    fmap: dict[tuple[int, ...], list[int]] = {}
    orient: dict[int, int] = {}
    ghost: dict[int, tuple[int, int]] = {}
    counter = [0]

    def create(verts: tuple[int, ...]) -> int:
        sid = counter[0]
        counter[0] += 1
        simp[sid] = verts
        conf[sid] = set()
        for i in range(len(verts)):
            fmap.setdefault(verts[:i] + verts[i + 1:], []).append(sid)
        if verts[0] != INF:
            o = orientation_int([P[v] for v in verts])
            if o == 0:
                raise RuntimeError(f"flat simplex {verts} created")
            orient[sid] = o
        else:
            g = verts[1:]
            s_in = orientation_int([tuple(scale * x for x in P[v]) for v in g] + [ref])
            gp = [P[v] for v in g]
            z = next(b for b in basis if orientation_int(gp + [P[b]]) != 0)
            ghost[sid] = (s_in, z)
        return sid

    def in_conflict(sid: int, q: int) -> bool:
        verts = simp[sid]
        if verts[0] != INF:
            return insphere_int([P[v] for v in verts], [W[v] for v in verts], P[q], W[q],
                                orient[sid]) > 0
        g = verts[1:]
        s_in, z = ghost[sid]
        o = orientation_int([P[v] for v in g] + [P[q]])
        if o == -s_in:
            return True
        if o == 0:
            ring = g + (z,)
            return insphere_int([P[v] for v in ring], [W[v] for v in ring], P[q], W[q]) > 0
        return False

    first = tuple(sorted(basis))
    create(first)
    for i in range(len(first)):
        create((INF,) + first[:i] + first[i + 1:])
    in_basis = set(basis)
    pending = [q for q in order if q not in in_basis]
    for q in pending:
        for sid in simp:
            if in_conflict(sid, q):
                conf[sid].add(q)
                pconf[q].add(sid)

    for p in pending:
        cavity = pconf[p]
        if not cavity:
            raise RuntimeError(f"point {p} has no conflicts")
        cavity = set(cavity)
        boundary = []
        for sid in cavity:
            verts = simp[sid]
            for i in range(len(verts)):
                f = verts[:i] + verts[i + 1:]
                other = fmap[f][0] if fmap[f][0] != sid else fmap[f][1]
                if other not in cavity:
                    boundary.append((f, sid, other))
        old_conf = {sid: conf.pop(sid) for sid in cavity}
        for sid in cavity:
            verts = simp.pop(sid)
            for i in range(len(verts)):
                f = verts[:i] + verts[i + 1:]
                lst = fmap[f]
                lst.remove(sid)
                if not lst:
                    del fmap[f]
            for q in old_conf[sid]:
                pconf[q].discard(sid)
            orient.pop(sid, None)
            ghost.pop(sid, None)
        for f, s_in, s_out in boundary:
            verts = tuple(sorted(f + (p,)))
            sid = create(verts)
            cands = old_conf[s_in] | conf[s_out]
            cands.discard(p)
            for q in cands:
                if in_conflict(sid, q):
                    conf[sid].add(q)
                    pconf[q].add(sid)

    degenerate = []
    for f, (a, b) in fmap.items():
        va, vb = simp[a], simp[b]
        if (va[0] == INF) != (vb[0] == INF):
            continue
        w = next(v for v in vb if v not in va)
        if va[0] != INF:
            if insphere_int([P[v] for v in va], [W[v] for v in va], P[w], W[w], orient[a]) == 0:
                degenerate.append(va + (w,))
        else:
            g = va[1:]
            if orientation_int([P[v] for v in g] + [P[w]]) == 0:
                ring = g + (ghost[a][1],)
                if insphere_int([P[v] for v in ring], [W[v] for v in ring], P[w], W[w]) == 0:
                    degenerate.append(g + (w,))
    finite = sorted(v for v in simp.values() if v[0] != INF)
    return Triangulation(k, finite, degenerate)


def delaunay_mosaic(points: Sequence[Sequence], seed: int = 0) -> SimplicialComplex:
    """Delaunay complex (all faces of all Delaunay cells) of rational points."""
    if not points:
        return SimplicialComplex()
    tri = triangulate(to_integer_points(points), seed)
    if tri.degenerate:
        sub = tuple(sorted(tri.degenerate[0]))
        raise GenericityError(GenericityReport(False, sub, f"points {list(sub)} lie on a common empty sphere"))
    return SimplicialComplex(tri.simplices)


def lifted_points(chi: ChromaticPointSet, unit=1) -> list[tuple[int, ...]]:
    """Colour-lifted points ``a + u_chi(a)`` in R^(d+s), scaled to integers."""
    s = chi.s
    lifted = [lift_chromatic(p, c, chi.dim, s, Fraction(unit)) for p, c in zip(chi.points, chi.colors)]
    return to_integer_points(lifted)


def chromatic_delaunay(chi: ChromaticPointSet, unit=1, seed: int = 0) -> SimplicialComplex:
    """Chromatic Delaunay mosaic, with vertices labelled by point index."""
    if len(chi) == 0:
        return SimplicialComplex()
    pts = lifted_points(chi, unit)
    if len(set(pts)) != len(pts):
        raise GenericityError(GenericityReport(False, (), "duplicate points"))
    tri = triangulate(pts, seed)
    if tri.degenerate:
        sub = tuple(sorted(tri.degenerate[0]))
        raise GenericityError(GenericityReport(False, sub, f"points {list(sub)} lie on a common empty sphere"))
    return SimplicialComplex(tri.simplices)


def subcomplex_by_colors(K: SimplicialComplex, chi: ChromaticPointSet,
                         tau: Iterable[int]) -> SimplicialComplex:
    tau = frozenset(tau)
    colors = chi.colors
    return K.filter(lambda s: all(colors[v] in tau for v in s))


def k_chromatic_subcomplex(K: SimplicialComplex, chi: ChromaticPointSet, k: int) -> SimplicialComplex:
    if not 1 <= k <= chi.n_colors:
        raise ValueError(f"k must lie in 1..{chi.n_colors}")
    colors = chi.colors
    return K.filter(lambda s: len({colors[v] for v in s}) <= k)
