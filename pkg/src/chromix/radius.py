"""Radius function on the chromatic Delaunay mosaic.

``radius_function`` visits simplices by decreasing dimension. For each simplex
it finds the constrained smallest enclosing sphere centre ``y`` on the
subspace of points equidistant from the vertices of each colour, and keeps
``e(y)`` when the stack of spheres centred at ``y`` is empty; otherwise the
value is the minimum over the cofaces one dimension up.

``radius_oracle`` recomputes the same value from scratch by minimizing the
stack radius over the explicit intersection of Voronoi cells.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .core import ChromaticPointSet, Filtration, SimplicialComplex, Simplex, facets_of
from .predicates import det

Vec = tuple[Fraction, ...]


def _sq(x: Sequence, y: Sequence) -> Fraction:
    return sum((a - b) * (a - b) for a, b in zip(x, y))


def _dot(x: Sequence, y: Sequence):
    return sum(a * b for a, b in zip(x, y))


def _affine_solve(rows: list[list[Fraction]], rhs: list[Fraction], n: int):
    """Solutions of ``rows @ x = rhs`` as ``(x0, basis)``, or None if inconsistent."""
    m = [list(r) + [b] for r, b in zip(rows, rhs)]
    piv_cols: list[int] = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / Fraction(m[r][c])
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        piv_cols.append(c)
        r += 1
    for i in range(r, len(m)):
        if m[i][n] != 0:
            return None
    x0 = [Fraction(0)] * n
    for i, c in enumerate(piv_cols):
        x0[c] = Fraction(m[i][n])
    free = [c for c in range(n) if c not in piv_cols]
    basis = []
    for fc in free:
        v = [Fraction(0)] * n
        v[fc] = Fraction(1)
        for i, c in enumerate(piv_cols):
            v[c] = -Fraction(m[i][fc])
        basis.append(tuple(v))
    return tuple(x0), basis


@dataclass(frozen=True)
class EquidistantSubspace:
    """Affine subspace ``basepoint + span(basis)`` of centres equidistant from
    all same-coloured vertices of a simplex."""

    basepoint: Vec
    basis: tuple[Vec, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def point(self, t: Sequence[Fraction]) -> Vec:
        out = list(self.basepoint)
        for coef, b in zip(t, self.basis):
            for k in range(len(out)):
                out[k] += coef * b[k]
        return tuple(out)


def _equidistance_rows(groups: Iterable[Sequence[Sequence]]):
    rows, rhs = [], []
    for grp in groups:
        c = grp[0]
        cc = _dot(c, c)
        for v in grp[1:]:
            rows.append([2 * (a - b) for a, b in zip(v, c)])
            rhs.append(_dot(v, v) - cc)
    return rows, rhs


def equidistant_subspace(groups: dict[int, Sequence[Sequence]], d: int) -> EquidistantSubspace | None:
    rows, rhs = _equidistance_rows(groups.values())
    sol = _affine_solve(rows, rhs, d)
    if sol is None:
        return None
    return EquidistantSubspace(sol[0], tuple(sol[1]))


def constrained_miniball(groups: dict[int, Sequence[Sequence]], E: EquidistantSubspace):
    """Centre ``y`` on ``E`` minimizing the largest per-colour squared radius.

    All vertices of one colour are equidistant from every point of ``E``, so
    one representative per colour suffices. The minimizer is the projection of
    a representative onto the sub-subspace where some colour subset is tied;
    every subset is tried and the smallest maximum wins. Returns ``y`` and the
    per-colour squared radii at ``y``.
    """
    reps = {j: tuple(Fraction(c) for c in grp[0]) for j, grp in groups.items()}
    colors = sorted(reps)
    k = E.dim
    best = None
    for size in range(1, len(colors) + 1):
        for S in combinations(colors, size):
            c0 = reps[S[0]]
            if k == 0:
                if size > 1:
                    break
                y = E.basepoint
            else:
                rows, rhs = [], []
                for j in S[1:]:
                    cj = reps[j]
                    a = [2 * (u - v) for u, v in zip(cj, c0)]
                    rows.append([_dot(a, b) for b in E.basis])
                    rhs.append(_dot(cj, cj) - _dot(c0, c0) - _dot(a, E.basepoint))
                sol = _affine_solve(rows, rhs, k)
                if sol is None:
                    continue
                t0, null = sol
                base = E.point(t0)
                dirs = [tuple(sum(nc * b[i] for nc, b in zip(nv, E.basis)) for i in range(len(base)))
                        for nv in null]
                if dirs:
                    gram = [[_dot(u, v) for v in dirs] for u in dirs]
                    target = [_dot(u, [a - b for a, b in zip(c0, base)]) for u in dirs]
                    coef = _affine_solve(gram, target, len(dirs))[0]
                    y = tuple(base[i] + sum(cf * u[i] for cf, u in zip(coef, dirs))
                              for i in range(len(base)))
                else:
                    y = base
            e = max(_sq(y, reps[j]) for j in colors)
            if best is None or e < best[0]:
                best = (e, y)
        if k == 0:
            break
    e, y = best
    return y, {j: _sq(y, reps[j]) for j in colors}


def stack_radius_squared(chi: ChromaticPointSet, tau: Iterable[int], x: Sequence) -> Fraction:
    """Squared radius of the maximal empty ``tau``-stack centred at ``x``."""
    x = [Fraction(c) for c in x]
    out = None
    for j in tau:
        members = chi.color_classes[j] if j < chi.n_colors else ()
        if not members:
            raise ValueError(f"colour {j} has no points")
        g = min(_sq(x, chi.points[a]) for a in members)
        out = g if out is None else max(out, g)
    if out is None:
        raise ValueError("empty colour set")
    return out


def empty_stack_check(chi: ChromaticPointSet, nu: Simplex, y: Sequence, e_values: dict[int, Fraction],
                      candidates: dict[int, Sequence[int]] | None = None,
                      coords: Sequence[Sequence] | None = None) -> bool:
    """True iff no point of colour ``j`` lies strictly inside the sphere of
    squared radius ``e_values[j]`` around ``y``, for every colour of ``nu``.

    ``candidates`` optionally restricts the points scanned per vertex (the
    same-colour Delaunay neighbours suffice); ``coords`` overrides the point
    coordinates (used with the integer frame).
    """
    pts = chi.points if coords is None else coords
    colors = chi.colors
    for j, e in e_values.items():
        if candidates is None:
            scan: Iterable[int] = chi.color_classes[j]
        else:
            v = next(u for u in nu if colors[u] == j)
            scan = candidates.get(v, ())
        for a in scan:
            if _sq(y, pts[a]) < e:
                return False
    return True


def _groups(nu: Simplex, colors: Sequence[int], pts) -> dict[int, list]:
    g: dict[int, list] = {}
    for v in nu:
        g.setdefault(colors[v], []).append(pts[v])
    return g


def radius_function(chi: ChromaticPointSet, K: SimplicialComplex,
                    exhaustive: bool = False) -> Filtration:
    """Squared radius function on ``K = chromatic_delaunay(chi)``.

    With ``exhaustive=False`` the emptiness test scans only same-colour
    Delaunay neighbours of one vertex per colour, which is exact because a
    Voronoi domain is cut out by its Delaunay neighbours.
    """
    pts = chi.int_points
    colors = chi.colors
    d = chi.dim
    by_dim: dict[int, list[Simplex]] = {}
    for s in K.simplices:
        by_dim.setdefault(len(s) - 1, []).append(s)
    top = max(by_dim, default=-1)
    cofaces: dict[Simplex, list[Simplex]] = {}
    for p in range(1, top + 1):
        for s in by_dim[p]:
            for f in facets_of(s):
                cofaces.setdefault(f, []).append(s)
    neighbors = None
    if not exhaustive:
        neighbors = {}
        for s in by_dim.get(1, ()):
            a, b = s
            if colors[a] == colors[b]:
                neighbors.setdefault(a, []).append(b)
                neighbors.setdefault(b, []).append(a)
    scaled: dict[Simplex, Fraction] = {}
    for p in range(top, 0, -1):
        for nu in by_dim[p]:
            groups = _groups(nu, colors, pts)
            E = equidistant_subspace(groups, d)
            ok = False
            if E is not None:
                y, e_vals = constrained_miniball(groups, E)
                ok = empty_stack_check(chi, nu, y, e_vals, neighbors, pts)
            if ok:
                scaled[nu] = max(e_vals.values())
            else:
                ups = cofaces.get(nu)
                if not ups:
                    raise RuntimeError(f"maximal simplex {nu} fails the empty stack test")
                scaled[nu] = min(scaled[mu] for mu in ups)
    for v in by_dim.get(0, ()):
        scaled[v] = Fraction(0)
    k2 = chi.scale * chi.scale
    return Filtration({s: v / k2 for s, v in scaled.items()})


def _independent_rows(eq_rows, eq_rhs, d):
    """Drop dependent equations; None when the system is inconsistent."""
    m = [list(r) + [b] for r, b in zip(eq_rows, eq_rhs)]
    keep = []
    red: list[list[Fraction]] = []
    pcols: list[int] = []
    for idx, row in enumerate(m):
        v = [Fraction(x) for x in row]
        for r, c in zip(red, pcols):
            if v[c] != 0:
                f = v[c] / r[c]
                v = [a - f * b for a, b in zip(v, r)]
        nz = next((c for c in range(d) if v[c] != 0), None)
        if nz is None:
            if v[d] != 0:
                return None
            continue
        red.append(v)
        pcols.append(nz)
        keep.append(idx)
    return [m[i][:d] for i in keep], [m[i][d] for i in keep]


def _project_int(A, b, c):
    """Closest point to the integer point ``c`` on ``{x : A x = b}``.

    Returns ``(num, den)`` with ``x = num / den`` and ``den > 0``, or None when
    the rows of ``A`` are dependent. Uses ``x = c - A^T w`` with
    ``(A A^T) w = A c - b`` solved by Cramer's rule in integers.
    """
    q = len(A)
    if q == 0:
        return tuple(c), 1
    G = [[sum(x * y for x, y in zip(ri, rj)) for rj in A] for ri in A]
    D = det(G)
    if D == 0:
        return None
    r = [sum(x * y for x, y in zip(ri, c)) - bi for ri, bi in zip(A, b)]
    w = []
    for k in range(q):
        Gk = [row[:k] + [r[i]] + row[k + 1:] for i, row in enumerate(G)]
        w.append(det(Gk))
    if D < 0:
        D, w = -D, [-x for x in w]
    num = tuple(D * ci - sum(A[k][i] * w[k] for k in range(q)) for i, ci in enumerate(c))
    return num, D


def radius_oracle(chi: ChromaticPointSet, nu: Simplex) -> Fraction:
    """Minimum of the stack radius over the intersection of the Voronoi cells
    dual to the mono-chromatic parts of ``nu``, by active-set enumeration.

    Works in the integer frame of ``chi``; only the final value is a fraction.
    """
    pts = chi.int_points
    d = chi.dim
    colors = chi.colors
    tau = sorted({colors[v] for v in nu})
    members = {j: [v for v in nu if colors[v] == j] for j in tau}
    reps = {j: pts[members[j][0]] for j in tau}

    def halfspace(a, c):
        return [2 * (x - y) for x, y in zip(a, c)], _dot(a, a) - _dot(c, c)

    eq_rows, eq_rhs = [], []
    for j in tau:
        for v in members[j][1:]:
            row, rhs = halfspace(pts[v], reps[j])
            eq_rows.append(row)
            eq_rhs.append(rhs)
    ineqs = []
    for j in tau:
        for a in chi.color_classes[j]:
            if a not in members[j]:
                row, rhs = halfspace(pts[a], reps[j])
                ineqs.append((row, rhs, _sq(pts[a], reps[j])))
    classes = [[pts[a] for a in chi.color_classes[j]] for j in tau]

    base = _independent_rows(eq_rows, eq_rhs, d)
    if base is None:
        raise RuntimeError(f"no point is equidistant from the same-coloured vertices of {nu}")
    # Conic Caratheodory modulo the span of the forced equalities: some optimal
    # active set has |T| + |S| - 1 <= d - rank, with linearly independent normals.
    # Dependent active sets cut out the same flat as one of their subsets.
    eq_rows, eq_rhs = [list(map(int, r)) for r in base[0]], [int(x) for x in base[1]]
    budget = d - len(eq_rows)
    S_rows = {}
    for ns in range(1, min(len(tau), budget + 1) + 1):
        for S in combinations(tau, ns):
            rows, rhs = [], []
            for j in S[1:]:
                row, b = halfspace(reps[j], reps[S[0]])
                rows.append(row)
                rhs.append(b)
            S_rows[S] = (rows, rhs)
    best_frac = None
    for size in range(0, budget + 1):
        # a tight constraint at x forces |x - c|^2 >= |a - c|^2 / 4
        pool = [t for t in ineqs if best_frac is None or Fraction(t[2], 4) <= best_frac]
        for T in combinations(pool, size):
            t_rows = [t[0] for t in T]
            t_rhs = [t[1] for t in T]
            for S, (s_rows, s_rhs) in S_rows.items():
                if size + len(S) - 1 > budget:
                    continue
                c0 = reps[S[0]]
                sol = _project_int(eq_rows + t_rows + s_rows, eq_rhs + t_rhs + s_rhs, c0)
                if sol is None:
                    continue
                num, D = sol
                if best_frac is not None and Fraction(_sq(num, [D * x for x in c0]), D * D) >= best_frac:
                    continue
                if any(_dot(row, num) > rhs * D for row, rhs, _ in ineqs):
                    continue
                g = max(min(_sq(num, [D * x for x in a]) for a in cl) for cl in classes)
                val = Fraction(g, D * D)
                if best_frac is None or val < best_frac:
                    best_frac = val
    if best_frac is None:
        raise RuntimeError(f"empty Voronoi cell intersection for {nu}: simplex is not in the mosaic")
    k = chi.scale
    return best_frac / (k * k)
