"""Z/2 persistence: absolute, relative, kernel, image and cokernel diagrams.

Every module is computed on a :class:`FilteredPair`, the chain complex of
``K / M`` in filtration order together with the subcomplex ``L / M``. The
quotient by ``M`` is taken by dropping ``M`` simplices and rows, so the pair
of pairs ``(L, M) ⊆ (K, M)`` runs through exactly the same code as ``L ⊆ K``.

Positions below are indices into the filtration order; a simplex at position
``q`` enters at step ``q + 1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from ._kernels import reduce_boundary
from .core import (
    DiagramPoint,
    Filtration,
    PersistenceDiagram,
    SimplicialComplex,
    Simplex,
    facets_of,
)

# Table 1 layout: top row, then bottom row
MODULES = ("kernel", "relative", "cokernel", "domain", "image", "codomain")


@dataclass(frozen=True)
class FilteredPair:
    """Filtered chain complex of ``K / M`` with a marked subcomplex ``L / M``."""

    simplices: tuple[Simplex, ...]
    values: tuple[Fraction, ...]
    dims: tuple[int, ...]
    boundary: tuple[tuple[int, ...], ...]
    in_L: tuple[bool, ...]

    @classmethod
    def from_filtration(cls, F: Filtration, L: SimplicialComplex | Iterable[Simplex] | None = None,
                        M: SimplicialComplex | Iterable[Simplex] | None = None) -> "FilteredPair":
        Lset = _simplex_set(L)
        Mset = _simplex_set(M)
        _check_sub(Lset, F.values, "L", "K")
        _check_sub(Mset, Lset, "M", "L")
        order = [s for s in F.order if s not in Mset]
        pos = {s: i for i, s in enumerate(order)}
        bnd = []
        for s in order:
            if len(s) == 1:
                bnd.append(())
            else:
                bnd.append(tuple(sorted(pos[f] for f in facets_of(s) if f not in Mset)))
        return cls(tuple(order), tuple(F.values[s] for s in order), tuple(len(s) - 1 for s in order),
                   tuple(bnd), tuple(s in Lset for s in order))

    def __len__(self) -> int:
        return len(self.simplices)

    @property
    def top_dim(self) -> int:
        return max(self.dims, default=-1)


def _simplex_set(X) -> frozenset:
    if X is None:
        return frozenset()
    if isinstance(X, SimplicialComplex):
        return X.simplices
    return frozenset(tuple(s) for s in X)


def _check_sub(sub, sup, a: str, b: str) -> None:
    for s in sub:
        if s not in sup:
            raise ValueError(f"{a} is not a subcomplex of {b}: {s} missing")
        for f in facets_of(s):
            if f not in sub:
                raise ValueError(f"{a} is not closed under faces: {f} missing")


@dataclass(frozen=True)
class BoundaryMatrix:
    """Sparse Z/2 boundary matrix in filtration order."""

    columns: tuple[tuple[int, ...], ...]
    dims: tuple[int, ...]
    values: tuple[Fraction, ...]

    @classmethod
    def from_filtration(cls, F: Filtration, exclude: SimplicialComplex | None = None) -> "BoundaryMatrix":
        P = FilteredPair.from_filtration(F, exclude, exclude)
        return cls(P.boundary, P.dims, P.values)


@dataclass(frozen=True)
class Reduction:
    lows: tuple[int, ...]
    pairs: tuple[tuple[int, int], ...]
    essential: tuple[int, ...]


def reduce(D: BoundaryMatrix) -> Reduction:
    """Standard column reduction: birth-death pairs and essential columns."""
    lows, _, _ = reduce_boundary([list(c) for c in D.columns])
    paired = {lo for lo in lows if lo >= 0}
    pairs = tuple((lo, j) for j, lo in enumerate(lows) if lo >= 0)
    essential = tuple(j for j, lo in enumerate(lows) if lo < 0 and j not in paired)
    return Reduction(tuple(lows), pairs, essential)


def _bits(col: Iterable[int]) -> int:
    x = 0
    for r in col:
        x ^= 1 << r
    return x


def _standard(cols: Sequence[Sequence[int]]):
    """Pairs and essentials of one reduction, as (birth, death|None) positions."""
    lows, _, _ = reduce_boundary([list(c) for c in cols])
    paired = set()
    out = []
    for j, lo in enumerate(lows):
        if lo >= 0:
            out.append((lo, j))
            paired.add(lo)
    for j, lo in enumerate(lows):
        if lo < 0 and j not in paired:
            out.append((j, None))
    return lows, out


def module_pairs(P: FilteredPair) -> dict[str, list[tuple[int, int, int | None]]]:
    """``(degree, birth position, death position or None)`` triples per module."""
    n = len(P)
    dims, bnd, inL = P.dims, P.boundary, P.in_L
    out: dict[str, list] = {m: [] for m in MODULES}

    # codomain
    lows_f, pf = _standard(bnd)
    out["codomain"] = [(dims[b], b, d) for b, d in pf]

    # domain, with the cycle representatives kept for the cokernel
    Lpos = [q for q in range(n) if inL[q]]
    lidx = {q: i for i, q in enumerate(Lpos)}
    lows_g, _, V_g = reduce_boundary([[lidx[r] for r in bnd[q]] for q in Lpos], True)
    g_paired = {lo for lo in lows_g if lo >= 0}
    L_positive = set()
    for i, lo in enumerate(lows_g):
        q = Lpos[i]
        if lo >= 0:
            out["domain"].append((dims[Lpos[lo]], Lpos[lo], q))
        else:
            L_positive.add(q)
            if i not in g_paired:
                out["domain"].append((dims[q], q, None))

    # relative: delete L rows and columns
    Npos = [q for q in range(n) if not inL[q]]
    nidx = {q: i for i, q in enumerate(Npos)}
    _, pr = _standard([[nidx[r] for r in bnd[q] if not inL[r]] for q in Npos])
    out["relative"] = [(dims[Npos[b]], Npos[b], None if d is None else Npos[d]) for b, d in pr]

    # image: rows reordered with L first
    row_of = {}
    for i, q in enumerate(Lpos):
        row_of[q] = i
    for i, q in enumerate(Npos):
        row_of[q] = len(Lpos) + i
    pos_of_row = Lpos + Npos
    nL = len(Lpos)
    lows_im, R_im, _ = reduce_boundary([[row_of[r] for r in bnd[q]] for q in range(n)])
    im_dead = set()
    for j, lo in enumerate(lows_im):
        if 0 <= lo < nL:
            b = pos_of_row[lo]
            out["image"].append((dims[b], b, j))
            im_dead.add(b)
    for q in sorted(L_positive - im_dead):
        out["image"].append((dims[q], q, None))

    # kernel: generators are the reduced image columns lying in L
    owner = {}
    ubits = {}
    for j, lo in enumerate(lows_im):
        if 0 <= lo < nL:
            owner[lo] = j
            ubits[j] = _bits(R_im[j])
    rel_cols = []
    rel_pos = []
    for i, lo in enumerate(lows_g):
        if lo < 0:
            continue
        j = Lpos[i]
        x = _bits(row_of[r] for r in bnd[j])
        coords = []
        while x:
            k = owner[x.bit_length() - 1]
            x ^= ubits[k]
            coords.append(k)
        rel_cols.append(sorted(coords))
        rel_pos.append(j)
    u_list = sorted(ubits)
    uidx = {k: i for i, k in enumerate(u_list)}
    lows_k, _, _ = reduce_boundary([[uidx[k] for k in c] for c in rel_cols])
    killed = set()
    for c, lo in enumerate(lows_k):
        k = u_list[lo]
        killed.add(k)
        if k != rel_pos[c]:
            out["kernel"].append((dims[k] - 1, k, rel_pos[c]))
    for k in u_list:
        if k not in killed:
            out["kernel"].append((dims[k] - 1, k, None))

    # cokernel: boundaries plus the cycles of L, in K's row order
    cok_cols = []
    for q in range(n):
        if inL[q] and q in L_positive:
            cok_cols.append(sorted(Lpos[r] for r in V_g[lidx[q]]))
        else:
            cok_cols.append(list(bnd[q]))
    lows_c, _, _ = reduce_boundary(cok_cols)
    births = [q for q in range(n) if lows_f[q] < 0 and q not in L_positive]
    bset = set(births)
    dead = set()
    for j, lo in enumerate(lows_c):
        if lo >= 0 and lo in bset:
            out["cokernel"].append((dims[lo], lo, j))
            dead.add(lo)
    for q in births:
        if q not in dead:
            out["cokernel"].append((dims[q], q, None))
    return out


def diagrams_from_pairs(P: FilteredPair, triples, top: int | None = None) -> list[PersistenceDiagram]:
    """Per-degree diagrams from position triples, dropping zero persistence."""
    top = P.top_dim if top is None else top
    buckets: list[list[DiagramPoint]] = [[] for _ in range(max(top, 0) + 1)]
    for p, b, d in triples:
        if p < 0 or p > top:
            continue
        vb = P.values[b]
        vd = None if d is None else P.values[d]
        if vd is not None and vd == vb:
            continue
        buckets[p].append(DiagramPoint(vb, vd, P.simplices[b], None if d is None else P.simplices[d]))
    out = []
    for p, pts in enumerate(buckets):
        dgm = PersistenceDiagram(p, tuple(pts))
        out.append(PersistenceDiagram(p, tuple(dgm.sorted_points())))
    return out


def six_module_diagrams(F: Filtration, L, M=None) -> dict[str, list[PersistenceDiagram]]:
    """All six diagram families of ``L ⊆ K`` (or ``(L, M) ⊆ (K, M)``), keyed by module label."""
    P = FilteredPair.from_filtration(F, L, M)
    pairs = module_pairs(P)
    top = max(P.top_dim, 0)
    return {m: diagrams_from_pairs(P, pairs[m], top) for m in MODULES}


def diagram(F: Filtration, p: int) -> PersistenceDiagram:
    P = FilteredPair.from_filtration(F)
    lows, pf = _standard(P.boundary)
    dg = diagrams_from_pairs(P, [(P.dims[b], b, d) for b, d in pf], max(p, P.top_dim))
    return dg[p] if p < len(dg) else PersistenceDiagram(p)


def diagrams(F: Filtration) -> list[PersistenceDiagram]:
    P = FilteredPair.from_filtration(F)
    _, pf = _standard(P.boundary)
    return diagrams_from_pairs(P, [(P.dims[b], b, d) for b, d in pf])


def relative_diagram(F_K: Filtration, L, p: int) -> PersistenceDiagram:
    P = FilteredPair.from_filtration(F_K, L, L)
    _, pf = _standard(P.boundary)
    dg = diagrams_from_pairs(P, [(P.dims[b], b, d) for b, d in pf], max(p, P.top_dim))
    return dg[p] if p < len(dg) else PersistenceDiagram(p)


def betti_numbers(F: Filtration, r) -> list[int]:
    """Betti numbers of the sublevel complex at ``r``."""
    return [d.betti_at(r) for d in diagrams(F)]


@dataclass(frozen=True)
class DiagramNorms:
    zero_norm: int
    one_norm: Fraction
    cutoff: Fraction


def norms(D: PersistenceDiagram, C) -> DiagramNorms:
    C = Fraction(C)
    vals = D.finite_values()
    if vals and C <= max(vals):
        raise ValueError(f"cutoff {C} does not exceed the largest diagram value {max(vals)}")
    return DiagramNorms(len(D), sum((p.persistence(C) for p in D), Fraction(0)), C)


def _finite_points(D: PersistenceDiagram, C):
    out = []
    for p in D:
        if p.death is None:
            if C is None:
                raise ValueError("diagram has essential points; pass a cutoff")
            out.append((p.birth, Fraction(C)))
        else:
            out.append((p.birth, p.death))
    return out


def _perfect_matching(adj: list[list[int]], n_right: int) -> bool:
    match_r = [-1] * n_right

    def augment(u, seen):
        for v in adj[u]:
            if not seen[v]:
                seen[v] = True
                if match_r[v] < 0 or augment(match_r[v], seen):
                    match_r[v] = u
                    return True
        return False

    for u in range(len(adj)):
        if not augment(u, [False] * n_right):
            return False
    return True


def bottleneck_distance(D1: PersistenceDiagram, D2: PersistenceDiagram, cutoff=None) -> Fraction:
    """Bottleneck distance with essential deaths replaced by ``cutoff``."""
    A = _finite_points(D1, cutoff)
    B = _finite_points(D2, cutoff)
    if not A and not B:
        return Fraction(0)

    def linf(a, b):
        return max(abs(a[0] - b[0]), abs(a[1] - b[1]))

    half = [(p[1] - p[0]) / 2 for p in A], [(p[1] - p[0]) / 2 for p in B]
    cands = {Fraction(0)}
    cands.update(half[0])
    cands.update(half[1])
    for a in A:
        for b in B:
            cands.add(linf(a, b))
    cands = sorted(cands)
    na, nb = len(A), len(B)

    def feasible(delta) -> bool:
        # left: A then diagonal copies of B; right: B then diagonal copies of A
        adj = []
        for i, a in enumerate(A):
            row = [j for j, b in enumerate(B) if linf(a, b) <= delta]
            if half[0][i] <= delta:
                row.append(nb + i)
            adj.append(row)
        for j in range(nb):
            row = [j] if half[1][j] <= delta else []
            row.extend(nb + i for i in range(na))
            adj.append(row)
        return _perfect_matching(adj, nb + na)

    lo, hi = 0, len(cands) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if feasible(cands[mid]):
            hi = mid
        else:
            lo = mid + 1
    return cands[lo]
