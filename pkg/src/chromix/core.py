"""Domain types shared across the package."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from math import lcm
from typing import Callable, Iterable, Iterator, Sequence

Simplex = tuple[int, ...]


class GenericityError(ValueError):
    """Raised when a point set violates the general-position assumption."""

    def __init__(self, report: "GenericityReport"):
        super().__init__(report.message)
        self.report = report


@dataclass(frozen=True)
class ChromaticPointSet:
    """Points in R^d with one colour label in ``0..s`` per point.

    Coordinates are exact rationals. Colours must be dense: every label in
    ``0..s`` occurs at least once.
    """

    points: tuple[tuple[Fraction, ...], ...]
    colors: tuple[int, ...]
    dim: int

    def __post_init__(self):
        if len(self.points) != len(self.colors):
            raise ValueError("points and colors differ in length")
        if self.dim < 1:
            raise ValueError("dimension must be at least 1")
        for i, p in enumerate(self.points):
            if len(p) != self.dim:
                raise ValueError(f"point {i} has {len(p)} coordinates, expected {self.dim}")
        if self.colors:
            present = set(self.colors)
            if min(present) < 0 or present != set(range(max(present) + 1)):
                raise ValueError(f"colour labels must be exactly 0..s, got {sorted(present)}")

    @classmethod
    def from_coords(cls, points: Iterable[Sequence], colors: Iterable[int],
                    dim: int | None = None) -> "ChromaticPointSet":
        pts = tuple(tuple(Fraction(c) for c in p) for p in points)
        if dim is None:
            dim = len(pts[0]) if pts else 1
        return cls(pts, tuple(int(c) for c in colors), dim)

    @classmethod
    def relabeled(cls, points: Iterable[Sequence], labels: Iterable[int],
                  dim: int | None = None) -> tuple["ChromaticPointSet", dict[int, int]]:
        """Build a set from arbitrary non-negative labels, mapped densely in sorted order."""
        labels = [int(c) for c in labels]
        if any(c < 0 for c in labels):
            raise ValueError("colour labels must be non-negative")
        mapping = {c: i for i, c in enumerate(sorted(set(labels)))}
        return cls.from_coords(points, [mapping[c] for c in labels], dim), mapping

    def __len__(self) -> int:
        return len(self.points)

    @property
    def s(self) -> int:
        return max(self.colors) if self.colors else 0

    @property
    def n_colors(self) -> int:
        return self.s + 1

    @cached_property
    def color_classes(self) -> tuple[tuple[int, ...], ...]:
        classes: list[list[int]] = [[] for _ in range(self.n_colors)]
        for i, c in enumerate(self.colors):
            classes[c].append(i)
        return tuple(tuple(c) for c in classes)

    @cached_property
    def scale(self) -> int:
        """Positive integer that turns every coordinate into an integer."""
        out = 1
        for p in self.points:
            for c in p:
                out = lcm(out, c.denominator)
        return out

    @cached_property
    def int_points(self) -> tuple[tuple[int, ...], ...]:
        k = self.scale
        return tuple(tuple(int(c * k) for c in p) for p in self.points)

    def colors_of(self, simplex: Iterable[int]) -> frozenset[int]:
        return frozenset(self.colors[v] for v in simplex)

    def restrict(self, tau: Iterable[int]) -> tuple["ChromaticPointSet", tuple[int, ...]]:
        """Points with colour in ``tau``, densely relabelled; also returns original indices."""
        tau = sorted(set(tau))
        keep = tuple(i for i, c in enumerate(self.colors) if c in tau)
        remap = {c: k for k, c in enumerate(tau)}
        sub = ChromaticPointSet(tuple(self.points[i] for i in keep),
                                tuple(remap[self.colors[i]] for i in keep), self.dim)
        return sub, keep

    def monochrome(self) -> "ChromaticPointSet":
        return ChromaticPointSet(self.points, tuple(0 for _ in self.colors), self.dim)


def faces_of(simplex: Simplex) -> Iterator[Simplex]:
    """All non-empty faces of ``simplex``, including itself."""
    for k in range(1, len(simplex) + 1):
        yield from combinations(simplex, k)


def facets_of(simplex: Simplex) -> list[Simplex]:
    if len(simplex) == 1:
        return []
    return [simplex[:i] + simplex[i + 1:] for i in range(len(simplex))]


def dimension(simplex: Simplex) -> int:
    return len(simplex) - 1


class SimplicialComplex:
    """A face-closed set of simplices given by sorted vertex tuples.

    Only the generating simplices are required; faces are materialized on
    first access to :attr:`simplices`.
    """

    def __init__(self, generators: Iterable[Sequence[int]] = ()):
        self._generators = frozenset(tuple(sorted(g)) for g in generators if len(g))

    @cached_property
    def simplices(self) -> frozenset[Simplex]:
        out: set[Simplex] = set()
        for g in self._generators:
            if g in out:
                continue
            out.update(faces_of(g))
        return frozenset(out)

    @cached_property
    def maximal(self) -> frozenset[Simplex]:
        covered: set[Simplex] = set()
        for s in self.simplices:
            covered.update(facets_of(s))
        return frozenset(self.simplices - covered)

    @property
    def dim(self) -> int:
        return max((len(s) - 1 for s in self._generators), default=-1)

    @cached_property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted({v for s in self._generators for v in s}))

    def __contains__(self, simplex) -> bool:
        return tuple(simplex) in self.simplices

    def __iter__(self) -> Iterator[Simplex]:
        return iter(sorted(self.simplices, key=lambda s: (len(s), s)))

    def __len__(self) -> int:
        return len(self.simplices)

    def __eq__(self, other) -> bool:
        return isinstance(other, SimplicialComplex) and self.simplices == other.simplices

    def __hash__(self):
        return hash(self.simplices)

    def __repr__(self) -> str:
        return f"SimplicialComplex(dim={self.dim}, size={len(self)})"

    def of_dim(self, p: int) -> list[Simplex]:
        return sorted(s for s in self.simplices if len(s) == p + 1)

    def is_closed(self) -> bool:
        simp = self.simplices
        return all(f in simp for s in simp for f in facets_of(s))

    def is_subcomplex_of(self, other: "SimplicialComplex") -> bool:
        return self.simplices <= other.simplices

    def filter(self, keep: Callable[[Simplex], bool]) -> "SimplicialComplex":
        """Subcomplex of simplices satisfying ``keep``; ``keep`` must be face-closed."""
        return SimplicialComplex(s for s in self.simplices if keep(s))

    def relabel(self, mapping: Sequence[int]) -> "SimplicialComplex":
        return SimplicialComplex(tuple(sorted(mapping[v] for v in s)) for s in self._generators)

    def union(self, other: "SimplicialComplex") -> "SimplicialComplex":
        return SimplicialComplex(self._generators | other._generators)

    def skeleton_connected(self) -> bool:
        verts = self.vertices
        if not verts:
            return True
        adj: dict[int, set[int]] = {v: set() for v in verts}
        for s in self.simplices:
            if len(s) == 2:
                adj[s[0]].add(s[1])
                adj[s[1]].add(s[0])
        seen = {verts[0]}
        stack = [verts[0]]
        while stack:
            v = stack.pop()
            for w in adj[v] - seen:
                seen.add(w)
                stack.append(w)
        return len(seen) == len(verts)


def filtration_key(simplex: Simplex, value: Fraction):
    return (value, len(simplex), simplex)


class Filtration:
    """A complex with a value per simplex and the induced total order.

    The order sorts by value, then dimension, then vertex tuple, so faces
    always precede their cofaces when values are monotone.
    """

    def __init__(self, values: dict[Simplex, Fraction], validate: bool = True):
        self.values: dict[Simplex, Fraction] = {tuple(k): Fraction(v) for k, v in values.items()}
        self.complex = SimplicialComplex(self.values)
        if set(self.values) != set(self.complex.simplices):
            raise ValueError("filtration values must cover a face-closed complex")
        self.order: list[Simplex] = sorted(self.values, key=lambda s: filtration_key(s, self.values[s]))
        self.index: dict[Simplex, int] = {s: i for i, s in enumerate(self.order)}
        if validate:
            bad = self.monotonicity_violations()
            if bad:
                raise ValueError(f"filtration is not monotone: {bad[0]}")

    def __len__(self) -> int:
        return len(self.order)

    def monotonicity_violations(self) -> list[tuple[Simplex, Simplex]]:
        out = []
        for s, v in self.values.items():
            for f in facets_of(s):
                if self.values[f] > v:
                    out.append((f, s))
        return out

    def is_monotone(self) -> bool:
        return not self.monotonicity_violations()

    @cached_property
    def critical_values(self) -> list[Fraction]:
        return sorted(set(self.values.values()))

    def max_value(self) -> Fraction:
        return max(self.values.values(), default=Fraction(0))

    def default_cutoff(self) -> Fraction:
        top = self.max_value()
        return Fraction(1) if top == 0 else 2 * top

    def restrict(self, sub: SimplicialComplex) -> "Filtration":
        return Filtration({s: self.values[s] for s in sub.simplices})

    def sublevel(self, r) -> SimplicialComplex:
        return SimplicialComplex(s for s, v in self.values.items() if v <= r)


@dataclass(frozen=True)
class DiagramPoint:
    birth: Fraction
    death: Fraction | None
    birth_simplex: Simplex = ()
    death_simplex: Simplex | None = None

    @property
    def is_essential(self) -> bool:
        return self.death is None

    def persistence(self, cutoff: Fraction | None = None) -> Fraction:
        if self.death is None:
            if cutoff is None:
                raise ValueError("essential point needs a cutoff")
            return cutoff - self.birth
        return self.death - self.birth

    def key(self):
        return (self.birth, self.death)


@dataclass(frozen=True)
class PersistenceDiagram:
    """Points of one homological degree; ``death is None`` encodes infinity."""

    dim: int
    points: tuple[DiagramPoint, ...] = field(default_factory=tuple)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def multiset(self) -> Counter:
        return Counter(p.key() for p in self.points)

    def same_points(self, other: "PersistenceDiagram") -> bool:
        return self.multiset() == other.multiset()

    def finite_values(self) -> list[Fraction]:
        out = []
        for p in self.points:
            out.append(p.birth)
            if p.death is not None:
                out.append(p.death)
        return out

    def sorted_points(self) -> list[DiagramPoint]:
        inf = float("inf")
        return sorted(self.points, key=lambda p: (p.birth, inf if p.death is None else p.death,
                                                  p.birth_simplex))

    def betti_at(self, r) -> int:
        return sum(1 for p in self.points if p.birth <= r and (p.death is None or r < p.death))


@dataclass(frozen=True)
class GenericityReport:
    ok: bool
    subset: tuple[int, ...] = ()
    message: str = "ok"
    exhaustive: bool = False


def validate_genericity(chi: ChromaticPointSet, exhaustive: bool | None = None,
                        max_subsets: int = 100_000) -> GenericityReport:
    """Check that no ``d+s+2`` colour-lifted points are co-spherical.

    Degeneracies of empty spheres (the ones that make the mosaic ambiguous)
    are always detected from the lifted Delaunay triangulation. The full test
    over all ``(d+s+2)``-subsets runs when ``exhaustive`` is true, or by default
    whenever the number of subsets is at most ``max_subsets``.
    """
    from math import comb

    from .mosaic import lifted_points, triangulate

    pts = lifted_points(chi)
    m = len(pts[0]) if pts else 0
    if len(set(pts)) != len(pts):
        seen: dict = {}
        for i, p in enumerate(pts):
            if p in seen:
                return GenericityReport(False, (seen[p], i), f"duplicate points {seen[p]} and {i}")
            seen[p] = i
    tri = triangulate(pts)
    if tri.degenerate:
        sub = tuple(sorted(tri.degenerate[0]))
        return GenericityReport(False, sub, f"points {list(sub)} lie on a common empty sphere")
    if exhaustive is None:
        exhaustive = comb(len(pts), m + 2) <= max_subsets
    if exhaustive:
        bad = cospherical_subset(pts)
        if bad is not None:
            return GenericityReport(False, bad, f"points {list(bad)} lie on a common sphere", True)
    return GenericityReport(True, exhaustive=exhaustive)


def cospherical_subset(pts: Sequence[Sequence[int]]) -> tuple[int, ...] | None:
    """Brute force: first ``m+2`` points (in R^m) lying on a common sphere."""
    from .predicates import det

    if not pts:
        return None
    m = len(pts[0])
    for sub in combinations(range(len(pts)), m + 2):
        q = pts[sub[0]]
        rows = []
        for i in sub[1:]:
            p = pts[i]
            diff = [a - b for a, b in zip(p, q)]
            rows.append(diff + [sum(x * x for x in diff)])
        # zero determinant with affinely independent directions: co-spherical or co-hyperplanar
        if det(rows) == 0 and _rank([r[:-1] for r in rows]) == m:
            return sub
    return None


def _rank(rows: Sequence[Sequence[int]]) -> int:
    m = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][c] != 0:
                f = m[i][c] / m[rank][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank
