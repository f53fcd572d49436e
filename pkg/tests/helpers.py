"""Seeded instance builders shared by the test modules."""
from __future__ import annotations

import random
from fractions import Fraction

from chromix import ChromaticPointSet, Filtration, SimplicialComplex
from chromix.core import faces_of, facets_of

EX1 = ChromaticPointSet.from_coords([(0,), (1,), (2,)], [0, 1, 0])


def random_chromatic(seed: int, n: int, n_colors: int, dim: int = 2, grid: int = 1000) -> ChromaticPointSet:
    """Points on a rational grid with every colour present."""
    rng = random.Random(seed)
    pts = set()
    while len(pts) < n:
        pts.add(tuple(Fraction(rng.randint(0, grid), grid) for _ in range(dim)))
    colors = list(range(n_colors)) + [rng.randrange(n_colors) for _ in range(n - n_colors)]
    rng.shuffle(colors)
    return ChromaticPointSet.from_coords(sorted(pts), colors)


def closure(gens) -> SimplicialComplex:
    return SimplicialComplex(gens)


def random_filtration(rng: random.Random, max_simplices: int = 60, n_vertices: int = 7,
                      max_dim: int = 3, levels: int = 6) -> Filtration:
    """Random monotone filtration on a random complex with at most ``max_simplices``
    simplices; values are drawn from a small set so ties are common."""
    while True:
        gens = []
        for _ in range(rng.randint(2, 9)):
            k = rng.randint(1, max_dim + 1)
            gens.append(tuple(sorted(rng.sample(range(n_vertices), min(k, n_vertices)))))
        K = SimplicialComplex(gens)
        if len(K) <= max_simplices:
            break
    values: dict = {}
    for s in sorted(K.simplices, key=len):
        v = Fraction(rng.randint(0, levels), 2)
        for f in facets_of(s):
            v = max(v, values[f])
        values[s] = v
    return Filtration(values)


def random_subcomplex(rng: random.Random, K: SimplicialComplex, p: float = 0.4) -> SimplicialComplex:
    gens = [s for s in K.simplices if rng.random() < p]
    return SimplicialComplex(gens)


def random_pair(seed: int, max_simplices: int = 60, with_M: bool = False):
    rng = random.Random(seed)
    F = random_filtration(rng, max_simplices)
    L = random_subcomplex(rng, F.complex)
    M = random_subcomplex(rng, L, 0.5) if with_M else None
    return F, L, M


def subfaces(s):
    return [f for f in faces_of(s) if f != s]
