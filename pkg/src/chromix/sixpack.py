"""6-packs of chromatic pairs and triples, and checks of their relations."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .core import ChromaticPointSet, Filtration, PersistenceDiagram, SimplicialComplex
from .mosaic import chromatic_delaunay, k_chromatic_subcomplex, subcomplex_by_colors
from .oracle import DEFAULT_MAX_SIMPLICES, RankOracle
from .persistence import MODULES, FilteredPair, diagrams_from_pairs, module_pairs, norms
from .radius import radius_function


@dataclass
class SixPack:
    """The six diagram families of ``L ⊆ K`` (optionally ``(L, M) ⊆ (K, M)``)."""

    diagrams: dict[str, list[PersistenceDiagram]]
    cutoff: Fraction
    filtration: Filtration
    L: SimplicialComplex
    M: SimplicialComplex | None = None
    provenance: dict = field(default_factory=dict)

    def __getitem__(self, label: str) -> list[PersistenceDiagram]:
        return self.diagrams[label]

    @property
    def top_dim(self) -> int:
        return len(self.diagrams["codomain"]) - 1

    def dgm(self, label: str, p: int) -> PersistenceDiagram:
        fam = self.diagrams[label]
        return fam[p] if 0 <= p < len(fam) else PersistenceDiagram(p)

    def one_norm(self, label: str, p: int) -> Fraction:
        return norms(self.dgm(label, p), self.cutoff).one_norm

    def pair(self) -> FilteredPair:
        return FilteredPair.from_filtration(self.filtration, self.L, self.M)


def pack_from_filtration(F: Filtration, L, M=None, cutoff=None, provenance: dict | None = None) -> SixPack:
    L = L if isinstance(L, SimplicialComplex) else SimplicialComplex(L)
    if M is not None and not isinstance(M, SimplicialComplex):
        M = SimplicialComplex(M)
    P = FilteredPair.from_filtration(F, L, M)
    pairs = module_pairs(P)
    top = max(F.complex.dim, 0)
    dg = {m: diagrams_from_pairs(P, pairs[m], top) for m in MODULES}
    C = F.default_cutoff() if cutoff is None else Fraction(cutoff)
    if C <= F.max_value():
        raise ValueError(f"cutoff {C} must exceed the largest filtration value {F.max_value()}")
    return SixPack(dg, C, F, L, M, dict(provenance or {}))


def select_subcomplex(chi: ChromaticPointSet, K: SimplicialComplex, selector) -> SimplicialComplex:
    """Resolve a selector: a subcomplex, an int k (k-chromatic level), a colour
    collection, or a string ``"0,2"`` / ``"k=2"``."""
    if isinstance(selector, SimplicialComplex):
        if not selector.is_closed() or not selector.is_subcomplex_of(K):
            raise ValueError("selector is not a subcomplex of the mosaic")
        return selector
    if isinstance(selector, str):
        text = selector.strip()
        if text.startswith("k="):
            return k_chromatic_subcomplex(K, chi, int(text[2:]))
        selector = [int(t) for t in text.split(",") if t.strip()]
    if isinstance(selector, int):
        return k_chromatic_subcomplex(K, chi, selector)
    tau = set(selector)
    bad = [c for c in tau if not 0 <= c < chi.n_colors]
    if bad:
        raise ValueError(f"unknown colours {sorted(bad)}")
    return subcomplex_by_colors(K, chi, tau)


def six_pack(chi: ChromaticPointSet, selector, K: SimplicialComplex | None = None,
             F: Filtration | None = None, cutoff=None) -> SixPack:
    """6-pack of ``L ⊆ Del(chi)`` on the radius filtration."""
    K = chromatic_delaunay(chi) if K is None else K
    F = radius_function(chi, K) if F is None else F
    L = select_subcomplex(chi, K, selector)
    return pack_from_filtration(F, L, cutoff=cutoff, provenance={"selector": _describe(selector)})


def _describe(selector) -> str:
    if isinstance(selector, SimplicialComplex):
        return f"explicit subcomplex ({len(selector)} simplices)"
    if isinstance(selector, int):
        return f"k={selector}"
    if isinstance(selector, str):
        return selector
    return "colors " + ",".join(str(c) for c in sorted(selector))


# -- norm relations --------------------------------------------------------

def verify_norm_relations(pack: SixPack, p: int) -> tuple[Fraction, Fraction, Fraction]:
    """Residuals of the three norm relations in degree ``p`` (all zero when they hold)."""
    n = pack.one_norm
    r1 = n("domain", p) - n("kernel", p) - n("image", p)
    r2 = n("codomain", p) - n("image", p) - n("cokernel", p)
    r3 = n("relative", p) - n("cokernel", p) - (n("kernel", p - 1) if p > 0 else 0)
    return r1, r2, r3


def alternating_sum_residual(pack: SixPack) -> Fraction:
    total = Fraction(0)
    for p in range(pack.top_dim + 1):
        term = pack.one_norm("domain", p) - pack.one_norm("codomain", p) + pack.one_norm("relative", p)
        total += term if p % 2 == 0 else -term
    return total


# -- rank identities ---------------------------------------------------------

@dataclass
class RankReport:
    steps: int
    checks: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


FORBIDDEN = (-1, 0, 1)


def verify_rank_identities(F: Filtration, L, M=None,
                           max_simplices: int | None = DEFAULT_MAX_SIMPLICES) -> RankReport:
    """Exactness identities, Euler sums and excluded rank-change patterns at
    every single-simplex step, with all ranks taken from the oracle."""
    oracle = RankOracle(FilteredPair.from_filtration(F, L, M), max_simplices)
    n, top = oracle.n, oracle.top
    b = {(m, p): oracle.betti_series(m, p) for m in MODULES for p in range(top + 1)}

    def get(m, p, i):
        return b[(m, p)][i] if 0 <= p <= top else 0

    rep = RankReport(n)
    for i in range(n + 1):
        euler = 0
        for p in range(top + 1):
            ker, im, cok = get("kernel", p, i), get("image", p, i), get("cokernel", p, i)
            dom, cod, rel = get("domain", p, i), get("codomain", p, i), get("relative", p, i)
            kerm = get("kernel", p - 1, i)
            for name, lhs, rhs in (("domain = kernel + image", dom, ker + im),
                                   ("codomain = image + cokernel", cod, im + cok),
                                   ("relative = cokernel + kernel[p-1]", rel, cok + kerm)):
                rep.checks += 1
                if lhs != rhs:
                    rep.failures.append(f"step {i}, p={p}: {name}: {lhs} != {rhs}")
            euler += (dom - cod + rel) * (1 if p % 2 == 0 else -1)
        rep.checks += 1
        if euler:
            rep.failures.append(f"step {i}: alternating rank sum is {euler}")
        if i == 0:
            continue
        for p in range(top + 1):
            triples = ((("kernel", p), ("domain", p), ("image", p)),
                       (("image", p), ("codomain", p), ("cokernel", p)),
                       (("cokernel", p), ("relative", p), ("kernel", p - 1)))
            for trip in triples:
                delta = tuple(get(m, q, i) - get(m, q, i - 1) for m, q in trip)
                rep.checks += 1
                if delta == FORBIDDEN:
                    rep.failures.append(f"step {i}: forbidden pattern for {trip}")
    return rep


def step_betti(pack: SixPack, label: str, p: int) -> list[int]:
    """Rank of ``label`` in degree ``p`` after each step, from the fast pairs."""
    P = pack.pair()
    pairs = module_pairs(P)[label]
    n = len(P)
    diff = [0] * (n + 2)
    for q, b, d in pairs:
        if q != p:
            continue
        diff[b + 1] += 1
        if d is not None:
            diff[d + 1] -= 1
    out, run = [], 0
    for i in range(n + 1):
        run += diff[i]
        out.append(run)
    return out


# -- triples -----------------------------------------------------------------

SHARED = {
    "f_K": (("L⊆K", "codomain"), ("M⊆K", "codomain")),
    "f_L": (("L⊆K", "domain"), ("M⊆L", "codomain")),
    "f_M": (("M⊆K", "domain"), ("M⊆L", "domain")),
    "f_KL": (("L⊆K", "relative"), ("(L,M)⊆(K,M)", "relative")),
    "f_KM": (("M⊆K", "relative"), ("(L,M)⊆(K,M)", "codomain")),
    "f_LM": (("M⊆L", "relative"), ("(L,M)⊆(K,M)", "domain")),
}


@dataclass
class TripleReport:
    packs: dict[str, SixPack]
    shared: dict[str, list[PersistenceDiagram]]
    cross_reference: dict[str, tuple[tuple[str, str], ...]]
    shared_consistent: bool
    inequality_failures: list[str]

    @property
    def ok(self) -> bool:
        return self.shared_consistent and not self.inequality_failures

    def unique_diagrams(self) -> dict[str, list[PersistenceDiagram]]:
        """The eighteen unique diagram families, keyed ``pack/module`` or by shared name."""
        shared_slots = {slot for refs in self.cross_reference.values() for slot in refs}
        out = dict(self.shared)
        for key, pack in self.packs.items():
            for m in MODULES:
                if (key, m) not in shared_slots:
                    out[f"{key}/{m}"] = pack[m]
        return out


def _signature(fam: list[PersistenceDiagram]):
    return [tuple((pt.birth, pt.death, pt.birth_simplex, pt.death_simplex) for pt in d) for d in fam]


def triple_packs(F: Filtration, L: SimplicialComplex, M: SimplicialComplex, cutoff=None) -> dict[str, SixPack]:
    C = F.default_cutoff() if cutoff is None else Fraction(cutoff)
    FL = F.restrict(L)
    return {
        "L⊆K": pack_from_filtration(F, L, cutoff=C),
        "M⊆K": pack_from_filtration(F, M, cutoff=C),
        "M⊆L": pack_from_filtration(FL, M, cutoff=C),
        "(L,M)⊆(K,M)": pack_from_filtration(F, L, M, cutoff=C),
    }


def _pad(fam, top):
    return list(fam) + [PersistenceDiagram(p) for p in range(len(fam), top + 1)]


def triple_analysis(chi: ChromaticPointSet, K: SimplicialComplex | None = None, F: Filtration | None = None,
                    L=None, M=None, cutoff=None, check_ranks: bool = True) -> TripleReport:
    """Four 6-packs of ``M ⊆ L ⊆ K`` with shared-diagram dedup and the two
    nested rank inequalities checked at every step of ``K``."""
    if (L is None or M is None) and chi.n_colors != 3:
        raise ValueError("default selectors need exactly 3 colours")
    K = chromatic_delaunay(chi) if K is None else K
    F = radius_function(chi, K) if F is None else F
    L = select_subcomplex(chi, K, 2 if L is None else L)
    M = select_subcomplex(chi, K, 1 if M is None else M)
    if not M.is_subcomplex_of(L):
        raise ValueError("M must be a subcomplex of L")
    packs = triple_packs(F, L, M, cutoff)
    top = max(F.complex.dim, 0)
    shared = {}
    consistent = True
    for name, refs in SHARED.items():
        fams = [_pad(packs[k][m], top) for k, m in refs]
        shared[name] = fams[0]
        if any(_signature(f) != _signature(fams[0]) for f in fams[1:]):
            consistent = False
    failures = nested_rank_inequalities(F, L, M) if check_ranks else []
    return TripleReport(packs, shared, dict(SHARED), consistent, failures)


def nested_rank_inequalities(F: Filtration, L: SimplicialComplex, M: SimplicialComplex,
                             max_simplices: int | None = None) -> list[str]:
    """``ker(M->L) <= ker(M->K)`` and ``im(M->K) <= im(L->K)`` at every step of ``K``."""
    o_MK = RankOracle(FilteredPair.from_filtration(F, M), max_simplices)
    o_LK = RankOracle(FilteredPair.from_filtration(F, L), max_simplices)
    FL = F.restrict(L)
    o_ML = RankOracle(FilteredPair.from_filtration(FL, M), max_simplices)
    # step i of K corresponds to step cnt[i] of L
    cnt = [0]
    for s in F.order:
        cnt.append(cnt[-1] + (s in L))
    failures = []
    for p in range(o_MK.top + 1):
        k_ml = o_ML.betti_series("kernel", p)
        k_mk = o_MK.betti_series("kernel", p)
        i_mk = o_MK.betti_series("image", p)
        i_lk = o_LK.betti_series("image", p)
        for i in range(len(F) + 1):
            a = k_ml[cnt[i]] if p <= o_ML.top else 0
            if a > k_mk[i]:
                failures.append(f"step {i}, p={p}: ker(M->L)={a} > ker(M->K)={k_mk[i]}")
            if i_mk[i] > i_lk[i]:
                failures.append(f"step {i}, p={p}: im(M->K)={i_mk[i]} > im(L->K)={i_lk[i]}")
    return failures


# -- mingling patterns -------------------------------------------------------

CASES = ("1+0", "2+0", "3+0", "1+1", "2+1", "1+2")


def mingling_patterns(chi: ChromaticPointSet, K: SimplicialComplex | None = None,
                      F: Filtration | None = None, cutoff=None) -> dict[str, list[PersistenceDiagram]]:
    """The six case diagrams for a 3-coloured set, with M, L the 1- and 2-chromatic subcomplexes."""
    if chi.n_colors != 3:
        raise ValueError(f"mingling patterns need exactly 3 colours, got {chi.n_colors}")
    K = chromatic_delaunay(chi) if K is None else K
    F = radius_function(chi, K) if F is None else F
    L = k_chromatic_subcomplex(K, chi, 2)
    M = k_chromatic_subcomplex(K, chi, 1)
    packs = triple_packs(F, L, M, cutoff)
    return cases_from_packs(packs)


def cases_from_packs(packs: dict[str, SixPack]) -> dict[str, list[PersistenceDiagram]]:
    return {
        "1+0": packs["M⊆K"]["domain"],
        "2+0": packs["M⊆L"]["cokernel"],
        "3+0": packs["L⊆K"]["cokernel"],
        "1+1": packs["M⊆L"]["kernel"],
        "2+1": packs["(L,M)⊆(K,M)"]["kernel"],
        "1+2": packs["(L,M)⊆(K,M)"]["cokernel"],
    }


def persistence_gap(D: PersistenceDiagram, cutoff) -> tuple[Fraction, Fraction, Fraction | None]:
    """Top persistence, second persistence and their ratio (None when the second is 0)."""
    pers = sorted((pt.persistence(Fraction(cutoff)) for pt in D), reverse=True)
    top = pers[0] if pers else Fraction(0)
    second = pers[1] if len(pers) > 1 else Fraction(0)
    return top, second, (top / second if second else None)
