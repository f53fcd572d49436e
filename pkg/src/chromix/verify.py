"""Verification checks shared by the CLI and the test-suite."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .core import ChromaticPointSet, Filtration, SimplicialComplex, facets_of
from .mosaic import chromatic_delaunay
from .oracle import DEFAULT_MAX_SIMPLICES, oracle_diagrams
from .persistence import MODULES, bottleneck_distance, diagrams
from .radius import radius_function, radius_oracle
from .sixpack import (
    alternating_sum_residual,
    pack_from_filtration,
    verify_norm_relations,
    verify_rank_identities,
)


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class VerificationReport:
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks.append(CheckResult(name, bool(ok), detail))

    def lines(self) -> list[str]:
        return [f"{'PASS' if c.ok else 'FAIL'}  {c.name}" + (f"  [{c.detail}]" if c.detail else "")
                for c in self.checks]


def perturb_filtration(F: Filtration, eps, rng: random.Random, denominator: int = 1000) -> Filtration:
    """Add rational noise in ``[-eps, eps]`` to each value, then restore
    monotonicity by taking the max over faces (which never moves a value by
    more than ``eps`` away from the original)."""
    eps = Fraction(eps)
    new: dict = {}
    for s in sorted(F.values, key=len):
        noise = eps * Fraction(rng.randint(-denominator, denominator), denominator)
        v = F.values[s] + noise
        for f in facets_of(s):
            v = max(v, new[f])
        new[s] = v
    return Filtration(new)


def check_stability(F: Filtration, eps, trials: int = 1, seed: int = 0) -> list[tuple[int, int, Fraction, Fraction]]:
    """Violations ``(trial, degree, distance, actual eps)`` of the stability bound."""
    rng = random.Random(seed)
    bad = []
    base = diagrams(F)
    for t in range(trials):
        G = perturb_filtration(F, eps, rng)
        actual = max(abs(G.values[s] - F.values[s]) for s in F.values)
        C = 2 * max(F.max_value(), G.max_value(), Fraction(1, 2))
        other = diagrams(G)
        for p, (a, b) in enumerate(zip(base, other)):
            dist = bottleneck_distance(a, b, C)
            if dist > actual:
                bad.append((t, p, dist, actual))
    return bad


def betti_mismatches(chi: ChromaticPointSet, F: Filtration | None = None) -> list[str]:
    """Critical values where the chromatic and uncoloured alpha complexes
    have different Betti numbers."""
    if F is None:
        F = radius_function(chi, chromatic_delaunay(chi))
    mono = chi.monochrome()
    G = radius_function(mono, chromatic_delaunay(mono))
    dc, dm = diagrams(F), diagrams(G)
    out = []
    for r in sorted(set(F.critical_values) | set(G.critical_values)):
        bc = [d.betti_at(r) for d in dc]
        bm = [d.betti_at(r) for d in dm]
        width = max(len(bc), len(bm))
        bc += [0] * (width - len(bc))
        bm += [0] * (width - len(bm))
        if bc != bm:
            out.append(f"r={r}: chromatic {bc} vs uncoloured {bm}")
    return out


def radius_oracle_mismatches(chi: ChromaticPointSet, K: SimplicialComplex, F: Filtration) -> list[str]:
    out = []
    for s in sorted(K.simplices, key=lambda t: (len(t), t)):
        o = radius_oracle(chi, s)
        if o != F.values[s]:
            out.append(f"{s}: algorithm {F.values[s]} vs oracle {o}")
    return out


def six_oracle_mismatches(F: Filtration, L, M=None, max_simplices: int | None = DEFAULT_MAX_SIMPLICES) -> list[str]:
    fast = pack_from_filtration(F, L, M)
    slow = oracle_diagrams(F, L, M, max_simplices)
    out = []
    for m in MODULES:
        a = [d.multiset() for d in fast[m]]
        b = [d.multiset() for d in slow[m]]
        if a != b:
            out.append(f"{m}: fast {a} vs oracle {b}")
    return out


def run_checks(chi: ChromaticPointSet, F: Filtration, L: SimplicialComplex, K: SimplicialComplex | None = None,
               oracle: bool = True, max_simplices: int = DEFAULT_MAX_SIMPLICES,
               stability_eps=Fraction(1, 100), seed: int = 0) -> VerificationReport:
    """Full verification of one pair: monotonicity, norm relations, rank
    identities, oracle equivalence, stability and Betti equality."""
    rep = VerificationReport()
    bad = F.monotonicity_violations()
    rep.add("filtration monotone", not bad, f"{len(bad)} violations" if bad else f"{len(F)} simplices")
    if bad:
        return rep
    pack = pack_from_filtration(F, L)
    res = {p: verify_norm_relations(pack, p) for p in range(pack.top_dim + 1)}
    nz = {p: r for p, r in res.items() if any(r)}
    rep.add("norm relations", not nz, "all residuals 0" if not nz else f"residuals {nz}")
    alt = alternating_sum_residual(pack)
    rep.add("alternating norm sum", alt == 0, f"residual {alt}")
    if oracle:
        if len(F) > max_simplices:
            raise ValueError(f"{len(F)} simplices exceed the oracle size guard of {max_simplices}")
        rr = verify_rank_identities(F, L, max_simplices=max_simplices)
        rep.add("rank identities and excluded patterns", rr.ok,
                f"{rr.checks} checks" if rr.ok else "; ".join(rr.failures[:3]))
        mm = six_oracle_mismatches(F, L, max_simplices=max_simplices)
        rep.add("six-module oracle equivalence", not mm, "; ".join(mm[:2]))
        if K is not None:
            rm = radius_oracle_mismatches(chi, K, F)
            rep.add("radius oracle equivalence", not rm, "; ".join(rm[:3]))
    st = check_stability(F, stability_eps, trials=3, seed=seed)
    rep.add("stability", not st, f"eps={stability_eps}" if not st else f"{st[:2]}")
    bm = betti_mismatches(chi, F)
    rep.add("Betti equality with uncoloured alpha complex", not bm, "; ".join(bm[:3]))
    return rep
