"""Command-line interface: ``chromix <command> ...``.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 genericity
violation.
"""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from .core import Filtration, GenericityError
from .generate import PATTERNS, generate
from .io import DEFAULT_SCALE_EXP, InputError, emit, jitter, points_csv, read_points
from .mosaic import chromatic_delaunay
from .oracle import DEFAULT_MAX_SIMPLICES
from .persistence import MODULES, norms
from .radius import radius_function
from .sixpack import (
    CASES,
    cases_from_packs,
    pack_from_filtration,
    persistence_gap,
    select_subcomplex,
    triple_analysis,
    verify_rank_identities,
)
from .verify import VerificationReport, radius_oracle_mismatches, run_checks, six_oracle_mismatches

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_GENERICITY = 0, 1, 2, 3
PACK_FILES = {"L⊆K": "L_in_K", "M⊆K": "M_in_K", "M⊆L": "M_in_L", "(L,M)⊆(K,M)": "LM_in_KM"}
CASE_LAYOUT = (("1+0", "2+0", "3+0"), ("1+1", "2+1", "1+2"))


def _value(text: str):
    for conv in (int, float):
        try:
            return conv(text)
        except ValueError:
            pass
    return text


def _params(items) -> dict:
    out = {}
    for item in items or ():
        if "=" not in item:
            raise InputError(f"parameter {item!r} is not KEY=VALUE")
        k, v = item.split("=", 1)
        out[k.strip().replace("-", "_")] = _value(v.strip())
    return out


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("input", nargs="?", help="CSV file with rows x_1,...,x_d,color")
    p.add_argument("--gen", metavar="PATTERN", choices=PATTERNS, help="use a generated point set instead of a file")
    p.add_argument("--param", action="append", metavar="KEY=VALUE", help="generator parameter (repeatable)")
    p.add_argument("--dim", type=int, help="ambient dimension (default: inferred from the first row)")
    p.add_argument("--scale-exp", type=int, default=DEFAULT_SCALE_EXP,
                   help="coordinates are snapped to multiples of 10**-SCALE_EXP")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jitter", type=Fraction, metavar="EPS", help="perturb coordinates by at most EPS (seeded)")


def _add_output(p: argparse.ArgumentParser, default_prefix: str) -> None:
    p.add_argument("--format", default="json", help="comma-separated subset of json,csv,svg")
    p.add_argument("--out", default=default_prefix, help="output path prefix")
    p.add_argument("--cutoff", default="auto", help="'auto' or a rational larger than every value")


def _load(args):
    if args.gen:
        chi = generate(args.gen, seed=args.seed, **_params(args.param))
        mapping = {c: c for c in range(chi.n_colors)}
    elif args.input:
        chi, mapping = read_points(args.input, args.dim, args.scale_exp)
    else:
        raise InputError("give an input CSV or --gen PATTERN")
    if args.jitter:
        chi = jitter(chi, args.jitter, args.seed, args.scale_exp)
    return chi, mapping


def _cutoff(args, F: Filtration):
    if args.cutoff == "auto":
        return None
    try:
        C = Fraction(args.cutoff)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"cutoff {args.cutoff!r} is not a rational") from None
    return C


def _formats(args) -> list[str]:
    fmts = [f.strip() for f in args.format.split(",") if f.strip()]
    bad = [f for f in fmts if f not in ("json", "csv", "svg")]
    if bad:
        raise InputError(f"unknown output formats {bad}")
    return fmts


def _summary(families, C) -> list[str]:
    lines = []
    for label, fam in families.items():
        cells = []
        for d in fam:
            if len(d):
                nm = norms(d, C)
                cells.append(f"H{d.dim}: {nm.zero_norm} pts, 1-norm {float(nm.one_norm):.6g}")
        lines.append(f"{label:>28}: " + ("; ".join(cells) if cells else "empty"))
    return lines


def cmd_compute(args) -> int:
    chi, mapping = _load(args)
    K = chromatic_delaunay(chi)
    F = radius_function(chi, K)
    L = select_subcomplex(chi, K, args.sub)
    pack = pack_from_filtration(F, L, cutoff=_cutoff(args, F), provenance={"selector": args.sub})
    meta = {"command": "compute", "n_points": len(chi), "dim": chi.dim, "n_colors": chi.n_colors,
            "color_mapping": {str(k): v for k, v in mapping.items()}, "selector": args.sub,
            "cutoff": str(pack.cutoff), "n_simplices": len(F), "seed": args.seed}
    fams = {m: pack[m] for m in MODULES}
    for path in emit(fams, _formats(args), args.out, pack.cutoff, meta):
        print(f"wrote {path}")
    print("\n".join(_summary(fams, pack.cutoff)))
    return EXIT_OK


def cmd_triple(args) -> int:
    chi, mapping = _load(args)
    K = chromatic_delaunay(chi)
    F = radius_function(chi, K)
    rep = triple_analysis(chi, K, F, L=args.sub_L, M=args.sub_M, cutoff=_cutoff(args, F),
                          check_ranks=len(F) <= args.max_oracle_simplices)
    C = next(iter(rep.packs.values())).cutoff
    meta = {"command": "triple", "n_points": len(chi), "dim": chi.dim, "n_colors": chi.n_colors,
            "color_mapping": {str(k): v for k, v in mapping.items()}, "L": args.sub_L, "M": args.sub_M,
            "cutoff": str(C), "cross_reference": {k: [list(r) for r in v] for k, v in rep.cross_reference.items()},
            "seed": args.seed}
    fmts = _formats(args)
    flat = [f for f in fmts if f != "svg"]
    for path in emit(rep.unique_diagrams(), flat, args.out, C, meta):
        print(f"wrote {path}")
    if "svg" in fmts:
        for key, pack in rep.packs.items():
            out = Path(args.out)
            for path in emit({m: pack[m] for m in MODULES}, ["svg"], out.with_name(f"{out.name}-{PACK_FILES[key]}"), C):
                print(f"wrote {path}")
    print(f"shared diagrams consistent: {rep.shared_consistent}")
    if len(F) <= args.max_oracle_simplices:
        print(f"nested rank inequalities: {'ok' if not rep.inequality_failures else rep.inequality_failures[:3]}")
    else:
        print("nested rank inequalities: skipped (above the oracle size guard)")
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_patterns(args) -> int:
    chi, mapping = _load(args)
    if chi.n_colors != 3:
        raise InputError(f"patterns need exactly 3 colours, got {chi.n_colors}")
    rep = triple_analysis(chi, cutoff=None if args.cutoff == "auto" else Fraction(args.cutoff), check_ranks=False)
    cases = cases_from_packs(rep.packs)
    C = next(iter(rep.packs.values())).cutoff
    meta = {"command": "patterns", "n_points": len(chi), "cutoff": str(C), "seed": args.seed,
            "color_mapping": {str(k): v for k, v in mapping.items()}}
    for path in emit(cases, _formats(args), args.out, C, meta, CASE_LAYOUT):
        print(f"wrote {path}")
    for case in CASES:
        for d in cases[case]:
            if len(d):
                top, second, ratio = persistence_gap(d, C)
                r = "inf" if ratio is None else f"{float(ratio):.4g}"
                print(f"case {case} H{d.dim}: {len(d)} pts, top {float(top):.6g}, gap ratio {r}")
    return EXIT_OK


def cmd_generate(args) -> int:
    chi = generate(args.pattern, seed=args.seed, **_params(args.param))
    text = points_csv(chi)
    if args.out in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text)
        print(f"wrote {args.out} ({len(chi)} points, {chi.n_colors} colours)")
    return EXIT_OK


def _corrupt(F: Filtration) -> Filtration:
    # raise one vertex above every value so a face exceeds its coface
    vals = dict(F.values)
    v = next(s for s in F.order if len(s) == 1)
    vals[v] = F.max_value() + 1
    return Filtration(vals, validate=False)


def cmd_verify(args) -> int:
    chi, _ = _load(args)
    K = chromatic_delaunay(chi)
    F = radius_function(chi, K)
    if args.corrupt:
        F = _corrupt(F)
    L = select_subcomplex(chi, K, args.sub)
    rep = run_checks(chi, F, L, K, oracle=not args.no_oracle, max_simplices=args.max_oracle_simplices,
                     seed=args.seed)
    print("\n".join(rep.lines()))
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_oracle_check(args) -> int:
    chi, _ = _load(args)
    K = chromatic_delaunay(chi)
    if len(K) > args.max_oracle_simplices:
        raise InputError(f"{len(K)} simplices exceed the oracle size guard of {args.max_oracle_simplices}")
    F = radius_function(chi, K)
    L = select_subcomplex(chi, K, args.sub)
    rep = VerificationReport()
    rm = radius_oracle_mismatches(chi, K, F)
    rep.add("radius oracle equivalence", not rm, "; ".join(rm[:3]) or f"{len(K)} simplices")
    mm = six_oracle_mismatches(F, L, max_simplices=args.max_oracle_simplices)
    rep.add("six-module oracle equivalence", not mm, "; ".join(mm[:2]))
    rr = verify_rank_identities(F, L, max_simplices=args.max_oracle_simplices)
    rep.add("rank identities", rr.ok, "; ".join(rr.failures[:3]) or f"{rr.checks} checks")
    print("\n".join(rep.lines()))
    return EXIT_OK if rep.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="chromix", description="Chromatic Delaunay mosaics and 6-packs.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="6-pack of a pair L ⊆ K")
    _add_input(p)
    _add_output(p, "sixpack")
    p.add_argument("--sub", default="0", help="L selector: colours '0,2' or level 'k=2' (default: 0)")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("triple", help="four 6-packs of M ⊆ L ⊆ K")
    _add_input(p)
    _add_output(p, "triple")
    p.add_argument("--sub-L", default="k=2", help="L selector (default k=2)")
    p.add_argument("--sub-M", default="k=1", help="M selector (default k=1)")
    p.add_argument("--max-oracle-simplices", type=int, default=DEFAULT_MAX_SIMPLICES)
    p.set_defaults(func=cmd_triple)

    p = sub.add_parser("patterns", help="the six mingling-case diagrams of a 3-coloured set")
    _add_input(p)
    _add_output(p, "patterns")
    p.set_defaults(func=cmd_patterns)

    p = sub.add_parser("generate", help="write a generated point set as CSV")
    p.add_argument("pattern", choices=PATTERNS)
    p.add_argument("--param", action="append", metavar="KEY=VALUE")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default="-", help="output CSV path ('-' for stdout)")
    p.set_defaults(func=cmd_generate)

    for name, func, text in (("verify", cmd_verify, "run every relation and oracle check"),
                             ("oracle-check", cmd_oracle_check, "compare fast algorithms with brute force")):
        p = sub.add_parser(name, help=text)
        _add_input(p)
        p.add_argument("--sub", default="0", help="L selector (default: 0)")
        p.add_argument("--max-oracle-simplices", type=int, default=DEFAULT_MAX_SIMPLICES)
        if name == "verify":
            p.add_argument("--no-oracle", action="store_true", help="skip the brute-force checks")
            p.add_argument("--corrupt", action="store_true", help=argparse.SUPPRESS)
        p.set_defaults(func=func)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GenericityError as exc:
        print(f"genericity violation: {exc}", file=sys.stderr)
        return EXIT_GENERICITY
    except (InputError, ValueError, OSError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
