"""CSV ingestion and JSON / CSV / SVG emission."""
from __future__ import annotations

import csv
import io as _io
import json
import math
import random
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

from .core import ChromaticPointSet, DiagramPoint, PersistenceDiagram

DEFAULT_SCALE_EXP = 9
TABLE_LAYOUT = (("kernel", "relative", "cokernel"), ("domain", "image", "codomain"))


class InputError(ValueError):
    """Malformed input data."""


def _is_number(text: str) -> bool:
    try:
        Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        return False
    return True


def _snap(value: Fraction, scale_exp: int) -> Fraction:
    grid = 10 ** scale_exp
    return Fraction(round(value * grid), grid)


def read_points(source, dim: int | None = None, scale_exp: int = DEFAULT_SCALE_EXP):
    """Parse ``x_1,...,x_d,color`` rows; returns the point set and the colour relabelling.

    ``source`` is a path or a file-like object. Coordinates are snapped to
    the grid ``10**-scale_exp``; a header row is skipped when its first field
    is not numeric.
    """
    if hasattr(source, "read"):
        text = source.read()
    else:
        try:
            text = Path(source).read_text()
        except OSError as exc:
            raise InputError(f"cannot read {source}: {exc}") from exc
    rows = [(k + 1, r) for k, r in enumerate(csv.reader(_io.StringIO(text)))]
    rows = [(k, [f.strip() for f in r]) for k, r in rows if any(f.strip() for f in r)]
    if rows and not _is_number(rows[0][1][0]):
        rows = rows[1:]
    if not rows:
        raise InputError("no data rows")
    width = len(rows[0][1]) if dim is None else dim + 1
    if width < 2:
        raise InputError("rows need at least one coordinate and a colour")
    pts, labels, seen = [], [], {}
    for k, fields in rows:
        if len(fields) != width:
            raise InputError(f"row {k}: expected {width} fields, got {len(fields)}")
        try:
            coords = tuple(_snap(Fraction(f), scale_exp) for f in fields[:-1])
        except (ValueError, ZeroDivisionError):
            raise InputError(f"row {k}: non-numeric coordinate in {fields[:-1]}") from None
        try:
            color = int(fields[-1])
        except ValueError:
            raise InputError(f"row {k}: colour {fields[-1]!r} is not an integer") from None
        if color < 0:
            raise InputError(f"row {k}: negative colour {color}")
        if coords in seen:
            raise InputError(f"row {k}: duplicate of row {seen[coords]}")
        seen[coords] = k
        pts.append(coords)
        labels.append(color)
    return ChromaticPointSet.relabeled(pts, labels, width - 1)


def ingest(source, dim: int | None = None, scale_exp: int = DEFAULT_SCALE_EXP) -> ChromaticPointSet:
    return read_points(source, dim, scale_exp)[0]


def _decimal(x: Fraction) -> str:
    """Exact decimal string when the denominator allows it, else ``num/den``."""
    d = x.denominator
    while d % 2 == 0 or d % 5 == 0:
        d //= 2 if d % 2 == 0 else 5
    if d != 1:
        return f"{x.numerator}/{x.denominator}"
    digits = 0
    while (x * 10 ** digits).denominator != 1:
        digits += 1
    sign = "-" if x < 0 else ""
    n = abs(x.numerator) * 10 ** digits // x.denominator
    if digits == 0:
        return f"{sign}{n}"
    s = str(n).rjust(digits + 1, "0")
    return f"{sign}{s[:-digits]}.{s[-digits:]}"


def points_csv(chi: ChromaticPointSet) -> str:
    out = _io.StringIO()
    w = csv.writer(out, lineterminator="\n")
    w.writerow([f"x{i + 1}" for i in range(chi.dim)] + ["color"])
    for p, c in zip(chi.points, chi.colors):
        w.writerow([_decimal(x) for x in p] + [c])
    return out.getvalue()


def jitter(chi: ChromaticPointSet, magnitude, seed: int = 0, scale_exp: int = DEFAULT_SCALE_EXP) -> ChromaticPointSet:
    """Deterministic uniform perturbation of every coordinate by at most ``magnitude``."""
    rng = random.Random(seed)
    mag = Fraction(magnitude)
    grid = 10 ** scale_exp
    steps = int(mag * grid)
    pts = []
    for p in chi.points:
        pts.append(tuple(c + Fraction(rng.randint(-steps, steps), grid) for c in p))
    return ChromaticPointSet(tuple(pts), chi.colors, chi.dim)


# -- diagrams -----------------------------------------------------------------

def _num(x: Fraction | None):
    return None if x is None else str(x)


def _flt(x: Fraction | None):
    return None if x is None else float(f"{float(x):.17g}")


def _root(x: Fraction | None):
    # values are squared radii
    return None if x is None else float(f"{math.sqrt(x):.17g}")


def _point_json(pt: DiagramPoint) -> dict:
    return {
        "birth": _num(pt.birth),
        "death": _num(pt.death),
        "birth_float": _flt(pt.birth),
        "death_float": _flt(pt.death),
        "birth_radius": _root(pt.birth),
        "death_radius": _root(pt.death),
        "birth_simplex": list(pt.birth_simplex),
        "death_simplex": None if pt.death_simplex is None else list(pt.death_simplex),
    }


def diagrams_json(families: dict[str, Sequence[PersistenceDiagram]], meta: dict | None = None) -> str:
    doc = {
        "meta": dict(meta or {}),
        "diagrams": {
            label: [{"dim": d.dim, "points": [_point_json(p) for p in d.points]} for d in fam]
            for label, fam in families.items()
        },
    }
    return json.dumps(doc, indent=2) + "\n"


def load_diagrams_json(text: str) -> dict[str, list[PersistenceDiagram]]:
    doc = json.loads(text)
    out = {}
    for label, fam in doc["diagrams"].items():
        dgms = []
        for d in fam:
            pts = tuple(DiagramPoint(Fraction(p["birth"]), None if p["death"] is None else Fraction(p["death"]),
                                     tuple(p["birth_simplex"]),
                                     None if p["death_simplex"] is None else tuple(p["death_simplex"]))
                        for p in d["points"])
            dgms.append(PersistenceDiagram(d["dim"], pts))
        out[label] = dgms
    return out


def diagrams_csv(families: dict[str, Sequence[PersistenceDiagram]]) -> str:
    out = _io.StringIO()
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["label", "dim", "birth", "death"])
    for label, fam in families.items():
        for d in fam:
            for p in d.points:
                w.writerow([label, d.dim, str(p.birth), "inf" if p.death is None else str(p.death)])
    return out.getvalue()


_DEGREE_COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")


def diagrams_svg(families: dict[str, Sequence[PersistenceDiagram]], cutoff,
                 layout: Sequence[Sequence[str]] = TABLE_LAYOUT, panel: int = 240) -> str:
    """Grid of square diagram panels; essential points sit on the dashed cutoff line."""
    C = float(cutoff)
    pad = 28
    rows, cols = len(layout), max(len(r) for r in layout)
    W, H = cols * (panel + pad) + pad, rows * (panel + pad + 16) + pad
    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" viewBox="0 0 {W} {H}">',
             '<rect width="100%" height="100%" fill="white"/>']
    for r, row in enumerate(layout):
        for c, label in enumerate(row):
            x0 = pad + c * (panel + pad)
            y0 = pad + 16 + r * (panel + pad + 16)

            def X(v):
                return x0 + panel * v / C

            def Y(v):
                return y0 + panel - panel * v / C

            parts.append(f'<g class="panel" data-label="{label}">')
            parts.append(f'<text x="{x0}" y="{y0 - 6}" font-family="sans-serif" font-size="13">{label}</text>')
            parts.append(f'<rect x="{x0}" y="{y0}" width="{panel}" height="{panel}" fill="none" stroke="black"/>')
            parts.append(f'<line x1="{X(0):.3f}" y1="{Y(0):.3f}" x2="{X(C):.3f}" y2="{Y(C):.3f}" stroke="gray"/>')
            parts.append(f'<line x1="{x0}" y1="{Y(C):.3f}" x2="{x0 + panel}" y2="{Y(C):.3f}" '
                         'stroke="gray" stroke-dasharray="4 3"/>')
            for d in families.get(label, ()):
                color = _DEGREE_COLORS[d.dim % len(_DEGREE_COLORS)]
                for p in d.points:
                    yv = C if p.death is None else float(p.death)
                    parts.append(f'<circle cx="{X(float(p.birth)):.3f}" cy="{Y(yv):.3f}" r="3" '
                                 f'fill="{color}" data-dim="{d.dim}"/>')
            parts.append("</g>")
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def emit(families: dict[str, Sequence[PersistenceDiagram]], formats: Iterable[str], prefix, cutoff,
         meta: dict | None = None, layout: Sequence[Sequence[str]] = TABLE_LAYOUT) -> list[Path]:
    """Write ``prefix.json`` / ``prefix.csv`` / ``prefix.svg``; returns the paths written."""
    written = []
    prefix = Path(prefix)
    for fmt in formats:
        if fmt == "json":
            text = diagrams_json(families, meta)
        elif fmt == "csv":
            text = diagrams_csv(families)
        elif fmt == "svg":
            text = diagrams_svg(families, cutoff, layout)
        else:
            raise ValueError(f"unknown format {fmt!r}")
        path = prefix.with_name(prefix.name + "." + fmt)
        try:
            path.write_text(text)
        except OSError as exc:
            raise InputError(f"cannot write {path}: {exc}") from exc
        written.append(path)
    return written
