import io
import json
from fractions import Fraction as Q

import pytest

from chromix.core import PersistenceDiagram
from chromix.io import (
    InputError,
    diagrams_csv,
    diagrams_json,
    diagrams_svg,
    emit,
    ingest,
    jitter,
    load_diagrams_json,
    points_csv,
    read_points,
)
from chromix.sixpack import six_pack
from chromix.generate import uniform_random

from helpers import EX1


def test_parse_worked_example():
    chi = ingest(io.StringIO("0,0\n1,1\n2,0\n"), dim=1)
    assert chi == EX1


def test_header_and_relabelling():
    chi, mapping = read_points(io.StringIO("x,y,color\n0,0,4\n1,0.5,7\n"))
    assert mapping == {4: 0, 7: 1}
    assert chi.points[1] == (Q(1), Q(1, 2))


@pytest.mark.parametrize("text, dim, needle", [
    ("0,0\n1,1,1\n", 1, "row 2"),
    ("0,0,0\n1,1\n", None, "row 2"),
    ("0,a,0\n", None, "row 1"),
    ("0,0,z\n", None, "row 1"),
    ("0,0,-1\n", None, "row 1"),
    ("0,0,0\n0,0,1\n", None, "duplicate"),
    ("", None, "no data"),
])
def test_malformed_rows(text, dim, needle):
    with pytest.raises(InputError, match=needle):
        read_points(io.StringIO(text), dim)


def test_missing_file(tmp_path):
    with pytest.raises(InputError):
        read_points(tmp_path / "absent.csv")


def test_snapping_to_grid():
    chi = ingest(io.StringIO("0.1234567891234,0\n1,1\n"), scale_exp=3)
    assert chi.points[0] == (Q(123, 1000),)


def test_points_csv_round_trip():
    chi = uniform_random(12, 3, 2, seed=4)
    back = ingest(io.StringIO(points_csv(chi)))
    assert back == chi


def test_jitter_is_seeded_and_bounded():
    chi = uniform_random(10, 2, 2, seed=4)
    a = jitter(chi, Q(1, 1000), seed=3)
    assert a == jitter(chi, Q(1, 1000), seed=3)
    assert all(abs(x - y) <= Q(1, 1000) for p, q in zip(chi.points, a.points) for x, y in zip(p, q))


def test_json_contains_kernel_point_and_round_trips():
    pack = six_pack(EX1, [0])
    fams = {m: pack[m] for m in ("kernel", "domain")}
    doc = json.loads(diagrams_json(fams, {"cutoff": "2"}))
    pt = doc["diagrams"]["kernel"][0]["points"][0]
    assert (pt["birth"], pt["death"]) == ("1/4", "1")
    assert pt["birth_radius"] == 0.5 and pt["death_float"] == 1.0
    assert doc["diagrams"]["kernel"][1]["points"] == []
    back = load_diagrams_json(diagrams_json(fams))
    for m in fams:
        assert [d.multiset() for d in back[m]] == [d.multiset() for d in fams[m]]


def test_empty_diagram_json():
    doc = json.loads(diagrams_json({"x": [PersistenceDiagram(0)]}))
    assert doc["diagrams"]["x"][0]["points"] == []


def test_csv_and_svg():
    pack = six_pack(EX1, [0])
    fams = {m: pack[m] for m in ("domain",)}
    rows = diagrams_csv(fams).splitlines()
    assert rows[0] == "label,dim,birth,death"
    assert "domain,0,0,inf" in rows
    svg = diagrams_svg(fams, pack.cutoff, layout=(("domain",),))
    assert svg.startswith("<svg") and svg.count("<circle") == 2


def test_emit(tmp_path):
    pack = six_pack(EX1, [0])
    fams = {m: pack[m] for m in ("domain",)}
    paths = emit(fams, ["json", "csv", "svg"], tmp_path / "out", pack.cutoff)
    assert [p.name for p in paths] == ["out.json", "out.csv", "out.svg"]
    with pytest.raises(ValueError):
        emit(fams, ["png"], tmp_path / "out", pack.cutoff)
    with pytest.raises(InputError):
        emit(fams, ["json"], tmp_path / "missing" / "out", pack.cutoff)
