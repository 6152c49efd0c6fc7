"""Tests for the JSON pair document."""

import json

import pytest

from core.document import (
    document_to_pair,
    load_document,
    load_pair,
    pair_to_document,
    parse_document,
    serialize_document,
)
from core.errors import DocumentError
from core.surface_model import validate_surface


@pytest.fixture
def family_text(family1):
    return serialize_document(pair_to_document(family1.manifold, family1.surface, {"gamma": family1.gamma}))


def test_serialization_is_stable(family_text):
    again = serialize_document(parse_document(family_text))
    assert again == family_text
    assert family_text.endswith("}\n")


def test_round_trip_structure(family1, family_text):
    manifold, surface, cycles = document_to_pair(parse_document(family_text))
    assert manifold == family1.manifold
    assert surface == family1.surface
    assert cycles == {"gamma": family1.gamma}


def test_round_trip_open_pair(control_pair):
    text = serialize_document(pair_to_document(control_pair.manifold, control_pair.surface))
    manifold, surface, cycles = document_to_pair(parse_document(text))
    assert surface == control_pair.surface
    assert cycles == {}
    assert validate_surface(surface).ok


def test_document_layout(family_text):
    data = json.loads(family_text)
    assert list(data) == ["manifold", "surface", "cycles"]
    torus = data["manifold"]["tori"][0]
    assert torus == {
        "id": "T",
        "near": {"block": "left", "label": "a"},
        "far": {"block": "middle", "label": "a1"},
        "matrix": [[1, 1], [2, 1]],
    }
    circle = data["surface"]["circles"][0]
    assert circle["id"] == "c1.far"
    assert circle["class"] == [3, 4]
    assert "label" not in circle
    assert data["cycles"] == {"gamma": [["c1", "-"], ["c2", "+"]]}


def test_free_circles_keep_label(control_pair):
    data = json.loads(serialize_document(pair_to_document(control_pair.manifold, control_pair.surface)))
    free = [c for c in data["surface"]["circles"] if "torus" not in c]
    assert [(c["id"], c["label"]) for c in free] == [("c3", "a2"), ("c4", "a2")]


def test_unicode_minus_in_cycles(family_text):
    data = json.loads(family_text)
    data["cycles"]["gamma"][0][1] = "−"
    _, _, cycles = document_to_pair(parse_document(json.dumps(data)))
    assert cycles["gamma"].to_tokens() == "c1:-,c2:+"


def test_syntax_error_has_line_and_column():
    text = '{\n  "manifold": {"closed": true, "blocks": [],\n    "tori": [{"matrix": [[1, 1], [2, 1,]]}]}\n}'
    with pytest.raises(DocumentError) as excinfo:
        parse_document(text)
    assert excinfo.value.line == 3
    assert excinfo.value.column is not None
    assert str(excinfo.value).startswith("line 3, column ")


def test_schema_error_has_path(family_text):
    data = json.loads(family_text)
    data["manifold"]["tori"][0]["matrix"] = [[1, 1], [2]]
    with pytest.raises(DocumentError) as excinfo:
        parse_document(json.dumps(data))
    assert excinfo.value.path.startswith("manifold.tori.0.matrix")


@pytest.mark.parametrize("mutate", [
    lambda d: d["manifold"]["blocks"].append(dict(d["manifold"]["blocks"][0])),
    lambda d: d["surface"]["circles"][0].update({"extra": 1}),
    lambda d: d["surface"]["pieces"][0].update({"degree": "4"}),
    lambda d: d["surface"]["circles"][0].update({"torus": None}),
])
def test_schema_rejections(family_text, mutate):
    data = json.loads(family_text)
    mutate(data)
    with pytest.raises(DocumentError):
        parse_document(json.dumps(data))


def test_load_from_file(tmp_path, family_text):
    path = tmp_path / "family.json"
    path.write_text(family_text, encoding="utf-8")
    assert serialize_document(load_document(path)) == family_text
    manifold, _, _ = load_pair(path)
    assert manifold.closed
    with pytest.raises(DocumentError, match="cannot read"):
        load_document(tmp_path / "missing.json")


def test_dangling_torus_reference_is_reported(family_text):
    data = json.loads(family_text)
    data["surface"]["circles"][0]["torus"] = "nope"
    _, surface, _ = document_to_pair(parse_document(json.dumps(data)))
    assert not validate_surface(surface).ok
