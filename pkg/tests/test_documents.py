import json
from pathlib import Path

import pytest

from ltopology.documents import (
    DocumentError,
    WorkbenchDocument,
    document_from_dict,
    load_document,
    parse_document,
    serialize_document,
)
from ltopology.frames import PENTAGON_LABELS, pentagon_order, three_chain, two_chain
from ltopology.sober import sobrify
from ltopology.spaces import discrete_space, evaluation_embedding, sierpinski_space

DATA = Path(__file__).parent / "data"
FIXTURE_DOCS = sorted(DATA.glob("fixtures_*.json"))


def test_sierpinski_document_parses():
    text = json.dumps({"spaces": {"S": {"frame": "F2", "points": ["0", "1"],
                                        "opens": [["0", "0"], ["0", "1"], ["1", "1"]]}}})
    wb = parse_document(text)
    assert wb.spaces["S"] == sierpinski_space(two_chain())


def test_missing_top_names_the_space():
    doc = {"spaces": {"bad": {"frame": "F2", "points": ["a"], "opens": [["0"]]}}}
    with pytest.raises(DocumentError) as info:
        document_from_dict(doc)
    assert info.value.location == "spaces.bad"
    assert "missing constant top" in str(info.value)


def test_pentagon_frame_rejected_with_witness():
    doc = {"frames": {"N5": {"elements": list(PENTAGON_LABELS), "leq": [list(r) for r in pentagon_order()]}}}
    with pytest.raises(DocumentError) as info:
        document_from_dict(doc)
    assert info.value.location == "frames.N5"
    assert "('c', 'a', 'b')" in str(info.value)


@pytest.mark.parametrize("text, where", [
    ("{", "line 1"),
    ('{"spaces": {"s": {"frame": "Q9", "points": [], "opens": [[]]}}}', "spaces.s"),
    ('{"maps": {"f": {"source": "nope", "target": "nope", "mapping": {}}}}', "maps.f"),
    ('{"extra": {}}', "document"),
])
def test_malformed_documents(text, where):
    with pytest.raises(DocumentError) as info:
        parse_document(text)
    assert str(info.value).startswith(where)


def test_empty_document_canonical_form():
    assert serialize_document(WorkbenchDocument()) == "{}\n"
    assert serialize_document(parse_document("{}")) == "{}\n"


@pytest.mark.parametrize("path", FIXTURE_DOCS, ids=lambda p: p.name)
def test_fixture_round_trip_is_byte_identical(path):
    text = path.read_text()
    once = serialize_document(parse_document(text))
    assert once == text
    assert serialize_document(parse_document(once)) == once


def test_sobrify_output_round_trip():
    S = discrete_space(three_chain(), ["a"])
    R, e = sobrify(S)
    wb = WorkbenchDocument(spaces={"X": S, "R": R}, maps={"eta": e})
    text = serialize_document(wb)
    back = parse_document(text)
    assert back.spaces["R"] == R and back.maps["eta"].mapping == e.mapping
    assert serialize_document(back) == text


def test_inline_frame_round_trip():
    from ltopology.frames import power_frame
    L = power_frame(two_chain(), 2)
    S = sierpinski_space(L)
    text = serialize_document(WorkbenchDocument(spaces={"S": S}))
    back = parse_document(text)
    assert back.spaces["S"].opens == S.opens
    assert serialize_document(back) == text


def test_power_targets_are_not_serialized():
    S = sierpinski_space(two_chain())
    with pytest.raises(ValueError):
        serialize_document(WorkbenchDocument(spaces={"S": S}, maps={"e": evaluation_embedding(S)}))


def test_load_document(tmp_path):
    p = tmp_path / "d.json"
    p.write_text(FIXTURE_DOCS[0].read_text())
    assert load_document(p).spaces
