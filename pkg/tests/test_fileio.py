import json

import pytest

from tvrough.fileio import (
    InputError,
    dump_document,
    family_document,
    load_family,
    load_family_labelled,
    load_relation,
    parse_family,
    parse_relation,
    parse_set,
    relation_document,
    to_jsonable,
)
from tvrough.order import Check

from worked_examples import ABC, COUNTER, COUNTER_FAMILY, QUASIORDER_V, pair


def test_load_examples(data_dir):
    assert load_relation(data_dir / "quasiorder_v.json") == QUASIORDER_V
    assert load_family(data_dir / "counterexample_family.json") == COUNTER_FAMILY


def test_labels_follow_file_order(data_dir):
    _, labels = load_family_labelled(data_dir / "counterexample_family.json")
    assert labels[COUNTER[3]] == "f3" and labels[COUNTER[6]] == "f6"


def test_roundtrip_documents():
    assert parse_relation(json.loads(dump_document(relation_document(QUASIORDER_V)))) == QUASIORDER_V
    assert parse_family(family_document(COUNTER_FAMILY)) == COUNTER_FAMILY


@pytest.mark.parametrize("doc", [
    {"universe": ["a"]},
    {"universe": [], "relation": {}},
    {"universe": ["a", "a"], "relation": {}},
    {"universe": ["a"], "relation": {"a": "a"}},
    {"universe": ["a"], "relation": {"b": ["a"]}},
    {"universe": ["a"], "relation": {"a": ["z"]}},
])
def test_bad_relations(doc):
    with pytest.raises(InputError):
        parse_relation(doc)


@pytest.mark.parametrize("doc", [
    {"universe": ["a"], "functions": [["2"]]},
    {"universe": ["a", "b"], "functions": [["1"]]},
    {"universe": ["a"], "functions": "1"},
])
def test_bad_families(doc):
    with pytest.raises(InputError):
        parse_family(doc)


def test_unreadable_and_invalid_json(tmp_path):
    with pytest.raises(InputError):
        load_relation(tmp_path / "missing.json")
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(InputError):
        load_family(bad)


def test_parse_set():
    assert parse_set(ABC, "a, c").names == ["a", "c"]
    assert parse_set(ABC, "").names == []
    with pytest.raises(InputError):
        parse_set(ABC, "a,z")


def test_to_jsonable():
    out = to_jsonable({"p": pair("a", "ab"), "f": COUNTER[3], "c": Check(False, {"x": "c"})})
    assert out == {
        "p": {"lower": ["a"], "upper": ["a", "b"]},
        "f": ["0", "0", "u"],
        "c": {"holds": False, "witness": {"x": "c"}, "detail": {}},
    }
    json.dumps(to_jsonable(QUASIORDER_V))
