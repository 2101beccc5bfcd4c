"""JSON file formats for relations and families, plus JSON rendering of results."""
from __future__ import annotations

import json
from dataclasses import asdict, is_dataclass
from pathlib import Path

import jsonschema

from .family import FunctionFamily
from .order import Check
from .pairs import ApproxPair
from .relspace import Relation, RelationFlags, Topology
from .three import Trit
from .tvfunc import TvFunction
from .universe import SubsetU, Universe


class InputError(ValueError):
    """Malformed or invalid input document."""


_UNIVERSE = {"type": "array", "items": {"type": "string", "minLength": 1}, "minItems": 1, "uniqueItems": True}

RELATION_SCHEMA = {
    "type": "object",
    "required": ["universe", "relation"],
    "properties": {
        "universe": _UNIVERSE,
        "relation": {
            "type": "object",
            "additionalProperties": {"type": "array", "items": {"type": "string"}, "uniqueItems": True},
        },
    },
}

FAMILY_SCHEMA = {
    "type": "object",
    "required": ["universe", "functions"],
    "properties": {
        "universe": _UNIVERSE,
        "functions": {
            "type": "array",
            "items": {"type": "array", "items": {"enum": ["0", "u", "1"]}},
        },
    },
}


def _load(path) -> dict:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from e
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"{path}: invalid JSON: {e}") from e


def _validate(doc, schema, what: str) -> None:
    try:
        jsonschema.validate(doc, schema)
    except jsonschema.ValidationError as e:
        where = "/".join(str(p) for p in e.absolute_path) or "<root>"
        raise InputError(f"invalid {what} document at {where}: {e.message}") from e


def parse_relation(doc) -> Relation:
    _validate(doc, RELATION_SCHEMA, "relation")
    universe = Universe(tuple(doc["universe"]))
    for x, ys in doc["relation"].items():
        for name in [x, *ys]:
            if name not in universe:
                raise InputError(f"relation mentions {name!r}, which is not in the universe")
    return Relation.from_adjacency(universe, doc["relation"])


def parse_family(doc) -> FunctionFamily:
    _validate(doc, FAMILY_SCHEMA, "family")
    universe = Universe(tuple(doc["universe"]))
    fs = []
    for i, lits in enumerate(doc["functions"]):
        if len(lits) != len(universe):
            raise InputError(f"function #{i} has {len(lits)} values, expected {len(universe)}")
        fs.append(TvFunction.from_literals(universe, lits))
    return FunctionFamily(universe, tuple(fs))


def load_relation(path) -> Relation:
    return parse_relation(_load(path))


def load_family(path) -> FunctionFamily:
    return parse_family(_load(path))


def load_family_labelled(path) -> tuple[FunctionFamily, dict[TvFunction, str]]:
    """The family plus labels f1, f2, ... following the order in the file."""
    doc = _load(path)
    F = parse_family(doc)
    labels: dict[TvFunction, str] = {}
    for i, lits in enumerate(doc["functions"], start=1):
        labels.setdefault(TvFunction.from_literals(F.universe, lits), f"f{i}")
    return F, labels


def relation_document(r: Relation) -> dict:
    return {"universe": list(r.universe), "relation": r.adjacency()}


def family_document(F: FunctionFamily) -> dict:
    return {"universe": list(F.universe), "functions": [f.literals for f in F]}


def dump_document(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def parse_set(universe: Universe, text: str) -> SubsetU:
    """Comma-separated element names; the empty string is the empty set."""
    names = [t.strip() for t in text.split(",") if t.strip()]
    for n in names:
        if n not in universe:
            raise InputError(f"{n!r} is not an element of the universe {list(universe)}")
    return universe.subset(names)


def to_jsonable(obj):
    """Render library values with the literal conventions of the file formats."""
    if isinstance(obj, TvFunction):
        return obj.literals
    if isinstance(obj, ApproxPair):
        return {"lower": obj.lower.names, "upper": obj.upper.names}
    if isinstance(obj, SubsetU):
        return obj.names
    if isinstance(obj, Trit):
        return str(obj)
    if isinstance(obj, Relation):
        return obj.adjacency()
    if isinstance(obj, Topology):
        return [s.names for s in obj.open_sets()]
    if isinstance(obj, FunctionFamily):
        return [f.literals for f in obj]
    if isinstance(obj, Universe):
        return list(obj)
    if isinstance(obj, Check):
        return {"holds": obj.holds, "witness": to_jsonable(obj.witness), "detail": to_jsonable(obj.detail)}
    if isinstance(obj, RelationFlags):
        return obj.as_dict()
    if is_dataclass(obj) and not isinstance(obj, type):
        return {k: to_jsonable(getattr(obj, k)) for k in asdict(obj)}
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        return [to_jsonable(v) for v in obj]
    return obj
