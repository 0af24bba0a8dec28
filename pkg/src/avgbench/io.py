"""JSON encodings of the library's objects.

Rationals are written as ``[num, den]``; plain integers are accepted on input.
"""

from __future__ import annotations

import json
from typing import Any

from .groups import FiniteGroup, GroupAction, validate_group
from .group_algebra import GroupAlgebraElement
from .leibniz import BiRepresentation, DiLeibniz, LieLeibniz, LinearMap, StructureConstants
from .magma import FiniteMagma, SetMap, StructureError
from .pairings import DiRack, RackPairing, SkewBrace, validate_skew_brace
from .ybe import SetSolution


class InputError(StructureError):
    """Input could not be parsed into the requested object."""


def parse_json(text: str, source: str = "<input>") -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as err:
        raise InputError(
            f"invalid JSON in {source} at line {err.lineno} column {err.colno}: {err.msg}", "json"
        ) from err


def load_json(path: str) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as err:
        raise InputError(f"cannot read {path}: {err.strerror}", "file") from err
    return parse_json(text, path)


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(", ", ": "))


def _field(obj: Any, key: str, kind: str) -> Any:
    if not isinstance(obj, dict) or key not in obj:
        raise InputError(f"{kind} object needs a {key!r} field", "schema")
    return obj[key]


def _int(value: Any, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputError(f"{what} must be an integer", "schema")
    return value


def _table(value: Any, what: str) -> tuple:
    if not isinstance(value, list) or not all(isinstance(r, list) for r in value):
        raise InputError(f"{what} must be a list of lists", "schema")
    return tuple(tuple(_int(v, what + " entry") for v in row) for row in value)


def magma_from_json(obj: Any) -> FiniteMagma:
    size = _int(_field(obj, "size", "magma"), "size")
    labels = obj.get("labels")
    return FiniteMagma(size, _table(_field(obj, "table", "magma"), "table"), labels)


def magma_to_json(m: FiniteMagma) -> dict:
    out = {"size": m.size, "table": [list(r) for r in m.table]}
    if m.labels is not None:
        out["labels"] = list(m.labels)
    return out


def group_from_json(obj: Any) -> FiniteGroup:
    try:
        g = validate_group(magma_from_json(obj))
    except InputError:
        raise
    except StructureError as err:
        raise InputError(f"not a group: {err}", err.axiom, err.witness) from err
    if "identity" in obj and _int(obj["identity"], "identity") != g.identity:
        raise InputError(f"declared identity {obj['identity']} is not the identity {g.identity}", "identity")
    return g


def group_to_json(g: FiniteGroup) -> dict:
    out = magma_to_json(g.magma)
    out["identity"] = g.identity
    return out


def action_from_json(obj: Any) -> GroupAction:
    g = group_from_json(_field(obj, "group", "action"))
    return GroupAction(g, _int(_field(obj, "set_size", "action"), "set_size"), _table(_field(obj, "phi", "action"), "phi"))


def operator_from_json(obj: Any) -> SetMap:
    size = _int(_field(obj, "size", "operator"), "size")
    image = _field(obj, "map", "operator")
    if not isinstance(image, list):
        raise InputError("map must be a list", "schema")
    return SetMap(size, tuple(_int(v, "map entry") for v in image))


def operator_to_json(a: SetMap) -> dict:
    return {"size": a.size, "map": list(a.image)}


def pairing_from_json(obj: Any) -> RackPairing:
    size = _int(_field(obj, "size", "pairing"), "size")
    return RackPairing(
        FiniteMagma(size, _table(_field(obj, "diamond", "pairing"), "diamond")),
        FiniteMagma(size, _table(_field(obj, "blackdiamond", "pairing"), "blackdiamond")),
    )


def pairing_to_json(p: RackPairing) -> dict:
    return {
        "size": p.size,
        "diamond": [list(r) for r in p.diamond.table],
        "blackdiamond": [list(r) for r in p.blackdiamond.table],
    }


def dirack_from_json(obj: Any) -> DiRack:
    size = _int(_field(obj, "size", "di-rack"), "size")
    return DiRack(
        FiniteMagma(size, _table(_field(obj, "diamond", "di-rack"), "diamond")),
        FiniteMagma(size, _table(_field(obj, "tri", "di-rack"), "tri")),
    )


def dirack_to_json(d: DiRack) -> dict:
    return {"size": d.size, "diamond": [list(r) for r in d.diamond.table], "tri": [list(r) for r in d.tri.table]}


def brace_tables_from_json(obj: Any) -> tuple:
    return magma_from_json(_field(obj, "dot", "brace")), magma_from_json(_field(obj, "bullet", "brace"))


def brace_from_json(obj: Any) -> SkewBrace:
    try:
        return validate_skew_brace(*brace_tables_from_json(obj))
    except InputError:
        raise
    except StructureError as err:
        raise InputError(f"not a skew brace: {err}", err.axiom, err.witness) from err


def solution_from_json(obj: Any) -> SetSolution:
    size = _int(_field(obj, "size", "solution"), "size")
    r = _field(obj, "r", "solution")
    try:
        return SetSolution(size, tuple(tuple((p[0], p[1]) for p in row) for row in r))
    except (TypeError, IndexError, KeyError) as err:
        raise InputError("r must be an n x n array of [u, v] pairs", "schema") from err


def solution_to_json(s: SetSolution) -> dict:
    return {"size": s.size, "r": [[list(p) for p in row] for row in s.r]}


def constants_from_json(obj: Any) -> StructureConstants:
    return StructureConstants(_int(_field(obj, "dim", "structure constants"), "dim"), _field(obj, "c", "structure constants"))


def constants_to_json(c: StructureConstants) -> dict:
    return c.to_dict()


def linear_map_from_json(obj: Any) -> LinearMap:
    return LinearMap(
        _int(_field(obj, "rows", "linear map"), "rows"),
        _int(_field(obj, "cols", "linear map"), "cols"),
        _field(obj, "m", "linear map"),
    )


def linear_map_to_json(m: LinearMap) -> dict:
    return m.to_dict()


def representation_from_json(obj: Any) -> BiRepresentation:
    return BiRepresentation(
        _int(_field(obj, "dh", "representation"), "dh"),
        _int(_field(obj, "dv", "representation"), "dv"),
        _field(obj, "rhoL", "representation"),
        _field(obj, "rhoR", "representation"),
    )


def di_leibniz_from_json(obj: Any) -> DiLeibniz:
    dim = _int(_field(obj, "dim", "di-Leibniz"), "dim")
    return DiLeibniz(
        dim,
        StructureConstants(dim, _field(obj, "left", "di-Leibniz")),
        StructureConstants(dim, _field(obj, "right", "di-Leibniz")),
    )


def di_leibniz_to_json(d: DiLeibniz) -> dict:
    return {"dim": d.dim, "left": d.left.to_dict()["c"], "right": d.right.to_dict()["c"]}


def lie_leibniz_from_json(obj: Any) -> LieLeibniz:
    dim = _int(_field(obj, "dim", "Lie-Leibniz"), "dim")
    return LieLeibniz(
        StructureConstants(dim, _field(obj, "lie", "Lie-Leibniz")),
        StructureConstants(dim, _field(obj, "leib", "Lie-Leibniz")),
    )


def element_from_json(obj: Any) -> GroupAlgebraElement:
    return GroupAlgebraElement(group_from_json(_field(obj, "group", "element")), _field(obj, "coeffs", "element"))


def element_to_json(x: GroupAlgebraElement) -> dict:
    return {"group": group_to_json(x.group), "coeffs": [[c.numerator, c.denominator] for c in x.coeffs]}
