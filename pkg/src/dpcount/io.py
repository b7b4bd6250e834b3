"""JSON persistence for surfaces and reports."""
from __future__ import annotations

import datetime as _dt
import hashlib
import json
from pathlib import Path
from typing import Any

from .families import (BUILTIN_FAMILIES, FamilySpec, Surface, monomial_key,
                       parse_monomial_key, reduced_family)
from .gf import field_from_literal, field_literal, format_element, parse_element

SCHEMA_VERSION = 1


class SchemaError(ValueError):
    """A file does not follow the documented schema; ``path`` locates the problem."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


def resolve_family(family_id: str, field) -> FamilySpec:
    """Built-in id, optionally with a ``:reduced`` suffix."""
    base, _, suffix = family_id.partition(":")
    if base not in BUILTIN_FAMILIES:
        raise SchemaError("family", f"unknown family {family_id!r}")
    fam = BUILTIN_FAMILIES[base]
    if suffix == "":
        return fam
    if suffix.startswith("reduced"):
        return reduced_family(fam, field)
    raise SchemaError("family", f"unknown family modifier {suffix!r}")


def family_id(fam: FamilySpec) -> str:
    if fam.id in BUILTIN_FAMILIES:
        return fam.id
    base = fam.id.split(":")[0]
    if ":reduced" in fam.id and base in BUILTIN_FAMILIES:
        return f"{base}:reduced"
    raise ValueError(f"family {fam.id} has no file representation")


def surface_to_json(s: Surface) -> dict:
    return {
        "family": family_id(s.family),
        "field": field_literal(s.field),
        "coefficients": {monomial_key(m): format_element(c, s.field)
                         for m, c in zip(s.family.free, s.coefficients) if c},
    }


def surface_from_json(data: Any) -> Surface:
    if not isinstance(data, dict):
        raise SchemaError("$", "expected a JSON object")
    for key in ("family", "field", "coefficients"):
        if key not in data:
            raise SchemaError(f"$.{key}", "missing")
    try:
        field = field_from_literal(str(data["field"]))
    except ValueError as exc:
        raise SchemaError("$.field", str(exc)) from exc
    try:
        fam = resolve_family(str(data["family"]), field)
    except SchemaError as exc:
        raise SchemaError("$.family", str(exc)) from exc
    coeffs = data["coefficients"]
    if not isinstance(coeffs, dict):
        raise SchemaError("$.coefficients", "expected an object keyed by monomial")
    values = [0] * fam.n_slots
    for key, literal in coeffs.items():
        where = f"$.coefficients.{key}"
        try:
            m = parse_monomial_key(key)
        except ValueError as exc:
            raise SchemaError(where, str(exc)) from exc
        if m not in fam.free:
            raise SchemaError(where, f"not a free monomial of {fam.id}")
        try:
            values[fam.free.index(m)] = parse_element(str(literal), field)
        except ValueError as exc:
            raise SchemaError(where, str(exc)) from exc
    return Surface(fam, field, tuple(values))


def load_surface(path) -> Surface:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise SchemaError("$", f"invalid JSON: {exc}") from exc
    return surface_from_json(data)


def save_surface(s: Surface, path) -> None:
    Path(path).write_text(json.dumps(surface_to_json(s), indent=2, sort_keys=True) + "\n")


def file_hash(path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def make_report(command: list[str], payload: Any, inputs: dict[str, str] | None = None,
                wall_time: float | None = None) -> dict:
    """Report envelope; only ``timestamps`` varies between identical reruns."""
    return {
        "schema_version": SCHEMA_VERSION,
        "command": list(command),
        "input_hashes": dict(sorted((inputs or {}).items())),
        "payload": payload,
        "timestamps": {"written": _dt.datetime.now(_dt.timezone.utc).isoformat(),
                       "wall_time": wall_time},
    }


def save_report(report: dict, path) -> None:
    Path(path).write_text(json.dumps(report, indent=2, sort_keys=True) + "\n")


def load_report(path) -> dict:
    with open(path) as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise SchemaError("$", "expected a JSON object")
    if data.get("schema_version") != SCHEMA_VERSION:
        raise SchemaError("$.schema_version", f"unsupported version {data.get('schema_version')!r}")
    for key in ("command", "input_hashes", "payload"):
        if key not in data:
            raise SchemaError(f"$.{key}", "missing")
    return data


def payload_equal(a: dict, b: dict) -> bool:
    return a["payload"] == b["payload"] and a["command"] == b["command"]
