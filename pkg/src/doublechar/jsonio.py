"""File formats and canonical serialization.

All emitted JSON is canonical: two-space indent, sorted keys, trailing
newline.  Identical inputs therefore produce byte-identical outputs,
which the test suite relies on.  Loaders wrap every failure in
InputError so the CLI can map them to its input-validation exit code.
"""

from __future__ import annotations

import json
import os

from .bgg import MLMatrixData
from .errors import InputError
from .groups import DEFAULT_MAX_ORDER, FiniteGroup
from .nichols import NicholsProfile, SimpleTable

PROFILE_KIND = "profile"
ML_KIND = "ml_matrix"


def canonical_dumps(obj):
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def write_json(path, obj):
    write_text(path, canonical_dumps(obj))


def write_text(path, text):
    parent = os.path.dirname(os.path.abspath(path))
    os.makedirs(parent, exist_ok=True)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def load_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise InputError(f"file not found: {path}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from None


def load_group_file(path, max_order=DEFAULT_MAX_ORDER):
    obj = load_json(path)
    try:
        return FiniteGroup.from_json(obj, max_order=max_order)
    except InputError as exc:
        raise InputError(f"{path}: {exc}") from None


def profile_kind(payload):
    """A profile path may hold a graded profile or a plain composition
    matrix; the optional "kind" field tells them apart."""
    if not isinstance(payload, dict):
        raise InputError("profile payload must be a JSON object")
    kind = payload.get("kind", PROFILE_KIND)
    if kind not in (PROFILE_KIND, ML_KIND):
        raise InputError(f"unrecognized payload kind {kind!r}")
    return kind


def load_profile_file(path, system):
    """Returns ("profile", NicholsProfile) or ("ml_matrix", MLMatrixData)."""
    payload = load_json(path)
    kind = profile_kind(payload)
    try:
        if kind == ML_KIND:
            return kind, MLMatrixData.from_json(payload, system)
        return kind, NicholsProfile.from_json(payload, system)
    except InputError as exc:
        raise InputError(f"{path}: {exc}") from None


def load_simples_file(path, system):
    payload = load_json(path)
    try:
        return SimpleTable.from_json(payload, system)
    except InputError as exc:
        raise InputError(f"{path}: {exc}") from None


def load_aliases_file(path, system):
    """label -> display name; names must be nonempty and unique."""
    payload = load_json(path)
    if not isinstance(payload, dict) or "aliases" not in payload:
        raise InputError(f"{path}: alias payload must have an 'aliases' object")
    aliases = payload["aliases"]
    if not isinstance(aliases, dict):
        raise InputError(f"{path}: 'aliases' must map labels to names")
    out = {}
    seen = set()
    for label, name in aliases.items():
        try:
            system.parse_label(label)
        except InputError as exc:
            raise InputError(f"{path}: {exc}") from None
        if not isinstance(name, str) or not name:
            raise InputError(f"{path}: alias for {label} must be a nonempty string")
        if name in seen:
            raise InputError(f"{path}: duplicate alias name {name!r}")
        seen.add(name)
        out[label] = name
    return out


def aliases_to_json(aliases):
    return {"format": 1, "aliases": dict(sorted(aliases.items()))}


def profile_to_json(profile, group_ref):
    obj = profile.to_json(group_ref)
    obj["format"] = 1
    obj["kind"] = PROFILE_KIND
    return obj


def simples_to_json(table):
    obj = table.to_json()
    obj["format"] = 1
    return obj
