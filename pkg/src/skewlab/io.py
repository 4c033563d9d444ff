"""JSON encoding of instances and reports."""

from __future__ import annotations

import json
from pathlib import Path

from .action import MalformedInstance, PartialAction
from .groups import GroupSpec, SpecMismatch
from .scalars import FieldSpec


def instance_to_json(theta: PartialAction, field: FieldSpec | None = None) -> dict:
    """Instance as a JSON-ready dict.

    X_0 and h_0 are implied; of each pair h_t, h_{-t} only the one with the
    larger key is written (both when t = -t).
    """
    zero = theta.group.zero
    sl = theta.sorted_labels
    out: dict = {"group": theta.group.to_json()}
    if field is not None:
        out["field"] = field.spec_json()
    out["set"] = [str(x) for x in theta.labels]
    out["domains"] = {
        t.key(): [str(x) for x in sl(theta.domain(t))] for t in theta.effective_support if t != zero
    }
    out["maps"] = {
        t.key(): {str(x): str(theta.maps[t][x]) for x in sl(theta.maps[t])}
        for t in sorted(theta.maps)
        if t != zero and t >= -t
    }
    return out


def instance_from_json(data: dict) -> tuple[PartialAction, FieldSpec | None]:
    """Parse an instance; raises MalformedInstance naming the offending key."""
    if not isinstance(data, dict):
        raise MalformedInstance("instance must be a JSON object")
    try:
        group = GroupSpec.from_json(data["group"])
    except KeyError:
        raise MalformedInstance("missing key 'group'") from None
    except (TypeError, ValueError, AttributeError) as exc:
        raise MalformedInstance(f"bad 'group': {exc}") from None
    if "set" not in data:
        raise MalformedInstance("missing key 'set'")
    if not isinstance(data["set"], list):
        raise MalformedInstance("'set' must be a list of labels")
    labels = [str(x) for x in data["set"]]

    def key(k: str, where: str):
        try:
            return group.parse_key(k)
        except (ValueError, SpecMismatch) as exc:
            raise MalformedInstance(f"bad group element key {k!r} in '{where}': {exc}") from None

    domains_raw = data.get("domains", {})
    maps_raw = data.get("maps", {})
    if not isinstance(domains_raw, dict):
        raise MalformedInstance("'domains' must be an object")
    if not isinstance(maps_raw, dict):
        raise MalformedInstance("'maps' must be an object")
    domains = {}
    for k, v in domains_raw.items():
        if not isinstance(v, list):
            raise MalformedInstance(f"'domains.{k}' must be a list of labels")
        domains[key(k, "domains")] = [str(x) for x in v]
    maps = {}
    for k, v in maps_raw.items():
        if not isinstance(v, dict) or any(isinstance(y, (list, dict)) for y in v.values()):
            raise MalformedInstance(f"'maps.{k}' must map labels to labels")
        maps[key(k, "maps")] = {str(x): str(y) for x, y in v.items()}
    field = None
    if "field" in data:
        try:
            field = FieldSpec.from_json(data["field"])
        except (ValueError, KeyError, TypeError, AttributeError) as exc:
            raise MalformedInstance(f"bad 'field': {exc}") from None
    return PartialAction(group, labels, domains, maps), field


def load_instance(path: str | Path) -> tuple[PartialAction, FieldSpec | None]:
    with open(path, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise MalformedInstance(f"invalid JSON: {exc}") from None
    return instance_from_json(data)


def dump_json(data, sort_keys: bool = True) -> str:
    """Canonical encoding: UTF-8, two-space indent, trailing newline."""
    return json.dumps(data, ensure_ascii=False, indent=2, sort_keys=sort_keys) + "\n"
