"""Run manifests: a JSON file naming an instance, its sample sets, one
operation and an output path.

    {
      "instance": {"name": "rational"},
      "samples": {"hplus": ["2/1", "3/1"], "m": ["0/1", "1/1", "-1/1"]},
      "operation": {"op": "audit", "family": "SU"},
      "output": "report.json"
    }

Sample entries use the element JSON of the instance.  Omitted sample sets
keep the instance defaults.
"""

from __future__ import annotations

import dataclasses
import json
from dataclasses import dataclass, field

import jsonschema

from .instances import INSTANCE_NAMES, make_instance

OPS = (
    "audit", "mul", "act", "refine", "index", "corner", "extend",
    "hecke-mul", "hecke-decompose", "hecke-index", "duality", "repr-apply", "repr-check",
)

SCHEMA = {
    "type": "object",
    "required": ["instance", "operation"],
    "additionalProperties": False,
    "properties": {
        "instance": {
            "type": "object",
            "required": ["name"],
            "additionalProperties": False,
            "properties": {
                "name": {"enum": list(INSTANCE_NAMES)},
                "minpoly": {"type": "array", "items": {"type": "integer"}, "minItems": 2},
                "modulus": {"type": "integer", "minimum": 2},
                "max_index": {"type": "integer", "minimum": 1},
            },
        },
        "samples": {
            "type": "object",
            "additionalProperties": False,
            "properties": {k: {"type": "array"} for k in ("hplus", "m", "n", "h", "g")},
        },
        "operation": {
            "type": "object",
            "required": ["op"],
            "properties": {"op": {"enum": list(OPS)}},
        },
        "output": {"type": ["string", "null"]},
    },
}


@dataclass
class RunManifest:
    instance: dict
    operation: dict
    samples: dict = field(default_factory=dict)
    output: str | None = None

    @classmethod
    def from_dict(cls, obj: dict) -> "RunManifest":
        jsonschema.validate(obj, SCHEMA)
        return cls(
            instance=dict(obj["instance"]),
            operation=dict(obj["operation"]),
            samples=dict(obj.get("samples", {})),
            output=obj.get("output"),
        )

    @classmethod
    def load(cls, path) -> "RunManifest":
        with open(path) as fh:
            return cls.from_dict(json.load(fh))

    def to_dict(self) -> dict:
        out = {"instance": self.instance, "operation": self.operation}
        if self.samples:
            out["samples"] = self.samples
        if self.output is not None:
            out["output"] = self.output
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    def build_system(self):
        return build_system(self.instance, self.samples)


def build_system(instance: dict, samples: dict | None = None):
    name = instance["name"]
    kw = {"minpoly": instance.get("minpoly"), "modulus": instance.get("modulus")}
    base = make_instance(name, **kw)
    if not samples and "max_index" not in instance:
        return base
    cfg = base.config
    parse = {
        "hplus": base.h_from_json,
        "h": base.h_from_json,
        "m": base.n_from_json,
        "n": base.n_from_json,
        "g": base.g_from_json,
    }
    changes = {k: [parse[k](x) for x in v] for k, v in (samples or {}).items()}
    if "max_index" in instance:
        changes["max_index"] = instance["max_index"]
    return make_instance(name, config=dataclasses.replace(cfg, **changes), **kw)
