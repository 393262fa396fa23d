"""Job configuration: JSON schema, validation and family construction."""

from __future__ import annotations

import math
import re
from typing import Any, Dict, Optional, Tuple

import jsonschema

from .scalars import Field, FieldSpec, ScalarParseError, field_make, parse_scalar, root_of_unity_order


class ConfigError(ValueError):
    """Anything wrong with a job configuration (exit code 2)."""


_SCALAR = {"type": ["string", "integer"]}

FAMILY_SCHEMA = {
    "type": "object",
    "required": ["kind"],
    "properties": {
        "kind": {"enum": ["bigd", "taft", "limit", "lifted", "smash"]},
        "m": {"type": "integer", "minimum": 1},
        "n": {"type": "integer", "minimum": 2},
        "omega": _SCALAR,
        "alpha": _SCALAR,
        "q": {
            "oneOf": [
                _SCALAR,
                {"type": "array", "items": _SCALAR},
                {"type": "object", "additionalProperties": _SCALAR},
            ]
        },
        "index_size": {"type": "integer", "minimum": 0},
        "index": {"type": "array", "items": {"type": "integer"}},
        "G": {"type": "string", "pattern": r"^C\d+(xC\d+)*$"},
        "g": {"type": "string"},
        "chi": _SCALAR,
        "p": {"type": "integer", "minimum": 2},
        "K": {"enum": ["C2"]},
        "zmax": {"type": "integer", "minimum": 1},
    },
    "additionalProperties": False,
}

JOB_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["family"],
    "properties": {
        "command": {"enum": ["verify", "analyze", "fusion", "bounds", "dump"]},
        "field": {
            "type": "object",
            "properties": {
                "kind": {"enum": ["cyclotomic", "prime"]},
                "conductor": {"type": "integer", "minimum": 1},
                "p": {"type": "integer", "minimum": 2},
            },
            "required": ["kind"],
            "additionalProperties": False,
        },
        "family": FAMILY_SCHEMA,
        "window": {
            "type": "object",
            "properties": {
                "support": {"type": "integer", "minimum": 0},
                "max_exp": {"type": "integer", "minimum": 0},
                "zmax": {"type": "integer", "minimum": 0},
            },
            "additionalProperties": False,
        },
        "options": {
            "type": "object",
            "properties": {
                "dual": {"type": "boolean"},
                "seed": {"type": "integer"},
                "cross_check": {"type": "boolean"},
                "loewy": {"type": "boolean"},
                "socle_fusion": {"type": "boolean"},
                "limit_rules": {"type": "boolean"},
                "pairs": {"type": "integer", "minimum": 0},
                "category_data": {"type": "string"},
            },
            "additionalProperties": False,
        },
        "out": {"type": "string"},
        "format": {"enum": ["json", "text"]},
    },
    "additionalProperties": False,
}

MULTISET = {"type": "object", "additionalProperties": {"type": "integer", "minimum": 0}}

CATEGORY_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["simples", "unit", "injEnvelope", "dimE1", "compE1"],
    "properties": {
        "name": {"type": "string"},
        "simples": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "required": ["name", "dim"],
                "properties": {"name": {"type": "string"}, "dim": {"type": "integer", "minimum": 1}},
                "additionalProperties": False,
            },
        },
        "unit": {"type": "string"},
        "injEnvelope": {"type": "object", "additionalProperties": MULTISET},
        "dimE1": {"type": "integer", "minimum": 1},
        "compE1": MULTISET,
        "compE1tensorE1dual": MULTISET,
        "b": {"type": "integer", "minimum": 1},
        "perTensor": {"type": "object", "additionalProperties": MULTISET},
        "objectDims": {"type": "object", "additionalProperties": {"type": "integer", "minimum": 1}},
        "distinguishedGrouplike": {"type": "string"},
        "provenance": {"type": "object", "additionalProperties": {"enum": ["PAPER", "DERIVED", "KERNEL"]}},
    },
    "additionalProperties": False,
}


def _validate(obj: Any, schema: dict, what: str) -> None:
    try:
        jsonschema.validate(obj, schema)
    except jsonschema.ValidationError as exc:
        path = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise ConfigError(f"{what}: {path}: {exc.message}") from None


def validate_job(obj: Any) -> None:
    _validate(obj, JOB_SCHEMA, "config")


def validate_category_data(obj: Any) -> None:
    _validate(obj, CATEGORY_SCHEMA, "category data")


# ---------------------------------------------------------------------------
# construction


def _group_orders(G: str) -> Tuple[int, ...]:
    return tuple(int(x) for x in re.findall(r"C(\d+)", G))


def default_field(fam_cfg: dict) -> FieldSpec:
    kind = fam_cfg["kind"]
    if kind == "smash":
        return FieldSpec.prime(fam_cfg.get("p", 2))
    if kind == "lifted":
        orders = _group_orders(fam_cfg.get("G", "C2"))
        return FieldSpec.cyclotomic(_lcm(math.prod(orders), 2))
    return FieldSpec.cyclotomic(_lcm(fam_cfg.get("n", 2), 2))


def _lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


def make_field(cfg: dict) -> Field:
    fcfg = cfg.get("field")
    if not fcfg:
        return field_make(default_field(cfg["family"]))
    if fcfg["kind"] == "prime":
        if "p" not in fcfg:
            raise ConfigError("field: prime fields need p")
        spec = FieldSpec.prime(fcfg["p"])
    else:
        spec = FieldSpec.cyclotomic(fcfg.get("conductor", default_field(cfg["family"]).modulus))
    try:
        return field_make(spec)
    except ValueError as exc:
        raise ConfigError(f"field: {exc}") from None


def _scalar(F: Field, value, name: str):
    try:
        return parse_scalar(F, str(value))
    except (ScalarParseError, ValueError, ZeroDivisionError) as exc:
        raise ConfigError(f"family.{name}: cannot parse {value!r}: {exc}") from None


def _default_omega(F: Field, n: int):
    if F.is_prime:
        raise ConfigError("family.omega: give omega explicitly over a prime field")
    N = F.spec.modulus
    if N % n:
        raise ConfigError(f"field conductor {N} has no primitive {n}-th root of unity")
    return F.zeta(N // n)


def build_family(cfg: dict, F: Optional[Field] = None):
    """Family object for a validated config; parameter errors become ConfigError."""
    from .families import BigD, Lifted, Limit, Taft
    from .smash import SmashHopf, SmashSpec

    fam = cfg["family"]
    kind = fam["kind"]
    F = F or make_field(cfg)
    try:
        if kind == "smash":
            zmax = fam.get("zmax", cfg.get("window", {}).get("zmax", 8))
            return SmashHopf(SmashSpec.z_c2(fam.get("p", F.characteristic or 2), zmax))
        if kind == "lifted":
            orders = _group_orders(fam.get("G", "C4"))
            chi = _scalar(F, fam.get("chi", -1), "chi")
            alpha = _scalar(F, fam.get("alpha", 0), "alpha")
            if fam.get("g", "g") not in ("g", "u"):
                raise ConfigError("family.g: only the first generator is supported from the CLI")
            if len(orders) == 1:
                return Lifted.cyclic(F, orders[0], chi, alpha)
            m = orders[0]
            rest = orders[1:]
            return Lifted(F, m, rest, (0,) * len(rest), chi, 1, (0,) * len(rest), alpha)
        n = fam.get("n", 2)
        omega = _scalar(F, fam["omega"], "omega") if "omega" in fam else _default_omega(F, n)
        if kind == "taft":
            return Taft(F, n, omega)
        if kind == "limit":
            return Limit(F, n, omega, fam.get("index", [1]))
        m = fam.get("m", n)
        alpha = _scalar(F, fam.get("alpha", 1), "alpha")
        q = fam.get("q", "t")
        if isinstance(q, dict):
            qmap = {int(k): _scalar(F, v, f"q.{k}") for k, v in q.items()}
        elif isinstance(q, list):
            qmap = {i + 1: _scalar(F, v, f"q.{i + 1}") for i, v in enumerate(q)}
        else:
            size = fam.get("index_size", 1)
            val = _scalar(F, q, "q")
            qmap = {i + 1: val for i in range(size)}
        return BigD(F, m, n, omega, qmap, alpha)
    except ConfigError:
        raise
    except (ValueError, KeyError) as exc:
        raise ConfigError(f"family: {exc}") from None
