"""JSON configuration documents for :class:`MonopoleConfig`."""

from __future__ import annotations

import json
import math
from typing import Any

from .errors import ConfigError
from .model import MODES, MonopoleConfig, SingularPoint, validate_config

_TOP = {"rank", "mode", "singularities", "mass", "boundary_radius"}
_POINT = {"position", "weights"}


def _is_number(v) -> bool:
    return isinstance(v, (int, float)) and not isinstance(v, bool) and math.isfinite(v)


def _is_int(v) -> bool:
    return isinstance(v, int) and not isinstance(v, bool)


def config_from_dict(doc: Any) -> MonopoleConfig:
    """Build and validate a configuration from a decoded document.

    Raises
    ------
    ConfigError
        Listing every schema or validation problem with its field path.
    """
    problems: list[str] = []
    if not isinstance(doc, dict):
        raise ConfigError("configuration must be an object", ["$: expected an object"])
    for key in sorted(set(doc) - _TOP):
        problems.append(f"$.{key}: unknown field")
    for key in ("rank", "mode", "singularities"):
        if key not in doc:
            problems.append(f"$.{key}: missing field")
    rank = doc.get("rank")
    if "rank" in doc and (not _is_int(rank) or rank < 1):
        problems.append("$.rank: expected a positive integer")
    mode = doc.get("mode")
    if "mode" in doc and mode not in MODES:
        problems.append(f"$.mode: expected one of {list(MODES)}")
    if mode == "complete-with-boundary":
        for key in ("mass", "boundary_radius"):
            if key not in doc:
                problems.append(f"$.{key}: required for complete-with-boundary")

    points: list[SingularPoint] = []
    sings = doc.get("singularities", [])
    if not isinstance(sings, list):
        problems.append("$.singularities: expected a list")
        sings = []
    for i, item in enumerate(sings):
        path = f"$.singularities[{i}]"
        if not isinstance(item, dict):
            problems.append(f"{path}: expected an object")
            continue
        for key in sorted(set(item) - _POINT):
            problems.append(f"{path}.{key}: unknown field")
        pos = item.get("position")
        w = item.get("weights")
        ok = True
        if not (isinstance(pos, list) and len(pos) == 3 and all(_is_number(c) for c in pos)):
            problems.append(f"{path}.position: expected 3 numbers")
            ok = False
        if not (isinstance(w, list) and all(_is_int(k) for k in w)):
            problems.append(f"{path}.weights: expected a list of integers")
            ok = False
        elif _is_int(rank) and len(w) != rank:
            problems.append(f"{path}.weights: length {len(w)} does not match rank {rank}")
            ok = False
        if ok:
            points.append(SingularPoint(tuple(pos), tuple(w)))

    mass = doc.get("mass")
    if mass is not None:
        if not (isinstance(mass, list) and all(_is_number(a) for a in mass)):
            problems.append("$.mass: expected a list of numbers")
            mass = None
        elif _is_int(rank) and len(mass) != rank:
            problems.append(f"$.mass: length {len(mass)} does not match rank {rank}")
    radius = doc.get("boundary_radius")
    if radius is not None and not _is_number(radius):
        problems.append("$.boundary_radius: expected a number")
        radius = None

    if problems:
        raise ConfigError("configuration schema error", problems)
    cfg = MonopoleConfig(
        rank=rank,
        singularities=tuple(points),
        mass=tuple(mass) if mass is not None else (),
        boundary_radius=float(radius) if radius is not None else None,
        mode=mode,
    )
    report = validate_config(cfg)
    if not report.ok:
        raise ConfigError("configuration validation error", [f"$: {e}" for e in report.errors])
    return cfg


def parse_config(text: str) -> MonopoleConfig:
    """Parse a UTF-8 JSON document into a validated configuration."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"malformed document: {exc}") from exc
    return config_from_dict(doc)


def serialize_config(cfg: MonopoleConfig) -> dict:
    """Inverse of :func:`config_from_dict` up to number formatting."""
    out: dict[str, Any] = {
        "rank": cfg.rank,
        "mode": cfg.mode,
        "singularities": [
            {"position": list(p.position), "weights": list(p.weights)} for p in cfg.singularities
        ],
        "mass": list(cfg.mass),
    }
    if cfg.boundary_radius is not None:
        out["boundary_radius"] = cfg.boundary_radius
    return out
