"""Model file serialization: versioned JSON with label-based edges.

Floats are printed with 17 significant digits so parse(serialize(model))
reproduces the model exactly and serialized output is byte-deterministic.
"""

from __future__ import annotations

import hashlib
import json
from typing import Any

from .errors import ModelFormatError
from .graphs import WeightedDag
from .linear_bn import LinearBn

MODEL_VERSION = "1"


def format_float(x: float) -> str:
    """Fixed 17-significant-digit decimal form; round-trips any float64."""
    return format(float(x), ".17g")


def dumps_json(obj: Any, indent: int = 2) -> str:
    """json.dumps with floats rendered by format_float."""

    def render(o: Any, depth: int) -> str:
        pad = " " * (indent * depth)
        inner = " " * (indent * (depth + 1))
        if isinstance(o, dict):
            if not o:
                return "{}"
            items = [f'{inner}{json.dumps(str(k))}: {render(v, depth + 1)}'
                     for k, v in o.items()]
            return "{\n" + ",\n".join(items) + "\n" + pad + "}"
        if isinstance(o, (list, tuple)):
            if not o:
                return "[]"
            items = [f"{inner}{render(v, depth + 1)}" for v in o]
            return "[\n" + ",\n".join(items) + "\n" + pad + "]"
        if isinstance(o, bool) or o is None:
            return json.dumps(o)
        if isinstance(o, float):
            return format_float(o)
        if isinstance(o, int):
            return str(o)
        return json.dumps(o)

    return render(obj, 0) + "\n"


def serialize_model(bn: LinearBn) -> str:
    labels = bn.dag.vertex_labels
    edges = [
        {"from": labels[i], "to": labels[j], "beta": beta}
        for (i, j), beta in sorted(bn.dag.edges.items())
    ]
    doc = {
        "version": MODEL_VERSION,
        "vertices": list(labels),
        "edges": edges,
        "sigma": {labels[i]: float(s) for i, s in enumerate(bn.sigma)},
    }
    return dumps_json(doc)


def parse_model(text: str) -> LinearBn:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ModelFormatError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: "
                               f"{exc.msg}") from exc
    if not isinstance(doc, dict):
        raise ModelFormatError("model document must be a JSON object")
    version = doc.get("version")
    if version != MODEL_VERSION:
        raise ModelFormatError(f"field 'version': expected {MODEL_VERSION!r}, got {version!r}")

    vertices = doc.get("vertices")
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise ModelFormatError("field 'vertices': must be a list of strings")
    if len(set(vertices)) != len(vertices):
        raise ModelFormatError("field 'vertices': labels must be unique")
    index = {v: i for i, v in enumerate(vertices)}

    raw_edges = doc.get("edges")
    if not isinstance(raw_edges, list):
        raise ModelFormatError("field 'edges': must be a list")
    edges: dict[tuple[int, int], float] = {}
    for pos, rec in enumerate(raw_edges):
        if not isinstance(rec, dict):
            raise ModelFormatError(f"edges[{pos}]: must be an object")
        for key in ("from", "to", "beta"):
            if key not in rec:
                raise ModelFormatError(f"edges[{pos}]: missing field '{key}'")
        src, dst, beta = rec["from"], rec["to"], rec["beta"]
        if src not in index:
            raise ModelFormatError(f"edges[{pos}].from: unknown vertex {src!r}")
        if dst not in index:
            raise ModelFormatError(f"edges[{pos}].to: unknown vertex {dst!r}")
        if not isinstance(beta, (int, float)) or isinstance(beta, bool) or beta == 0:
            raise ModelFormatError(f"edges[{pos}].beta: must be a nonzero number")
        pair = (index[src], index[dst])
        if pair in edges:
            raise ModelFormatError(f"edges[{pos}]: duplicate edge {src!r} -> {dst!r}")
        edges[pair] = float(beta)

    raw_sigma = doc.get("sigma")
    if not isinstance(raw_sigma, dict):
        raise ModelFormatError("field 'sigma': must be an object")
    sigma = []
    for v in vertices:
        if v not in raw_sigma:
            raise ModelFormatError(f"field 'sigma': missing entry for vertex {v!r}")
        val = raw_sigma[v]
        if not isinstance(val, (int, float)) or isinstance(val, bool) or val <= 0:
            raise ModelFormatError(f"sigma[{v!r}]: must be a positive number")
        sigma.append(float(val))
    for v in raw_sigma:
        if v not in index:
            raise ModelFormatError(f"field 'sigma': unknown vertex {v!r}")

    try:
        dag = WeightedDag(vertices, edges)
    except ValueError as exc:
        raise ModelFormatError(f"field 'edges': {exc}") from exc
    return LinearBn(dag, sigma)


def model_digest(bn: LinearBn) -> str:
    """SHA-256 of the canonical serialization, as a hex string."""
    return hashlib.sha256(serialize_model(bn).encode("utf-8")).hexdigest()
