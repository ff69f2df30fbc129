"""JSON and DOT serialization of crystal graphs."""
from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path

from .cartan import Weight
from .crystal import CrystalGraph, Vertex
from .monomial import DEFAULT_CONFIG, CrystalConfig
from .realizations import payload_from_text

_EDGE_STYLE = {1: 'color="blue", style=solid', 2: 'color="red", style=dashed'}


def graph_to_dict(graph: CrystalGraph, lam: Weight, realization: str, cfg: CrystalConfig = DEFAULT_CONFIG) -> dict:
    return {
        "lambda": [lam.c1, lam.c2],
        "realization": realization,
        "config": {"c12": cfg.c12, "c21": cfg.c21},
        "highest": graph.highest,
        "vertices": [
            {"key": k, "weight": [v.weight.c1, v.weight.c2], "payload": str(v.payload)}
            for k, v in graph.vertices.items()
        ],
        "edges": [{"from": s, "i": i, "to": d} for s, i, d in graph.edges],
    }


def to_json(graph: CrystalGraph, lam: Weight, realization: str, cfg: CrystalConfig = DEFAULT_CONFIG) -> str:
    return json.dumps(graph_to_dict(graph, lam, realization, cfg), indent=2, sort_keys=True) + "\n"


def from_json(text: str) -> tuple[CrystalGraph, Weight, str, CrystalConfig]:
    data = json.loads(text)
    real = data["realization"]
    vertices = {
        v["key"]: Vertex(payload_from_text(real, v["payload"]), Weight(*v["weight"])) for v in data["vertices"]
    }
    edges = [(e["from"], e["i"], e["to"]) for e in data["edges"]]
    parents: dict[str, tuple[str, int]] = {}
    for s, i, d in edges:
        parents.setdefault(d, (s, i))
    graph = CrystalGraph(highest=data["highest"], vertices=vertices, edges=edges, parents=parents)
    cfg = CrystalConfig(data["config"]["c12"], data["config"]["c21"])
    return graph, Weight(*data["lambda"]), real, cfg


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(graph: CrystalGraph, lam: Weight, realization: str) -> str:
    ids = {k: f"v{n}" for n, k in enumerate(graph.vertices)}
    lines = [f"digraph {_quote(f'B({lam}) {realization}')} {{", "  node [shape=box, fontname=monospace];"]
    for k in graph.vertices:
        extra = ", peripheries=2" if k == graph.highest else ""
        lines.append(f"  {ids[k]} [label={_quote(k)}{extra}];")
    for s, i, d in graph.edges:
        lines.append(f'  {ids[s]} -> {ids[d]} [label="{i}", {_EDGE_STYLE[i]}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def write_atomic(path: str | os.PathLike, text: str) -> None:
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
