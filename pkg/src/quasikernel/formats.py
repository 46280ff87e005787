"""Line-oriented instance files and JSON reports.

::

    c optional comment lines
    p vc-struct <n> <m> <k> <d> <class>
    x <v1> <v2> ...
    e <u> <v>

Vertex ids in the file are 1-indexed. ``k`` is the independent-set target.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import ParseError
from .exact import CLASS_TAGS
from .graph import Graph
from .instance import Instance, validate_instance


def _int(token: str, lineno: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(lineno, f"{what} must be an integer, got {token!r}") from None


def parse_instance(text: str, validate: bool = True) -> Instance:
    header = None
    modulator = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        tokens = line.split()
        kind = tokens[0]
        if kind == "p":
            if header is not None:
                raise ParseError(lineno, "second header line")
            if len(tokens) != 7 or tokens[1] != "vc-struct":
                raise ParseError(lineno, "header must be 'p vc-struct <n> <m> <k> <d> <class>'")
            n, m, k, d = (_int(t, lineno, name) for t, name in zip(tokens[2:6], "nmkd"))
            tag = tokens[6]
            if tag not in CLASS_TAGS:
                raise ParseError(lineno, f"unknown class {tag!r}")
            if min(n, m, k, d) < 0:
                raise ParseError(lineno, "n, m, k and d must be non-negative")
            if k > n:
                raise ParseError(lineno, f"k={k} exceeds n={n}")
            header = (n, m, k, d, tag)
            continue
        if header is None:
            raise ParseError(lineno, "header line must come first")
        n = header[0]
        if kind == "x":
            if modulator is not None:
                raise ParseError(lineno, "second modulator line")
            ids = [_int(t, lineno, "vertex id") for t in tokens[1:]]
            for v in ids:
                if not 1 <= v <= n:
                    raise ParseError(lineno, f"vertex {v} outside 1..{n}")
            if len(set(ids)) != len(ids):
                raise ParseError(lineno, "repeated vertex in modulator")
            modulator = frozenset(v - 1 for v in ids)
        elif kind == "e":
            if len(tokens) != 3:
                raise ParseError(lineno, "edge line must be 'e <u> <v>'")
            u, v = (_int(t, lineno, "vertex id") for t in tokens[1:])
            for w in (u, v):
                if not 1 <= w <= n:
                    raise ParseError(lineno, f"vertex {w} outside 1..{n}")
            if u == v:
                raise ParseError(lineno, f"self-loop at {u}")
            key = (min(u, v) - 1, max(u, v) - 1)
            if key in seen:
                raise ParseError(lineno, f"duplicate edge {u} {v}")
            seen.add(key)
            edges.append(key)
        else:
            raise ParseError(lineno, f"unknown line type {kind!r}")
    if header is None:
        raise ParseError(0, "missing header line")
    n, m, k, d, tag = header
    if len(edges) != m:
        raise ParseError(0, f"header announces {m} edges, found {len(edges)}")
    inst = Instance(Graph.from_edges(n, edges), modulator or frozenset(), k, d, tag)
    if validate:
        validate_instance(inst)
    return inst


def emit_instance(inst: Instance) -> str:
    """Text form of an instance; labels are compacted to 1..n in sorted order."""
    g = inst.graph
    pos = {v: i + 1 for i, v in enumerate(g.vertices)}
    lines = []
    if list(g.vertices) != list(range(g.n)):
        lines.append("c labels " + " ".join(str(v) for v in g.vertices))
    lines.append(f"p vc-struct {g.n} {g.m} {inst.k} {inst.d} {inst.class_tag}")
    lines.append(" ".join(["x"] + [str(pos[v]) for v in sorted(inst.modulator)]))
    for u, v in sorted((pos[a], pos[b]) for a, b in g.edges):
        lines.append(f"e {u} {v}")
    return "\n".join(lines) + "\n"


def read_instance(path: str | Path, validate: bool = True) -> Instance:
    return parse_instance(Path(path).read_text(), validate=validate)


def write_instance(inst: Instance, path: str | Path) -> None:
    Path(path).write_text(emit_instance(inst))


def dump_json(data) -> str:
    """Deterministic JSON: keys keep their insertion order, fixed indentation."""
    return json.dumps(data, indent=2) + "\n"
