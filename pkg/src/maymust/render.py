"""Result rendering: JSON, plain text, and Graphviz DOT."""

from __future__ import annotations

import json

from .framework import Framework
from .labels import Label, Labelling
from .semantics import SemanticsResult

FORMATS = ("json", "text", "dot")

_DOT_FILL = {Label.IN: "green", Label.OUT: "red", Label.UNDEC: "gray"}


def to_json(result: SemanticsResult, f: Framework) -> str:
    payload = {
        "semantics": result.name,
        "engine": result.engine,
        "count": result.count,
        "labellings": [
            {a: l[a].value for a in f.ids} for l in result.labellings
        ],
    }
    return json.dumps(payload, indent=2)


def to_text(result: SemanticsResult, f: Framework) -> str:
    lines = [
        f"semantics: {result.name}",
        f"engine: {result.engine}",
        f"count: {result.count}",
    ]
    lines.extend(
        " ".join(f"{a}:{l[a].value}" for a in f.ids) or "(empty labelling)"
        for l in result.labellings
    )
    if result.name == "maxi-stable" and result.count == 0:
        lines.append("STABLE: none")
    return "\n".join(lines)


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _one_graph(name: str, f: Framework, labelling: Labelling | None) -> str:
    lines = [f"digraph {name} {{"]
    for a in f.ids:
        if labelling is None:
            lines.append(f"  {_quote(a)};")
        else:
            fill = _DOT_FILL[labelling[a]]
            lines.append(f"  {_quote(a)} [style=filled, fillcolor={fill}];")
    for src, dst in f.attack_pairs():
        lines.append(f"  {_quote(src)} -> {_quote(dst)};")
    lines.append("}")
    return "\n".join(lines)


def to_dot(result: SemanticsResult, f: Framework, all_labellings: bool = False) -> str:
    """First labelling colours the graph; all_labellings emits one graph each."""
    if result.count == 0:
        return "// no labellings\n" + _one_graph("g0", f, None)
    if not all_labellings:
        return _one_graph("g0", f, result.labellings[0])
    return "\n".join(
        _one_graph(f"g{i}", f, l) for i, l in enumerate(result.labellings)
    )


def render(result: SemanticsResult, f: Framework, fmt: str, dot_all: bool = False) -> str:
    if fmt == "json":
        return to_json(result, f)
    if fmt == "text":
        return to_text(result, f)
    if fmt == "dot":
        return to_dot(result, f, dot_all)
    raise ValueError(f"unknown output format {fmt!r}")
