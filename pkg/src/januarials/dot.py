"""Graphviz DOT output for coset maps and companion graphs."""
from __future__ import annotations

from .action import CosetMap, classify
from .surface import BLUE, GREEN, RED, CompanionGraph, companion

_COLOR_NAMES = {BLUE: "blue", RED: "red", GREEN: "green"}


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def companion_dot(g: CompanionGraph, name: str = "companion") -> str:
    """Undirected multigraph; vertices are y-orbits, edges carry their colour."""
    lines = [f"graph {name} {{"]
    for v in range(g.n_vertices):
        lines.append(f"  v{v} [label={_quote(g.vertex_label(v))}];")
    for e, (s, t) in enumerate(g.edges):
        u, w = g.vertex_of[s], g.vertex_of[t]
        color = _COLOR_NAMES[g.colors[e]]
        lines.append(f"  v{u} -- v{w} [color={color}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def coset_dot(cm: CosetMap, name: str = "cosets") -> str:
    """The coset graph itself: one node per point, x-edges and directed y-arcs."""
    labels = cm.action.space.labels
    lines = [f"digraph {name} {{"]
    for i, label in enumerate(labels):
        lines.append(f"  p{i} [label={_quote(label)}];")
    for s, t in cm.x_pairs:
        lines.append(f"  p{s} -> p{t} [dir=none, style=bold];")
    for s in cm.x_fixed:
        lines.append(f"  p{s} -> p{s} [dir=none, style=dashed];")
    for orbit in cm.y_orbits:
        if len(orbit) > 1:
            for a, b in zip(orbit, orbit[1:] + orbit[:1]):
                lines.append(f"  p{a} -> p{b} [color=gray];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def map_dot(cm: CosetMap) -> str:
    """Companion graph for januarials, the coset graph otherwise."""
    if classify(cm).is_januarial:
        return companion_dot(companion(cm))
    return coset_dot(cm)
