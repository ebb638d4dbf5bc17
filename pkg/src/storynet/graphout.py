"""Serialize a thresholded network to an undirected DOT graph.

Output is deterministic byte for byte: fixed preamble, nodes sorted by
(type, score descending, name), edges by (score descending, endpoint names).
Rendering the resulting .gv file is Graphviz's job, not ours.
"""

from __future__ import annotations

from dataclasses import dataclass

from .analysis import NetworkModel, format_score
from .names import NameType

__all__ = ["DotStyle", "emit_dot"]


@dataclass(frozen=True)
class DotStyle:
    char_fill: str = "lightblue"
    place_fill: str = "palegreen"
    char_shape: str = "ellipse"
    place_shape: str = "box"
    label_decimals: int = 2
    penwidth_base: float = 1.0
    penwidth_scale: float = 4.0

    def __post_init__(self):
        if self.label_decimals < 0:
            raise ValueError(f"label_decimals must be >= 0, got {self.label_decimals}")

    def fill(self, ntype: NameType) -> str:
        return self.char_fill if ntype is NameType.CHARACTER else self.place_fill

    def shape(self, ntype: NameType) -> str:
        return self.char_shape if ntype is NameType.CHARACTER else self.place_shape


_PREAMBLE = '  graph [overlap=false, splines=true];\n  node [style=filled];\n'


def _escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')


def emit_dot(network: NetworkModel, style: DotStyle = DotStyle()) -> str:
    """DOT document for the network; node ids are the quoted main variants,
    node labels carry the frequency score and edge labels the interaction
    score, both at `style.label_decimals` decimals."""
    labels = {node.name_id: node.label for node in network.nodes}
    decimals = style.label_decimals

    lines = ["graph G {\n", _PREAMBLE]
    for node in sorted(network.nodes, key=lambda n: (n.ntype.value, -n.score, n.label)):
        name = _escape(node.label)
        score = format_score(node.score, decimals)
        lines.append(
            f'  "{name}" [label="{name}\\n{score}", '
            f"shape={style.shape(node.ntype)}, fillcolor={style.fill(node.ntype)}];\n"
        )

    def edge_names(edge):
        pair = sorted((labels[edge.a], labels[edge.b]))
        return pair[0], pair[1]

    for edge in sorted(network.edges, key=lambda e: (-e.score, edge_names(e))):
        left, right = edge_names(edge)
        score = format_score(edge.score, decimals)
        penwidth = format_score(style.penwidth_base + style.penwidth_scale * edge.score, decimals)
        lines.append(
            f'  "{_escape(left)}" -- "{_escape(right)}" [label="{score}", penwidth={penwidth}];\n'
        )
    lines.append("}\n")
    return "".join(lines)
