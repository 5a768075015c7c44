"""Graph writers for external layout and network-analysis tools.

Formats: dot (Graphviz), graphml, edgelist (tab-separated), and json.
No coordinates are ever computed; layout belongs to the external tool.
Every writer is byte-deterministic for a given graph.
"""

from __future__ import annotations

import json
from xml.sax.saxutils import escape, quoteattr

from .cocitation import CoCitationGraph, GraphEdge, GraphNode
from .errors import UnsupportedFormat

GRAPH_FORMAT = "cocite-graph"
EXPORT_FORMATS = ("dot", "graphml", "edgelist", "json")

EXTENSIONS = {"dot": ".dot", "graphml": ".graphml", "edgelist": ".tsv", "json": ".json"}


def _dot_quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _to_dot(graph: CoCitationGraph) -> str:
    lines = ["graph cocitation {"]
    for node in graph.nodes:
        lines.append(
            f"  {_dot_quote(node.key)} [label={_dot_quote(node.label)}, "
            f"citations={node.citations}];"
        )
    for edge in graph.edges:
        lines.append(
            f"  {_dot_quote(edge.source)} -- {_dot_quote(edge.target)} "
            f"[weight={edge.weight}];"
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def _to_graphml(graph: CoCitationGraph) -> str:
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<graphml xmlns="http://graphml.graphdrawing.org/xmlns">',
        '  <key id="d0" for="node" attr.name="label" attr.type="string"/>',
        '  <key id="d1" for="node" attr.name="citations" attr.type="int"/>',
        '  <key id="d2" for="edge" attr.name="weight" attr.type="int"/>',
        '  <graph id="cocitation" edgedefault="undirected">',
    ]
    for node in graph.nodes:
        lines.append(f"    <node id={quoteattr(node.key)}>")
        lines.append(f'      <data key="d0">{escape(node.label)}</data>')
        lines.append(f'      <data key="d1">{node.citations}</data>')
        lines.append("    </node>")
    for edge in graph.edges:
        lines.append(
            f"    <edge source={quoteattr(edge.source)} target={quoteattr(edge.target)}>"
        )
        lines.append(f'      <data key="d2">{edge.weight}</data>')
        lines.append("    </edge>")
    lines.append("  </graph>")
    lines.append("</graphml>")
    return "\n".join(lines) + "\n"


def _to_edgelist(graph: CoCitationGraph) -> str:
    lines = ["# source\ttarget\tweight"]
    lines.extend(f"{e.source}\t{e.target}\t{e.weight}" for e in graph.edges)
    return "\n".join(lines) + "\n"


def _to_json(graph: CoCitationGraph) -> str:
    doc = {
        "format": GRAPH_FORMAT,
        "version": 1,
        "threshold": graph.threshold,
        "keep_isolated": graph.keep_isolated,
        "nodes": [
            {"key": n.key, "label": n.label, "citations": n.citations} for n in graph.nodes
        ],
        "edges": [
            {"source": e.source, "target": e.target, "weight": e.weight} for e in graph.edges
        ],
    }
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


_WRITERS = {
    "dot": _to_dot,
    "graphml": _to_graphml,
    "edgelist": _to_edgelist,
    "json": _to_json,
}


def export_graph(graph: CoCitationGraph, fmt: str) -> str:
    """Render a graph in one of dot | graphml | edgelist | json."""
    writer = _WRITERS.get(fmt)
    if writer is None:
        raise UnsupportedFormat(f"unsupported export format: {fmt!r} "
                                f"(expected one of {', '.join(EXPORT_FORMATS)})")
    return writer(graph)


def graph_from_json(text: str) -> CoCitationGraph:
    doc = json.loads(text)
    if not isinstance(doc, dict) or doc.get("format") != GRAPH_FORMAT:
        raise ValueError(f"not a {GRAPH_FORMAT} document")
    nodes = tuple(
        GraphNode(key=n["key"], label=n.get("label", n["key"]),
                  citations=n.get("citations", 0))
        for n in doc["nodes"]
    )
    edges = tuple(
        GraphEdge(source=e["source"], target=e["target"], weight=e["weight"])
        for e in doc["edges"]
    )
    return CoCitationGraph(nodes=nodes, edges=edges, threshold=doc.get("threshold", 1),
                           keep_isolated=doc.get("keep_isolated", False))
