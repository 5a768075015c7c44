"""Basic social-network measures on co-citation graphs.

Degree, weighted degree, degree centrality, graph density, and connected
components. Degree centrality is degree / (n - 1); density and centrality
of graphs with fewer than two nodes are defined as 0 to avoid division by
zero.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass

from .cocitation import CoCitationGraph


@dataclass(frozen=True)
class NodeMetrics:
    key: str
    degree: int
    weighted_degree: int
    degree_centrality: float


@dataclass(frozen=True)
class MetricsReport:
    node_count: int
    edge_count: int
    density: float
    nodes: tuple[NodeMetrics, ...]  # sorted by key
    components: tuple[tuple[str, ...], ...]  # each sorted; listed by smallest member

    @property
    def component_count(self) -> int:
        return len(self.components)


def compute_metrics(graph: CoCitationGraph) -> MetricsReport:
    keys = [n.key for n in graph.nodes]
    adjacency: dict[str, set[str]] = {k: set() for k in keys}
    weighted: dict[str, int] = {k: 0 for k in keys}
    for e in graph.edges:
        adjacency[e.source].add(e.target)
        adjacency[e.target].add(e.source)
        weighted[e.source] += e.weight
        weighted[e.target] += e.weight

    n = len(keys)
    denom = n - 1 if n >= 2 else 0
    nodes = tuple(
        NodeMetrics(
            key=k,
            degree=len(adjacency[k]),
            weighted_degree=weighted[k],
            degree_centrality=len(adjacency[k]) / denom if denom else 0.0,
        )
        for k in sorted(keys)
    )
    density = 2 * len(graph.edges) / (n * (n - 1)) if n >= 2 else 0.0

    components: list[tuple[str, ...]] = []
    visited: set[str] = set()
    for start in sorted(keys):
        if start in visited:
            continue
        member: list[str] = []
        queue = deque([start])
        visited.add(start)
        while queue:
            node = queue.popleft()
            member.append(node)
            for neighbor in sorted(adjacency[node]):
                if neighbor not in visited:
                    visited.add(neighbor)
                    queue.append(neighbor)
        components.append(tuple(sorted(member)))
    components.sort(key=lambda c: c[0])

    return MetricsReport(
        node_count=n,
        edge_count=len(graph.edges),
        density=density,
        nodes=nodes,
        components=tuple(components),
    )


METRICS_FORMAT = "cocite-metrics"


def metrics_to_json(report: MetricsReport) -> str:
    doc = {
        "format": METRICS_FORMAT,
        "version": 1,
        "node_count": report.node_count,
        "edge_count": report.edge_count,
        "density": report.density,
        "component_count": report.component_count,
        "components": [list(c) for c in report.components],
        "nodes": [
            {
                "key": m.key,
                "degree": m.degree,
                "weighted_degree": m.weighted_degree,
                "degree_centrality": m.degree_centrality,
            }
            for m in report.nodes
        ],
    }
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def metrics_to_tsv(report: MetricsReport) -> str:
    lines = ["# key\tdegree\tweighted_degree\tdegree_centrality"]
    lines.extend(
        f"{m.key}\t{m.degree}\t{m.weighted_degree}\t{m.degree_centrality!r}"
        for m in report.nodes
    )
    return "\n".join(lines) + "\n"
