"""Raw co-citation matrix over a selected document set, and edge thresholding.

Two documents are co-cited when they appear together in one article's
reference list. Frequencies go into a square symmetric sparse matrix whose
diagonal is undefined by construction: an article never lists the same
document twice once its references are deduplicated, so asking for a
diagonal cell raises instead of returning zero.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import DiagonalUndefined, UnparseableRef
from .records import Corpus
from .refs import EMPTY_ALIASES, AliasTable, DocKey, canonicalize, parse_cited_ref


@dataclass(frozen=True)
class CoCitationMatrix:
    """Symmetric sparse pair counts over ``keys``; no diagonal storage."""

    keys: tuple[str, ...]  # sorted
    labels: dict[str, str]
    counts: dict[str, int]  # article-level citation count per key
    cells: dict[tuple[str, str], int]  # (a, b) with a < b

    @property
    def dimension(self) -> int:
        return len(self.keys)

    def get(self, a: str, b: str) -> int:
        """Co-citation frequency of the unordered pair {a, b}."""
        if a not in self.counts or b not in self.counts:
            missing = a if a not in self.counts else b
            raise KeyError(f"key not in matrix: {missing!r}")
        if a == b:
            raise DiagonalUndefined(f"co-citation of {a!r} with itself is undefined")
        pair = (a, b) if a < b else (b, a)
        return self.cells.get(pair, 0)


def build_cocitation(
    corpus: Corpus,
    selected: Iterable[DocKey],
    aliases: AliasTable = EMPTY_ALIASES,
) -> CoCitationMatrix:
    """Count, for every unordered pair of selected documents, the articles
    citing both. Each article contributes at most 1 per pair."""
    selected = tuple(selected)
    if not selected:
        raise ValueError("selected document set must be nonempty")
    labels = {dk.key: (dk.display_label or dk.key) for dk in selected}
    keys = tuple(sorted(labels))
    counts = {key: 0 for key in keys}
    cells: dict[tuple[str, str], int] = {}
    for rec in corpus.records:
        in_article: set[str] = set()
        for raw in rec.cited_raw:
            try:
                ref = parse_cited_ref(raw)
            except UnparseableRef:
                continue
            key = canonicalize(ref, aliases).key
            if key in counts:
                in_article.add(key)
        for key in in_article:
            counts[key] += 1
        for pair in combinations(sorted(in_article), 2):
            cells[pair] = cells.get(pair, 0) + 1
    return CoCitationMatrix(keys=keys, labels=labels, counts=counts, cells=cells)


@dataclass(frozen=True)
class GraphNode:
    key: str
    label: str
    citations: int


@dataclass(frozen=True)
class GraphEdge:
    source: str
    target: str
    weight: int


@dataclass(frozen=True)
class CoCitationGraph:
    """Pairs co-cited at least ``threshold`` times, as an undirected graph."""

    nodes: tuple[GraphNode, ...]  # sorted by key
    edges: tuple[GraphEdge, ...]  # source < target, sorted
    threshold: int
    keep_isolated: bool = False

    @property
    def node_count(self) -> int:
        return len(self.nodes)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def node_keys(self) -> tuple[str, ...]:
        return tuple(n.key for n in self.nodes)


def threshold_edges(
    matrix: CoCitationMatrix,
    min_cocite: int,
    keep_isolated: bool = False,
) -> CoCitationGraph:
    """Retain cells with frequency >= min_cocite as edges. Nodes with no
    surviving edge are dropped unless keep_isolated is set."""
    if min_cocite < 1:
        raise ValueError("min_cocite must be >= 1")
    kept = sorted((a, b, w) for (a, b), w in matrix.cells.items() if w >= min_cocite)
    if keep_isolated:
        node_keys = list(matrix.keys)
    else:
        node_keys = sorted({k for a, b, _ in kept for k in (a, b)})
    nodes = tuple(
        GraphNode(key=k, label=matrix.labels.get(k, k), citations=matrix.counts.get(k, 0))
        for k in node_keys
    )
    edges = tuple(GraphEdge(source=a, target=b, weight=w) for a, b, w in kept)
    return CoCitationGraph(nodes=nodes, edges=edges, threshold=min_cocite,
                           keep_isolated=keep_isolated)


MATRIX_FORMAT = "cocite-matrix"


def matrix_to_json(matrix: CoCitationMatrix) -> str:
    doc = {
        "format": MATRIX_FORMAT,
        "version": 1,
        "nodes": [
            {"key": k, "label": matrix.labels.get(k, k), "citations": matrix.counts.get(k, 0)}
            for k in matrix.keys
        ],
        "cells": [
            {"a": a, "b": b, "weight": w} for (a, b), w in sorted(matrix.cells.items())
        ],
    }
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def matrix_from_json(text: str) -> CoCitationMatrix:
    doc = json.loads(text)
    if not isinstance(doc, dict) or doc.get("format") != MATRIX_FORMAT:
        raise ValueError(f"not a {MATRIX_FORMAT} document")
    labels = {n["key"]: n.get("label", n["key"]) for n in doc["nodes"]}
    counts = {n["key"]: n.get("citations", 0) for n in doc["nodes"]}
    cells = {(c["a"], c["b"]): c["weight"] for c in doc.get("cells", ())}
    return CoCitationMatrix(keys=tuple(sorted(labels)), labels=labels,
                            counts=counts, cells=cells)


def matrix_to_tsv(matrix: CoCitationMatrix) -> str:
    """Sorted sparse triples: key_a, key_b, co-citation frequency."""
    lines = ["# key_a\tkey_b\tcocitations"]
    lines.extend(f"{a}\t{b}\t{w}" for (a, b), w in sorted(matrix.cells.items()))
    return "\n".join(lines) + "\n"
