"""cocite: reconstruct the intellectual structure of a research corpus.

Parses field-tagged citation-index exports, normalizes cited references
into canonical document keys, counts citations, selects an intellectual
base by citation threshold, builds raw co-citation matrices, extracts
edge-thresholded co-citation graphs, and computes basic network metrics.
"""

__version__ = "0.1.0"

from .citations import (
    CitationEntry,
    CitationIndex,
    SelectedDoc,
    ThresholdReport,
    count_citations,
    coverage_percent,
    min_citations_for_coverage,
    select_by_min_citations,
)
from .cocitation import (
    CoCitationGraph,
    CoCitationMatrix,
    GraphEdge,
    GraphNode,
    build_cocitation,
    threshold_edges,
)
from .errors import (
    AliasTableError,
    CocitError,
    ConfigError,
    DiagonalUndefined,
    InvalidTarget,
    MalformedRecord,
    QuerySyntaxError,
    UnparseableRef,
    UnsupportedFormat,
)
from .exporters import EXPORT_FORMATS, export_graph, graph_from_json
from .metrics import MetricsReport, NodeMetrics, compute_metrics
from .query import And, Or, Phrase, Wildcard, evaluate, filter_corpus, parse_query
from .records import (
    ArticleRecord,
    Corpus,
    Provenance,
    corpus_from_json,
    corpus_to_json,
    parse_corpus,
    write_corpus_text,
)
from .refs import (
    AliasTable,
    CitedRef,
    DocKey,
    VariantCluster,
    VariantReport,
    canonicalize,
    parse_cited_ref,
    variant_report,
)

__all__ = [
    "AliasTable",
    "AliasTableError",
    "And",
    "ArticleRecord",
    "CitationEntry",
    "CitationIndex",
    "CitedRef",
    "CoCitationGraph",
    "CoCitationMatrix",
    "CocitError",
    "ConfigError",
    "Corpus",
    "DiagonalUndefined",
    "DocKey",
    "EXPORT_FORMATS",
    "GraphEdge",
    "GraphNode",
    "InvalidTarget",
    "MalformedRecord",
    "MetricsReport",
    "NodeMetrics",
    "Or",
    "Phrase",
    "Provenance",
    "QuerySyntaxError",
    "SelectedDoc",
    "ThresholdReport",
    "UnparseableRef",
    "UnsupportedFormat",
    "VariantCluster",
    "VariantReport",
    "Wildcard",
    "build_cocitation",
    "canonicalize",
    "compute_metrics",
    "corpus_from_json",
    "corpus_to_json",
    "count_citations",
    "coverage_percent",
    "evaluate",
    "export_graph",
    "filter_corpus",
    "graph_from_json",
    "min_citations_for_coverage",
    "parse_cited_ref",
    "parse_corpus",
    "parse_query",
    "select_by_min_citations",
    "threshold_edges",
    "variant_report",
    "write_corpus_text",
]
