"""Command-line pipeline over the toolkit.

Subcommands: parse, filter, count, threshold, cocite, graph, metrics,
report, sweep. Every stage writes its artifact to files (with --out) or to
stdout, so any stage can be re-run independently and the whole pipeline is
reproducible byte for byte.

Exit codes: 0 success, 1 input/parse error, 2 invalid query,
3 invalid configuration, 4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import logging
import re
import sys
from contextlib import contextmanager
from dataclasses import dataclass
from json import JSONDecodeError, loads as json_loads
from pathlib import Path

from . import __version__
from .citations import (
    CitationIndex,
    citations_from_json,
    citations_to_json,
    citations_to_tsv,
    count_citations,
    coverage_percent,
    min_citations_for_coverage,
    select_by_min_citations,
    threshold_to_json,
    threshold_to_tsv,
)
from .cocitation import (
    CoCitationMatrix,
    build_cocitation,
    matrix_from_json,
    matrix_to_json,
    matrix_to_tsv,
    threshold_edges,
)
from .errors import (
    AliasTableError,
    CocitError,
    ConfigError,
    InvalidTarget,
    MalformedRecord,
    QuerySyntaxError,
    UnsupportedFormat,
)
from .exporters import EXPORT_FORMATS, EXTENSIONS, export_graph, graph_from_json
from .metrics import compute_metrics, metrics_to_json, metrics_to_tsv
from .query import filter_corpus, parse_query
from .records import Corpus, Provenance, corpus_from_json, corpus_to_json, parse_corpus
from .refs import EMPTY_ALIASES, AliasTable

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_QUERY = 2
EXIT_CONFIG = 3
EXIT_INTERNAL = 4


class _ArgumentParser(argparse.ArgumentParser):
    """argparse that reports usage problems through our exit-code scheme."""

    def error(self, message):  # noqa: A003 - argparse API
        raise ConfigError(message)


@contextmanager
def _stage(name: str):
    """Tag errors with the pipeline stage they came from."""
    try:
        yield
    except (CocitError, OSError) as exc:
        exc.stage = name
        raise


# ---------------------------------------------------------------------------
# input loading


def _read_text(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _corpus_from_text(text: str, *, strict: bool, name: str) -> Corpus:
    head = text.lstrip()[:2]
    if head == "FF":
        return parse_corpus(text, strict=strict, source_name=name)
    if head[:1] == "{":
        try:
            return corpus_from_json(text)
        except (ValueError, KeyError) as exc:
            raise MalformedRecord(1, f"{name}: {exc}") from exc
    raise MalformedRecord(1, f"{name}: unrecognized input (expected export header or JSON)")


def _load_corpus(paths: list[str], *, strict: bool) -> Corpus:
    merged: list = []
    sources: list[str] = []
    for path in paths:
        corpus = _corpus_from_text(_read_text(path), strict=strict, name=path)
        merged.extend(corpus.records)
        sources.extend(corpus.provenance.sources or (path,))
    try:
        return Corpus(records=tuple(merged), provenance=Provenance(sources=tuple(sources)))
    except ValueError as exc:
        raise MalformedRecord(0, str(exc)) from exc


def _load_json_artifact(path: str, expected: str, loader):
    text = _read_text(path)
    try:
        return loader(text)
    except (ValueError, KeyError, TypeError) as exc:
        raise MalformedRecord(1, f"{path}: not a valid {expected} file ({exc})") from exc


def _sniff_format(text: str) -> str | None:
    if text.lstrip()[:2] == "FF":
        return "export"
    try:
        doc = json_loads(text)
    except JSONDecodeError:
        return None
    return doc.get("format") if isinstance(doc, dict) else None


def _load_aliases(path: str | None) -> AliasTable:
    if not path:
        return EMPTY_ALIASES
    return AliasTable.load(path)


# ---------------------------------------------------------------------------
# configuration

_CONFIG_KEYS = {
    "input": ("inputs", "paths"),
    "query": ("query", "str"),
    "aliases": ("aliases", "str"),
    "min_citations": ("min_citations", "int"),
    "coverage": ("coverage", "float"),
    "min_cocite": ("min_cocite", "int"),
    "keep_isolated": ("keep_isolated", "bool"),
    "format": ("format", "list"),
    "out": ("out", "str"),
    "strict": ("strict", "bool"),
    "range": ("cocite_range", "str"),
}

_TRUE = {"true", "yes", "on", "1"}
_FALSE = {"false", "no", "off", "0"}


def _parse_config_text(text: str) -> dict[str, str]:
    values: dict[str, str] = {}
    for line_no, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if "=" not in stripped:
            raise ConfigError(f"config line {line_no}: expected 'key = value'")
        key, _, value = stripped.partition("=")
        key = key.strip()
        if key not in _CONFIG_KEYS:
            raise ConfigError(f"config line {line_no}: unknown key {key!r}")
        values[key] = value.strip()
    return values


def _cast_config(key: str, kind: str, raw: str):
    try:
        if kind == "int":
            return int(raw)
        if kind == "float":
            return float(raw)
        if kind == "bool":
            lowered = raw.lower()
            if lowered in _TRUE:
                return True
            if lowered in _FALSE:
                return False
            raise ValueError(f"not a boolean: {raw!r}")
        if kind == "paths":
            return raw.split()
        if kind == "list":
            return [part for chunk in raw.split() for part in chunk.split(",") if part]
        return raw
    except ValueError as exc:
        raise ConfigError(f"config key {key!r}: {exc}") from exc


def _apply_config_file(args: argparse.Namespace) -> None:
    path = getattr(args, "config", None)
    if not path:
        return
    values = _parse_config_text(_read_text(path))
    for key, raw in values.items():
        attr, kind = _CONFIG_KEYS[key]
        if not hasattr(args, attr):
            continue  # key not relevant to this subcommand
        current = getattr(args, attr)
        if current is None or current == []:
            setattr(args, attr, _cast_config(key, kind, raw))


def _require_inputs(args) -> list[str]:
    inputs = getattr(args, "inputs", None) or []
    if not inputs:
        raise ConfigError("no input file given")
    return inputs


def _threshold_choice(args) -> tuple[int | None, float | None]:
    min_citations = getattr(args, "min_citations", None)
    coverage = getattr(args, "coverage", None)
    if (min_citations is None) == (coverage is None):
        raise ConfigError("exactly one of --min-citations / --coverage must be set")
    if min_citations is not None and min_citations < 1:
        raise ConfigError("--min-citations must be >= 1")
    return min_citations, coverage


def _select(index: CitationIndex, min_citations: int | None, coverage: float | None):
    if min_citations is not None:
        return select_by_min_citations(index, min_citations)
    return min_citations_for_coverage(index, coverage)


def _formats(args, default: tuple[str, ...]) -> tuple[str, ...]:
    raw = getattr(args, "format", None)
    if not raw:
        return default
    formats = tuple(part for chunk in raw for part in chunk.split(",") if part)
    for fmt in formats:
        if fmt not in EXPORT_FORMATS:
            raise ConfigError(
                f"unknown format {fmt!r} (expected one of {', '.join(EXPORT_FORMATS)})"
            )
    return formats


def _out_dir(args) -> Path | None:
    out = getattr(args, "out", None)
    if out is None:
        return None
    path = Path(out)
    path.mkdir(parents=True, exist_ok=True)
    return path


def _emit(out: Path | None, filename: str, content: str) -> None:
    if out is None:
        sys.stdout.write(content)
    else:
        (out / filename).write_text(content, encoding="utf-8")


def _empty_matrix() -> CoCitationMatrix:
    return CoCitationMatrix(keys=(), labels={}, counts={}, cells={})


# ---------------------------------------------------------------------------
# the pipeline as one operation


@dataclass(frozen=True)
class PipelineConfig:
    """Everything one ``report`` run needs; exactly one of min_citations /
    coverage picks the citation threshold."""

    inputs: tuple[str, ...]
    out_dir: str
    query: str | None = None
    aliases_path: str | None = None
    min_citations: int | None = None
    coverage: float | None = None
    min_cocite: int = 1
    keep_isolated: bool = False
    formats: tuple[str, ...] = EXPORT_FORMATS
    strict: bool = False

    def __post_init__(self) -> None:
        if not self.inputs:
            raise ConfigError("no input file given")
        if (self.min_citations is None) == (self.coverage is None):
            raise ConfigError("exactly one of min_citations / coverage must be set")
        if self.min_citations is not None and self.min_citations < 1:
            raise ConfigError("min_citations must be >= 1")
        if self.min_cocite < 1:
            raise ConfigError("min_cocite must be >= 1")
        for fmt in self.formats:
            if fmt not in EXPORT_FORMATS:
                raise ConfigError(f"unknown format {fmt!r}")


@dataclass(frozen=True)
class PipelineSummary:
    citing_articles: int
    total_refs: int
    distinct_docs: int
    min_citations: int
    selected_docs: int
    covered_refs: int
    coverage_percent: str
    min_cocite: int
    graph_nodes: int
    graph_edges: int

    def render(self) -> str:
        return (
            f"citing articles: {self.citing_articles}\n"
            f"total references: {self.total_refs}\n"
            f"distinct cited documents: {self.distinct_docs}\n"
            f"citation threshold: {self.min_citations}\n"
            f"selected documents: {self.selected_docs}\n"
            f"covered references: {self.covered_refs}\n"
            f"coverage: {self.coverage_percent}%\n"
            f"co-citation edge threshold: {self.min_cocite}\n"
            f"graph nodes: {self.graph_nodes}\n"
            f"graph edges: {self.graph_edges}\n"
        )


def _unparseable_tsv(index: CitationIndex) -> str:
    lines = ["# article_id\traw"]
    lines.extend(f"{a}\t{r}" for a, r in index.unparseable)
    return "\n".join(lines) + "\n"


def run_pipeline(config: PipelineConfig) -> PipelineSummary:
    """Run parse -> filter -> count -> threshold -> cocite -> graph -> metrics,
    writing every intermediate artifact under the output directory."""
    out = Path(config.out_dir)
    out.mkdir(parents=True, exist_ok=True)

    with _stage("parse"):
        corpus = _load_corpus(list(config.inputs), strict=config.strict)
    if config.query:
        with _stage("filter"):
            corpus = filter_corpus(corpus, parse_query(config.query))
    (out / "corpus.json").write_text(corpus_to_json(corpus), encoding="utf-8")

    with _stage("count"):
        aliases = _load_aliases(config.aliases_path)
        index = count_citations(corpus, aliases)
    assert sum(e.count for e in index.entries) == index.total_refs
    (out / "citations.json").write_text(citations_to_json(index), encoding="utf-8")
    (out / "citations.tsv").write_text(citations_to_tsv(index), encoding="utf-8")
    (out / "unparseable.tsv").write_text(_unparseable_tsv(index), encoding="utf-8")

    with _stage("threshold"):
        report = _select(index, config.min_citations, config.coverage)
    (out / "threshold.json").write_text(threshold_to_json(report), encoding="utf-8")
    (out / "threshold.tsv").write_text(threshold_to_tsv(report), encoding="utf-8")

    with _stage("cocite"):
        selected = report.selected_keys()
        matrix = build_cocitation(corpus, selected, aliases) if selected else _empty_matrix()
    (out / "cocitation.json").write_text(matrix_to_json(matrix), encoding="utf-8")
    (out / "cocitation.tsv").write_text(matrix_to_tsv(matrix), encoding="utf-8")

    with _stage("graph"):
        graph = threshold_edges(matrix, config.min_cocite, config.keep_isolated)
        for fmt in config.formats:
            content = export_graph(graph, fmt)
            (out / f"graph{EXTENSIONS[fmt]}").write_text(content, encoding="utf-8")

    with _stage("metrics"):
        mreport = compute_metrics(graph)
    assert sum(m.degree for m in mreport.nodes) == 2 * mreport.edge_count
    (out / "metrics.json").write_text(metrics_to_json(mreport), encoding="utf-8")
    (out / "metrics.tsv").write_text(metrics_to_tsv(mreport), encoding="utf-8")

    return PipelineSummary(
        citing_articles=len(corpus),
        total_refs=index.total_refs,
        distinct_docs=index.distinct_docs,
        min_citations=report.min_citations,
        selected_docs=report.selected_docs,
        covered_refs=report.covered_refs,
        coverage_percent=coverage_percent(report.covered_refs, report.total_refs),
        min_cocite=config.min_cocite,
        graph_nodes=graph.node_count,
        graph_edges=graph.edge_count,
    )


# ---------------------------------------------------------------------------
# subcommand handlers


def _cmd_parse(args) -> int:
    out = _out_dir(args)
    corpus = _load_corpus(_require_inputs(args), strict=bool(args.strict))
    _emit(out, "corpus.json", corpus_to_json(corpus))
    if out is not None:
        print(f"parsed {len(corpus)} records")
    return EXIT_OK


def _cmd_filter(args) -> int:
    out = _out_dir(args)
    if not args.query:
        raise ConfigError("--query is required")
    q = parse_query(args.query)
    corpus = _load_corpus(_require_inputs(args), strict=bool(args.strict))
    filtered = filter_corpus(corpus, q)
    _emit(out, "corpus_filtered.json", corpus_to_json(filtered))
    if out is not None:
        print(f"kept {len(filtered)} of {len(corpus)} records")
    return EXIT_OK


def _cmd_count(args) -> int:
    out = _out_dir(args)
    corpus = _load_corpus(_require_inputs(args), strict=bool(args.strict))
    index = count_citations(corpus, _load_aliases(args.aliases))
    _emit(out, "citations.json", citations_to_json(index))
    if out is not None:
        (out / "citations.tsv").write_text(citations_to_tsv(index), encoding="utf-8")
        (out / "unparseable.tsv").write_text(_unparseable_tsv(index), encoding="utf-8")
        print(f"total references: {index.total_refs}")
        print(f"distinct cited documents: {index.distinct_docs}")
        print(f"unparseable references: {len(index.unparseable)}")
    return EXIT_OK


def _index_from_input(args) -> CitationIndex:
    paths = _require_inputs(args)
    if len(paths) == 1:
        text = _read_text(paths[0])
        if _sniff_format(text) == "cocite-citations":
            return _load_json_artifact(paths[0], "citation index", citations_from_json)
    corpus = _load_corpus(paths, strict=bool(getattr(args, "strict", None)))
    return count_citations(corpus, _load_aliases(getattr(args, "aliases", None)))


def _cmd_threshold(args) -> int:
    out = _out_dir(args)
    min_citations, coverage = _threshold_choice(args)
    index = _index_from_input(args)
    report = _select(index, min_citations, coverage)
    print(f"min_citations: {report.min_citations}")
    print(f"selected_docs: {report.selected_docs}")
    print(f"covered_refs: {report.covered_refs}")
    print(f"total_refs: {report.total_refs}")
    print(f"coverage: {coverage_percent(report.covered_refs, report.total_refs)}%")
    if out is not None:
        (out / "threshold.json").write_text(threshold_to_json(report), encoding="utf-8")
        (out / "threshold.tsv").write_text(threshold_to_tsv(report), encoding="utf-8")
    return EXIT_OK


def _cmd_cocite(args) -> int:
    out = _out_dir(args)
    min_citations, coverage = _threshold_choice(args)
    corpus = _load_corpus(_require_inputs(args), strict=bool(args.strict))
    aliases = _load_aliases(args.aliases)
    index = count_citations(corpus, aliases)
    report = _select(index, min_citations, coverage)
    selected = report.selected_keys()
    matrix = build_cocitation(corpus, selected, aliases) if selected else _empty_matrix()
    _emit(out, "cocitation.json", matrix_to_json(matrix))
    if out is not None:
        (out / "cocitation.tsv").write_text(matrix_to_tsv(matrix), encoding="utf-8")
        print(f"selected documents: {matrix.dimension}")
        print(f"co-cited pairs: {len(matrix.cells)}")
    return EXIT_OK


def _cmd_graph(args) -> int:
    out = _out_dir(args)
    formats = _formats(args, default=("json",))
    if out is None and len(formats) != 1:
        raise ConfigError("writing multiple formats to stdout; use --out DIR")
    min_cocite = args.min_cocite if args.min_cocite is not None else 1
    if min_cocite < 1:
        raise ConfigError("--min-cocite must be >= 1")
    paths = _require_inputs(args)
    matrix = _load_json_artifact(paths[0], "co-citation matrix", matrix_from_json)
    graph = threshold_edges(matrix, min_cocite, bool(args.keep_isolated))
    for fmt in formats:
        content = export_graph(graph, fmt)
        _emit(out, f"graph{EXTENSIONS[fmt]}", content)
    if out is not None:
        print(f"graph nodes: {graph.node_count}")
        print(f"graph edges: {graph.edge_count}")
    return EXIT_OK


def _cmd_metrics(args) -> int:
    out = _out_dir(args)
    paths = _require_inputs(args)
    graph = _load_json_artifact(paths[0], "graph", graph_from_json)
    report = compute_metrics(graph)
    _emit(out, "metrics.json", metrics_to_json(report))
    if out is not None:
        (out / "metrics.tsv").write_text(metrics_to_tsv(report), encoding="utf-8")
        print(f"nodes: {report.node_count}")
        print(f"edges: {report.edge_count}")
        print(f"density: {report.density!r}")
        print(f"components: {report.component_count}")
    return EXIT_OK


def _cmd_report(args) -> int:
    min_citations, coverage = _threshold_choice(args)
    if not args.out:
        raise ConfigError("report requires --out DIR")
    config = PipelineConfig(
        inputs=tuple(_require_inputs(args)),
        out_dir=args.out,
        query=args.query,
        aliases_path=args.aliases,
        min_citations=min_citations,
        coverage=coverage,
        min_cocite=args.min_cocite if args.min_cocite is not None else 1,
        keep_isolated=bool(args.keep_isolated),
        formats=_formats(args, default=EXPORT_FORMATS),
        strict=bool(args.strict),
    )
    summary = run_pipeline(config)
    sys.stdout.write(summary.render())
    return EXIT_OK


_RANGE_RE = re.compile(r"(\d+)\.\.(\d+)$")


def _cmd_sweep(args) -> int:
    out = _out_dir(args)
    raw_range = args.cocite_range
    if not raw_range:
        raise ConfigError("--range LO..HI is required")
    m = _RANGE_RE.match(raw_range.strip())
    if not m:
        raise ConfigError(f"bad range {raw_range!r}; expected LO..HI")
    lo, hi = int(m.group(1)), int(m.group(2))
    if lo < 1 or hi < lo:
        raise ConfigError(f"bad range {raw_range!r}; need 1 <= LO <= HI")

    paths = _require_inputs(args)
    text = _read_text(paths[0]) if len(paths) == 1 else ""
    if len(paths) == 1 and _sniff_format(text) == "cocite-matrix":
        matrix = _load_json_artifact(paths[0], "co-citation matrix", matrix_from_json)
    else:
        min_citations, coverage = _threshold_choice(args)
        corpus = _load_corpus(paths, strict=bool(args.strict))
        aliases = _load_aliases(args.aliases)
        index = count_citations(corpus, aliases)
        report = _select(index, min_citations, coverage)
        selected = report.selected_keys()
        matrix = build_cocitation(corpus, selected, aliases) if selected else _empty_matrix()

    lines = ["# min_cocite\tnodes\tedges"]
    for threshold in range(lo, hi + 1):
        graph = threshold_edges(matrix, threshold, keep_isolated=False)
        lines.append(f"{threshold}\t{graph.node_count}\t{graph.edge_count}")
    table = "\n".join(lines) + "\n"
    sys.stdout.write(table)
    if out is not None:
        (out / "sweep.tsv").write_text(table, encoding="utf-8")
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="cocite",
        description="Citation and co-citation analysis of citation-index export files.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add_command(name: str, help_text: str, func) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text, description=help_text)
        p.add_argument("inputs", nargs="*", metavar="INPUT", help="input file(s)")
        p.add_argument("--config", metavar="FILE",
                       help="plain-text 'key = value' config file; flags override it")
        p.add_argument("--out", metavar="DIR", help="directory for output artifacts")
        p.set_defaults(func=func)
        return p

    def add_strict(p):
        p.add_argument("--strict", action="store_true", default=None,
                       help="abort on malformed records instead of skipping them")

    def add_aliases(p):
        p.add_argument("--aliases", metavar="FILE",
                       help="alias table ('match-key => replacement-key' lines)")

    def add_threshold_flags(p):
        p.add_argument("--min-citations", type=int, metavar="N",
                       help="citation threshold: keep documents cited >= N times")
        p.add_argument("--coverage", type=float, metavar="F",
                       help="pick the largest threshold whose coverage reaches F")

    def add_cocite_flags(p):
        p.add_argument("--min-cocite", type=int, metavar="N",
                       help="edge threshold: keep pairs co-cited >= N times (default 1)")
        p.add_argument("--keep-isolated", action="store_true", default=None,
                       help="keep selected documents with no surviving edge")

    def add_format(p):
        p.add_argument("--format", action="append", metavar="FMT",
                       help="graph export format(s): dot, graphml, edgelist, json")

    p = add_command("parse", "parse export files into canonical corpus JSON", _cmd_parse)
    add_strict(p)

    p = add_command("filter", "keep records matching a boolean keyword query", _cmd_filter)
    add_strict(p)
    p.add_argument("--query", metavar="QUERY", help="boolean query over title/abstract/keywords")

    p = add_command("count", "count citations per canonical document", _cmd_count)
    add_strict(p)
    add_aliases(p)

    p = add_command("threshold", "select the most cited documents", _cmd_threshold)
    add_strict(p)
    add_aliases(p)
    add_threshold_flags(p)

    p = add_command("cocite", "build the raw co-citation matrix", _cmd_cocite)
    add_strict(p)
    add_aliases(p)
    add_threshold_flags(p)

    p = add_command("graph", "extract an edge-thresholded co-citation graph", _cmd_graph)
    add_cocite_flags(p)
    add_format(p)

    add_command("metrics", "degree, density, and components of a graph", _cmd_metrics)

    p = add_command("report", "run the whole pipeline and print a summary", _cmd_report)
    add_strict(p)
    add_aliases(p)
    p.add_argument("--query", metavar="QUERY", help="boolean query over title/abstract/keywords")
    add_threshold_flags(p)
    add_cocite_flags(p)
    add_format(p)

    p = add_command("sweep", "node/edge counts for a range of edge thresholds", _cmd_sweep)
    add_strict(p)
    add_aliases(p)
    add_threshold_flags(p)
    p.add_argument("--range", dest="cocite_range", metavar="LO..HI",
                   help="candidate edge thresholds, inclusive (e.g. 1..10)")

    return parser


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    try:
        parser = build_parser()
        args = parser.parse_args(argv)
        _apply_config_file(args)
        return args.func(args)
    except QuerySyntaxError as exc:
        _report_error(exc, "query")
        return EXIT_QUERY
    except (ConfigError, InvalidTarget, UnsupportedFormat) as exc:
        _report_error(exc, "config")
        return EXIT_CONFIG
    except (MalformedRecord, AliasTableError, OSError) as exc:
        _report_error(exc, "input")
        return EXIT_INPUT
    except (AssertionError, CocitError) as exc:
        _report_error(exc, "internal")
        return EXIT_INTERNAL


def _report_error(exc: BaseException, default_stage: str) -> None:
    stage = getattr(exc, "stage", default_stage)
    print(f"cocite: {stage}: {exc}", file=sys.stderr)


def entrypoint() -> None:
    sys.exit(main())
