"""Citation counting and threshold selection of the most cited documents.

Counts are article-level: a document cited twice in one reference list
still contributes one. The selection step reports coverage, the share of
all reference instances accounted for by the selected documents, which is
how citation thresholds are usually communicated.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal

from .errors import InvalidTarget, UnparseableRef
from .records import Corpus
from .refs import EMPTY_ALIASES, AliasTable, DocKey, canonicalize, parse_cited_ref


@dataclass(frozen=True)
class CitationEntry:
    key: str
    label: str
    citing_ids: tuple[str, ...]  # sorted

    @property
    def count(self) -> int:
        return len(self.citing_ids)


@dataclass(frozen=True)
class CitationIndex:
    """Citation counts per canonical document over one corpus."""

    entries: tuple[CitationEntry, ...]  # sorted by key
    total_refs: int
    unparseable: tuple[tuple[str, str], ...] = ()  # (article id, raw string)

    @property
    def distinct_docs(self) -> int:
        return len(self.entries)

    def counts(self) -> dict[str, int]:
        return {e.key: e.count for e in self.entries}

    def labels(self) -> dict[str, str]:
        return {e.key: e.label for e in self.entries}


def count_citations(corpus: Corpus, aliases: AliasTable = EMPTY_ALIASES) -> CitationIndex:
    """Tally, per canonical document, how many articles cite it.

    Each article's cited documents are deduplicated before counting.
    Unparseable reference strings are excluded from the tally (and from
    total_refs) and reported on the side.
    """
    citing: dict[str, set[str]] = {}
    labels: dict[str, str] = {}
    unparseable: list[tuple[str, str]] = []
    for rec in corpus.records:
        seen: set[str] = set()
        for raw in rec.cited_raw:
            try:
                ref = parse_cited_ref(raw)
            except UnparseableRef:
                unparseable.append((rec.id, raw))
                continue
            dk = canonicalize(ref, aliases)
            if dk.key in seen:
                continue
            seen.add(dk.key)
            citing.setdefault(dk.key, set()).add(rec.id)
            label = dk.display_label or dk.key
            if dk.key not in labels or label < labels[dk.key]:
                labels[dk.key] = label
    entries = tuple(
        CitationEntry(key=key, label=labels[key], citing_ids=tuple(sorted(ids)))
        for key, ids in sorted(citing.items())
    )
    total_refs = sum(len(ids) for ids in citing.values())
    return CitationIndex(entries=entries, total_refs=total_refs, unparseable=tuple(unparseable))


@dataclass(frozen=True)
class SelectedDoc:
    key: str
    label: str
    count: int


@dataclass(frozen=True)
class ThresholdReport:
    """The documents at or above a citation threshold, with coverage."""

    min_citations: int
    selected: tuple[SelectedDoc, ...]  # count descending, then key ascending
    covered_refs: int
    total_refs: int

    @property
    def selected_docs(self) -> int:
        return len(self.selected)

    @property
    def coverage(self) -> float:
        return self.covered_refs / self.total_refs if self.total_refs else 0.0

    def selected_keys(self) -> tuple[DocKey, ...]:
        return tuple(DocKey(key=d.key, display_label=d.label) for d in self.selected)


def select_by_min_citations(index: CitationIndex, min_citations: int) -> ThresholdReport:
    """Every document cited at least ``min_citations`` times."""
    if min_citations < 1:
        raise ValueError("min_citations must be >= 1")
    chosen = [e for e in index.entries if e.count >= min_citations]
    chosen.sort(key=lambda e: (-e.count, e.key))
    selected = tuple(SelectedDoc(key=e.key, label=e.label, count=e.count) for e in chosen)
    return ThresholdReport(
        min_citations=min_citations,
        selected=selected,
        covered_refs=sum(d.count for d in selected),
        total_refs=index.total_refs,
    )


def _quantized(numerator: int, denominator: int) -> Decimal:
    if denominator == 0:
        return Decimal("0")
    ratio = Decimal(numerator) / Decimal(denominator)
    return ratio.quantize(Decimal("0.0001"), rounding=ROUND_HALF_UP)


def min_citations_for_coverage(index: CitationIndex, target: float) -> ThresholdReport:
    """The report for the LARGEST threshold whose coverage reaches ``target``.

    Coverage targets are honored at the 0.01-percentage-point precision the
    reports print, so a target quoted from a published summary (e.g. 0.1995)
    selects the threshold whose rounded coverage matches it.
    """
    if not 0 < target <= 1:
        raise InvalidTarget(f"coverage target must be in (0, 1], got {target}")
    counts = sorted((e.count for e in index.entries), reverse=True)
    if not counts:
        return select_by_min_citations(index, 1)
    goal = Decimal(str(target)).quantize(Decimal("0.0001"), rounding=ROUND_HALF_UP)
    covered = 0
    i = 0
    for threshold in range(counts[0], 0, -1):
        while i < len(counts) and counts[i] >= threshold:
            covered += counts[i]
            i += 1
        if _quantized(covered, index.total_refs) >= goal:
            return select_by_min_citations(index, threshold)
    return select_by_min_citations(index, 1)


def coverage_percent(covered_refs: int, total_refs: int) -> str:
    """Coverage as a percentage, rounded half-up to two decimals (e.g. '19.95')."""
    if total_refs == 0:
        return "0.00"
    pct = Decimal(covered_refs) * 100 / Decimal(total_refs)
    return str(pct.quantize(Decimal("0.01"), rounding=ROUND_HALF_UP))


CITATIONS_FORMAT = "cocite-citations"
THRESHOLD_FORMAT = "cocite-threshold"


def citations_to_json(index: CitationIndex) -> str:
    doc = {
        "format": CITATIONS_FORMAT,
        "version": 1,
        "total_refs": index.total_refs,
        "distinct_docs": index.distinct_docs,
        "entries": [
            {"key": e.key, "label": e.label, "count": e.count, "citing_ids": list(e.citing_ids)}
            for e in index.entries
        ],
        "unparseable": [{"article_id": a, "raw": r} for a, r in index.unparseable],
    }
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def citations_from_json(text: str) -> CitationIndex:
    doc = json.loads(text)
    if not isinstance(doc, dict) or doc.get("format") != CITATIONS_FORMAT:
        raise ValueError(f"not a {CITATIONS_FORMAT} document")
    entries = tuple(
        CitationEntry(key=e["key"], label=e.get("label", e["key"]),
                      citing_ids=tuple(e["citing_ids"]))
        for e in doc["entries"]
    )
    unparseable = tuple((u["article_id"], u["raw"]) for u in doc.get("unparseable", ()))
    return CitationIndex(entries=entries, total_refs=doc["total_refs"], unparseable=unparseable)


def citations_to_tsv(index: CitationIndex) -> str:
    """Full ranked citation table, most cited first."""
    rows = sorted(index.entries, key=lambda e: (-e.count, e.key))
    lines = ["# citations\tkey\tlabel"]
    lines.extend(f"{e.count}\t{e.key}\t{e.label}" for e in rows)
    return "\n".join(lines) + "\n"


def threshold_to_json(report: ThresholdReport) -> str:
    doc = {
        "format": THRESHOLD_FORMAT,
        "version": 1,
        "min_citations": report.min_citations,
        "selected_docs": report.selected_docs,
        "covered_refs": report.covered_refs,
        "total_refs": report.total_refs,
        "coverage": report.coverage,
        "selected": [
            {"key": d.key, "label": d.label, "count": d.count} for d in report.selected
        ],
    }
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def threshold_from_json(text: str) -> ThresholdReport:
    doc = json.loads(text)
    if not isinstance(doc, dict) or doc.get("format") != THRESHOLD_FORMAT:
        raise ValueError(f"not a {THRESHOLD_FORMAT} document")
    selected = tuple(
        SelectedDoc(key=d["key"], label=d.get("label", d["key"]), count=d["count"])
        for d in doc["selected"]
    )
    return ThresholdReport(
        min_citations=doc["min_citations"],
        selected=selected,
        covered_refs=doc["covered_refs"],
        total_refs=doc["total_refs"],
    )


def threshold_to_tsv(report: ThresholdReport) -> str:
    """Selected documents as a citations/key/label table, most cited first."""
    lines = ["# citations\tkey\tlabel"]
    lines.extend(f"{d.count}\t{d.key}\t{d.label}" for d in report.selected)
    return "\n".join(lines) + "\n"
