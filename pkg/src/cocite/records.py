"""Field-tagged export format: parsing, the corpus model, and canonical writers.

The format is a plain-text, line-oriented export (UTF-8):

* file header line ``FF cocite-export 1``, file terminator line ``EF``
* a record is a sequence of field lines closed by a line ``ER``
* a field line is a 2-character tag, one space, and the value
* tags: ``ID`` record id, ``AU`` one author per line ("Surname, Initials"),
  ``TI`` title, ``SO`` source, ``PY`` year, ``VL`` volume, ``BP`` first page,
  ``DE`` semicolon-separated keywords, ``AB`` abstract, ``CR`` opens the
  cited-reference block
* a continuation line starts with exactly three spaces; after ``TI``/``AB``
  it continues the value, after ``CR`` each such line is ONE raw
  cited-reference string; the CR block ends at the next tag or ``ER``

The canonical writer emits a bare ``CR`` line; the parser also accepts a
value on the ``CR`` line itself as the first reference, which is how most
real citation-index exports are laid out.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import IO, Iterator

from .errors import MalformedRecord

log = logging.getLogger(__name__)

FILE_HEADER = "FF cocite-export 1"
FILE_TERMINATOR = "EF"
RECORD_TERMINATOR = "ER"
CONTINUATION = "   "

KNOWN_TAGS = ("ID", "AU", "TI", "SO", "PY", "VL", "BP", "DE", "AB", "CR")

# tags whose value, if repeated, is overwritten (last occurrence wins)
_SCALAR_TAGS = {"ID", "TI", "SO", "PY", "VL", "BP", "AB"}


@dataclass(frozen=True)
class ArticleRecord:
    """One citing document and the raw strings it cites."""

    id: str
    authors: tuple[str, ...] = ()
    title: str = ""
    source: str = ""
    year: int | None = None
    volume: str | None = None
    first_page: str | None = None
    keywords: tuple[str, ...] = ()
    abstract: str = ""
    cited_raw: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.year is not None and not 1000 <= self.year <= 9999:
            raise ValueError(f"year out of range: {self.year}")


@dataclass(frozen=True)
class Provenance:
    """Where a corpus came from. The timestamp never takes part in equality
    or serialization, so reruns stay byte-identical."""

    sources: tuple[str, ...] = ()
    parsed_at: str | None = field(default=None, compare=False)


@dataclass(frozen=True)
class Corpus:
    """An immutable, ordered collection of article records."""

    records: tuple[ArticleRecord, ...] = ()
    provenance: Provenance = Provenance()

    def __post_init__(self) -> None:
        seen: set[str] = set()
        for rec in self.records:
            if not rec.id:
                raise ValueError("record with empty id")
            if rec.id in seen:
                raise ValueError(f"duplicate record id: {rec.id!r}")
            seen.add(rec.id)

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self) -> Iterator[ArticleRecord]:
        return iter(self.records)


def _now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


class _RecordBuilder:
    """Accumulates field lines for one record."""

    def __init__(self, start_line: int):
        self.start_line = start_line
        self.fields: dict[str, str] = {}
        self.authors: list[str] = []
        self.keywords: list[str] = []
        self.cited_raw: list[str] = []

    def build(self, line_no: int) -> ArticleRecord:
        rec_id = self.fields.get("ID", "").strip()
        if not rec_id:
            raise MalformedRecord(line_no, "record has no ID field")
        year: int | None = None
        if "PY" in self.fields:
            text = self.fields["PY"].strip()
            if not (len(text) == 4 and text.isdigit() and int(text) >= 1000):
                raise MalformedRecord(line_no, f"PY is not a 4-digit year: {text!r}")
            year = int(text)
        return ArticleRecord(
            id=rec_id,
            authors=tuple(self.authors),
            title=self.fields.get("TI", ""),
            source=self.fields.get("SO", ""),
            year=year,
            volume=self.fields.get("VL"),
            first_page=self.fields.get("BP"),
            keywords=tuple(self.keywords),
            abstract=self.fields.get("AB", ""),
            cited_raw=tuple(self.cited_raw),
        )


def _split_keywords(value: str) -> list[str]:
    return [part.strip() for part in value.split(";") if part.strip()]


def parse_corpus(
    source: str | IO[str],
    *,
    strict: bool = False,
    source_name: str | None = None,
) -> Corpus:
    """Parse one field-tagged export into a Corpus.

    ``source`` is either the file content or an open text stream. In strict
    mode any malformed construct raises MalformedRecord; in lenient mode
    (the default) offending records are skipped and logged, because real
    exports routinely contain stray records.
    """
    if hasattr(source, "read"):
        text = source.read()
        name = source_name or getattr(source, "name", None)
    else:
        text = source
        name = source_name
    lines = text.splitlines()

    if not lines or lines[0].rstrip() != FILE_HEADER:
        raise MalformedRecord(1, f"missing file header {FILE_HEADER!r}")

    records: list[ArticleRecord] = []
    seen_ids: set[str] = set()
    builder: _RecordBuilder | None = None
    current_tag: str | None = None
    terminated = False

    def drop(line_no: int, reason: str) -> None:
        nonlocal builder, current_tag
        if strict:
            raise MalformedRecord(line_no, reason)
        log.warning("%s: skipping record (line %d: %s)", name or "<input>", line_no, reason)
        builder = None
        current_tag = None

    for idx, raw_line in enumerate(lines[1:], start=2):
        line = raw_line.rstrip()
        if terminated:
            if line:
                drop(idx, "content after file terminator")
            continue
        if not line:
            continue
        if line == FILE_TERMINATOR:
            if builder is not None:
                drop(idx, "missing record terminator before EF")
            terminated = True
            continue
        if line == RECORD_TERMINATOR:
            if builder is None:
                drop(idx, "ER with no record fields")
                continue
            try:
                rec = builder.build(idx)
            except MalformedRecord as exc:
                drop(idx, exc.reason)
                continue
            if rec.id in seen_ids:
                drop(idx, f"duplicate record id {rec.id!r}")
                continue
            seen_ids.add(rec.id)
            records.append(rec)
            builder = None
            current_tag = None
            continue
        if line.startswith(CONTINUATION):
            value = line[len(CONTINUATION):]
            if builder is None or current_tag is None:
                drop(idx, "continuation line before any field tag")
                continue
            if current_tag == "CR":
                builder.cited_raw.append(value)
            elif current_tag == "AU":
                builder.authors[-1] += " " + value.strip()
            elif current_tag == "DE":
                builder.keywords.extend(_split_keywords(value))
            elif current_tag != "--":
                prev = builder.fields.get(current_tag, "")
                builder.fields[current_tag] = (prev + " " + value.strip()).strip()
            continue

        tag = line[:2]
        if len(line) > 2 and line[2] != " ":
            drop(idx, f"not a field line: {line!r}")
            continue
        value = line[3:]
        if tag not in KNOWN_TAGS:
            if strict:
                raise MalformedRecord(idx, f"unknown field tag {tag!r}")
            # lenient mode keeps the record and ignores the foreign tag,
            # so real exports with extra tags parse without preprocessing
            log.debug("%s: ignoring unknown tag %s at line %d", name or "<input>", tag, idx)
            current_tag = "--"
            if builder is None:
                builder = _RecordBuilder(idx)
            continue
        if builder is None:
            builder = _RecordBuilder(idx)
        current_tag = tag
        if tag == "AU":
            builder.authors.append(value)
        elif tag == "DE":
            builder.keywords.extend(_split_keywords(value))
        elif tag == "CR":
            if value.strip():
                builder.cited_raw.append(value)
        else:
            builder.fields[tag] = value

    if builder is not None:
        drop(len(lines), "missing record terminator at end of input")
    if not terminated:
        if strict:
            raise MalformedRecord(len(lines), f"missing file terminator {FILE_TERMINATOR!r}")
        log.warning("%s: missing file terminator", name or "<input>")

    sources = (name,) if name else ()
    return Corpus(records=tuple(records), provenance=Provenance(sources=sources, parsed_at=_now()))


def write_corpus_text(corpus: Corpus) -> str:
    """Serialize a corpus back to the field-tagged format (canonical form)."""

    def clean(value: str) -> str:
        return value.replace("\n", " ").replace("\r", " ")

    lines = [FILE_HEADER]
    for rec in corpus.records:
        lines.append(f"ID {clean(rec.id)}")
        for author in rec.authors:
            lines.append(f"AU {clean(author)}")
        if rec.title:
            lines.append(f"TI {clean(rec.title)}")
        if rec.source:
            lines.append(f"SO {clean(rec.source)}")
        if rec.year is not None:
            lines.append(f"PY {rec.year:04d}")
        if rec.volume is not None:
            lines.append(f"VL {clean(rec.volume)}")
        if rec.first_page is not None:
            lines.append(f"BP {clean(rec.first_page)}")
        if rec.keywords:
            lines.append("DE " + "; ".join(clean(k) for k in rec.keywords))
        if rec.abstract:
            lines.append(f"AB {clean(rec.abstract)}")
        if rec.cited_raw:
            lines.append("CR")
            for ref in rec.cited_raw:
                lines.append(CONTINUATION + clean(ref))
        lines.append(RECORD_TERMINATOR)
    lines.append(FILE_TERMINATOR)
    return "\n".join(lines) + "\n"


CORPUS_FORMAT = "cocite-corpus"


def record_to_dict(rec: ArticleRecord) -> dict:
    return {
        "id": rec.id,
        "authors": list(rec.authors),
        "title": rec.title,
        "source": rec.source,
        "year": rec.year,
        "volume": rec.volume,
        "first_page": rec.first_page,
        "keywords": list(rec.keywords),
        "abstract": rec.abstract,
        "cited_raw": list(rec.cited_raw),
    }


def record_from_dict(data: dict) -> ArticleRecord:
    return ArticleRecord(
        id=data["id"],
        authors=tuple(data.get("authors", ())),
        title=data.get("title", ""),
        source=data.get("source", ""),
        year=data.get("year"),
        volume=data.get("volume"),
        first_page=data.get("first_page"),
        keywords=tuple(data.get("keywords", ())),
        abstract=data.get("abstract", ""),
        cited_raw=tuple(data.get("cited_raw", ())),
    )


def corpus_to_json(corpus: Corpus) -> str:
    """Canonical JSON for pipeline handoff: stable key order, input order kept."""
    doc = {
        "format": CORPUS_FORMAT,
        "version": 1,
        "provenance": {"sources": list(corpus.provenance.sources)},
        "records": [record_to_dict(r) for r in corpus.records],
    }
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def corpus_from_json(text: str) -> Corpus:
    doc = json.loads(text)
    if not isinstance(doc, dict) or doc.get("format") != CORPUS_FORMAT:
        raise ValueError(f"not a {CORPUS_FORMAT} document")
    sources = tuple(doc.get("provenance", {}).get("sources", ()))
    records = tuple(record_from_dict(d) for d in doc.get("records", ()))
    return Corpus(records=records, provenance=Provenance(sources=sources))
