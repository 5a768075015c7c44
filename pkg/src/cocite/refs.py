"""Cited-reference strings: parsing, canonical document keys, alias merging.

Citation indexes code the same cited document in many spellings (author
initials, journal abbreviations, edition wording). Counting requires one
canonical identity per document, so raw strings are parsed into fields,
keyed by deterministic rules, and residual variants are merged through a
user-curated alias table. The keying rules:

* only the FIRST author initial enters the key ("BARNEY J" == "BARNEY JB")
* when both a volume and a first page are present they dominate the key
  and the source is left out of it, because journal-name abbreviations
  are the most variant-prone part of a reference
* otherwise the key is author, year, and normalized source
* refs with no 4-digit year are keyed under year 0000 and surfaced by the
  variant report instead of being dropped
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

from .errors import AliasTableError, UnparseableRef
from .records import Corpus

_YEAR_RE = re.compile(r"\d{4}")
_VOLUME_RE = re.compile(r"V(\d+)")
_PAGE_RE = re.compile(r"P(\d+)(?:-\S*)?")


@dataclass(frozen=True)
class CitedRef:
    """A parsed cited-reference string; all text fields are normalized
    (uppercased, periods stripped, whitespace collapsed)."""

    surname: str
    initials: str = ""
    year: int | None = None
    volume: int | None = None
    first_page: str | None = None
    source: str = ""
    raw: str = ""


@dataclass(frozen=True)
class DocKey:
    """Canonical identity of a cited document. Equality and hashing use the
    key alone; the display label is presentation only."""

    key: str
    display_label: str = field(default="", compare=False)


def _norm(text: str) -> str:
    return re.sub(r"\s+", " ", text.replace(".", "").upper()).strip()


def parse_cited_ref(raw: str) -> CitedRef:
    """Split a comma-separated cited-reference string into fields.

    Token 1 is the author (its last word becomes the initials when it is
    1-3 letters); the first 4-digit token is the year; ``V``+digits is the
    volume; ``P``+digits (or a digit range) is the first page; whatever
    remains after the year becomes the source.
    """
    tokens = [t.strip() for t in raw.split(",")]
    if not tokens or not tokens[0].strip():
        raise UnparseableRef(raw)
    author = _norm(tokens[0])
    if not author:
        raise UnparseableRef(raw)
    words = author.split()
    if len(words) >= 2 and len(words[-1]) <= 3 and words[-1].isalpha():
        surname = " ".join(words[:-1])
        initials = words[-1]
    else:
        surname = author
        initials = ""

    rest = [_norm(t) for t in tokens[1:]]
    year: int | None = None
    year_idx = -1
    for idx, tok in enumerate(rest):
        if _YEAR_RE.fullmatch(tok):
            year = int(tok)
            year_idx = idx
            break

    volume: int | None = None
    first_page: str | None = None
    source_parts: list[str] = []
    for idx, tok in enumerate(rest):
        if idx == year_idx or not tok:
            continue
        if volume is None:
            m = _VOLUME_RE.fullmatch(tok)
            if m:
                volume = int(m.group(1))
                continue
        if first_page is None:
            m = _PAGE_RE.fullmatch(tok)
            if m:
                first_page = m.group(1)
                continue
        if idx > year_idx:
            source_parts.append(tok)

    return CitedRef(
        surname=surname,
        initials=initials,
        year=year,
        volume=volume,
        first_page=first_page,
        source=" ".join(source_parts),
        raw=raw,
    )


class AliasTable:
    """Ordered key-rewrite rules merging coding variants the rules miss.

    Rules apply first-match-wins and are validated at load time so that
    applying the table twice equals applying it once.
    """

    def __init__(self, rules: Iterable[tuple[str, str]] = ()):
        self._rules: tuple[tuple[str, str], ...] = tuple(rules)
        for i, (match, replacement) in enumerate(self._rules, start=1):
            if not match or not replacement:
                raise AliasTableError(f"rule {i}: empty match or replacement key")
            resolved = self.resolve(replacement)
            if resolved != replacement:
                raise AliasTableError(
                    f"rule {i}: replacement {replacement!r} is itself rewritten "
                    f"to {resolved!r}; the table would not be idempotent"
                )

    @property
    def rules(self) -> tuple[tuple[str, str], ...]:
        return self._rules

    def __len__(self) -> int:
        return len(self._rules)

    def resolve(self, key: str) -> str:
        for match, replacement in self._rules:
            if match == key:
                return replacement
        return key

    @classmethod
    def from_text(cls, text: str) -> "AliasTable":
        rules = []
        for line_no, line in enumerate(text.splitlines(), start=1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            if "=>" not in stripped:
                raise AliasTableError(f"line {line_no}: expected 'match-key => replacement-key'")
            match, _, replacement = stripped.partition("=>")
            rules.append((match.strip(), replacement.strip()))
        return cls(rules)

    @classmethod
    def load(cls, path: str | Path) -> "AliasTable":
        return cls.from_text(Path(path).read_text(encoding="utf-8"))


EMPTY_ALIASES = AliasTable()


def _author_short(ref: CitedRef) -> str:
    if ref.initials:
        return f"{ref.surname} {ref.initials[0]}"
    return ref.surname


def _label_from_ref(ref: CitedRef) -> str:
    if ref.initials:
        author = f"{ref.surname.title()} {ref.initials[0]}"
    else:
        author = ref.surname.title()
    parts = [author]
    if ref.year is not None:
        parts.append(str(ref.year))
    if ref.source:
        parts.append(ref.source.title())
    return ", ".join(parts)


def _label_from_key(key: str) -> str:
    segments = key.split("|")
    author = segments[0].title() if segments[0] else key
    if len(segments) >= 2 and segments[0]:
        # keep a single-letter initial uppercase after title-casing
        words = segments[0].split()
        if len(words) >= 2 and len(words[-1]) == 1:
            author = " ".join(w.title() for w in words[:-1]) + " " + words[-1]
    parts = [author]
    if len(segments) >= 2 and segments[1] not in ("", "0000"):
        parts.append(segments[1].lstrip("0") or segments[1])
    if len(segments) == 3 and segments[2]:
        parts.append(segments[2].title())
    return ", ".join(parts)


def canonicalize(ref: CitedRef, aliases: AliasTable = EMPTY_ALIASES) -> DocKey:
    """Deterministic, idempotent canonical key for a parsed reference."""
    year_part = f"{ref.year:04d}" if ref.year is not None else "0000"
    author = _author_short(ref)
    if ref.volume is not None and ref.first_page is not None:
        key = f"{author}|{year_part}|V{ref.volume}|P{ref.first_page}"
    else:
        key = f"{author}|{year_part}|{ref.source}"
    resolved = aliases.resolve(key)
    if resolved != key:
        return DocKey(key=resolved, display_label=_label_from_key(resolved))
    return DocKey(key=key, display_label=_label_from_ref(ref))


def is_volume_page_key(key: str) -> bool:
    """True for keys of the volume+page form (4 segments)."""
    segments = key.split("|")
    return (
        len(segments) == 4
        and segments[2].startswith("V")
        and segments[3].startswith("P")
    )


@dataclass(frozen=True)
class VariantCluster:
    """Distinct keys sharing (author, year) that look like coding variants."""

    author: str
    year: int | None
    keys: tuple[str, ...]

    @property
    def size(self) -> int:
        return len(self.keys)


@dataclass(frozen=True)
class VariantReport:
    clusters: tuple[VariantCluster, ...]
    undated_keys: tuple[str, ...]
    unparseable: tuple[str, ...]


def variant_report(corpus: Corpus, aliases: AliasTable = EMPTY_ALIASES) -> VariantReport:
    """Group refs sharing (surname + first initial, year) whose keys differ
    only in source spelling or in a missing volume/page, for alias curation.

    Pairs that both carry a volume and page are treated as genuinely
    different documents and are not reported. Clusters are sorted by size,
    largest first.
    """
    groups: dict[tuple[str, int | None], set[str]] = {}
    undated: set[str] = set()
    unparseable: list[str] = []
    for rec in corpus.records:
        for raw in rec.cited_raw:
            try:
                ref = parse_cited_ref(raw)
            except UnparseableRef:
                unparseable.append(raw)
                continue
            dk = canonicalize(ref, aliases)
            groups.setdefault((_author_short(ref), ref.year), set()).add(dk.key)
            if ref.year is None:
                undated.add(dk.key)

    clusters = []
    for (author, year), keys in groups.items():
        source_keyed = {k for k in keys if not is_volume_page_key(k)}
        if source_keyed and len(keys) >= 2:
            clusters.append(VariantCluster(author=author, year=year, keys=tuple(sorted(keys))))
    clusters.sort(key=lambda c: (-c.size, c.author, c.year or 0))
    return VariantReport(
        clusters=tuple(clusters),
        undated_keys=tuple(sorted(undated)),
        unparseable=tuple(unparseable),
    )
