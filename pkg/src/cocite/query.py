"""Boolean keyword queries over title, abstract, and keywords.

Grammar: double-quoted phrases, bare words, trailing-asterisk wildcards,
AND / OR (case-insensitive, AND binds tighter), and parentheses.
Phrases match as contiguous, case-insensitive substrings on word
boundaries; a wildcard matches any token starting with its prefix.
Fields are searched one at a time, never concatenated, so a phrase
cannot straddle the title/abstract boundary.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from .errors import QuerySyntaxError
from .records import ArticleRecord, Corpus

Query = Union["Phrase", "Wildcard", "And", "Or"]


@dataclass(frozen=True)
class Phrase:
    text: str

    def __post_init__(self) -> None:
        if not self.text:
            raise ValueError("empty phrase")


@dataclass(frozen=True)
class Wildcard:
    prefix: str

    def __post_init__(self) -> None:
        if not self.prefix or any(c.isspace() for c in self.prefix):
            raise ValueError(f"bad wildcard prefix: {self.prefix!r}")


@dataclass(frozen=True)
class And:
    children: tuple[Query, ...]


@dataclass(frozen=True)
class Or:
    children: tuple[Query, ...]


@dataclass(frozen=True)
class _Token:
    kind: str  # 'phrase' | 'word' | '(' | ')'
    value: str
    pos: int


_WORD_END = set(' \t\r\n()"')


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
        elif c in "()":
            tokens.append(_Token(c, c, i))
            i += 1
        elif c == '"':
            end = text.find('"', i + 1)
            if end < 0:
                raise QuerySyntaxError(i, "closing '\"'")
            tokens.append(_Token("phrase", text[i + 1:end], i))
            i = end + 1
        else:
            j = i
            while j < n and text[j] not in _WORD_END:
                j += 1
            tokens.append(_Token("word", text[i:j], i))
            i = j
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> _Token | None:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def _pos(self) -> int:
        tok = self.peek()
        return tok.pos if tok else len(self.text)

    def _is_op(self, name: str) -> bool:
        tok = self.peek()
        return tok is not None and tok.kind == "word" and tok.value.upper() == name

    def parse(self) -> Query:
        expr = self.parse_or()
        if self.peek() is not None:
            raise QuerySyntaxError(self._pos(), "end of query or an operator")
        return expr

    def parse_or(self) -> Query:
        children = [self.parse_and()]
        while self._is_op("OR"):
            self.i += 1
            children.append(self.parse_and())
        return children[0] if len(children) == 1 else Or(tuple(children))

    def parse_and(self) -> Query:
        children = [self.parse_term()]
        while self._is_op("AND"):
            self.i += 1
            children.append(self.parse_term())
        return children[0] if len(children) == 1 else And(tuple(children))

    def parse_term(self) -> Query:
        tok = self.peek()
        if tok is None:
            raise QuerySyntaxError(self._pos(), "a phrase, word, or '('")
        if tok.kind == "(":
            self.i += 1
            inner = self.parse_or()
            closing = self.peek()
            if closing is None or closing.kind != ")":
                raise QuerySyntaxError(self._pos(), "')'")
            self.i += 1
            return inner
        if tok.kind == "phrase":
            self.i += 1
            if not tok.value.strip():
                raise QuerySyntaxError(tok.pos, "a nonempty phrase")
            return Phrase(tok.value.strip())
        if tok.kind == "word":
            word = tok.value
            if word.upper() in ("AND", "OR"):
                raise QuerySyntaxError(tok.pos, "an operand, not an operator")
            self.i += 1
            if word.endswith("*"):
                prefix = word[:-1]
                if not prefix or "*" in prefix:
                    raise QuerySyntaxError(tok.pos, "a word before the trailing '*'")
                return Wildcard(prefix)
            if "*" in word:
                raise QuerySyntaxError(tok.pos, "'*' only at the end of a word")
            return Phrase(word)
        raise QuerySyntaxError(tok.pos, "a phrase, word, or '('")


def parse_query(text: str) -> Query:
    """Parse a query string into its expression tree."""
    return _Parser(text).parse()


@lru_cache(maxsize=1024)
def _phrase_pattern(text: str) -> re.Pattern[str]:
    # collapse internal whitespace so a phrase matches across line wrapping;
    # \b-style guards keep "gem" out of "management"
    parts = [re.escape(p) for p in text.split()]
    return re.compile(r"(?<!\w)" + r"\s+".join(parts) + r"(?!\w)", re.IGNORECASE)


def _tokens_of(field: str) -> list[str]:
    return re.findall(r"\w+", field.lower())


def _matches_field(query: Query, field: str) -> bool:
    if isinstance(query, Phrase):
        return bool(_phrase_pattern(query.text).search(field))
    if isinstance(query, Wildcard):
        prefix = query.prefix.lower()
        return any(tok.startswith(prefix) for tok in _tokens_of(field))
    raise TypeError(f"not a leaf: {query!r}")


def evaluate(query: Query, record: ArticleRecord) -> bool:
    """True when the record's title, abstract, or keywords satisfy the query."""
    if isinstance(query, And):
        return all(evaluate(c, record) for c in query.children)
    if isinstance(query, Or):
        return any(evaluate(c, record) for c in query.children)
    fields = [record.title, record.abstract, *record.keywords]
    return any(_matches_field(query, f) for f in fields if f)


def filter_corpus(corpus: Corpus, query: Query) -> Corpus:
    """The subcorpus of records matching the query, original order kept."""
    kept = tuple(rec for rec in corpus.records if evaluate(query, rec))
    return Corpus(records=kept, provenance=corpus.provenance)
