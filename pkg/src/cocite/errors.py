"""Exception types shared across the toolkit."""


class CocitError(Exception):
    """Base class for every error this package raises on purpose."""


class MalformedRecord(CocitError):
    """A record in a field-tagged export file violates the format."""

    def __init__(self, line_no: int, reason: str):
        super().__init__(f"line {line_no}: {reason}")
        self.line_no = line_no
        self.reason = reason


class QuerySyntaxError(CocitError):
    """A keyword query string cannot be parsed."""

    def __init__(self, position: int, expected: str):
        super().__init__(f"position {position}: expected {expected}")
        self.position = position
        self.expected = expected


class UnparseableRef(CocitError):
    """A cited-reference string has no author token and cannot be keyed."""

    def __init__(self, raw: str):
        super().__init__(f"unparseable cited reference: {raw!r}")
        self.raw = raw


class AliasTableError(CocitError):
    """An alias table file is malformed or its rules are not idempotent."""


class InvalidTarget(CocitError):
    """A coverage target lies outside the half-open interval (0, 1]."""


class DiagonalUndefined(CocitError):
    """A co-citation matrix was asked for a diagonal cell, which has no value."""


class UnsupportedFormat(CocitError):
    """An unknown graph export format was requested."""


class ConfigError(CocitError):
    """A pipeline configuration (flags or config file) is invalid."""
