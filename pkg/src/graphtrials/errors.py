"""Exception hierarchy shared by all graphtrials modules."""


class GraphTrialsError(Exception):
    """Base class for all errors raised by this package."""


class GraphParseError(GraphTrialsError):
    """Malformed graph text. Carries the 1-based offending line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class NoEvidenceError(GraphTrialsError):
    """The assertion is not provable on this graph (no witness exists)."""


class SearchBudgetExceeded(GraphTrialsError):
    """An exact search exhausted its node budget before deciding."""


class UnreachableError(GraphTrialsError):
    """Target vertex cannot be reached from the source."""


class InvalidEvidenceError(GraphTrialsError):
    """Evidence object does not satisfy its validity predicate for the graph."""


class LayoutError(GraphTrialsError):
    """Layout inputs are inconsistent (bad permutation, unsupported evidence...)."""


class UnrecognizedGistError(GraphTrialsError):
    """The layout matches no mental-model extraction rule; not checkable."""


class DegenerateOverlapError(GraphTrialsError):
    """Two edge segments are collinear and overlapping; crossings undefined."""


class CertificateSchemaError(GraphTrialsError):
    """Certificate document violates the JSON schema or internal consistency."""


class OracleSizeError(GraphTrialsError):
    """Brute-force oracle invoked beyond its guarded instance size."""
