"""Exception types shared across the package."""


class GraphError(ValueError):
    """Domain error: bad vertex, malformed value, violated precondition."""


class ParseError(GraphError):
    """Malformed graph text. Carries the 1-based offending line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class ResourceLimitError(RuntimeError):
    """An enumeration cap was exceeded; raise instead of running forever."""
