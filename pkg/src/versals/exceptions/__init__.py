class ImproperlyConfigured(Exception):
    """Raise for incorrect suite configuration."""

    pass


class ValidationError(Exception):
    """Raise for invalid hypergraphs, vertices, edge indices or parameters."""

    pass


class ParseError(ValidationError):
    """Raise for malformed `.hg` input; `line` is 1-based."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class NotAVersalError(ValidationError):
    """Raise when a set is not a versal of the requested edge"""

    pass


class EnumerationLimitError(Exception):
    """Raise when an enumeration cap or feasibility limit is exceeded."""

    pass


class HypothesisError(Exception):
    """Raise when a check is refused for an input outside its hypothesis"""

    pass
