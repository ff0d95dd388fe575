"""Exception hierarchy shared across the package."""


class SkillcentError(Exception):
    """Base class for all package-specific errors."""


class ValidationError(SkillcentError):
    """Input data violates a structural invariant (bad game, bad weights, ...)."""


class ParseError(ValidationError):
    """A game or graph file could not be parsed.

    Carries the 1-based line number when known.
    """

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class CapacityError(SkillcentError):
    """The instance exceeds a solver's enumeration or memory budget."""


class ConfigurationError(SkillcentError):
    """Mutually inconsistent inputs (e.g. game and graph of different sizes)."""
