"""Exception hierarchy shared by the library and the command-line front end."""


class IFError(ValueError):
    """Base class for every error raised by ifpsoft."""


class ValidationError(IFError):
    """A value breaks one of the intuitionistic fuzzy invariants."""


class UniverseMismatchError(ValidationError):
    """Two operands are defined over different universes or parameter spaces."""


class ConstraintViolationError(ValidationError):
    """A parameter outside the support carries a non-empty evaluation set."""

    def __init__(self, label, message=None):
        self.label = label
        super().__init__(
            message
            or f"parameter {label!r} has degrees (0, 1) but a non-empty evaluation set"
        )


class DomainError(IFError):
    """An operation was called outside its domain (e.g. an empty universe)."""


class ParseError(IFError):
    """An input document is malformed."""
