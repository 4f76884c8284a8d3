"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations

__all__ = [
    "TableauError",
    "InvalidTableau",
    "InvalidDiagram",
    "DuplicateValue",
    "ShapeMismatch",
    "LengthMismatch",
    "EntryMultisetMismatch",
    "InvalidZ",
    "TooShort",
    "EmptyTableau",
    "NonpositiveKappa",
    "DomainError",
    "OutsideDiagram",
    "CellCountMismatch",
    "IndexOutOfRange",
    "ConfigError",
    "InvariantViolation",
]


class TableauError(Exception):
    """Base class for all errors raised by tableau_codec."""


class InvalidTableau(TableauError):
    pass


class InvalidDiagram(TableauError):
    pass


class DuplicateValue(TableauError):
    pass


class ShapeMismatch(TableauError):
    pass


class LengthMismatch(TableauError):
    pass


class EntryMultisetMismatch(TableauError):
    pass


class InvalidZ(TableauError):
    pass


class TooShort(TableauError):
    pass


class EmptyTableau(TableauError):
    pass


class NonpositiveKappa(TableauError):
    pass


class DomainError(TableauError, ValueError):
    pass


class OutsideDiagram(TableauError):
    pass


class CellCountMismatch(TableauError):
    pass


class IndexOutOfRange(TableauError, IndexError):
    pass


class ConfigError(TableauError, ValueError):
    pass


class InvariantViolation(TableauError, AssertionError):
    """An embedded runtime check failed; always indicates a bug."""
