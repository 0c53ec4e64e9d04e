"""Exception types raised across cellkit."""


class CellkitError(Exception):
    """Base class for all library errors."""


class InvalidGeneratorError(CellkitError, ValueError):
    pass


class RankMismatchError(CellkitError, ValueError):
    pass


class ResourceLimitError(CellkitError):
    """A computation was requested above a configured size bound."""


class ParityError(CellkitError, ValueError):
    pass


class NotASymbolPartitionError(CellkitError, ValueError):
    pass


class DuplicateEntryError(CellkitError, ValueError):
    pass


class ConventionError(CellkitError):
    """An exactness guardrail tripped (e.g. a Laurent division left a remainder)."""
