"""Exception types shared across the package."""


class PtsepError(Exception):
    """Base class for every error raised by this package."""


class InvalidDocumentError(PtsepError):
    """An automaton or tower document failed validation."""


class UnknownSymbolError(PtsepError):
    """A word uses a symbol outside the automaton's alphabet."""


class ResourceLimitError(PtsepError):
    """A construction exceeded its configured state or enumeration budget."""


class UndecidedError(PtsepError):
    """The chain exhausted its level budget before reaching a verdict."""


class InfiniteTowerError(PtsepError):
    """An operation that needs a maximal finite tower met an infinite one."""


class NotSeparableError(PtsepError):
    """Separator synthesis was requested for an inseparable pair."""


class NotUpwardClosedError(PtsepError):
    """Piece extraction was requested for a language that is not upward closed."""


class NoTowerError(PtsepError):
    """No tower exists because both languages are empty."""


class AmbiguousMembershipError(PtsepError):
    """A word belongs to both input languages, so towers are unbounded."""


class InvalidParameterError(PtsepError):
    """A family parameter violates the family's constraints."""


class InvalidPathError(PtsepError):
    """A path is not a run of the automaton it was paired with."""


class InvalidTowerError(PtsepError):
    """A tower violates the embedding, alternation, or membership rules."""


class PathNotFoundError(PtsepError):
    """No accepting run exists for a word that was claimed to be accepted."""
