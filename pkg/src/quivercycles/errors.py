"""Exception hierarchy shared across the package.

The CLI maps these onto exit codes: UsageError -> 2, everything else
derived from QuiverError -> 1.
"""


class QuiverError(Exception):
    """Base class for all domain errors raised by this package."""


class UsageError(QuiverError):
    """Malformed input: bad vertex labels, invalid sequences, unreadable documents."""


class ConstraintError(QuiverError):
    """A stated precondition or parameter constraint is violated.

    The message names the violated predicate.
    """


class NotInFamilyError(ConstraintError):
    """A quiver failed the operational membership test of a parametric family."""


class UnsupportedClassError(ConstraintError):
    """A 3-vertex quiver is outside the class the descent machinery supports."""


class TranscriptionError(QuiverError):
    """A hard-coded fixture failed its build-time self-verification."""


class IsoSearchLimitError(ConstraintError):
    """Isomorphism search was requested for more vertices than supported."""
