"""Exception taxonomy shared by every module.

Exit-code mapping for the CLI: InputError (and subclasses) -> 2,
ResourceLimitError -> 3.
"""


class ArithdynError(Exception):
    """Base class for all library errors."""


class InputError(ArithdynError):
    """Malformed or mathematically invalid input."""


class PreconditionError(InputError):
    """A stated hypothesis of an operation fails on the given data.

    Kept distinct from plain InputError so callers can tell "you typed it
    wrong" apart from "the theorem's hypothesis does not hold here".
    """


class ResourceLimitError(ArithdynError):
    """A configured cap (degree, enumeration, table size, BFS) was exceeded."""
