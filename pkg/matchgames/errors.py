"""
matchgames Error Classes

Semantic error classes for callers that want to handle a class of
failure (bad input file, exhausted size cap, violated precondition)
without knowing every individual reason for it.

MatchGamesError is the ancestor of every exception raised by this
package. The CLI maps each branch to an exit code.

.. admonition:: Exception Hierarchy Reference

 |   `Exception`
 |    +-- `MatchGamesError`
 |         +-- `InputError`
 |         +-- `SizeLimitError`
 |         +-- `PreconditionError`
 |              +-- `ShapeMismatchError`
 |              +-- `ArityMismatchError`
 |              +-- `NotSelfAdjointError`
"""


class MatchGamesError(Exception):
    """Abstract error class for all errors originating from this package."""

    def __init__(self, error_message: str):
        super().__init__(error_message)
        #: Human-readable error message, without any prefix.
        self.error_message: str = error_message


class InputError(MatchGamesError):
    """
    Malformed text input or an invalid combinatorial structure
    (self-loop, duplicate edge, endpoint out of range, ...).
    """


class SizeLimitError(MatchGamesError):
    """
    An exponential or LP-based operation was asked to run above its
    configured cap.

    :param what: Which limit was hit, e.g. ``"matching_vertices"``.
    :param size: The requested size.
    :param limit: The configured cap.
    """
    def __init__(self, what: str, size: int, limit: int):
        super().__init__(f"{what}: size {size} exceeds limit {limit}")
        self.what = what
        self.size = size
        self.limit = limit


class PreconditionError(MatchGamesError):
    """An operation's documented precondition does not hold for its inputs."""


class ShapeMismatchError(PreconditionError):
    """A correlation, strategy or family does not fit the game or graph it is used with."""


class ArityMismatchError(PreconditionError):
    """Two noncommutative polynomials over different generator counts were combined."""


class NotSelfAdjointError(PreconditionError):
    """A sum-of-squares term is not self-adjoint."""
