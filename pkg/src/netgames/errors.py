"""Exception hierarchy shared by every module of the package."""


class NetGamesError(Exception):
    """Base class for all errors raised by :mod:`netgames`."""


class ShapeError(NetGamesError, ValueError):
    """Matrix or interface dimensions do not line up."""


class EntryOverflowError(NetGamesError, OverflowError):
    """A natural-number matrix entry exceeded the configured cap."""


class BoundExceededError(NetGamesError):
    """An exhaustive search was asked to go beyond its configured bound.

    ``size`` is the size that was requested and ``bound`` the limit in force.
    """

    def __init__(self, message, size=None, bound=None):
        super().__init__(message)
        self.size = size
        self.bound = bound


class MonoidLawError(NetGamesError, ValueError):
    """A candidate monoid failed associativity, commutativity or unitality."""
