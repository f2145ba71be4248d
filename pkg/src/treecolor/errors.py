"""Error types raised across the package.

Each class corresponds to one named failure mode of the public operations;
all derive from TreeColorError so callers can catch broadly.
"""


class TreeColorError(ValueError):
    pass


class NotPrefixClosed(TreeColorError):
    pass


class NotAVertex(TreeColorError):
    pass


class TooSmall(TreeColorError):
    pass


class NotLaminar(TreeColorError):
    pass


class WrongCardinality(TreeColorError):
    pass


class PivotMissing(TreeColorError):
    pass


class NotEdgeDisjoint(TreeColorError):
    pass


class SubtreeTooSmall(TreeColorError):
    pass


class LengthMismatch(TreeColorError):
    pass


class ImproperColoring(TreeColorError):
    pass


class ZeroRoot(TreeColorError):
    pass


class ZeroEntry(TreeColorError):
    pass


class TooShort(TreeColorError):
    pass


class DimensionTooLarge(TreeColorError):
    pass


class Disconnected(TreeColorError):
    pass


class NotAVineColoring(TreeColorError):
    pass


class NotALeaf(TreeColorError):
    pass


class NoMatch(TreeColorError):
    pass


class OutOfRange(TreeColorError):
    pass


class TooLarge(TreeColorError):
    pass


class BoundExceeded(TreeColorError):
    pass
