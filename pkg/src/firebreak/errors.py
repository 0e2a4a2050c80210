"""Exception types shared across the toolkit."""


class FirebreakError(Exception):
    """Base class for all library errors."""


class GraphFormatError(FirebreakError):
    """A text representation (graph, permutation, subtree, td) failed to parse."""


class NotATreeError(FirebreakError):
    """A tree-only solver was handed a graph that is not a tree."""


class NotSplitError(FirebreakError):
    """The graph admits no split partition."""


class InvalidDecompositionError(FirebreakError):
    """A (nice) tree decomposition violates one of its axioms."""


class GuardExceededError(FirebreakError):
    """A configured work guard (subset count, width, leafage) was exceeded."""


class NotKConnectedError(FirebreakError):
    """Shredder enumeration requires a k-connected input graph."""
