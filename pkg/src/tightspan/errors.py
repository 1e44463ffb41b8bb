"""Exception types shared across the package."""


class BudgetExceededError(RuntimeError):
    """A configurable search budget (node count, clique count, size cap) ran out."""


class DisconnectedGraphError(ValueError):
    """A metric operation was asked to run on a disconnected graph."""


class NotDistanceHereditaryError(ValueError):
    """A distance-hereditary-only algorithm received other input."""
