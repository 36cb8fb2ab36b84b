"""Exception hierarchy shared by all topokit modules."""


class TopoError(Exception):
    """Base class for all toolkit errors."""


class ValidationError(TopoError):
    """Input data violates a structural invariant (bad JSON, bad poset, ...)."""


class FaceNotFoundError(TopoError):
    """A face passed as an argument is not a face of the complex/poset."""


class PurityError(TopoError):
    """Operation requires a pure complex/poset but the input is not pure."""


class MissingColoringError(TopoError):
    """Operation requires a vertex coloring but none is attached."""


class PropertyError(TopoError):
    """The pure/balanced/connected-links hypotheses do not hold."""


class ContractViolationError(TopoError):
    """An internal guarantee failed; indicates a bug or a broken hypothesis."""
