class DimensionError(ValueError):
    """Operands have non-conformable or otherwise invalid shapes."""


class StructureError(ValueError):
    """A real matrix lacks the Kähler block/column structure an operation needs."""


class ValidationError(ValueError):
    """A physical precondition failed (non-unitary map, incomplete Kraus set, ...)."""
