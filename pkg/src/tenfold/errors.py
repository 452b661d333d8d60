"""Exception taxonomy shared across the package.

Exit-code contract used by the CLI: SchemaError -> 2, StructureError and
subclasses -> 3, EmptySpaceError -> 4, verification FAIL -> 1.
"""


class StructureError(Exception):
    """A structural or numerical inconsistency in the linear-algebra pipeline."""


class DimensionMismatchError(StructureError):
    pass


class NonHermitianError(StructureError):
    pass


class NotUnitaryError(StructureError):
    pass


class NotInvolutionError(StructureError):
    """An antiunitary candidate whose square is not a scalar multiple of Id."""


class NonRealSquareError(StructureError):
    """Antiunitary square is scalar but not +1/-1 (impossible for a true antiunitary)."""


class ReconciliationError(StructureError):
    """Integer quantities (d, m, p, q) failed to reconcile exactly."""


class RetryExhaustedError(StructureError):
    """Randomized probe failed to separate after the retry budget."""


class FactorizationError(StructureError):
    """An operator expected to be a pure tensor is not one within tolerance."""


class CaseConstraintError(StructureError):
    """A case-table constraint (e.g. forced p = q) is violated."""


class EmptySpaceError(Exception):
    """Sampling was requested from a zero-dimensional Hamiltonian space."""


class SchemaError(Exception):
    """A setup-spec file violates the JSON schema; message points at the field."""
