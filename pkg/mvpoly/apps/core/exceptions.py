class MVPolytopeError(Exception):
    """Base exception for MV polytope computations."""

    pass


class CartanMatrixError(MVPolytopeError):
    """Raised when a Cartan matrix is malformed or not of finite type."""

    pass


class NotFiniteTypeError(CartanMatrixError):
    """Raised when a well-formed Cartan matrix is not of finite type."""

    pass


class UnsupportedTypeError(MVPolytopeError):
    """Raised for G2, or for a doubly-laced datum on a simply-laced-only path."""

    pass


class ClassicalCoordsError(MVPolytopeError):
    """Raised when a classical vector or chamber name cannot be converted."""

    pass


class CapExceededError(MVPolytopeError):
    """Raised when an enumeration exceeds its configured cap."""

    pass


class ConflictError(MVPolytopeError):
    """Raised when two derivations of the same value disagree."""

    pass


class InvalidDatumError(MVPolytopeError):
    """Raised when a datum is not total, not valid, or violates a precondition."""

    pass


class NotInCrystalError(InvalidDatumError):
    """Raised when a BZ datum does not lie in the requested B(lambda)."""

    pass


class InvalidPositionError(MVPolytopeError):
    """Raised when a Pluecker or braid-move position is not admissible."""

    pass
