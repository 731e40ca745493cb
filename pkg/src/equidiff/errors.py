"""Exception types shared across the package."""


class FieldMismatchError(ValueError):
    """Operands belong to different finite fields."""


class InconsistentProfileError(ValueError):
    """Ramification data that no Galois cover can realize."""


class DegenerateCoverError(ValueError):
    """An Artin-Schreier equation that does not define an irreducible cover
    with a single branch point at infinity."""


class DefectError(RuntimeError):
    """Two routes to the same quantity disagree.

    These are algebraically equal, so this always indicates a bug.
    """
