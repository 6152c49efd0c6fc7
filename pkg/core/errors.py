"""
Error Types

Every failure raised by the library derives from SpiralityError so callers
(and the CLI exit-code mapping) can catch the whole family at once.
Validation problems are *not* raised; they are collected in a
ValidationReport instead.
"""

from typing import Optional


class SpiralityError(Exception):
    """Base class for all library errors."""


class BasisError(SpiralityError):
    """Two homology classes expressed in different torus bases were combined."""


class GluingMatrixError(SpiralityError):
    """A gluing matrix violates |det| = 1 or the simplicity condition |q| = 1."""


class ZeroSlopeError(SpiralityError):
    """A slope ratio had a zero numerator or denominator."""


class FiberBasisError(SpiralityError):
    """The two fibers of a torus do not form a basis (|wedge| != 1)."""


class NoEdgesError(SpiralityError):
    """The governor was requested for a surface without edges."""


class BrokenCycleError(SpiralityError):
    """An edge walk is not closed or consecutive edges do not share a vertex."""


class UnknownIdError(SpiralityError):
    """An edge, piece, block or torus id does not exist."""


class GenusError(SpiralityError):
    """The genus formula gave a negative or non-integer value."""


class RwViolationError(SpiralityError):
    """A horizontal piece request failed one of the existence conditions."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class DoublingError(SpiralityError):
    """A manifold/surface pair cannot be doubled along its free boundary."""


class ConstructionBug(SpiralityError):
    """A family construction failed its own invariants. Should never happen."""


class DocumentError(SpiralityError):
    """
    A pair document could not be parsed.

    Carries either a line/column (JSON syntax) or a field path (schema).
    """

    def __init__(
        self,
        message: str,
        line: Optional[int] = None,
        column: Optional[int] = None,
        path: Optional[str] = None
    ):
        self.line = line
        self.column = column
        self.path = path
        where = ""
        if line is not None:
            where = f"line {line}, column {column}: "
        elif path:
            where = f"{path}: "
        super().__init__(f"{where}{message}")


class DisconnectedError(SpiralityError):
    """A graph that must be connected (Omega or Omega_S) is not."""
