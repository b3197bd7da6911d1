"""Exception hierarchy shared across the workbench.

The CLI maps these onto exit codes: invalid input (2), mathematical
rejection (3), internal consistency failure (4).
"""

from __future__ import annotations


class BettibenchError(Exception):
    """Base class for all workbench errors."""


class InvalidDegreeSequence(BettibenchError):
    """A degree sequence is empty or not strictly increasing."""


class UndefinedOnZero(BettibenchError):
    """A functional (codimension, Hilbert numerator, multiplicity, ...)
    was applied to the zero table, or to a table whose alternating sum
    vanishes identically."""


class TableFormatError(BettibenchError):
    """A Betti-table text file could not be parsed."""


class NotInCone(BettibenchError):
    """The table lies outside the cone spanned by pure diagrams of its
    codimension: negative entries, empty interior columns, or a greedy
    step that cannot proceed."""


class ShapeViolation(BettibenchError):
    """A table (or one of its decomposition parts) does not have the
    two-strand shape expected of an embedded-curve coordinate ring."""


class SelfCheckError(ShapeViolation):
    """An internal consistency check failed: a differential composite is
    nonzero, a sentinel Betti entry is nonzero, or an exact identity the
    computation must satisfy does not hold.  Always indicates a bug, never
    bad user input."""


class DegenerateFamily(BettibenchError):
    """Requested a one-jump degree sequence outside its parameter range."""


class DegreeTooSmall(BettibenchError):
    """The line-bundle degree is below the threshold the construction
    requires."""


class InvalidModel(BettibenchError):
    """A curve model fails its own invariants (bad field, non-squarefree
    defining polynomial, inconsistent genus)."""
