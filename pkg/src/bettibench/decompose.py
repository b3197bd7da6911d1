"""Greedy decomposition of a Betti table into pure diagrams, and extraction
of the simplex coefficients attached to an embedded curve.

The greedy step peels the pure diagram of the columnwise-minimal degree
sequence with the largest coefficient that keeps the residual nonnegative;
on the cone of one fixed codimension this terminates with an exact
decomposition, each step zeroing at least one entry.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .betti_tables import (
    BettiTable,
    DegreeSequence,
    check_curve_shape,
    multiplicity,
    pure_diagram,
    rescale,
)
from .errors import NotInCone, ShapeViolation, TableFormatError, UndefinedOnZero


@dataclass(frozen=True)
class Decomposition:
    """Ordered list of (degree sequence, positive coefficient) pairs.

    Parts are listed termwise-decreasing, the reverse of the greedy peel
    order; summing coeff * pure_diagram(e) over the parts reproduces the
    decomposed table exactly.
    """

    parts: tuple[tuple[DegreeSequence, Fraction], ...]

    def reconstruct(self) -> BettiTable:
        total = BettiTable()
        for e, coeff in self.parts:
            total = total + rescale(pure_diagram(e), coeff)
        return total

    def as_dict(self) -> dict[DegreeSequence, Fraction]:
        return dict(self.parts)


@dataclass(frozen=True)
class CurveCoefficients:
    """Simplex coordinates of a curve table: c[i] is the coefficient of the
    one-jump pure diagram with jump position i, for i = 0..g."""

    g: int
    r: int
    c: tuple[Fraction, ...]


def min_degree_sequence(table: BettiTable) -> DegreeSequence:
    """Columnwise minima d_i = min{ j : beta_{i,j} != 0 } up to the
    projective span.

    Raises NotInCone when a column below the span is empty or the minima
    fail to increase strictly.
    """
    if table.is_zero():
        raise UndefinedOnZero("minimal degree sequence of the zero table")
    span = table.projective_span()
    minima = []
    for i in range(span + 1):
        column = table.column(i)
        if not column:
            raise NotInCone(f"empty column {i} below projective span {span}")
        minima.append(min(column))
    if any(a >= b for a, b in zip(minima, minima[1:])):
        raise NotInCone(f"columnwise minima {tuple(minima)} not strictly increasing")
    return tuple(minima)


def decompose(table: BettiTable) -> Decomposition:
    """Greedy pure-diagram decomposition of a nonnegative table.

    Each round peels c * pure_diagram(e) where e is the minimal degree
    sequence of the residual and c the largest coefficient keeping every
    entry nonnegative; c is attained at some pivot, so at least one entry
    is zeroed per round and the loop ends after at most |support| rounds.
    """
    if table.is_zero():
        raise UndefinedOnZero("decomposition of the zero table")
    for key, v in table.items():
        if v < 0:
            raise NotInCone(f"negative entry {v} at {key}")
    parts: list[tuple[DegreeSequence, Fraction]] = []
    residual = table
    while not residual.is_zero():
        e = min_degree_sequence(residual)
        diagram = pure_diagram(e)
        coeff = min(residual[(p, ep)] / diagram[(p, ep)] for p, ep in enumerate(e))
        assert coeff > 0
        residual = residual - rescale(diagram, coeff)
        parts.append((e, coeff))
    parts.reverse()
    return Decomposition(tuple(parts))


def curve_coefficients(table: BettiTable, g: int, r: int) -> CurveCoefficients:
    """Decompose a curve-shaped table, after normalizing to multiplicity 1,
    against the one-jump family of P^r.

    The normalization divides by the multiplicity, which for the table of a
    degree-d embedded curve equals d; the result is the multiplicity-1
    rescaling without the caller having to know d.  Every part of the
    decomposition must be a one-jump sequence with jump position in [0, g];
    anything else raises ShapeViolation.
    """
    from .asymptotics import family_degree_sequence  # deferred: asymptotics imports us

    if not check_curve_shape(table, g, r):
        raise ShapeViolation(f"support does not match a genus-{g} curve in P^{r}")
    mult = multiplicity(table)
    if mult <= 0:
        raise NotInCone(f"multiplicity {mult} is not positive")
    normalized = rescale(table, Fraction(1) / mult)
    sequence_to_index = {family_degree_sequence(i, r): i for i in range(g + 1)}
    c = [Fraction(0)] * (g + 1)
    for e, coeff in decompose(normalized).parts:
        i = sequence_to_index.get(e)
        if i is None:
            raise ShapeViolation(f"decomposition part {e} is not a one-jump sequence for P^{r}")
        c[i] = coeff
    total = sum(c, Fraction(0))
    assert total == 1, f"simplex coefficients sum to {total}, not 1"
    return CurveCoefficients(g=g, r=r, c=tuple(c))


# -- text serialization ----------------------------------------------------


def format_decomposition(dec: Decomposition) -> str:
    """One part per line: `e_0,e_1,...,e_s : coeff`."""
    return "".join(f"{','.join(map(str, e))} : {coeff}\n" for e, coeff in dec.parts)


def parse_decomposition(text: str) -> Decomposition:
    parts: list[tuple[DegreeSequence, Fraction]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            seq_text, coeff_text = line.split(":")
            e = tuple(int(x) for x in seq_text.strip().split(","))
            coeff = Fraction(coeff_text.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise TableFormatError(f"line {lineno}: bad decomposition part {raw!r}") from exc
        parts.append((e, coeff))
    return Decomposition(tuple(parts))
