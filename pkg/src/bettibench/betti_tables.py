"""Graded Betti tables with exact rational entries, and the cone primitives
built on them: pure diagrams, alternating-sum polynomials, formal
codimension, Hilbert numerators, multiplicity and the two-strand shape test
for embedded curves.

A table is a finitely supported map (i, j) -> Q with i the homological
index and j the internal degree.  All arithmetic is exact; zero entries are
never stored.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Iterator, Mapping

from .errors import InvalidDegreeSequence, TableFormatError, UndefinedOnZero

#: A strictly increasing tuple of integers e_0 < e_1 < ... < e_s.
DegreeSequence = tuple[int, ...]

#: Sparse polynomial (possibly Laurent): exponent -> nonzero coefficient.
Polynomial = dict[int, Fraction]


def as_degree_sequence(entries: Iterable[int]) -> DegreeSequence:
    """Validate and normalize a degree sequence.

    Raises InvalidDegreeSequence unless the entries are integers forming a
    nonempty strictly increasing sequence.
    """
    seq = tuple(entries)
    if not seq:
        raise InvalidDegreeSequence("degree sequence is empty")
    for x in seq:
        if not isinstance(x, int) or isinstance(x, bool):
            raise InvalidDegreeSequence(f"non-integer entry {x!r}")
    if any(a >= b for a, b in zip(seq, seq[1:])):
        raise InvalidDegreeSequence(f"not strictly increasing: {seq}")
    return seq


class BettiTable:
    """Finitely supported table of exact rationals indexed by (i, j).

    Immutable by convention: all operations return new tables.  Zero values
    are dropped on construction, so "no stored zeros" holds everywhere.
    """

    __slots__ = ("_entries",)

    def __init__(self, entries: Mapping[tuple[int, int], Fraction | int] | None = None):
        clean: dict[tuple[int, int], Fraction] = {}
        for key, value in (entries or {}).items():
            i, j = key
            if not isinstance(i, int) or not isinstance(j, int):
                raise ValueError(f"table index must be a pair of integers, got {key!r}")
            if i < 0:
                raise ValueError(f"homological index must be >= 0, got {i}")
            q = Fraction(value)
            if q != 0:
                clean[(i, j)] = q
        self._entries = clean

    # -- basic container behaviour -------------------------------------

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        return self._entries.get(key, Fraction(0))

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self):
        return hash(frozenset(self._entries.items()))

    def __repr__(self) -> str:
        body = ", ".join(f"({i},{j}): {v}" for (i, j), v in sorted(self._entries.items()))
        return f"BettiTable({{{body}}})"

    def items(self) -> Iterable[tuple[tuple[int, int], Fraction]]:
        return self._entries.items()

    @property
    def support(self) -> set[tuple[int, int]]:
        return set(self._entries)

    def is_zero(self) -> bool:
        return not self._entries

    def projective_span(self) -> int:
        """Largest homological index carrying a nonzero entry."""
        if not self._entries:
            raise UndefinedOnZero("zero table has no projective span")
        return max(i for i, _ in self._entries)

    def column(self, i: int) -> dict[int, Fraction]:
        return {j: v for (ii, j), v in self._entries.items() if ii == i}

    # -- linear structure ----------------------------------------------

    def __add__(self, other: "BettiTable") -> "BettiTable":
        out = dict(self._entries)
        for key, v in other._entries.items():
            s = out.get(key, Fraction(0)) + v
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return BettiTable(out)

    def __sub__(self, other: "BettiTable") -> "BettiTable":
        return self + rescale(other, Fraction(-1))


def rescale(table: BettiTable, q: Fraction | int) -> BettiTable:
    """Entrywise multiplication by a rational scalar (q = 0 empties the table)."""
    q = Fraction(q)
    return BettiTable({key: q * v for key, v in table.items()})


def pure_diagram(e: Iterable[int]) -> BettiTable:
    """The pure diagram of a strictly increasing degree sequence.

    For e = (e_0, ..., e_s) the diagram is supported on (p, e_p) with entry

        s! * prod_{l != p} 1 / |e_l - e_p|,

    normalized so that a sequence with e_0 = 0 yields multiplicity exactly 1.
    A length-1 sequence gives the rank-one diagram {(e_0 position 0): 1};
    this degenerate case keeps greedy decomposition total on the cone.
    """
    seq = as_degree_sequence(e)
    s = len(seq) - 1
    norm = Fraction(math.factorial(s))
    entries: dict[tuple[int, int], Fraction] = {}
    for p, ep in enumerate(seq):
        denom = 1
        for l, el in enumerate(seq):
            if l != p:
                denom *= abs(el - ep)
        entries[(p, ep)] = norm / denom
    return BettiTable(entries)


# -- alternating sums, codimension, Hilbert numerators -------------------


def alternating_sum_poly(table: BettiTable) -> Polynomial:
    """K(t) = sum_{i,j} (-1)^i beta_{i,j} t^j as a sparse polynomial."""
    poly: Polynomial = {}
    for (i, j), v in table.items():
        c = poly.get(j, Fraction(0)) + (v if i % 2 == 0 else -v)
        if c:
            poly[j] = c
        else:
            poly.pop(j, None)
    return poly


def poly_eval(poly: Polynomial, x: Fraction | int) -> Fraction:
    x = Fraction(x)
    return sum((c * x**k for k, c in poly.items()), Fraction(0))


def _reduce_at_one(poly: Polynomial) -> tuple[int, Polynomial]:
    """Split P = (1-t)^k * Q with Q(1) != 0; return (k, Q).

    Works on Laurent polynomials: the monomial factor t^min is coprime to
    (1-t), so only the shifted coefficient vector matters.  Division by
    (1-t) with zero remainder amounts to prefix sums of the coefficients
    when they total zero.
    """
    if not poly:
        raise UndefinedOnZero("alternating sum vanishes identically")
    lo = min(poly)
    hi = max(poly)
    coeffs = [poly.get(k, Fraction(0)) for k in range(lo, hi + 1)]
    codim = 0
    while sum(coeffs) == 0:
        prefix = Fraction(0)
        reduced = []
        for c in coeffs[:-1]:
            prefix += c
            reduced.append(prefix)
        coeffs = reduced
        codim += 1
    return codim, {lo + k: c for k, c in enumerate(coeffs) if c}


def formal_codim(table: BettiTable) -> int:
    """Order of vanishing of the alternating-sum polynomial at t = 1."""
    if table.is_zero():
        raise UndefinedOnZero("codimension of the zero table")
    codim, _ = _reduce_at_one(alternating_sum_poly(table))
    return codim


@dataclass(frozen=True)
class HilbertNumerator:
    """Numerator of the Hilbert series after clearing (1-t)^codim.

    `coefficients` maps t-exponent to a nonzero rational; `codim` is the
    order of vanishing of the alternating-sum polynomial at t = 1.
    """

    coefficients: Mapping[int, Fraction]
    codim: int

    def coefficient(self, k: int) -> Fraction:
        return self.coefficients.get(k, Fraction(0))

    def value_at_one(self) -> Fraction:
        return sum(self.coefficients.values(), Fraction(0))

    def __add__(self, other: "HilbertNumerator") -> "HilbertNumerator":
        if self.codim != other.codim:
            raise ValueError("Hilbert numerators are additive only at equal codimension")
        merged = dict(self.coefficients)
        for k, c in other.coefficients.items():
            s = merged.get(k, Fraction(0)) + c
            if s:
                merged[k] = s
            else:
                merged.pop(k, None)
        return HilbertNumerator(merged, self.codim)


def hilbert_numerator(table: BettiTable) -> HilbertNumerator:
    """Exact division K(t) / (1-t)^formal_codim, remainder zero by construction."""
    if table.is_zero():
        raise UndefinedOnZero("Hilbert numerator of the zero table")
    codim, reduced = _reduce_at_one(alternating_sum_poly(table))
    return HilbertNumerator(reduced, codim)


def multiplicity(table: BettiTable) -> Fraction:
    """Value of the Hilbert numerator at t = 1."""
    return hilbert_numerator(table).value_at_one()


def check_curve_shape(table: BettiTable, g: int, r: int) -> bool:
    """Whether the support fits the two-strand layout of a genus-g curve
    embedded in P^r: a unit at (0, 0), a linear strand (p, p+1) for
    1 <= p <= r-1 and a quadratic strand (p, p+2) for r-g <= p <= r-1.
    """
    if g < 0:
        raise ValueError(f"genus must be >= 0, got {g}")
    if r < g + 2:
        raise ValueError(f"need r >= g+2, got r={r}, g={g}")
    if table[(0, 0)] == 0:
        return False
    for i, j in table.support:
        if (i, j) == (0, 0):
            continue
        if j == i + 1 and 1 <= i <= r - 1:
            continue
        if j == i + 2 and r - g <= i <= r - 1:
            continue
        return False
    return True


# -- text format and display ---------------------------------------------


def _format_value(q: Fraction) -> str:
    return str(q)  # "3" or "2/3"


def _parse_value(token: str) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError) as exc:
        raise TableFormatError(f"bad value {token!r}") from exc


def parse_table(text: str) -> BettiTable:
    """Parse the `i j value` line format.  `#` starts a comment, entries may
    appear in any order, duplicates are an error.
    """
    entries: dict[tuple[int, int], Fraction] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 3:
            raise TableFormatError(f"line {lineno}: expected `i j value`, got {raw!r}")
        try:
            i, j = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise TableFormatError(f"line {lineno}: bad index in {raw!r}") from exc
        if i < 0:
            raise TableFormatError(f"line {lineno}: homological index {i} < 0")
        if (i, j) in entries:
            raise TableFormatError(f"line {lineno}: duplicate entry ({i}, {j})")
        entries[(i, j)] = _parse_value(parts[2])
    return BettiTable(entries)


def format_betti_display(table: BettiTable) -> str:
    """Grid layout with columns indexed by i and rows by j - i, zero cells
    shown as dots (the usual way Betti tables are displayed)."""
    if table.is_zero():
        return "(zero table)"
    span = table.projective_span()
    bands = [j - i for i, j in table.support]
    lo, hi = min(bands), max(bands)
    header = [""] + [str(i) for i in range(span + 1)]
    rows = [header]
    for band in range(lo, hi + 1):
        cells = [f"{band}:"]
        for i in range(span + 1):
            v = table[(i, i + band)]
            cells.append(_format_value(v) if v else ".")
        rows.append(cells)
    widths = [max(len(row[k]) for row in rows) for k in range(span + 2)]
    lines = ["  ".join(cell.rjust(w) for cell, w in zip(row, widths)) for row in rows]
    return "\n".join(lines)


def format_table(table: BettiTable) -> str:
    """Serialize a table: display grid as comments, then `i j value` lines."""
    lines = [f"# graded betti table, {len(table)} entries"]
    for display_line in format_betti_display(table).splitlines():
        lines.append(f"#   {display_line}")
    for (i, j), v in sorted(table.items()):
        lines.append(f"{i} {j} {_format_value(v)}")
    return "\n".join(lines) + "\n"


def read_table(path: str | Path) -> BettiTable:
    return parse_table(Path(path).read_text(encoding="utf-8"))


def write_table(path: str | Path, table: BettiTable) -> None:
    Path(path).write_text(format_table(table), encoding="utf-8")
