"""The one-jump family of pure diagrams attached to curve embeddings, its
closed-form Hilbert numerators, the exact error terms of the convergence
argument, and the per-degree experiment runner.

For a genus-g curve embedded by a degree-d bundle, r = d - g and the only
diagrams that can appear in the decomposition are the one-jump sequences

    e(i, r) = (0, 2, 3, ..., r-i, r-i+2, ..., r+1),      0 <= i <= g,

i.e. {0} union {2, ..., r+1} minus the single element r+1-i.  The simplex
coefficient of e(g, r) tends to 1 as d grows; the runner certifies the
exact per-degree identities that drive that limit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .betti_tables import (
    BettiTable,
    DegreeSequence,
    HilbertNumerator,
    check_curve_shape,
    pure_diagram,
)
from .decompose import curve_coefficients
from .errors import DegenerateFamily, DegreeTooSmall, SelfCheckError
from .models import CurveModel


def family_degree_sequence(i: int, r: int) -> DegreeSequence:
    """One-jump degree sequence with jump position i in ambient dimension r.

    Equals (0, 2, 3, ..., r-i, r-i+2, ..., r+1): the second block is empty
    for i = 0 and the first block degenerates past i = r-2.
    """
    if not 0 <= i <= r - 2:
        raise DegenerateFamily(f"jump position i={i} outside [0, {r - 2}] for r={r}")
    missing = r + 1 - i
    return (0,) + tuple(k for k in range(2, r + 2) if k != missing)


def family_pure_diagram(i: int, r: int) -> BettiTable:
    """Pure diagram of family_degree_sequence(i, r); multiplicity 1."""
    return pure_diagram(family_degree_sequence(i, r))


def family_hn(i: int, r: int) -> HilbertNumerator:
    """Closed-form Hilbert numerator of the one-jump diagram:

        (r-i+1)/(r(r+1)) + (r-1)(r-i+1)/(r(r+1)) t + i/(r+1) t^2

    with codimension r-1 and value 1 at t = 1.
    """
    if not 0 <= i <= r - 2:
        raise DegenerateFamily(f"jump position i={i} outside [0, {r - 2}] for r={r}")
    c0 = Fraction(r - i + 1, r * (r + 1))
    c1 = Fraction((r - 1) * (r - i + 1), r * (r + 1))
    c2 = Fraction(i, r + 1)
    coeffs = {k: c for k, c in ((0, c0), (1, c1), (2, c2)) if c}
    return HilbertNumerator(coeffs, codim=r - 1)


def curve_hn_expected(g: int, r: int) -> HilbertNumerator:
    """Hilbert numerator of the multiplicity-1 rescaled table of a genus-g
    curve in P^r: 1/(r+g) + (r-1)/(r+g) t + g/(r+g) t^2."""
    if r < g + 2:
        raise DegenerateFamily(f"need r >= g+2, got r={r}, g={g}")
    coeffs = {
        0: Fraction(1, r + g),
        1: Fraction(r - 1, r + g),
    }
    if g:
        coeffs[2] = Fraction(g, r + g)
    return HilbertNumerator(coeffs, codim=r - 1)


@dataclass(frozen=True)
class EpsilonDelta:
    """Exact deviations of the Hilbert-numerator coefficients from their
    leading terms in 1/r.

    epsilon[j][i] is the t^j coefficient of the jump-i diagram minus its
    leading term (1/r, 1 - (i+1)/r, i/r for j = 0, 1, 2); delta[j] is the
    same for the curve numerator (leading terms 1/r, 1 - (g+1)/r, g/r).
    r * |epsilon| and r * |delta| are bounded by g(g+1)/r, which is the
    exact finite-r content of the convergence argument.
    """

    g: int
    r: int
    epsilon: tuple[tuple[Fraction, ...], ...]
    delta: tuple[Fraction, Fraction, Fraction]


def epsilon_delta(g: int, r: int) -> EpsilonDelta:
    """Compute all epsilon_{j,i} (j = 0,1,2; i = 0..g) and delta_j by exact
    subtraction from the closed-form numerators."""
    if r < g + 2:
        raise DegenerateFamily(f"need r >= g+2, got r={r}, g={g}")
    eps: list[list[Fraction]] = [[], [], []]
    for i in range(g + 1):
        hn = family_hn(i, r)
        eps[0].append(hn.coefficient(0) - Fraction(1, r))
        eps[1].append(hn.coefficient(1) - (1 - Fraction(i + 1, r)))
        eps[2].append(hn.coefficient(2) - Fraction(i, r))
    chn = curve_hn_expected(g, r)
    delta = (
        chn.coefficient(0) - Fraction(1, r),
        chn.coefficient(1) - (1 - Fraction(g + 1, r)),
        chn.coefficient(2) - Fraction(g, r),
    )
    return EpsilonDelta(g=g, r=r, epsilon=tuple(tuple(row) for row in eps), delta=delta)


@dataclass(frozen=True)
class AsymptoticsRow:
    """One degree of the convergence experiment, all values exact."""

    d: int
    r: int
    c: tuple[Fraction, ...]
    moment: Fraction
    moment_target: Fraction
    tail_bound: Fraction
    epsilon: tuple[tuple[Fraction, ...], ...]
    delta: tuple[Fraction, Fraction, Fraction]


@dataclass(frozen=True)
class AsymptoticsReport:
    """Rows in increasing d, plus enough context to label a report."""

    g: int
    characteristic: int
    model_label: str
    rows: tuple[AsymptoticsRow, ...]


def _build_row(model: CurveModel, d: int, jobs: int, timing_sink: list | None) -> AsymptoticsRow:
    from .koszul import koszul_betti  # deferred: koszul imports models only, but keep cli import light

    g = model.g
    r = d - g
    table = koszul_betti(model, d, jobs=jobs, timing_sink=timing_sink)
    if not check_curve_shape(table, g, r):
        raise SelfCheckError(f"computed table at d={d} fails the curve shape test")
    coeffs = curve_coefficients(table, g, r)
    c = coeffs.c
    moment = sum((Fraction(i) * ci for i, ci in enumerate(c)), Fraction(0))
    moment_target = Fraction(g * (r + 1), r + g)
    tail_bound = 1 - Fraction(g * (g - 1), r + g)
    if sum(c, Fraction(0)) != 1:
        raise SelfCheckError(f"d={d}: coefficients sum to {sum(c)}, not 1")
    if moment != moment_target:
        raise SelfCheckError(f"d={d}: moment {moment} != target {moment_target}")
    if c[g] < tail_bound:
        raise SelfCheckError(f"d={d}: c_g = {c[g]} below exact bound {tail_bound}")
    ed = epsilon_delta(g, r)
    return AsymptoticsRow(
        d=d,
        r=r,
        c=c,
        moment=moment,
        moment_target=moment_target,
        tail_bound=tail_bound,
        epsilon=ed.epsilon,
        delta=ed.delta,
    )


def run_convergence_experiment(
    model: CurveModel,
    d_min: int,
    d_max: int,
    *,
    jobs: int = 1,
    timing_sink: list | None = None,
) -> AsymptoticsReport:
    """Compute Betti tables for d = d_min..d_max, extract the simplex
    coefficients and certify the exact per-degree identities.

    Every row must satisfy sum c_i = 1, sum i*c_i = g(r+1)/(r+g) and
    c_g >= 1 - g(g-1)/(r+g) exactly; a violation is a bug and raises
    SelfCheckError.  Requires d_min >= 2g+2 so the full family of one-jump
    sequences exists at every degree.
    """
    g = model.g
    if d_min < 2 * g + 2:
        raise DegreeTooSmall(f"d_min={d_min} below 2g+2={2 * g + 2}")
    if d_max < d_min:
        raise ValueError(f"empty degree range [{d_min}, {d_max}]")
    rows = tuple(_build_row(model, d, jobs, timing_sink) for d in range(d_min, d_max + 1))
    return AsymptoticsReport(
        g=g,
        characteristic=model.field.characteristic,
        model_label=model.label(),
        rows=rows,
    )
