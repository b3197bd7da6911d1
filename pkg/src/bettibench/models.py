"""Explicit graded coordinate rings of rational and hyperelliptic curves.

The hyperelliptic model is y^2 = f(x) with deg f = 2g+1 and a single point
at infinity; sections of d*infinity in grade e are the monomials x^a y^b
(b in {0, 1}) of pole order 2a + b(2g+1) <= e*d.  Pole orders of the two
parities never collide, so the monomials are a basis, and multiplication is
monomial except for y*y = f(x).  The rational model is the same picture on
P^1: monomials x^a with a <= e*d.

Everything happens over a prime field GF(p) with p odd, elements stored as
ints in [0, p).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import DegreeTooSmall, InvalidModel

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for all n < 3.3 * 10^24."""
    if n < 2:
        return False
    for q in _SMALL_PRIMES:
        if n % q == 0:
            return n == q
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """A prime field GF(p)."""

    characteristic: int

    def __post_init__(self):
        if not is_prime(self.characteristic):
            raise InvalidModel(f"characteristic {self.characteristic} is not prime")

    @property
    def p(self) -> int:
        return self.characteristic

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return pow(a, self.p - 2, self.p)


DEFAULT_FIELD = FieldSpec(32003)


class SectionMonomial(NamedTuple):
    """x^a y^b with b in {0, 1}."""

    a: int
    b: int


def _poly_gcd_modp(u: list[int], v: list[int], p: int) -> list[int]:
    """Monic gcd of two coefficient lists (low degree first) over GF(p)."""

    def trim(w):
        while w and w[-1] % p == 0:
            w.pop()
        return w

    u, v = trim([c % p for c in u]), trim([c % p for c in v])
    while v:
        inv_lead = pow(v[-1], p - 2, p)
        while len(u) >= len(v):
            shift = len(u) - len(v)
            factor = u[-1] * inv_lead % p
            for k, c in enumerate(v):
                u[shift + k] = (u[shift + k] - factor * c) % p
            trim(u)
            if not u:
                break
        u, v = v, u
    if u:
        inv_lead = pow(u[-1], p - 2, p)
        u = [c * inv_lead % p for c in u]
    return u


@dataclass(frozen=True)
class CurveModel:
    """Either the rational model (g = 0, monomials in x) or a hyperelliptic
    model y^2 = f(x) given by the 2g+2 coefficients of f, low degree first.

    Construct through rational_model() / hyperelliptic_model(), which reduce
    the coefficients into the field and check the invariants: genus matches
    the family, f has unit leading coefficient and is squarefree, and the
    characteristic is odd for the hyperelliptic family.
    """

    family: str
    g: int
    f_coeffs: tuple[int, ...]
    field: FieldSpec = field(default=DEFAULT_FIELD)

    def __post_init__(self):
        p = self.field.p
        if self.family == "rational":
            if self.g != 0:
                raise InvalidModel("rational model requires genus 0")
            if self.f_coeffs:
                raise InvalidModel("rational model takes no defining polynomial")
        elif self.family == "hyperelliptic":
            if self.g < 1:
                raise InvalidModel("hyperelliptic model requires genus >= 1")
            if p == 2:
                raise InvalidModel("hyperelliptic model needs characteristic != 2")
            if len(self.f_coeffs) != 2 * self.g + 2:
                raise InvalidModel(
                    f"genus {self.g} needs {2 * self.g + 2} coefficients c_0..c_{2 * self.g + 1},"
                    f" got {len(self.f_coeffs)}"
                )
            if any(not 0 <= c < p for c in self.f_coeffs):
                raise InvalidModel("coefficients must be reduced into [0, p)")
            if self.f_coeffs[-1] == 0:
                raise InvalidModel(f"leading coefficient of f vanishes mod {p}")
            f = list(self.f_coeffs)
            f_prime = [k * c % p for k, c in enumerate(f)][1:]
            if len(_poly_gcd_modp(f, f_prime, p)) != 1:
                raise InvalidModel(f"f is not squarefree over GF({p})")
        else:
            raise InvalidModel(f"unknown family {self.family!r}")

    def label(self) -> str:
        if self.family == "rational":
            return "rational normal curve"
        terms = []
        for k, c in enumerate(self.f_coeffs):
            if c:
                terms.append(f"{c}*x^{k}" if k else str(c))
        return f"hyperelliptic g={self.g}, y^2 = {' + '.join(reversed(terms))}"

    # -- pole-order structure ------------------------------------------

    def pole_order(self, mono: SectionMonomial) -> int:
        if self.family == "rational":
            return mono.a
        return 2 * mono.a + mono.b * (2 * self.g + 1)

    def grading_modulus(self) -> int:
        """Modulus N such that multiplication is homogeneous for pole order
        taken mod N (N = 0 means exactly graded, as for the rational model).

        The only non-monomial product is y*y = f(x), sending pole order
        2(2g+1) to the orders 2k for k in the support of f, so N is the gcd
        of the differences 2(2g+1) - 2k.
        """
        if self.family == "rational":
            return 0
        n = 0
        top = 2 * (2 * self.g + 1)
        for k, c in enumerate(self.f_coeffs):
            if c:
                n = math.gcd(n, top - 2 * k)
        return n


def rational_model(field: FieldSpec = DEFAULT_FIELD) -> CurveModel:
    return CurveModel(family="rational", g=0, f_coeffs=(), field=field)


def hyperelliptic_model(g: int, f_coeffs: list[int] | tuple[int, ...], field: FieldSpec = DEFAULT_FIELD) -> CurveModel:
    reduced = tuple(c % field.p for c in f_coeffs)
    return CurveModel(family="hyperelliptic", g=g, f_coeffs=reduced, field=field)


def graded_dimension(model: CurveModel, d: int, e: int) -> int:
    """dim of grade e: 1 for e = 0, e*d - g + 1 for e >= 1 (Riemann-Roch)."""
    if e < 0:
        return 0
    if e == 0:
        return 1
    return e * d - model.g + 1


def section_basis(model: CurveModel, d: int, e: int) -> list[SectionMonomial]:
    """Monomial basis of grade e, ordered by pole order then y-exponent.

    Requires d >= 2g+1 so the count matches Riemann-Roch in every positive
    grade.
    """
    if d < 2 * model.g + 1:
        raise DegreeTooSmall(f"degree {d} below 2g+1 = {2 * model.g + 1}")
    if e < 0:
        raise ValueError(f"grade must be >= 0, got {e}")
    if e == 0:
        return [SectionMonomial(0, 0)]
    bound = e * d
    if model.family == "rational":
        basis = [SectionMonomial(a, 0) for a in range(bound + 1)]
    else:
        odd = 2 * model.g + 1
        basis = [SectionMonomial(a, 0) for a in range(bound // 2 + 1)]
        basis += [SectionMonomial(a, 1) for a in range((bound - odd) // 2 + 1)]
        basis.sort(key=lambda m: (model.pole_order(m), m.b))
    assert len(basis) == graded_dimension(model, d, e)
    return basis


def multiply(model: CurveModel, m1: SectionMonomial, m2: SectionMonomial) -> dict[SectionMonomial, int]:
    """Product of two section monomials as a combination of monomials.

    Monomial unless both factors carry y, in which case y^2 = f(x) expands
    the product along the support of f.
    """
    a = m1.a + m2.a
    if m1.b + m2.b <= 1:
        return {SectionMonomial(a, m1.b + m2.b): 1}
    return {SectionMonomial(a + k, 0): c for k, c in enumerate(model.f_coeffs) if c}


def multiplication_matrix(model: CurveModel, d: int, e: int):
    """Matrix of grade-1 multiplication into grade e+1 over GF(p).

    Rows are indexed by the grade-(e+1) basis; columns by pairs (v, m) with
    v in grade 1 and m in grade e, v-major.  Full row rank for e >= 1 is
    projective normality of the embedding.
    """
    from .koszul import SparseMatrix  # deferred: koszul imports this module

    basis_1 = section_basis(model, d, 1)
    basis_e = section_basis(model, d, e)
    basis_out = section_basis(model, d, e + 1)
    index_out = {m: k for k, m in enumerate(basis_out)}
    entries = []
    for vi, v in enumerate(basis_1):
        for mi, m in enumerate(basis_e):
            col = vi * len(basis_e) + mi
            for mono, coeff in multiply(model, v, m).items():
                entries.append((index_out[mono], col, coeff))
    return SparseMatrix(
        n_rows=len(basis_out),
        n_cols=len(basis_1) * len(basis_e),
        entries=entries,
    )
