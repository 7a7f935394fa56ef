"""Exact-rational splitting analysis of hyperplane sections.

Two concrete families are analyzed.  For the complete-intersection model the
hyperplane section y = ax decomposes exactly at the roots of the splitting
polynomial p(a) = (1 - a^2/4) h(1, a); the tool returns p in primitive
integer form and locates its rational roots exactly.  For the quartic family
w^2 = A(x, y) + B(x, y) z^2 with deg A = 4, deg B = 2, the section y = tx
splits into a line pair exactly when A(1, t) = 0 (residual c = B(1, t), pair
w = +/- sqrt(c) xz) or B(1, t) = 0 (residual c = A(1, t), pair
w = +/- sqrt(c) x^2), plus the section x = 0 when A(0,1) = 0 or B(0,1) = 0.

Everything is Fraction arithmetic; no floating point anywhere.  Irrational
split values are reported through the irreducible factor they satisfy, using
a naive factorization (rational roots plus a bounded search for quadratic
factors).  That method certifies irreducibility up to degree 4; any
higher-degree part it cannot split is reported as unresolved rather than
claimed irreducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, isqrt
from typing import Iterable

from .errors import ParameterError, UnsupportedModelError

RationalLike = Fraction | int


@dataclass(frozen=True)
class UnivariatePoly:
    """Polynomial in one variable; coeffs[i] multiplies t^i, no trailing zeros."""

    coeffs: tuple[Fraction, ...]

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x: RationalLike) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __mul__(self, other: UnivariatePoly) -> UnivariatePoly:
        if self.is_zero or other.is_zero:
            return poly(())
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return poly(out)

    def derivative(self) -> UnivariatePoly:
        return poly(i * c for i, c in enumerate(self.coeffs) if i)

    def scaled(self, factor: RationalLike) -> UnivariatePoly:
        return poly(c * factor for c in self.coeffs)


def poly(coeffs: Iterable[RationalLike]) -> UnivariatePoly:
    """Build a UnivariatePoly, coercing to Fraction and trimming zeros."""
    cleaned = [Fraction(c) for c in coeffs]
    while cleaned and cleaned[-1] == 0:
        cleaned.pop()
    return UnivariatePoly(coeffs=tuple(cleaned))


def poly_divmod(num: UnivariatePoly, den: UnivariatePoly) -> tuple[UnivariatePoly, UnivariatePoly]:
    if den.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(num.coeffs)
    quo = [Fraction(0)] * max(len(rem) - len(den.coeffs) + 1, 0)
    lead = den.coeffs[-1]
    for shift in range(len(rem) - len(den.coeffs), -1, -1):
        factor = rem[shift + den.degree] / lead
        if factor == 0:
            continue
        quo[shift] = factor
        for i, c in enumerate(den.coeffs):
            rem[shift + i] -= factor * c
    return poly(quo), poly(rem)


def poly_gcd(a: UnivariatePoly, b: UnivariatePoly) -> UnivariatePoly:
    """Monic gcd by the Euclidean algorithm."""
    while not b.is_zero:
        a, b = b, poly_divmod(a, b)[1]
    if a.is_zero:
        return a
    return a.scaled(1 / a.coeffs[-1])


def primitive_integer_form(p: UnivariatePoly) -> tuple[UnivariatePoly, Fraction]:
    """Scale p to primitive integer coefficients with positive leading term.

    Returns (q, unit) with p = unit * q exactly.
    """
    if p.is_zero:
        raise ParameterError("zero polynomial has no primitive form")
    denom = reduce(lambda acc, c: acc * c.denominator // gcd(acc, c.denominator), p.coeffs, 1)
    ints = [int(c * denom) for c in p.coeffs]
    content = reduce(gcd, (abs(v) for v in ints))
    if ints[-1] < 0:
        content = -content
    q = poly(Fraction(v, content) for v in ints)
    return q, Fraction(content, denom)


def poly_text(p: UnivariatePoly, var: str = "t") -> str:
    """Human-readable rendering, highest power first."""
    if p.is_zero:
        return "0"
    parts: list[str] = []
    for i in range(p.degree, -1, -1):
        c = p.coeffs[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            stem = var if i == 1 else f"{var}^{i}"
            body = stem if mag == 1 else f"{mag}*{stem}"
        if not parts:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts)


@dataclass(frozen=True)
class BinaryForm:
    """Homogeneous form in (x, y); coeffs[i] multiplies x^(degree-i) y^i."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ParameterError("a binary form needs at least one coefficient")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def dehomogenized(self) -> UnivariatePoly:
        """The polynomial F(1, t)."""
        return poly(self.coeffs)

    def at_infinity(self) -> Fraction:
        """The value F(0, 1), i.e. the y^degree coefficient."""
        return self.coeffs[-1]


def binary_form(coeffs: Iterable[RationalLike]) -> BinaryForm:
    return BinaryForm(coeffs=tuple(Fraction(c) for c in coeffs))


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def rational_roots(p: UnivariatePoly) -> dict[Fraction, int]:
    """All rational roots with multiplicities, found exactly.

    Candidates come from the rational-root theorem on the primitive integer
    form; every candidate is verified by exact evaluation and multiplicities
    are read off by repeated exact division.
    """
    if p.is_zero:
        raise ParameterError("the zero polynomial has every root")
    q, _ = primitive_integer_form(p)
    roots: dict[Fraction, int] = {}
    low = 0
    while q.coeffs[low] == 0:
        low += 1
    if low:
        roots[Fraction(0)] = low
        q = poly(q.coeffs[low:])
    if q.degree < 1:
        return roots
    const = int(q.coeffs[0])
    lead = int(q.coeffs[-1])
    for num in _divisors(const):
        for den in _divisors(lead):
            if gcd(num, den) != 1:
                continue
            for cand in (Fraction(num, den), Fraction(-num, den)):
                if q(cand) != 0:
                    continue
                lin = poly((-cand.numerator, cand.denominator))
                mult = 0
                while True:
                    quo, rem = poly_divmod(q, lin)
                    if not rem.is_zero:
                        break
                    q = quo
                    mult += 1
                roots[cand] = mult
    return roots


@dataclass(frozen=True)
class Factorization:
    """p = unit * product(factor^multiplicity) * (unresolved or 1).

    Factors are primitive integer polynomials with positive leading term,
    certified irreducible over the rationals.  `unresolved`, when present,
    is a degree >= 5 part in which the bounded method found no factor; its
    irreducibility is not asserted.
    """

    unit: Fraction
    factors: tuple[tuple[UnivariatePoly, int], ...]
    unresolved: UnivariatePoly | None

    @property
    def complete(self) -> bool:
        return self.unresolved is None


def _quadratic_factors(q: UnivariatePoly) -> tuple[list[tuple[UnivariatePoly, int]], UnivariatePoly]:
    """Divide out every rational quadratic factor of a primitive integer q.

    q must have no rational roots.  The search is exhaustive: a rational
    quadratic factor of a primitive polynomial can be taken integral and
    primitive, its leading and constant coefficients divide those of q, and
    its middle coefficient is bounded through the root bound of q.
    """
    found: list[tuple[UnivariatePoly, int]] = []
    while q.degree >= 4:
        lead = int(q.coeffs[-1])
        const = int(q.coeffs[0])
        bound = 1 + max(abs(c) for c in q.coeffs[:-1]) / abs(q.coeffs[-1])
        hit = None
        for l in _divisors(lead):
            mid_cap = int(2 * l * bound) + 1
            for c in _divisors(const):
                for signed_c in (c, -c):
                    for mid in range(-mid_cap, mid_cap + 1):
                        if reduce(gcd, (l, abs(mid), abs(signed_c))) != 1:
                            continue
                        cand = poly((signed_c, mid, l))
                        quo, rem = poly_divmod(q, cand)
                        if rem.is_zero:
                            hit = (cand, quo)
                            break
                    if hit:
                        break
                if hit:
                    break
            if hit:
                break
        if hit is None:
            break
        cand, quo = hit
        mult = 1
        while True:
            quo2, rem2 = poly_divmod(quo, cand)
            if not rem2.is_zero:
                break
            quo = quo2
            mult += 1
        found.append((cand, mult))
        q = quo
    return found, q


def factor_over_rationals(p: UnivariatePoly) -> Factorization:
    """Naive exact factorization: rational roots, then quadratic factors.

    Certifies irreducibility of anything left of degree <= 4 (degree 1 would
    be a root, degree 2 or 3 without roots is irreducible, degree 4 without
    roots or rational quadratic factors is irreducible).
    """
    if p.is_zero:
        raise ParameterError("cannot factor the zero polynomial")
    q, unit = primitive_integer_form(p)
    factors: list[tuple[UnivariatePoly, int]] = []
    for root in sorted(rational_roots(q)) if q.degree >= 1 else []:
        lin = poly((-root.numerator, root.denominator))
        mult = 0
        while True:
            quo, rem = poly_divmod(q, lin)
            if not rem.is_zero:
                break
            q = quo
            mult += 1
        factors.append((lin, mult))
    quads, q = _quadratic_factors(q)
    factors.extend(quads)
    unresolved = None
    if q.degree >= 5:
        unresolved = q
    elif q.degree >= 1:
        factors.append((q, 1))
    else:
        unit *= q.coeffs[0]
    factors.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs))
    return Factorization(unit=unit, factors=tuple(factors), unresolved=unresolved)


def ci_split_polynomial(
    h: BinaryForm,
    f: BinaryForm | None = None,
    g: BinaryForm | None = None,
) -> UnivariatePoly:
    """Splitting polynomial p(a) = (1 - a^2/4) h(1, a) in primitive integer form.

    Only the reduced model with f = g = 0 is supported; h must be a nonzero
    form of even degree 2m with m >= 2.  Roots of p are the parameter values
    whose hyperplane section decomposes; a = +/-2 are always roots.
    """
    for name, extra in (("f", f), ("g", g)):
        if extra is not None and not extra.is_zero:
            raise UnsupportedModelError(
                f"nonzero {name} is not supported; only the reduced model f = g = 0 is analyzed"
            )
    if h.is_zero:
        raise ParameterError("h must be nonzero")
    if h.degree % 2 != 0 or h.degree < 4:
        raise ParameterError(f"h must have even degree 2m with m >= 2, got degree {h.degree}")
    p = h.dehomogenized() * poly((1, 0, Fraction(-1, 4)))
    normal, _ = primitive_integer_form(p)
    return normal


def is_rational_square(c: Fraction) -> bool:
    """Exact perfect-square test on numerator and denominator."""
    if c < 0:
        return False
    num, den = c.numerator, c.denominator
    return isqrt(num) ** 2 == num and isqrt(den) ** 2 == den


@dataclass(frozen=True)
class SplitValue:
    """One group of split values of the quartic family.

    A rational split value carries its root, the residual constant c, and
    whether c is a rational square (then the two lines are separately
    rational).  Irrational split values are grouped by the irreducible
    factor they satisfy; `count` is that factor's degree.
    """

    source: str
    root: Fraction | None
    factor: str
    count: int
    residual: Fraction | None
    rational_pair: bool | None


@dataclass(frozen=True)
class LineCensus:
    total_lines: int
    split_values: tuple[SplitValue, ...]
    includes_infinity_section: bool


def _form_squarefree(form: BinaryForm) -> bool:
    if form.is_zero:
        return False
    deh = form.dehomogenized()
    if form.degree - deh.degree >= 2:
        return False
    if deh.degree < 1:
        return True
    return poly_gcd(deh, deh.derivative()).degree == 0


def _forms_coprime(a: BinaryForm, b: BinaryForm) -> bool:
    da, db = a.dehomogenized(), b.dehomogenized()
    if da.degree < a.degree and db.degree < b.degree:
        return False
    return poly_gcd(da, db).degree == 0


def line_census(a_form: BinaryForm, b_form: BinaryForm) -> LineCensus:
    """Census of the lines on w^2 = A(x,y) + B(x,y) z^2.

    A has degree 4 and B degree 2, both squarefree and coprime.  Each split
    value contributes a pair of lines, so the total is always 12: the six
    split values are the four roots of A(1,t), the two roots of B(1,t), and
    the section at infinity exactly when one of the two top coefficients
    vanishes (which removes one finite root).
    """
    if a_form.degree != 4:
        raise ParameterError(f"A must have degree 4, got {a_form.degree}")
    if b_form.degree != 2:
        raise ParameterError(f"B must have degree 2, got {b_form.degree}")
    if a_form.is_zero or b_form.is_zero:
        raise ParameterError("A and B must be nonzero")
    if not _form_squarefree(a_form):
        raise ParameterError("A must be squarefree as a binary form")
    if not _form_squarefree(b_form):
        raise ParameterError("B must be squarefree as a binary form")
    if not _forms_coprime(a_form, b_form):
        raise ParameterError("A and B must be coprime as binary forms")

    entries: list[SplitValue] = []
    pairs = (("A", a_form.dehomogenized(), b_form.dehomogenized()),
             ("B", b_form.dehomogenized(), a_form.dehomogenized()))
    for source, own, other in pairs:
        decomposition = factor_over_rationals(own)
        rational_entries = []
        factor_entries = []
        for factor, _mult in decomposition.factors:
            if factor.degree == 1:
                root = Fraction(-factor.coeffs[0], factor.coeffs[1])
                residual = other(root)
                rational_entries.append(
                    SplitValue(
                        source=source,
                        root=root,
                        factor=poly_text(factor),
                        count=1,
                        residual=residual,
                        rational_pair=is_rational_square(residual),
                    )
                )
            else:
                factor_entries.append(
                    SplitValue(
                        source=source,
                        root=None,
                        factor=poly_text(factor),
                        count=factor.degree,
                        residual=None,
                        rational_pair=None,
                    )
                )
        rational_entries.sort(key=lambda e: e.root)
        entries.extend(rational_entries)
        entries.extend(factor_entries)

    includes_infinity = a_form.at_infinity() == 0 or b_form.at_infinity() == 0
    if includes_infinity:
        residual = b_form.at_infinity() if a_form.at_infinity() == 0 else a_form.at_infinity()
        entries.append(
            SplitValue(
                source="infinity",
                root=None,
                factor="infinity",
                count=1,
                residual=residual,
                rational_pair=is_rational_square(residual),
            )
        )
    total = 2 * sum(e.count for e in entries)
    return LineCensus(
        total_lines=total,
        split_values=tuple(entries),
        includes_infinity_section=includes_infinity,
    )
