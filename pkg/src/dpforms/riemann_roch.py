"""Orbifold Riemann-Roch for the singular surfaces.

The contracted surface has a single quotient singularity of type (1/m)(1, 1).
For the anti-plurigenus h^0(-jK) the Euler characteristic picks up a periodic
correction c(m, j) from that point, determined by the residue
t = -2j mod m:

    c = 0                                             if t = 0
    c = (1/m) * ( -(m-1)/2 + (m-t+1)(t-1)/2 )         if 1 <= t <= m-1

The t = 0 branch is genuinely needed: for m = 2 every correction vanishes
(t is always 0), and for m = 4 the nonzero residue t = 2 also evaluates to 0,
so generic-looking closed forms that assume t != 0 fail exactly there.

All values are exact Fractions; h^0 must come out a non-negative integer and
anything else raises InternalInvariantError.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InternalInvariantError, ParameterError
from .lattice import k_squared_singular


def correction_residue(m: int, j: int) -> int:
    """The residue t = -2j mod m, normalized to 0 <= t <= m-1."""
    m, j = int(m), int(j)
    if m < 2:
        raise ParameterError(f"m must be >= 2, got {m}")
    if j < 0:
        raise ParameterError(f"j must be >= 0, got {j}")
    return (-2 * j) % m


def correction_term(m: int, j: int) -> Fraction:
    """Correction to chi(-jK) from the (1/m)(1,1) point.  Periodic: c(m, j) = c(m, j+m)."""
    t = correction_residue(m, j)
    if t == 0:
        return Fraction(0)
    return Fraction(-(m - 1), 2 * m) + Fraction((m - t + 1) * (t - 1), 2 * m)


def h0_anti_plurigenus(m: int, n: int, j: int) -> int:
    """h^0 of -jK on the singular surface: 1 + j(j+1)/2 * K^2 + c(m, j).

    On the surfaces in range the result is a dimension, so a non-integral
    or negative value can only mean a broken invariant, and the guard
    raises InternalInvariantError rather than rounding.
    """
    value = 1 + Fraction(j * (j + 1), 2) * k_squared_singular(m, n) + correction_term(m, j)
    if value.denominator != 1:
        raise InternalInvariantError(
            f"anti-plurigenus chi(m={m}, n={n}, j={j}) = {value} is not an integer"
        )
    h0 = int(value)
    if h0 < 0:
        raise InternalInvariantError(
            f"anti-plurigenus chi(m={m}, n={n}, j={j}) = {h0} is negative"
        )
    return h0


@dataclass(frozen=True)
class EmbeddingDescriptor:
    """Weights and hypersurface degrees of the anticanonical model of the n = m+4 surface."""

    m: int
    weights: tuple[int, ...]
    degrees: tuple[int, ...]


def embedding_descriptor(m: int) -> EmbeddingDescriptor:
    """Anticanonical model of the surface with n = m+4.

    m = 2u:   hypersurface of degree 2u+2 in P(1, 1, u, u+1).
    m = 2u-1: complete intersection of two degree-2u hypersurfaces
              in P(1, 1, u, u, 2u-1).
    """
    m = int(m)
    if m < 2:
        raise ParameterError(f"m must be >= 2, got {m}")
    if m % 2 == 0:
        u = m // 2
        return EmbeddingDescriptor(m=m, weights=(1, 1, u, u + 1), degrees=(2 * u + 2,))
    u = (m + 1) // 2
    return EmbeddingDescriptor(m=m, weights=(1, 1, u, u, 2 * u - 1), degrees=(2 * u, 2 * u))


@dataclass(frozen=True)
class TableRow:
    j: int
    residue: int
    correction: Fraction
    h0: int


def anti_plurigenus_table(m: int, n: int, max_j: int) -> tuple[TableRow, ...]:
    """Rows (j, t, c, h^0) for j = 1..max_j."""
    if max_j < 1:
        raise ParameterError(f"max_j must be >= 1, got {max_j}")
    rows = []
    for j in range(1, max_j + 1):
        rows.append(
            TableRow(
                j=j,
                residue=correction_residue(m, j),
                correction=correction_term(m, j),
                h0=h0_anti_plurigenus(m, n, j),
            )
        )
    return tuple(rows)
