"""Exact Picard-lattice models for the resolved surfaces studied by this package.

The surfaces are indexed by integers m >= 2 and 1 <= n <= m+5.  The minimal
resolution Y of such a surface is a Hirzebruch surface of degree m blown up in
n general points; the singular surface itself is obtained by contracting the
negative section Q.  Two integral bases for Pic(Y) are supported:

* ``hirzebruch`` (any n): basis (Q, F, E_1, ..., E_n) where Q is the negative
  section (Q^2 = -m), F a ruling fiber (F^2 = 0, Q.F = 1) and E_i the
  exceptional curves of the n blow-ups.  Rank n + 2.

* ``plane`` (only n = m+4): Y is also a blow-up of the projective plane in
  m+4 points on a conic plus one extra point.  Basis (e_0, e_1, ..., e_{m+5})
  with e_0 a line and e_j exceptional, Gram matrix diag(1, -1, ..., -1).
  Rank m + 6.  Here Q = 2e_0 - e_1 - ... - e_{m+4} (the strict transform of
  the conic) and the last blow-up e_{m+5} sits off the conic.

Coefficient order in every serialized class matches the basis order above.
All arithmetic is exact: integer coefficient vectors, Fraction-valued
invariants, no floating point anywhere in this module.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from importlib import resources

from .errors import BasisMismatchError, InputFormatError, ParameterError

HIRZEBRUCH = "hirzebruch"
PLANE = "plane"
KINDS = (HIRZEBRUCH, PLANE)


@dataclass(frozen=True)
class DivisorClass:
    """An integral divisor class written in the basis of a fixed model.

    basis is an opaque tag identifying that model; mixing bases raises
    BasisMismatchError instead of silently producing garbage.
    """

    basis: str
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(int(c) for c in self.coeffs)
        if any(c != rc for c, rc in zip(self.coeffs, coeffs)):
            raise ParameterError("divisor class coefficients must be integers")
        object.__setattr__(self, "coeffs", coeffs)

    def _matched(self, other: "DivisorClass") -> None:
        if self.basis != other.basis:
            raise BasisMismatchError(
                f"classes live in different bases: {self.basis!r} vs {other.basis!r}"
            )

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        self._matched(other)
        return DivisorClass(self.basis, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        self._matched(other)
        return DivisorClass(self.basis, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(self.basis, tuple(-a for a in self.coeffs))

    def __rmul__(self, k: int) -> "DivisorClass":
        return DivisorClass(self.basis, tuple(int(k) * a for a in self.coeffs))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coeffs)


@dataclass(frozen=True)
class SurfaceModel:
    """A Picard-lattice model for the resolution of the surface with parameters (m, n)."""

    m: int
    n: int
    kind: str

    @property
    def rank(self) -> int:
        return self.n + 2 if self.kind == HIRZEBRUCH else self.m + 6

    @cached_property
    def basis_tag(self) -> str:
        return f"{self.kind}(m={self.m},n={self.n})"

    @cached_property
    def gram(self) -> tuple[tuple[int, ...], ...]:
        r = self.rank
        g = [[0] * r for _ in range(r)]
        if self.kind == HIRZEBRUCH:
            g[0][0] = -self.m
            g[0][1] = g[1][0] = 1
            for i in range(2, r):
                g[i][i] = -1
        else:
            g[0][0] = 1
            for i in range(1, r):
                g[i][i] = -1
        return tuple(tuple(row) for row in g)

    @cached_property
    def basis_names(self) -> tuple[str, ...]:
        if self.kind == HIRZEBRUCH:
            return ("Q", "F") + tuple(f"E_{i}" for i in range(1, self.n + 1))
        return tuple(f"e_{j}" for j in range(self.m + 6))

    def divisor(self, coeffs) -> DivisorClass:
        coeffs = tuple(coeffs)
        if len(coeffs) != self.rank:
            raise ParameterError(
                f"expected {self.rank} coefficients for {self.basis_tag}, got {len(coeffs)}"
            )
        return DivisorClass(self.basis_tag, coeffs)

    def basis_class(self, index: int) -> DivisorClass:
        return self.divisor(tuple(1 if i == index else 0 for i in range(self.rank)))

    def intersect(self, a: DivisorClass, b: DivisorClass) -> int:
        for cls in (a, b):
            if cls.basis != self.basis_tag:
                raise BasisMismatchError(
                    f"class in basis {cls.basis!r} paired inside model {self.basis_tag!r}"
                )
        g = self.gram
        total = 0
        for i, ai in enumerate(a.coeffs):
            if ai == 0:
                continue
            row = g[i]
            total += ai * sum(row[j] * bj for j, bj in enumerate(b.coeffs) if bj != 0)
        return total

    @cached_property
    def anticanonical(self) -> DivisorClass:
        if self.kind == HIRZEBRUCH:
            return self.divisor((2, self.m + 2) + (-1,) * self.n)
        return self.divisor((3,) + (-1,) * (self.m + 5))

    @cached_property
    def distinguished(self) -> dict[str, DivisorClass]:
        """Named classes in this basis.

        Hirzebruch: Q, F, E_1..E_n.  Plane: e_0..e_{m+5}, Q, E_1..E_{m+4}
        (aliases of e_i) and the conic-fibration residuals E_i' = e_0 - e_i - e_{m+5}.
        """
        named: dict[str, DivisorClass] = {}
        if self.kind == HIRZEBRUCH:
            named["Q"] = self.basis_class(0)
            named["F"] = self.basis_class(1)
            for i in range(1, self.n + 1):
                named[f"E_{i}"] = self.basis_class(i + 1)
        else:
            r = self.rank
            for j in range(r):
                named[f"e_{j}"] = self.basis_class(j)
            q = [2] + [-1] * (self.m + 4) + [0]
            named["Q"] = self.divisor(q)
            last = r - 1
            for i in range(1, self.m + 5):
                named[f"E_{i}"] = self.basis_class(i)
                prime = [0] * r
                prime[0] = 1
                prime[i] = -1
                prime[last] = -1
                named[f"E_{i}'"] = self.divisor(prime)
        return named


def build_model(m: int, n: int, kind: str = HIRZEBRUCH) -> SurfaceModel:
    """Construct and validate a lattice model.

    m >= 2; 1 <= n <= m+5; the plane basis exists only for n = m+4.
    """
    m, n = int(m), int(n)
    if kind not in KINDS:
        raise ParameterError(f"unknown basis kind {kind!r}; expected one of {KINDS}")
    if m < 2:
        raise ParameterError(f"m must be >= 2, got {m}")
    if not 1 <= n <= m + 5:
        raise ParameterError(f"n must satisfy 1 <= n <= m+5 = {m + 5}, got {n}")
    if kind == PLANE and n != m + 4:
        raise ParameterError(f"plane basis requires n = m+4 = {m + 4}, got n = {n}")
    return SurfaceModel(m=m, n=n, kind=kind)


def intersect(model: SurfaceModel, a: DivisorClass, b: DivisorClass) -> int:
    return model.intersect(a, b)


def anticanonical_class(model: SurfaceModel) -> DivisorClass:
    return model.anticanonical


def k_squared_singular(m: int, n: int) -> Fraction:
    """Self-intersection of the anticanonical class on the singular surface.

    Exact value 8 - n + (m-2)^2/m.  For n = m+4 this collapses to 4/m.
    """
    m, n = int(m), int(n)
    if m < 2:
        raise ParameterError(f"m must be >= 2, got {m}")
    if not 1 <= n <= m + 5:
        raise ParameterError(f"n must satisfy 1 <= n <= m+5 = {m + 5}, got {n}")
    return Fraction(8 - n) + Fraction((m - 2) ** 2, m)


def signature_of(gram) -> tuple[int, int]:
    """Signature (positive, negative) of a symmetric rational matrix.

    Exact symmetric congruence diagonalization over Fraction; no eigenvalues,
    no floating point.
    """
    a = [[Fraction(x) for x in row] for row in gram]
    r = len(a)
    for row in a:
        if len(row) != r:
            raise ParameterError("gram matrix must be square")
    for i in range(r):
        for j in range(i):
            if a[i][j] != a[j][i]:
                raise ParameterError("gram matrix must be symmetric")
    pos = neg = 0
    for k in range(r):
        if a[k][k] == 0:
            pivot = next((l for l in range(k + 1, r) if a[l][l] != 0), None)
            if pivot is not None:
                a[k], a[pivot] = a[pivot], a[k]
                for row in a:
                    row[k], row[pivot] = row[pivot], row[k]
            else:
                off = next((l for l in range(k + 1, r) if a[k][l] != 0), None)
                if off is None:
                    continue  # zero row and column contribute nothing
                # fold row/col `off` into k to create a nonzero diagonal entry
                for j in range(r):
                    a[k][j] += a[off][j]
                for i in range(r):
                    a[i][k] += a[i][off]
        d = a[k][k]
        if d > 0:
            pos += 1
        else:
            neg += 1
        for i in range(k + 1, r):
            f = a[i][k] / d
            if f == 0:
                continue
            for j in range(r):
                a[i][j] -= f * a[k][j]
            for i2 in range(r):
                a[i2][i] -= f * a[i2][k]
    return pos, neg


def lattice_signature(model: SurfaceModel) -> tuple[int, int]:
    return signature_of(model.gram)


def gram_determinant(model: SurfaceModel) -> int:
    """Exact determinant of the Gram matrix (Gaussian elimination over Fraction)."""
    a = [[Fraction(x) for x in row] for row in model.gram]
    r = len(a)
    det = Fraction(1)
    for k in range(r):
        pivot = next((i for i in range(k, r) if a[i][k] != 0), None)
        if pivot is None:
            return 0
        if pivot != k:
            a[k], a[pivot] = a[pivot], a[k]
            det = -det
        det *= a[k][k]
        for i in range(k + 1, r):
            f = a[i][k] / a[k][k]
            for j in range(k, r):
                a[i][j] -= f * a[k][j]
    if det.denominator != 1:
        raise AssertionError("integer matrix produced non-integer determinant")
    return int(det)


def is_unimodular(model: SurfaceModel) -> bool:
    return abs(gram_determinant(model)) == 1


# --- JSON serialization -----------------------------------------------------

def load_schema(name: str) -> dict:
    """Load one of the JSON schemas shipped under dpforms/schemas/."""
    text = resources.files("dpforms").joinpath(f"schemas/{name}").read_text()
    return json.loads(text)


def classes_to_document(model: SurfaceModel, classes, names=None) -> dict:
    doc = {
        "format": 1,
        "m": model.m,
        "n": model.n,
        "kind": model.kind,
        "classes": [list(c.coeffs) for c in classes],
    }
    if names is not None:
        doc["names"] = list(names)
    return doc


def document_to_classes(doc: dict) -> tuple[SurfaceModel, list[DivisorClass]]:
    """Parse and validate a serialized model document (schemas/model.schema.json)."""
    import jsonschema

    try:
        jsonschema.validate(doc, load_schema("model.schema.json"))
    except jsonschema.ValidationError as exc:
        raise InputFormatError(f"model document invalid: {exc.message}") from exc
    model = build_model(doc["m"], doc["n"], doc["kind"])
    classes = [model.divisor(row) for row in doc["classes"]]
    return model, classes
