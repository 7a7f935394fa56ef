"""Permutation actions on curve systems and the invariant ell.

A curve system indexes a finite list of (-1)-classes on one surface model and
caches their pairwise intersections together with each curve's intersection
number against the negative section Q.  A Galois action is given by finitely
many generators, each a permutation of the curve indices written as a 1-based
image list (an infinite Galois group acts through the finite quotient the
generators present).

ell is the largest size of a generator-invariant set of curves that all meet
Q and are pairwise disjoint.  Invariant sets are unions of orbits, so the
search runs over orbits: an orbit is admissible when it is internally
disjoint and every member meets Q, two orbits conflict when some cross pair
intersects, and ell is the maximum weight independent set in that conflict
graph with orbit sizes as weights.  `compute_ell` solves this exactly by
branch and bound; `brute_force_ell` re-derives it by exhausting all unions of
orbits and exists purely as a cross-check.

Curve indices inside this module are 0-based positions into
``system.curves``; the command line presents them 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .curves import curves_meeting_q
from .errors import InvalidActionError, ParameterError, SystemSizeError
from .lattice import (
    PLANE,
    DivisorClass,
    SurfaceModel,
    anticanonical_class,
)

BRUTE_FORCE_LIMIT = 24


@dataclass(frozen=True)
class CurveSystem:
    """An indexed family of (-1)-classes with cached intersection data."""

    model: SurfaceModel
    curves: tuple[DivisorClass, ...]

    def __len__(self) -> int:
        return len(self.curves)

    @cached_property
    def pair_gram(self) -> tuple[tuple[int, ...], ...]:
        ics = self.curves
        inner = self.model.intersect
        return tuple(tuple(inner(a, b) for b in ics) for a in ics)

    @cached_property
    def q_incidence(self) -> tuple[int, ...]:
        q = self.model.distinguished["Q"]
        inner = self.model.intersect
        return tuple(inner(c, q) for c in self.curves)


def build_curve_system(model: SurfaceModel, curves: list[DivisorClass]) -> CurveSystem:
    """Validate and assemble a curve system.

    Every member must be a (-1)-class: self-intersection -1 and
    anticanonical degree 1.  Duplicates and negative Q-incidence are
    rejected; the latter cannot occur for genuine (-1)-classes but the
    check keeps bad hand-written input from slipping through.
    """
    if not curves:
        raise ParameterError("curve system must contain at least one curve")
    seen: set[tuple[int, ...]] = set()
    mk = anticanonical_class(model)
    for i, c in enumerate(curves):
        if model.intersect(c, c) != -1:
            raise ParameterError(f"curve {i + 1} has self-intersection {model.intersect(c, c)}, expected -1")
        if model.intersect(c, mk) != 1:
            raise ParameterError(f"curve {i + 1} has anticanonical degree {model.intersect(c, mk)}, expected 1")
        if c.coeffs in seen:
            raise ParameterError(f"curve {i + 1} duplicates an earlier curve")
        seen.add(c.coeffs)
    system = CurveSystem(model=model, curves=tuple(curves))
    for i, q in enumerate(system.q_incidence):
        if q < 0:
            raise ParameterError(f"curve {i + 1} has negative Q-incidence {q}")
    return system


def standard_curve_system(model: SurfaceModel) -> CurveSystem:
    """The canonical Q-meeting system used when curves are requested as "auto".

    Plane model: E_1..E_{m+4} followed by E_1'..E_{m+4}'.  Hirzebruch model:
    the Q-meeting census in sorted coefficient order (a window census when
    the full list is not finitely enumerable).
    """
    if model.kind == PLANE:
        named = model.distinguished
        curves = [named[f"E_{i}"] for i in range(1, model.m + 5)]
        curves += [named[f"E_{i}'"] for i in range(1, model.m + 5)]
        return build_curve_system(model, curves)
    return build_curve_system(model, list(curves_meeting_q(model)))


@dataclass(frozen=True)
class GaloisAction:
    """Finitely many permutation generators, each a 1-based image list."""

    degree: int
    generators: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.degree < 1:
            raise ParameterError(f"degree must be >= 1, got {self.degree}")
        expected = tuple(range(1, self.degree + 1))
        for k, gen in enumerate(self.generators):
            if tuple(sorted(gen)) != expected:
                raise ParameterError(
                    f"generator {k + 1} is not a permutation of 1..{self.degree}: {gen}"
                )

    @classmethod
    def trivial(cls, degree: int) -> GaloisAction:
        return cls(degree=degree, generators=())

    @classmethod
    def from_one_based(cls, degree: int, generators: list[list[int]]) -> GaloisAction:
        return cls(degree=degree, generators=tuple(tuple(g) for g in generators))


def orbit_partition(action: GaloisAction) -> tuple[tuple[int, ...], ...]:
    """Orbits of the generated group, as sorted 0-based index tuples sorted by minimum."""
    parent = list(range(action.degree))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for gen in action.generators:
        for i, img in enumerate(gen):
            a, b = find(i), find(img - 1)
            if a != b:
                parent[b] = a
    groups: dict[int, list[int]] = {}
    for i in range(action.degree):
        groups.setdefault(find(i), []).append(i)
    return tuple(tuple(sorted(g)) for g in sorted(groups.values(), key=min))


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[str, ...]


def validate_action(system: CurveSystem, action: GaloisAction) -> ValidationReport:
    """Check that every generator preserves the intersection data.

    A generator g is admissible iff pair_gram[g(i)][g(j)] = pair_gram[i][j]
    for all pairs and q_incidence[g(i)] = q_incidence[i] for all i.  All
    violations are reported, not just the first.
    """
    if action.degree != len(system):
        raise ParameterError(
            f"action degree {action.degree} does not match curve count {len(system)}"
        )
    gram = system.pair_gram
    qinc = system.q_incidence
    violations: list[str] = []
    for k, gen in enumerate(action.generators):
        p = [img - 1 for img in gen]
        for i in range(len(p)):
            if qinc[p[i]] != qinc[i]:
                violations.append(
                    f"generator {k + 1}: curve {i + 1} has Q-incidence {qinc[i]} "
                    f"but its image {p[i] + 1} has {qinc[p[i]]}"
                )
        for i, j in combinations(range(len(p)), 2):
            if gram[p[i]][p[j]] != gram[i][j]:
                violations.append(
                    f"generator {k + 1}: curves ({i + 1},{j + 1}) intersect in {gram[i][j]} "
                    f"but their images ({p[i] + 1},{p[j] + 1}) intersect in {gram[p[i]][p[j]]}"
                )
    return ValidationReport(ok=not violations, violations=tuple(violations))


@dataclass(frozen=True)
class EllResult:
    """ell with a witness: the witness is a union of orbits, every member
    meets Q, members are pairwise disjoint, and |witness| = ell."""

    ell: int
    witness: tuple[int, ...]
    witness_orbits: tuple[tuple[int, ...], ...]


def _admissible_orbits(
    system: CurveSystem, orbits: tuple[tuple[int, ...], ...]
) -> list[tuple[int, ...]]:
    gram = system.pair_gram
    qinc = system.q_incidence
    out = []
    for orb in orbits:
        if any(qinc[i] < 1 for i in orb):
            continue
        if any(gram[i][j] != 0 for i, j in combinations(orb, 2)):
            continue
        out.append(orb)
    return out


def _orbits_conflict(system: CurveSystem, a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    gram = system.pair_gram
    return any(gram[i][j] != 0 for i in a for j in b)


def _require_valid(system: CurveSystem, action: GaloisAction) -> None:
    report = validate_action(system, action)
    if not report.ok:
        raise InvalidActionError(
            f"action violates the intersection form ({len(report.violations)} violations)",
            report=report,
        )


def compute_ell(system: CurveSystem, action: GaloisAction) -> EllResult:
    """Exact ell by branch and bound over the orbit conflict graph.

    Admissible orbits are sorted by decreasing size; the search includes or
    skips each in turn and prunes a branch as soon as the current weight plus
    everything still available cannot beat the best found.  The first optimum
    in this fixed order is returned, so results are deterministic.
    """
    _require_valid(system, action)
    orbits = orbit_partition(action)
    cands = sorted(_admissible_orbits(system, orbits), key=lambda o: (-len(o), o))
    k = len(cands)
    sizes = [len(o) for o in cands]
    compat = [0] * k
    for i in range(k):
        for j in range(i + 1, k):
            if not _orbits_conflict(system, cands[i], cands[j]):
                compat[i] |= 1 << j
                compat[j] |= 1 << i

    best_weight = 0
    best_choice: tuple[int, ...] = ()

    def walk(avail: int, weight: int, chosen: tuple[int, ...]) -> None:
        nonlocal best_weight, best_choice
        if weight > best_weight:
            best_weight = weight
            best_choice = chosen
        remaining = sum(sizes[i] for i in _bits(avail))
        while avail:
            if weight + remaining <= best_weight:
                return
            i = (avail & -avail).bit_length() - 1
            avail &= avail - 1
            walk(avail & compat[i], weight + sizes[i], chosen + (i,))
            remaining -= sizes[i]

    walk((1 << k) - 1, 0, ())
    picked = tuple(cands[i] for i in sorted(best_choice, key=lambda i: cands[i]))
    witness = tuple(sorted(i for orb in picked for i in orb))
    return EllResult(ell=best_weight, witness=witness, witness_orbits=picked)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def brute_force_ell(system: CurveSystem, action: GaloisAction) -> EllResult:
    """Independent oracle: exhaust every union of orbits.

    No pre-filtering and no pruning beyond the size guard; each candidate
    union is tested in full against the two defining conditions.
    """
    if len(system) > BRUTE_FORCE_LIMIT:
        raise SystemSizeError(
            f"brute force supports at most {BRUTE_FORCE_LIMIT} curves, got {len(system)}"
        )
    _require_valid(system, action)
    orbits = orbit_partition(action)
    gram = system.pair_gram
    qinc = system.q_incidence
    best = EllResult(ell=0, witness=(), witness_orbits=())
    for mask in range(1, 1 << len(orbits)):
        chosen = [orbits[i] for i in _bits(mask)]
        members = sorted(i for orb in chosen for i in orb)
        if any(qinc[i] < 1 for i in members):
            continue
        if any(gram[i][j] != 0 for i, j in combinations(members, 2)):
            continue
        if len(members) > best.ell:
            best = EllResult(
                ell=len(members), witness=tuple(members), witness_orbits=tuple(chosen)
            )
    return best


def q_point_forced(m: int) -> bool:
    """Whether the negative section always carries a rational point.

    For odd m the section has odd anticanonical degree 2 - m, so its Galois
    orbit structure forces a rational point; even m has no such guarantee.
    """
    if m < 2:
        raise ParameterError(f"m must be >= 2, got {m}")
    return m % 2 == 1
