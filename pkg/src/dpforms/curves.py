"""Census of (-1)-curve classes on the resolved surfaces.

Two independent routes are provided on purpose:

* ``closed_form_minus_one_classes`` writes down the known families directly
  (Hirzebruch basis for n <= m+3, plane basis for n = m+4).
* ``brute_force_minus_one_classes`` searches a bounded coefficient box for all
  integer vectors D with D^2 = -1 and D.(-K) = 1 that pair non-negatively with
  the known effective classes (F, Q, each E_i, the section class Delta when
  n <= m+3, and the distinguished class E_0 when n = m+5), each "unless D is
  that class itself".  A boundary-stability certificate re-runs the search on
  the box enlarged by one in every direction and fails loudly if anything new
  appears, so a silently truncated census cannot escape.

For n = m+5 (and the Hirzebruch basis at n = m+4) the constraint system can
have solutions arbitrarily far out (for m >= 4, n = m+5 it has infinitely
many), so no finite box is ever stable there; such censuses are meaningful
only as "arithmetic classes within the search box" and must be requested with
``certify=False``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import BoxTooSmallError, ParameterError, UnsupportedModelError
from .lattice import HIRZEBRUCH, PLANE, DivisorClass, SurfaceModel

EXCEPTIONAL = "exceptional"
FIBER_RESIDUAL = "fiber_residual"
Q_SECTION = "q_section"
DELTA = "delta"
PLANE_DEGREE = "plane_degree"
E_ZERO = "e0"


@dataclass(frozen=True)
class SearchBox:
    """Per-coordinate integer intervals for the stored coefficient vector.

    Intervals must be finite; an interval with lo > hi is empty and the box
    then enumerates nothing.
    """

    intervals: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        cleaned = []
        for pair in self.intervals:
            lo, hi = pair
            cleaned.append((int(lo), int(hi)))
        object.__setattr__(self, "intervals", tuple(cleaned))

    def enlarged(self, pad: int = 1) -> "SearchBox":
        return SearchBox(tuple((lo - pad, hi + pad) for lo, hi in self.intervals))

    @property
    def is_empty(self) -> bool:
        return any(lo > hi for lo, hi in self.intervals)


def default_search_box(model: SurfaceModel) -> SearchBox:
    """The documented default box for the model.

    Hirzebruch: Q-coefficient a in [0, 2], F-coefficient b in [0, 2m+3]
    (covering Q-degrees d = D.Q = b - ma in [0, 3] for every admissible a),
    E-coefficients in [-3, 2] (multiplicities c_i = -coeff in [-2, 3]).

    Plane: degree in [0, floor(m/2) + 3]; e_j-coefficients in
    [-(floor(m/2) + 2), 2], i.e. multiplicities mu_j in [-2, floor(m/2) + 2].
    The upper multiplicity bound grows with m because Q-avoiding classes carry
    mu_{m+5} = d - 1 up to floor(m/2) + 1; a flat bound would truncate the
    census for m >= 4 and the certificate would reject it.
    """
    if model.kind == HIRZEBRUCH:
        return SearchBox(((0, 2), (0, 2 * model.m + 3)) + ((-3, 2),) * model.n)
    top = model.m // 2 + 2
    return SearchBox(((0, model.m // 2 + 3),) + ((-top, 2),) * (model.m + 5))


def delta_class(model: SurfaceModel) -> DivisorClass:
    """The section class Delta = Q + (m+1)F - (E_1 + ... + E_n), n <= m+3 only."""
    if model.kind != HIRZEBRUCH or model.n > model.m + 3:
        raise UnsupportedModelError(
            "Delta is effective only in the Hirzebruch basis with n <= m+3"
        )
    return model.divisor((1, model.m + 1) + (-1,) * model.n)


def distinguished_e0(model: SurfaceModel) -> DivisorClass:
    """The distinguished class E_0 = Q + (m+2)F - (E_1 + ... + E_{m+5}), n = m+5 only.

    Satisfies E_0^2 = -1, E_0.Q = 2, E_0.(-K) = 1 and -K = Q + E_0.
    """
    if model.kind != HIRZEBRUCH or model.n != model.m + 5:
        raise UnsupportedModelError("E_0 is defined only in the Hirzebruch basis with n = m+5")
    return model.divisor((1, model.m + 2) + (-1,) * model.n)


@dataclass(frozen=True)
class CurveFamily:
    """A labelled family of (-1)-classes; degree is set for plane Q-avoiding families."""

    label: str
    members: tuple[DivisorClass, ...]
    degree: int | None = None

    def __len__(self) -> int:
        return len(self.members)


def closed_form_minus_one_classes(model: SurfaceModel) -> tuple[CurveFamily, ...]:
    """The complete (-1)-class census, by family.

    Hirzebruch, n <= m+3: the exceptional classes E_i, the fiber residuals
    F - E_i, the sections Q + mF - (m+1 of the E_i) when n >= m+1, and the
    single section Delta when n = m+3.

    Plane (n = m+4): the Q-meeting classes E_i = e_i and
    E_i' = e_0 - e_i - e_{m+5} (2m+8 in total), plus for each degree
    0 <= d <= floor(m/2) + 2 the Q-avoiding classes
    d.e_0 - (2d of the e_i) - (d-1).e_{m+5}.

    For the Hirzebruch basis with n in {m+4, m+5} there is no closed form;
    use the brute-force census.
    """
    named = model.distinguished
    families: list[CurveFamily] = []
    if model.kind == HIRZEBRUCH:
        m, n = model.m, model.n
        if n > m + 3:
            raise UnsupportedModelError(
                f"no closed form in the Hirzebruch basis for n = {n} > m+3 = {m + 3}; "
                "use brute_force_minus_one_classes"
            )
        exceptional = tuple(named[f"E_{i}"] for i in range(1, n + 1))
        families.append(CurveFamily(EXCEPTIONAL, exceptional))
        fiber = named["F"]
        families.append(CurveFamily(FIBER_RESIDUAL, tuple(fiber - e for e in exceptional)))
        if n >= m + 1:
            members = []
            for subset in combinations(range(n), m + 1):
                coeffs = [1, m] + [0] * n
                for i in subset:
                    coeffs[2 + i] = -1
                members.append(model.divisor(coeffs))
            families.append(CurveFamily(Q_SECTION, tuple(members)))
        if n == m + 3:
            families.append(CurveFamily(DELTA, (delta_class(model),)))
        return tuple(families)

    m = model.m
    exceptional = tuple(named[f"E_{i}"] for i in range(1, m + 5))
    families.append(CurveFamily(EXCEPTIONAL, exceptional))
    families.append(
        CurveFamily(FIBER_RESIDUAL, tuple(named[f"E_{i}'"] for i in range(1, m + 5)))
    )
    last = model.rank - 1
    for d in range(m // 2 + 3):
        members = []
        for subset in combinations(range(1, m + 5), 2 * d):
            coeffs = [0] * model.rank
            coeffs[0] = d
            for j in subset:
                coeffs[j] = -1
            coeffs[last] = -(d - 1)
            members.append(model.divisor(coeffs))
        families.append(CurveFamily(PLANE_DEGREE, tuple(members), degree=d))
    return tuple(families)


def family_classes(families) -> tuple[DivisorClass, ...]:
    """All members of the given families, sorted by coefficient vector."""
    out = [c for fam in families for c in fam.members]
    return tuple(sorted(out, key=lambda c: c.coeffs))


# --- brute-force oracle ------------------------------------------------------

def _bounded_vectors(bounds, total, sq_total):
    """Integer vectors v with bounds[i][0] <= v_i <= bounds[i][1],
    sum(v) = total and sum(v^2) = sq_total.  Exact recursive search with
    interval and Cauchy-Schwarz pruning."""
    k = len(bounds)
    lo_sum = [0] * (k + 1)
    hi_sum = [0] * (k + 1)
    lo_sq = [0] * (k + 1)
    hi_sq = [0] * (k + 1)
    for i in range(k - 1, -1, -1):
        lo, hi = bounds[i]
        if lo > hi:
            return []
        lo_sum[i] = lo_sum[i + 1] + lo
        hi_sum[i] = hi_sum[i + 1] + hi
        best = 0 if lo <= 0 <= hi else min(lo * lo, hi * hi)
        lo_sq[i] = lo_sq[i + 1] + best
        hi_sq[i] = hi_sq[i + 1] + max(lo * lo, hi * hi)
    out: list[tuple[int, ...]] = []
    cur: list[int] = []

    def rec(idx: int, rem_total: int, rem_sq: int) -> None:
        if idx == k:
            if rem_total == 0 and rem_sq == 0:
                out.append(tuple(cur))
            return
        lo, hi = bounds[idx]
        tail = k - idx - 1
        for v in range(lo, hi + 1):
            t = rem_total - v
            s = rem_sq - v * v
            if t < lo_sum[idx + 1] or t > hi_sum[idx + 1]:
                continue
            if s < lo_sq[idx + 1] or s > hi_sq[idx + 1]:
                continue
            if tail > 0 and s * tail < t * t:
                continue
            cur.append(v)
            rec(idx + 1, t, s)
            cur.pop()

    rec(0, total, sq_total)
    return out


def _solve_hirzebruch(model: SurfaceModel, box: SearchBox) -> list[tuple[int, ...]]:
    m, n = model.m, model.n
    (a_lo, a_hi), (b_lo, b_hi) = box.intervals[0], box.intervals[1]
    tail_bounds = box.intervals[2:]
    use_delta = n <= m + 3
    use_e0 = n == m + 5
    e0_vec = (1, m + 2) + (-1,) * n
    units = {tuple(1 if j == 2 + i else 0 for j in range(n + 2)) for i in range(n)}
    sols: list[tuple[int, ...]] = []
    for a in range(max(a_lo, 0), a_hi + 1):  # D.F = a >= 0
        for b in range(b_lo, b_hi + 1):
            d = b - m * a
            if d < 0:  # D.Q >= 0; Q itself never satisfies D^2 = -1
                continue
            sum_v = (m - 2) * a - 2 * b + 1  # from D.(-K) = 1
            sq_v = -m * a * a + 2 * a * b + 1  # from D^2 = -1
            if sq_v < 0:
                continue
            for tail in _bounded_vectors(tail_bounds, sum_v, sq_v):
                vec = (a, b) + tail
                # multiplicities c_i = -v_i must be >= 0 unless D = E_i
                if any(v > 0 for v in tail) and vec not in units:
                    continue
                if use_delta:
                    # D.Delta = a + b + sum(v) = 1 - a - d on candidates
                    if a + b + sum_v < 0 and vec != (1, m + 1) + (-1,) * n:
                        continue
                if use_e0 and 1 - d < 0 and vec != e0_vec:  # D.E_0 = 1 - d
                    continue
                sols.append(vec)
    return sols


def _solve_plane(model: SurfaceModel, box: SearchBox) -> list[tuple[int, ...]]:
    m = model.m
    d_lo, d_hi = box.intervals[0]
    tail_bounds = box.intervals[1:]
    slots = m + 5
    units = {tuple(1 if j == i else 0 for j in range(slots)) for i in range(slots)}
    sols: list[tuple[int, ...]] = []
    for d in range(max(d_lo, 0), d_hi + 1):  # degree >= 0
        sum_w = 1 - 3 * d  # from D.(-K) = 1
        sq_w = d * d + 1  # from D^2 = -1
        for tail in _bounded_vectors(tail_bounds, sum_w, sq_w):
            vec = (d,) + tail
            # multiplicities mu_j = -w_j must be >= 0 unless D = e_j
            if any(w > 0 for w in tail) and tail not in units:
                continue
            if 2 * d + sum(tail[: m + 4]) < 0:  # D.Q >= 0
                continue
            sols.append(vec)
    return sols


def _solve(model: SurfaceModel, box: SearchBox) -> tuple[DivisorClass, ...]:
    if len(box.intervals) != model.rank:
        raise ParameterError(
            f"search box has {len(box.intervals)} intervals, model rank is {model.rank}"
        )
    raw = (_solve_hirzebruch if model.kind == HIRZEBRUCH else _solve_plane)(model, box)
    return tuple(model.divisor(v) for v in sorted(set(raw)))


def brute_force_minus_one_classes(
    model: SurfaceModel, box: SearchBox | None = None, certify: bool = True
) -> tuple[DivisorClass, ...]:
    """All (-1)-class solutions of the arithmetic constraint system inside the box.

    With certify=True (the default) the search is repeated on the box enlarged
    by 1 in every direction; any solution appearing only on the enlarged shell
    raises BoxTooSmallError with that witness.  Pass certify=False for window
    censuses (n = m+5, or the Hirzebruch basis at n = m+4) where the solution
    set outgrows every box.
    """
    if box is None:
        box = default_search_box(model)
    sols = _solve(model, box)
    if certify:
        bigger = _solve(model, box.enlarged(1))
        if len(bigger) != len(sols):
            inner = set(sols)
            witness = next(c for c in bigger if c not in inner)
            raise BoxTooSmallError(
                f"box too small: enlarging by 1 found {len(bigger) - len(sols)} further "
                f"solution(s), e.g. {witness.coeffs}",
                witness=witness,
            )
    return sols


def curves_meeting_q(
    model: SurfaceModel, box: SearchBox | None = None, certify: bool | None = None
) -> tuple[DivisorClass, ...]:
    """Brute-force census filtered to the classes meeting Q (D.Q >= 1).

    certify=None resolves to True exactly where a complete census is possible
    (Hirzebruch n <= m+3, plane basis); beyond that range the result is the
    window census for the box and is not certified.
    """
    if certify is None:
        certify = model.kind == PLANE or model.n <= model.m + 3
    q = model.distinguished["Q"]
    sols = brute_force_minus_one_classes(model, box=box, certify=certify)
    return tuple(c for c in sols if model.intersect(c, q) >= 1)
