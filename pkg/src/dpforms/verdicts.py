"""Tri-state rationality and cylindricity verdicts.

The decision table maps (m, n, ell, q_point) to a pair of verdicts, where
q_point records whether the negative section has a rational point.  Open
means "not determined", never "error": every combination the classification
theorems leave untouched comes back Open rather than guessed.

Citations are clause tags: "thm:intermediate(k)" for the n <= m+3 cases,
"thm:m+4(k)" and "thm:m+5(k)" for the two boundary cases, numbering clauses
in statement order (the value-constraint clause of each boundary theorem is
clause 2 and is cited by feasible_ell, not by classify).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import InfeasibleEllError, ParameterError
from .galois import q_point_forced


class TriState(enum.Enum):
    YES = "yes"
    NO = "no"
    OPEN = "open"

    def __str__(self) -> str:
        return self.value


def parse_tristate(text: str) -> TriState:
    """Parse yes/no/open; "unknown" is accepted as a synonym for open."""
    key = text.strip().lower()
    if key == "unknown":
        return TriState.OPEN
    for state in TriState:
        if key == state.value:
            return state
    raise ParameterError(f"expected yes, no, or unknown, got {text!r}")


@dataclass(frozen=True)
class Verdict:
    rational: TriState
    cylindrical: TriState
    citations: tuple[str, ...]
    notes: tuple[str, ...]


def is_del_pezzo(m: int, n: int) -> bool:
    """Whether the blown-up surface is a del Pezzo surface."""
    if m < 2:
        raise ParameterError(f"m must be >= 2, got {m}")
    if n < 0:
        raise ParameterError(f"n must be >= 0, got {n}")
    return (m >= 4 and n <= m + 4) or (m in (2, 3) and n <= m + 5)


def feasible_ell(m: int, n: int) -> frozenset[int]:
    """The values ell can take.  Defined only for n = m+4 and n = m+5.

    n = m+4: {0..m+2} and m+4 (m+3 never occurs).
    n = m+5: {1..m+3} and m+5, m+6 (ell >= 1 always; m+4 never occurs).
    """
    if m < 2:
        raise ParameterError(f"m must be >= 2, got {m}")
    if n == m + 4:
        return frozenset(range(0, m + 3)) | {m + 4}
    if n == m + 5:
        return frozenset(range(1, m + 4)) | {m + 5, m + 6}
    raise ParameterError(f"ell is undefined for n = {n} (needs n = m+4 or n = m+5)")


def classify(
    m: int,
    n: int,
    ell: int | None = None,
    q_point: TriState | str = TriState.OPEN,
) -> Verdict:
    """Decision table for rationality and cylindricity.

    ell must be supplied exactly when n is m+4 or m+5, and must be feasible.
    For odd m the q_point input is upgraded to yes (the negative section is
    forced to carry a rational point); a note records the upgrade.
    """
    if isinstance(q_point, str):
        q_point = parse_tristate(q_point)
    if m < 2:
        raise ParameterError(f"m must be >= 2, got {m}")
    if not 1 <= n <= m + 5:
        raise ParameterError(f"n must satisfy 1 <= n <= m+5, got n = {n} with m = {m}")

    notes: list[str] = []
    if not is_del_pezzo(m, n):
        notes.append(
            f"(m, n) = ({m}, {n}) lies outside the del Pezzo range; "
            "the classification is applied formally"
        )
    if q_point_forced(m) and q_point is not TriState.YES:
        if q_point is TriState.NO:
            notes.append(
                "q_point no is impossible for odd m and was overridden"
            )
        notes.append("m is odd, so the negative section has a rational point; q_point set to yes")
        q_point = TriState.YES

    if n <= m + 3:
        if ell is not None:
            raise ParameterError(f"ell is undefined for n = {n} (needs n = m+4 or n = m+5)")
    else:
        if ell is None:
            raise ParameterError(f"ell is required for n = {n}")
        allowed = feasible_ell(m, n)
        if ell not in allowed:
            raise InfeasibleEllError(
                f"ell = {ell} is not feasible for (m, n) = ({m}, {n}); "
                f"allowed values: {sorted(allowed)}",
                feasible=allowed,
            )

    yes, no, open_ = TriState.YES, TriState.NO, TriState.OPEN

    if n <= m + 1:
        return Verdict(q_point, yes, ("thm:intermediate(1)",), tuple(notes))
    if n == m + 2:
        both = yes if q_point is yes else open_
        return Verdict(both, both, ("thm:intermediate(2)",), tuple(notes))
    if n == m + 3:
        cyl = yes if q_point is yes else open_
        return Verdict(yes, cyl, ("thm:intermediate(3)",), tuple(notes))

    assert ell is not None
    if n == m + 4:
        if ell <= m:
            return Verdict(no, no, ("thm:m+4(1)",), tuple(notes))
        if ell == m + 1:
            return Verdict(yes, yes, ("thm:m+4(3)",), tuple(notes))
        if ell == m + 2:
            both = yes if q_point is yes else open_
            return Verdict(both, both, ("thm:m+4(4)",), tuple(notes))
        both = yes if m % 2 == 1 else open_
        return Verdict(both, both, ("thm:m+4(5)",), tuple(notes))

    if ell <= m + 1:
        return Verdict(no, no, ("thm:m+5(1)",), tuple(notes))
    if ell in (m + 2, m + 6):
        return Verdict(yes, yes, ("thm:m+5(3)",), tuple(notes))
    if ell == m + 3:
        both = yes if q_point is yes else open_
        return Verdict(both, both, ("thm:m+5(4)",), tuple(notes))
    cyl = yes if q_point is yes else open_
    return Verdict(yes, cyl, ("thm:m+5(5)",), tuple(notes))
