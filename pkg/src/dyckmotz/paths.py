"""Lattice paths over the step alphabet {U, D, F}.

Paths are immutable strings of step letters: U goes up (+1), D goes down
(-1), F is flat (0). The canonical text form of a path is the bare letter
string, with the empty path written as the empty string. Step order for
all canonical path orderings is U < D < F (which is not ASCII order, so
use sort_key when sorting path strings).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union

U, D, F = "U", "D", "F"
STEP_HEIGHT = {U: 1, D: -1, F: 0}
_SORT_TABLE = str.maketrans("UDF", "012")


class PathSyntaxError(ValueError):
    """A character outside {U, D, F} was found while parsing a path."""

    def __init__(self, text: str, position: int):
        self.position = position
        super().__init__(
            f"invalid step {text[position]!r} at position {position} in {text!r}")


class NotAMotzkinPathError(ValueError):
    """The step sequence dips below the axis or does not end on it."""

    def __init__(self, steps: str, position: int):
        self.position = position
        super().__init__(
            f"not a Motzkin path: first violation at position {position} in {steps!r}")


class NotADyckPathError(ValueError):
    pass


class EmptyPathError(ValueError):
    pass


class LatticePath(str):
    """A raw step sequence. No axis condition is imposed at this level."""

    def __new__(cls, steps: object = ""):
        s = str(steps)
        for i, c in enumerate(s):
            if c not in STEP_HEIGHT:
                raise PathSyntaxError(s, i)
        return super().__new__(cls, s)

    def heights(self) -> list:
        """Prefix sums of step heights, one entry per step."""
        out, h = [], 0
        for c in self:
            h += STEP_HEIGHT[c]
            out.append(h)
        return out

    def sort_key(self) -> str:
        return self.translate(_SORT_TABLE)


class MotzkinPath(LatticePath):
    """A lattice path that never goes below the x-axis and ends on it."""

    def __new__(cls, steps: object = ""):
        p = super().__new__(cls, steps)
        h = 0
        for i, c in enumerate(p):
            h += STEP_HEIGHT[c]
            if h < 0:
                raise NotAMotzkinPathError(str(p), i)
        if h != 0:
            raise NotAMotzkinPathError(str(p), len(p) - 1)
        return p


class DyckPath(MotzkinPath):
    """A Motzkin path with no flat steps; its semilength is length / 2."""

    def __new__(cls, steps: object = ""):
        p = super().__new__(cls, steps)
        if F in p:
            raise NotADyckPathError(f"flat step at position {p.index(F)} in {str(p)!r}")
        # even length is implied by F-freeness plus ending on the axis
        return p

    @property
    def semilength(self) -> int:
        return len(self) // 2


def validate_motzkin(p: Union[str, LatticePath]) -> MotzkinPath:
    """Return p as a MotzkinPath, or raise NotAMotzkinPathError."""
    return MotzkinPath(p)


def height(p: Union[str, LatticePath]) -> int:
    """Maximal level reached by the path (0 for the empty path)."""
    h = best = 0
    for c in p:
        h += STEP_HEIGHT[c]
        if h > best:
            best = h
    return best


def first_return_decompose(p: Union[str, DyckPath]):
    """Split a nonempty Dyck path as U alpha D beta at its first return to 0.

    Returns (alpha, beta) as DyckPath values.
    """
    if not p:
        raise EmptyPathError("cannot decompose the empty path")
    h = 0
    for i, c in enumerate(p):
        h += STEP_HEIGHT[c]
        if h == 0:
            return DyckPath(p[1:i]), DyckPath(p[i + 1:])
    raise NotADyckPathError(f"path never returns to the axis: {str(p)!r}")


def is_constrained(p: Union[str, DyckPath]) -> bool:
    """Membership in the constrained family.

    A Dyck path belongs iff it is empty, or p = U alpha D beta with
    h(U alpha D) >= h(beta) and both alpha and beta belong recursively.
    Recursion depth is at most the semilength.
    """
    if not p:
        return True
    alpha, beta = first_return_decompose(p)
    if height(alpha) + 1 < height(beta):
        return False
    return is_constrained(alpha) and is_constrained(beta)


@dataclass(frozen=True)
class CaseAUD:
    """p = alpha UD where the final D is matched by the U right before it."""
    alpha: DyckPath


@dataclass(frozen=True)
class CaseInner:
    """p = alpha UU beta D gamma D: the final D matches an up step that is
    itself followed by U, and U beta D gamma is the first-return
    decomposition of the matched interior."""
    alpha: DyckPath
    beta: DyckPath
    gamma: DyckPath


def _matching_up(p: str) -> int:
    # index of the U matching the final D, by right-to-left balance scan
    bal = 0
    for i in range(len(p) - 1, -1, -1):
        bal += STEP_HEIGHT[p[i]]
        if bal == 0 and p[i] == U:
            return i
    raise NotADyckPathError(f"final D has no matching U in {str(p)!r}")


def last_arch_decompose(p: Union[str, DyckPath]):
    """Decompose a nonempty Dyck path around the arch closed by its final D.

    Returns CaseAUD(alpha) when the path ends with a UD peak whose steps
    match each other, else CaseInner(alpha, beta, gamma).
    """
    if not p:
        raise EmptyPathError("cannot decompose the empty path")
    if p.endswith(U + D):
        return CaseAUD(DyckPath(p[:-2]))
    i = _matching_up(p)
    interior = p[i + 1:-1]
    # interior is nonempty here, otherwise the path would end with UD
    beta, gamma = first_return_decompose(interior)
    return CaseInner(DyckPath(p[:i]), beta, gamma)
