"""Young diagrams, cell contents, and up-down tableaux.

A Young diagram is a weakly decreasing tuple of positive row lengths; the
cell in row i, column j (1-based) has content j - i.  The scalar attached
to a diagram,

    c_lambda = (s - s^-1) * (a * sum s^(2 cn(c)) - a^-1 * sum s^(-2 cn(c))),

is the eigenvalue defect of the encircling operator on the associated
minimal idempotent.

An up-down tableau of length n is a sequence of diagrams starting at the
single box, consecutive entries differing by exactly one cell; these index
the path basis of the n-strand BMW algebra.  The number of pairs of up-down
tableaux of length n with equal final shape is (2n-1)!!.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .coeffring import ONE, ZERO, RatFunc, alpha, svar

__all__ = [
    "YoungDiagram",
    "UpDownTableau",
    "contents",
    "c_lambda",
    "corner_moves",
    "enumerate_updown",
    "updown_counts",
    "parse_partition",
    "BoundExceededError",
]

UPDOWN_DEFAULT_BOUND = 8


class BoundExceededError(ValueError):
    """Raised when an enumeration exceeds its configured arity bound."""


@dataclass(frozen=True, order=True)
class YoungDiagram:
    """A partition shape; rows weakly decreasing, all positive."""

    rows: tuple[int, ...] = ()

    def __post_init__(self):
        rows = tuple(int(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if any(r < 1 for r in rows):
            raise ValueError(f"rows must be positive: {rows}")
        if any(rows[i] < rows[i + 1] for i in range(len(rows) - 1)):
            raise ValueError(f"rows must weakly decrease: {rows}")

    @property
    def size(self) -> int:
        return sum(self.rows)

    def cells(self):
        """All cells (i, j), 1-based."""
        return [(i + 1, j + 1) for i, r in enumerate(self.rows) for j in range(r)]

    def transpose(self) -> "YoungDiagram":
        if not self.rows:
            return self
        cols = tuple(
            sum(1 for r in self.rows if r > j) for j in range(self.rows[0])
        )
        return YoungDiagram(cols)

    def addable_corners(self):
        """Positions (i, j) where a cell may be added, 1-based."""
        out = []
        for i in range(len(self.rows) + 1):
            j = self.rows[i] if i < len(self.rows) else 0
            above = self.rows[i - 1] if i > 0 else None
            if above is None or j < above:
                out.append((i + 1, j + 1))
        return out

    def removable_corners(self):
        out = []
        for i, r in enumerate(self.rows):
            below = self.rows[i + 1] if i + 1 < len(self.rows) else 0
            if r > below:
                out.append((i + 1, r))
        return out

    def add_cell(self, i) -> "YoungDiagram":
        rows = list(self.rows)
        if i - 1 == len(rows):
            rows.append(1)
        else:
            rows[i - 1] += 1
        return YoungDiagram(tuple(rows))

    def remove_cell(self, i) -> "YoungDiagram":
        rows = list(self.rows)
        rows[i - 1] -= 1
        if rows[i - 1] == 0:
            rows.pop()
        return YoungDiagram(tuple(rows))

    def __str__(self):
        return ",".join(str(r) for r in self.rows) if self.rows else "-"


EMPTY = YoungDiagram()
BOX = YoungDiagram((1,))


def parse_partition(text: str) -> YoungDiagram:
    """Parse `2,1` style input; `-` (or empty) is the empty diagram."""
    text = text.strip()
    if text in ("-", ""):
        return EMPTY
    try:
        rows = tuple(int(p) for p in text.split(","))
        return YoungDiagram(rows)
    except ValueError as exc:
        raise ValueError(f"bad partition {text!r}: {exc}") from None


def contents(diagram: YoungDiagram) -> list[int]:
    """Multiset of cell contents j - i (returned sorted)."""
    return sorted(j - i for (i, j) in diagram.cells())


def c_lambda(diagram: YoungDiagram) -> RatFunc:
    """(s - s^-1)(a * sum_c s^{2cn(c)} - a^-1 * sum_c s^{-2cn(c)})."""
    pos = ZERO
    neg = ZERO
    for cn in contents(diagram):
        pos = pos + svar(2 * cn)
        neg = neg + svar(-2 * cn)
    return (svar() - svar(-1)) * (alpha() * pos - alpha(-1) * neg)


def corner_moves(diagram: YoungDiagram) -> list[YoungDiagram]:
    """All diagrams one cell away (added or removed), deterministically ordered."""
    out = [diagram.add_cell(i) for (i, _) in diagram.addable_corners()]
    out += [diagram.remove_cell(i) for (i, _) in diagram.removable_corners()]
    return sorted(out)


@dataclass(frozen=True, order=True)
class UpDownTableau:
    """A sequence of diagrams from the single box, one-cell steps."""

    shapes: tuple[YoungDiagram, ...]

    def __post_init__(self):
        shapes = tuple(self.shapes)
        object.__setattr__(self, "shapes", shapes)
        if not shapes or shapes[0] != BOX:
            raise ValueError("up-down tableaux start at the single box")
        for prev, cur in zip(shapes, shapes[1:]):
            if cur not in corner_moves(prev):
                raise ValueError(f"illegal step {prev} -> {cur}")

    @property
    def length(self) -> int:
        return len(self.shapes)

    @property
    def final(self) -> YoungDiagram:
        return self.shapes[-1]

    def __str__(self):
        return " / ".join(str(s) for s in self.shapes)


@lru_cache(maxsize=None)
def _enumerate(n: int) -> tuple[UpDownTableau, ...]:
    if n == 1:
        return (UpDownTableau((BOX,)),)
    out = []
    for t in _enumerate(n - 1):
        for nxt in corner_moves(t.final):
            out.append(UpDownTableau(t.shapes + (nxt,)))
    return tuple(sorted(out))


def enumerate_updown(n: int, bound: int = UPDOWN_DEFAULT_BOUND) -> list[UpDownTableau]:
    """All up-down tableaux of length n, deterministically ordered."""
    if n < 1:
        raise ValueError("length must be >= 1")
    if n > bound:
        raise BoundExceededError(f"length {n} exceeds bound {bound}")
    return list(_enumerate(n))


def updown_counts(n: int, bound: int = UPDOWN_DEFAULT_BOUND) -> dict[YoungDiagram, int]:
    """The multiplicity m_lambda(n) of each final shape."""
    counts: dict[YoungDiagram, int] = {}
    for t in enumerate_updown(n, bound):
        counts[t.final] = counts.get(t.final, 0) + 1
    return counts


def double_factorial(k: int) -> int:
    out = 1
    while k > 1:
        out *= k
        k -= 2
    return out
