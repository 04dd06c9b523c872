"""Brauer matchings and their canonical tangle lifts.

A Brauer matching on an (a, b)-rectangle is a perfect matching of the a
bottom and b top boundary points.  Points are encoded as integers: bottom
i (0-based) is i, top j is a + j.  Matchings index the diagram basis of the
BMW algebra: dim K_n = (2n-1)!!.

Canonical lift.  Arcs are ordered by their smallest endpoint (bottoms
before tops, left to right); the lift is the layered diagram in which an
earlier arc passes over a later one wherever they are forced to cross (two
arcs cross exactly when their endpoints interleave in the boundary circle
order), hooks are capped innermost first, and no arc crosses itself.  The
rewriting engine's canonical form is exactly a linear combination of these
lifts, and reduces every lift to itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .tangle import Slice, TangleWord

__all__ = [
    "BrauerMatching",
    "basis",
    "lift_word",
    "identity_matching",
    "transposition_matching",
    "hook_matching",
    "matching_from_permutation",
    "BasisBoundError",
]

BASIS_DEFAULT_BOUND = 4


class BasisBoundError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class BrauerMatching:
    src: int
    dst: int
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        pts = sorted(p for pair in self.pairs for p in pair)
        if pts != list(range(self.src + self.dst)):
            raise ValueError("pairs must cover each boundary point exactly once")
        canon = tuple(sorted(tuple(sorted(p)) for p in self.pairs))
        object.__setattr__(self, "pairs", canon)

    def is_bottom(self, p: int) -> bool:
        return p < self.src

    def hook_count(self) -> int:
        """Number of arcs joining two points on the same side."""
        return sum(
            1
            for (p, q) in self.pairs
            if self.is_bottom(p) == self.is_bottom(q)
        )

    @property
    def has_hook(self) -> bool:
        return self.hook_count() > 0

    def is_permutation(self) -> bool:
        return self.src == self.dst and not self.has_hook

    def permutation(self) -> tuple[int, ...]:
        """One-line permutation w with w[i] = top index joined to bottom i."""
        if not self.is_permutation():
            raise ValueError("matching has hooks")
        w = [0] * self.src
        for (p, q) in self.pairs:
            w[p] = q - self.src
        return tuple(w)

    def __str__(self):
        def name(p):
            return f"b{p + 1}" if p < self.src else f"t{p - self.src + 1}"

        return "(" + ")(".join(f"{name(p)}:{name(q)}" for (p, q) in self.pairs) + ")"


def identity_matching(n: int) -> BrauerMatching:
    return BrauerMatching(n, n, tuple((i, n + i) for i in range(n)))


def transposition_matching(n: int, i: int) -> BrauerMatching:
    """Bottom i, i+1 (1-based) crossing to top i+1, i."""
    pairs = []
    for k in range(n):
        if k == i - 1:
            pairs.append((k, n + k + 1))
        elif k == i:
            pairs.append((k, n + k - 1))
        else:
            pairs.append((k, n + k))
    return BrauerMatching(n, n, tuple(pairs))


def hook_matching(n: int, i: int) -> BrauerMatching:
    """Bottom i, i+1 (1-based) joined; top i, i+1 joined; identity elsewhere."""
    pairs = [(i - 1, i), (n + i - 1, n + i)]
    for k in range(n):
        if k not in (i - 1, i):
            pairs.append((k, n + k))
    return BrauerMatching(n, n, tuple(pairs))


def matching_from_permutation(w) -> BrauerMatching:
    n = len(w)
    return BrauerMatching(n, n, tuple((i, n + w[i]) for i in range(n)))


@lru_cache(maxsize=None)
def _basis(n: int) -> tuple[BrauerMatching, ...]:
    out = []

    def rec(free, pairs):
        if not free:
            out.append(BrauerMatching(n, n, tuple(pairs)))
            return
        p = free[0]
        for q in free[1:]:
            rec([x for x in free[1:] if x != q], pairs + [(p, q)])

    rec(list(range(2 * n)), [])
    return tuple(sorted(out))


def basis(n: int, bound: int = BASIS_DEFAULT_BOUND) -> list[BrauerMatching]:
    """All (2n-1)!! matchings on n+n points, deterministically ordered."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n > bound:
        raise BasisBoundError(f"n={n} exceeds bound {bound}")
    return list(_basis(n))


# ---------------------------------------------------------------------------
# canonical lifts


def _circle_pos(p: int, src: int, dst: int) -> int:
    # boundary circle: bottoms left to right, then tops right to left
    return p if p < src else src + (dst - 1 - (p - src))


def interleaved(arc1, arc2, src: int, dst: int) -> bool:
    """Whether two arcs are forced to cross (endpoints interleave on the circle)."""
    c = lambda p: _circle_pos(p, src, dst)
    a1, b1 = sorted((c(arc1[0]), c(arc1[1])))
    x, y = c(arc2[0]), c(arc2[1])
    return (a1 < x < b1) != (a1 < y < b1)


def _cap_phase(line, rank, hooks):
    """Cap the same-side hooks of `line` innermost first.

    line: list of arc ids at consecutive positions.  Returns (ops, leftover)
    where ops are ('X', slice_pos, mover_over) and ('CAP', slice_pos, None)
    records and leftover is the line with hook arcs removed.
    """
    line = list(line)
    ops = []
    while True:
        positions = {}
        for idx, arc in enumerate(line):
            positions.setdefault(arc, []).append(idx)
        cands = [
            (pos[1] - pos[0], pos[0], arc)
            for arc, pos in positions.items()
            if arc in hooks and len(pos) == 2
        ]
        if not cands:
            return ops, line
        _, p, arc = min(cands)
        q = positions[arc][1]
        for t in range(q, p + 1, -1):
            mover, static = line[t], line[t - 1]
            ops.append(("X", t, rank[mover] < rank[static]))
            line[t - 1], line[t] = line[t], line[t - 1]
        ops.append(("CAP", p + 1, None))
        del line[p : p + 2]


@lru_cache(maxsize=None)
def lift_word(m: BrauerMatching) -> TangleWord:
    """The canonical minimal layered tangle word of a matching."""
    arcs = m.pairs  # sorted by smallest endpoint: index = layer rank
    rank = {arc: k for k, arc in enumerate(arcs)}
    arc_at = {}
    for arc in arcs:
        for p in arc:
            arc_at[p] = arc
    bottom_hooks = {arc for arc in arcs if arc[1] < m.src}
    top_hooks = {arc for arc in arcs if arc[0] >= m.src}

    slices = []
    # caps: remove bottom hooks
    line = [arc_at[i] for i in range(m.src)]
    ops, line = _cap_phase(line, rank, bottom_hooks)
    for kind, pos, mover_over in ops:
        if kind == "CAP":
            slices.append(Slice("CAP", pos))
        else:
            # mover travels right to left, so it is the se-nw strand
            slices.append(Slice("X-" if mover_over else "X+", pos))

    # braid: sort through strands by their top endpoint
    top_of = {arc: max(arc) for arc in line}
    changed = True
    while changed:
        changed = False
        for i in range(len(line) - 1):
            if top_of[line[i]] > top_of[line[i + 1]]:
                a, b = line[i], line[i + 1]
                slices.append(Slice("X+" if rank[a] < rank[b] else "X-", i + 1))
                line[i], line[i + 1] = b, a
                changed = True

    # cups: the top hooks, built by mirroring a cap phase run on the top line
    top_line = [arc_at[m.src + j] for j in range(m.dst)]
    ops, leftover = _cap_phase(top_line, rank, top_hooks)
    assert leftover == line, "through strands out of order after hook removal"
    for kind, pos, mover_over in reversed(ops):
        if kind == "CAP":
            slices.append(Slice("CUP", pos))
        else:
            # read upward the mover climbs left to right: the sw-ne strand
            slices.append(Slice("X+" if mover_over else "X-", pos))
    return TangleWord(m.src, m.dst, tuple(slices))
