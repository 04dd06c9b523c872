"""Framed planar tangles as words of elementary slices.

A tangle with ``src`` bottom points and ``dst`` top points is stored as a
sequence of slices read bottom to top.  The slices are:

* ``X+ i`` / ``X- i``: a crossing of the strands at positions i, i+1.  In a
  positive crossing the strand running bottom-left to top-right passes
  over.  Crossings preserve the strand count.
* ``CAP i``: the strands at positions i, i+1 turn around and join
  (count drops by 2).
* ``CUP i``: a new pair of strands opens at positions i, i+1 (count grows
  by 2).

Positions are 1-based.  Words carry the blackboard framing of the drawn
diagram; a positive kink is worth ``a``.  Composition stacks the first
factor on top of the second; the tensor product places words side by side.

The line-oriented file format::

    TANGLE src=<n>
    X+ 1
    CAP 2
    ...
    END dst=<m>
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "Slice",
    "TangleWord",
    "identity",
    "compose",
    "tensor",
    "closure",
    "encircling_word",
    "crossing_word",
    "hook_word",
    "kink_word",
    "full_twist_word",
    "parse_tangle",
    "render_tangle",
    "ArityMismatchError",
    "TangleParseError",
]

X_POS = "X+"
X_NEG = "X-"
CAP = "CAP"
CUP = "CUP"

_DELTAS = {X_POS: 0, X_NEG: 0, CAP: -2, CUP: 2}


class ArityMismatchError(ValueError):
    """Boundary point counts do not match for the requested operation."""


class TangleParseError(ValueError):
    """Malformed tangle file; carries a 1-based line number."""

    def __init__(self, lineno, message):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


@dataclass(frozen=True)
class Slice:
    kind: str
    pos: int

    def __post_init__(self):
        if self.kind not in _DELTAS:
            raise ValueError(f"unknown slice kind {self.kind!r}")
        if self.pos < 1:
            raise ValueError("slice position must be >= 1")

    @property
    def width_delta(self) -> int:
        return _DELTAS[self.kind]

    def min_width(self) -> int:
        # a CUP at position i only needs i-1 strands to its left
        return self.pos - 1 if self.kind == CUP else self.pos + 1

    def shifted(self, offset: int) -> "Slice":
        return Slice(self.kind, self.pos + offset)

    def __str__(self):
        return f"{self.kind} {self.pos}"


@dataclass(frozen=True)
class TangleWord:
    src: int
    dst: int
    slices: tuple[Slice, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "slices", tuple(self.slices))
        if self.src < 0 or self.dst < 0:
            raise ValueError("boundary point counts must be nonnegative")
        w = self.src
        for k, sl in enumerate(self.slices):
            if w < sl.min_width():
                raise ValueError(f"slice {k} ({sl}) needs width {sl.min_width()}, have {w}")
            w += sl.width_delta
        if w != self.dst:
            raise ValueError(f"width chain ends at {w}, declared dst={self.dst}")
        if (self.src + self.dst) % 2:
            raise ValueError("src + dst must be even")

    @property
    def crossing_count(self) -> int:
        return sum(1 for sl in self.slices if sl.kind in (X_POS, X_NEG))

    def widths(self) -> list[int]:
        """Strand counts between slices, from src to dst."""
        out = [self.src]
        for sl in self.slices:
            out.append(out[-1] + sl.width_delta)
        return out

    def __str__(self):
        return render_tangle(self)


def identity(n: int) -> TangleWord:
    return TangleWord(n, n)


def compose(f: TangleWord, g: TangleWord) -> TangleWord:
    """Stack f on top of g; requires src(f) = dst(g)."""
    if f.src != g.dst:
        raise ArityMismatchError(f"compose: src(f)={f.src} != dst(g)={g.dst}")
    return TangleWord(g.src, f.dst, g.slices + f.slices)


def tensor(f: TangleWord, g: TangleWord) -> TangleWord:
    """Place g to the right of f."""
    shifted = tuple(sl.shifted(f.dst) for sl in g.slices)
    return TangleWord(f.src + g.src, f.dst + g.dst, f.slices + shifted)


def closure(f: TangleWord) -> TangleWord:
    """Join top point k to bottom point k by nested arcs around the right."""
    if f.src != f.dst:
        raise ArityMismatchError(f"closure needs src = dst, got {f.src}, {f.dst}")
    n = f.src
    cups = [Slice(CUP, i) for i in range(1, n + 1)]
    caps = [Slice(CAP, i) for i in range(n, 0, -1)]
    body = tensor(f, identity(n))
    return TangleWord(0, 0, tuple(cups) + body.slices + tuple(caps))


def encircling_word(n: int) -> TangleWord:
    """id_n with one loop around all n strands: over on the front pass,
    under on the back pass."""
    if n < 0:
        raise ValueError("n must be >= 0")
    slices = [Slice(CUP, 1)]
    slices += [Slice(X_POS, i) for i in range(2, n + 2)]
    slices += [Slice(X_NEG, i) for i in range(1, n + 1)]
    slices.append(Slice(CAP, n + 1))
    return TangleWord(n, n, tuple(slices))


def crossing_word(n: int, i: int, sign: int = 1) -> TangleWord:
    """The braid generator at position i on n strands (sign -1 for negative)."""
    return TangleWord(n, n, (Slice(X_POS if sign > 0 else X_NEG, i),))


def hook_word(n: int, i: int) -> TangleWord:
    """The hook h_i on n strands: cap at i, then cup at i."""
    return TangleWord(n, n, (Slice(CAP, i), Slice(CUP, i)))


def kink_word(sign: int = 1) -> TangleWord:
    """A single strand with one curl; positive curl evaluates to a."""
    kind = X_POS if sign > 0 else X_NEG
    return TangleWord(1, 1, (Slice(CUP, 2), Slice(kind, 1), Slice(CAP, 2)))


def full_twist_word(n: int, sign: int = 1) -> TangleWord:
    """The last strand wrapped once around strands 1..n-1 (all crossings
    positive for sign=+1)."""
    kind = X_POS if sign > 0 else X_NEG
    slices = [Slice(kind, i) for i in range(n - 1, 0, -1)]
    slices += [Slice(kind, i) for i in range(1, n)]
    return TangleWord(n, n, tuple(slices))


# ---------------------------------------------------------------------------
# file format


def parse_tangle(lines, start_lineno: int = 1):
    """Parse one TANGLE block from an iterable of lines.

    Returns (word, next_lineno).  Raises TangleParseError with the offending
    line number on malformed input.
    """
    it = list(lines)
    ln = start_lineno
    idx = 0

    def current():
        return it[idx].strip() if idx < len(it) else None

    while current() == "" or (current() and current().startswith("#")):
        idx += 1
        ln += 1
    head = current()
    if head is None:
        raise TangleParseError(ln, "expected 'TANGLE src=<n>'")
    parts = head.split()
    if len(parts) != 2 or parts[0] != "TANGLE" or not parts[1].startswith("src="):
        raise TangleParseError(ln, f"expected 'TANGLE src=<n>', got {head!r}")
    try:
        src = int(parts[1][4:])
    except ValueError:
        raise TangleParseError(ln, f"bad src in {head!r}") from None
    idx += 1
    ln += 1

    slices = []
    width = src
    while True:
        line = current()
        if line is None:
            raise TangleParseError(ln, "unterminated block: expected 'END dst=<m>'")
        idx += 1
        ln += 1
        if line == "" or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "END":
            if len(parts) != 2 or not parts[1].startswith("dst="):
                raise TangleParseError(ln - 1, f"expected 'END dst=<m>', got {line!r}")
            try:
                dst = int(parts[1][4:])
            except ValueError:
                raise TangleParseError(ln - 1, f"bad dst in {line!r}") from None
            if width != dst:
                raise TangleParseError(
                    ln - 1, f"width chain ends at {width}, declared dst={dst}"
                )
            return TangleWord(src, dst, tuple(slices)), ln
        if len(parts) != 2 or parts[0] not in _DELTAS:
            raise TangleParseError(ln - 1, f"unknown slice {line!r}")
        try:
            pos = int(parts[1])
        except ValueError:
            raise TangleParseError(ln - 1, f"bad position in {line!r}") from None
        try:
            sl = Slice(parts[0], pos)
        except ValueError as exc:
            raise TangleParseError(ln - 1, str(exc)) from None
        if width < sl.min_width():
            raise TangleParseError(
                ln - 1, f"slice {sl} needs width {sl.min_width()}, have {width}"
            )
        width += sl.width_delta
        slices.append(sl)


def render_tangle(word: TangleWord) -> str:
    lines = [f"TANGLE src={word.src}"]
    lines += [str(sl) for sl in word.slices]
    lines.append(f"END dst={word.dst}")
    return "\n".join(lines)
