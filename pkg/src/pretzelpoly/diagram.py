"""Pretzel diagrams, Kauffman states and circle counting.

Crossings are indexed column by column, top to bottom, so a state string such
as ``"ABA"`` lists the markers of crossing 0, 1, 2 in that order.

Closure wiring of ``P(p_1, ..., p_k)``: inside a column each crossing's SW/SE
ports feed the NW/NE ports of the crossing below; along the top, column
``i``'s NE port meets column ``i+1``'s NW port, and one outer arc joins the
NW port of the first column to the NE port of the last. The bottom is wired
the same way with SW/SE.

Smoothing convention: on a positive crossing the A marker keeps the two
strands of the column vertical; on a negative crossing it joins them
horizontally. This reproduces ``<P(1,1,1)> = A^7 - A^3 - A^-5`` and the
all-A circle count of 3 for ``P(1,1,n)``; the reversed convention yields the
mirror image.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, NamedTuple, Sequence

import numpy as np

from . import _kernels
from .errors import (
    BudgetExceededError,
    DomainError,
    InvalidSpecError,
    UnsupportedFamilyError,
)

NW, NE, SW, SE = 0, 1, 2, 3

#: largest diagram whose states fit the bit-mask encoding
MAX_STATE_CROSSINGS = 63
#: default ceiling for exhaustive enumeration (2**24 states)
DEFAULT_MAX_CROSSINGS = 24

CONVENTION = "positive-A-vertical"
_CONVENTIONS = ("positive-A-vertical", "positive-A-horizontal")


# -- specs ----------------------------------------------------------------------

@dataclass(frozen=True)
class PretzelSpec:
    tangles: tuple[int, ...]

    def __post_init__(self):
        tangles = tuple(self.tangles)
        if not tangles:
            raise InvalidSpecError("a pretzel link needs at least one tangle")
        for p in tangles:
            if isinstance(p, bool) or not isinstance(p, (int, np.integer)):
                raise InvalidSpecError(f"tangle entries must be integers, got {p!r}")
            if p == 0:
                raise InvalidSpecError(f"tangle entries must be nonzero: {tangles}")
        object.__setattr__(self, "tangles", tuple(int(p) for p in tangles))

    @classmethod
    def parse(cls, text: str) -> "PretzelSpec":
        """Parse ``"1,1,-4"`` (optionally wrapped as ``P(1,1,-4)``)."""
        s = text.strip()
        m = re.fullmatch(r"[Pp]?\((.*)\)", s)
        if m:
            s = m.group(1)
        parts = [t.strip() for t in s.split(",")]
        if not s or any(not re.fullmatch(r"[+-]?\d+", t) for t in parts):
            raise InvalidSpecError(f"cannot parse pretzel spec {text!r}; expected comma-separated integers")
        return cls(tuple(int(t) for t in parts))

    @classmethod
    def p11n(cls, n: int) -> "PretzelSpec":
        return cls((1, 1, n))

    @classmethod
    def ones_then(cls, m: int, n: int) -> "PretzelSpec":
        """``P(1, ..., 1, n)`` with ``m`` leading single crossings."""
        return cls((1,) * m + (n,))

    @property
    def k(self) -> int:
        return len(self.tangles)

    @property
    def crossing_count(self) -> int:
        return sum(abs(p) for p in self.tangles)

    def mirror(self) -> "PretzelSpec":
        return PretzelSpec(tuple(-p for p in self.tangles))

    def rotate(self, shift: int = 1) -> "PretzelSpec":
        s = shift % self.k
        return PretzelSpec(self.tangles[s:] + self.tangles[:s])

    def is_p11n(self) -> bool:
        return self.k == 3 and self.tangles[:2] == (1, 1) and self.tangles[2] > 1

    def ones_then_shape(self) -> tuple[int, int] | None:
        """``(m, n)`` if the spec is ``P(1, ..., 1, n)`` with ``m >= 1``, ``n >= 1``."""
        if self.k < 2 or self.tangles[-1] < 1 or any(p != 1 for p in self.tangles[:-1]):
            return None
        return self.k - 1, self.tangles[-1]

    def __str__(self):
        return ",".join(str(p) for p in self.tangles)


def _as_spec(spec) -> PretzelSpec:
    if isinstance(spec, PretzelSpec):
        return spec
    if isinstance(spec, str):
        return PretzelSpec.parse(spec)
    return PretzelSpec(tuple(spec))


# -- diagrams -------------------------------------------------------------------

class Crossing(NamedTuple):
    column: int
    row: int
    sign: int
    ports: tuple[int, int, int, int]


@dataclass(frozen=True, eq=False)
class Diagram:
    spec: PretzelSpec | None
    crossings: tuple[Crossing, ...]
    wire: np.ndarray  # wire[port] = port at the other end of its arc
    free_loops: int = 0  # crossingless circles drawn beside the pretzel

    @classmethod
    def unknot(cls) -> "Diagram":
        """The crossingless one-circle diagram."""
        wire = np.empty(0, dtype=np.int64)
        wire.setflags(write=False)
        return cls(spec=None, crossings=(), wire=wire, free_loops=1)

    def with_free_loops(self, extra: int) -> "Diagram":
        return Diagram(self.spec, self.crossings, self.wire, self.free_loops + extra)

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    @property
    def n_ports(self) -> int:
        return 4 * len(self.crossings)

    @cached_property
    def signs(self) -> np.ndarray:
        return np.array([c.sign for c in self.crossings], dtype=np.int64)

    def a_vertical(self, convention: str = CONVENTION) -> np.ndarray:
        """Per crossing: does the A marker select the vertical smoothing?"""
        if convention not in _CONVENTIONS:
            raise ValueError(f"unknown smoothing convention {convention!r}")
        positive = self.signs > 0
        return positive if convention == "positive-A-vertical" else ~positive

    def column_slices(self) -> list[range]:
        out, start = [], 0
        for p in self.spec.tangles:
            out.append(range(start, start + abs(p)))
            start += abs(p)
        return out

    def arcs(self) -> list[tuple[int, int]]:
        return [(int(a), int(b)) for a, b in enumerate(self.wire) if a < b]


def build_diagram(spec) -> Diagram:
    spec = _as_spec(spec)
    crossings: list[Crossing] = []
    tops: list[tuple[int, int]] = []
    bottoms: list[tuple[int, int]] = []
    wire = np.full(4 * spec.crossing_count, -1, dtype=np.int64)

    def join(a: int, b: int) -> None:
        if wire[a] != -1 or wire[b] != -1:
            raise AssertionError("port wired twice")
        wire[a] = b
        wire[b] = a

    for col, p in enumerate(spec.tangles):
        sign = 1 if p > 0 else -1
        first = len(crossings)
        for row in range(abs(p)):
            j = len(crossings)
            crossings.append(Crossing(col, row, sign, (4 * j + NW, 4 * j + NE, 4 * j + SW, 4 * j + SE)))
            if row:
                join(4 * (j - 1) + SW, 4 * j + NW)
                join(4 * (j - 1) + SE, 4 * j + NE)
        last = len(crossings) - 1
        tops.append((4 * first + NW, 4 * first + NE))
        bottoms.append((4 * last + SW, 4 * last + SE))

    for ends in (tops, bottoms):
        for i in range(len(ends) - 1):
            join(ends[i][1], ends[i + 1][0])
        join(ends[0][0], ends[-1][1])

    wire.setflags(write=False)
    return Diagram(spec=spec, crossings=tuple(crossings), wire=wire)


# -- states ---------------------------------------------------------------------

@dataclass(frozen=True)
class KauffmanState:
    """Marker assignment encoded as a bit mask; bit ``i`` set means B at crossing ``i``."""

    mask: int
    n_crossings: int

    def __post_init__(self):
        if not 0 <= self.n_crossings <= MAX_STATE_CROSSINGS:
            raise DomainError(f"states support at most {MAX_STATE_CROSSINGS} crossings")
        if not 0 <= self.mask < (1 << self.n_crossings):
            raise DomainError(f"mask {self.mask} out of range for {self.n_crossings} crossings")

    @classmethod
    def from_string(cls, markers: str) -> "KauffmanState":
        markers = markers.strip().upper()
        if set(markers) - {"A", "B"}:
            raise DomainError(f"state string may only contain A and B: {markers!r}")
        mask = sum(1 << i for i, ch in enumerate(markers) if ch == "B")
        return cls(mask, len(markers))

    @classmethod
    def all_a(cls, n_crossings: int) -> "KauffmanState":
        return cls(0, n_crossings)

    @classmethod
    def with_b_at(cls, n_crossings: int, positions: Sequence[int]) -> "KauffmanState":
        return cls(sum(1 << i for i in set(positions)), n_crossings)

    def marker(self, i: int) -> str:
        return "B" if (self.mask >> i) & 1 else "A"

    @property
    def b_count(self) -> int:
        return bin(self.mask).count("1")

    @property
    def a_count(self) -> int:
        return self.n_crossings - self.b_count

    def rotate(self, shift: int) -> "KauffmanState":
        """Relabel crossings ``i -> i - shift`` (cyclically)."""
        n = self.n_crossings
        if n == 0:
            return self
        s = shift % n
        full = (1 << n) - 1
        mask = ((self.mask >> s) | (self.mask << (n - s))) & full
        return KauffmanState(mask, n)

    def swapped(self) -> "KauffmanState":
        return KauffmanState(self.mask ^ ((1 << self.n_crossings) - 1), self.n_crossings)

    def __str__(self):
        return "".join(self.marker(i) for i in range(self.n_crossings))


def iter_states(d: Diagram) -> Iterator[KauffmanState]:
    n = d.n_crossings
    for mask in range(1 << n):
        yield KauffmanState(mask, n)


def check_budget(d: Diagram, max_crossings: int = DEFAULT_MAX_CROSSINGS) -> None:
    limit = min(max_crossings, MAX_STATE_CROSSINGS - 1)
    if d.n_crossings > limit:
        raise BudgetExceededError(d.n_crossings, limit)


# -- circle counting ------------------------------------------------------------

class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))
        self.components = n

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb
            self.components -= 1


def count_circles(d: Diagram, s: KauffmanState, convention: str = CONVENTION) -> int:
    """Number of circles left after smoothing every crossing of ``d`` per ``s``."""
    if s.n_crossings != d.n_crossings:
        raise DomainError(f"state has {s.n_crossings} markers, diagram has {d.n_crossings} crossings")
    uf = _UnionFind(d.n_ports)
    for a, b in d.arcs():
        uf.union(a, b)
    a_vertical = d.a_vertical(convention)
    for j, c in enumerate(d.crossings):
        nw, ne, sw, se = c.ports
        if bool(a_vertical[j]) != bool((s.mask >> j) & 1):
            uf.union(nw, sw)
            uf.union(ne, se)
        else:
            uf.union(nw, ne)
            uf.union(sw, se)
    return uf.components + d.free_loops


def circle_counts(d: Diagram, masks=None, backend: str | None = None,
                  convention: str = CONVENTION) -> np.ndarray:
    """Vectorized circle counts for many states (all of them by default)."""
    if masks is None:
        masks = np.arange(1 << d.n_crossings, dtype=np.int64)
    masks = np.asarray(masks, dtype=np.int64)
    if d.n_crossings == 0:
        return np.full(masks.shape[0], d.free_loops, dtype=np.int64)
    counts = _kernels.circles_for_masks(d.wire, d.a_vertical(convention), masks, backend=backend)
    return counts + d.free_loops


# -- lemma classifiers ----------------------------------------------------------

@dataclass(frozen=True)
class StateClassification:
    b_total: int
    b_on_v1: bool | None = None
    b_on_v2: bool | None = None
    p: int | None = None
    q: int | None = None


def classify(spec, s: KauffmanState) -> StateClassification:
    spec = _as_spec(spec)
    if s.n_crossings != spec.crossing_count:
        raise DomainError("state does not match the spec's crossing count")
    b_on_v1 = b_on_v2 = None
    if spec.k == 3 and spec.tangles[:2] == (1, 1):
        b_on_v1 = s.marker(0) == "B"
        b_on_v2 = s.marker(1) == "B"
    p = q = None
    shape = spec.ones_then_shape()
    if shape is not None:
        m, n = shape
        p = sum(1 for i in range(m) if s.marker(i) == "A")
        q = sum(1 for i in range(m, m + n) if s.marker(i) == "B")
    return StateClassification(s.b_count, b_on_v1, b_on_v2, p, q)


def classify_state_p11n(spec, s: KauffmanState) -> int:
    """Circle count of a state of ``P(1,1,n)``, ``n > 1``, from its B markers alone."""
    spec = _as_spec(spec)
    if not spec.is_p11n():
        raise UnsupportedFamilyError(f"expected P(1,1,n) with n > 1, got P({spec})")
    c = classify(spec, s)
    if c.b_total == 0:
        return 3
    if c.b_total == 1:
        return 2
    if c.b_on_v1 or c.b_on_v2:
        return c.b_total - 1
    return c.b_total + 1


def classify_state_general(m: int, n: int, p: int, q: int) -> int:
    """Circle count of a state of ``P(1,...,1,n)`` with ``m`` single-crossing tangles.

    ``p`` counts A markers among the single crossings, ``q`` counts B markers
    in the long tangle.
    """
    if m < 1 or n < 1:
        raise DomainError(f"need m >= 1 and n >= 1, got m={m}, n={n}")
    if not 0 <= p <= m:
        raise DomainError(f"p={p} outside 0..{m}")
    if not 0 <= q <= n:
        raise DomainError(f"q={q} outside 0..{n}")
    if p > 0 and q > 0:
        return p + q - 1
    if p > 0:
        return p + 1
    if q > 0:
        return q + 1
    return 1


def pq_counts(m: int, n: int, masks: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized ``(p, q)`` for ``P(1,...,1,n)`` states given as masks."""
    masks = np.asarray(masks, dtype=np.int64)
    p = np.zeros_like(masks)
    q = np.zeros_like(masks)
    for i in range(m):
        p += 1 - ((masks >> i) & 1)
    for i in range(m, m + n):
        q += (masks >> i) & 1
    return p, q
