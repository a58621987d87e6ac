"""Kauffman bracket of pretzel diagrams by three independent routes.

* :func:`bracket_statesum` enumerates all ``2**c`` states.
* :func:`bracket_closed_p11n` and :func:`bracket_closed_general` evaluate the
  closed binomial sums for ``P(1,1,n)`` and ``P(1,...,1,n)``.
* :func:`bracket_tangle_eval` reduces each column in the two-strand
  Temperley-Lieb basis and closes up; linear in the crossing count.
"""
from __future__ import annotations

import enum
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import comb

import numpy as np

from . import _kernels
from .diagram import (
    CONVENTION,
    DEFAULT_MAX_CROSSINGS,
    Diagram,
    PretzelSpec,
    _as_spec,
    build_diagram,
    check_budget,
)
from .errors import UnsupportedParameterError
from .laurent import DELTA, DeltaPowers, LaurentPoly, lp_mono, one, zero

_DELTA_POWERS = DeltaPowers(DELTA)


class Method(str, enum.Enum):
    STATESUM = "statesum"
    CLOSED_P11N = "closed_p11n"
    CLOSED_GENERAL = "closed_general"
    TANGLE = "tangle"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class BracketResult:
    polynomial: LaurentPoly
    method: Method
    state_count: int | None = None


def binom(a: int, b: int) -> int:
    """``C(a, b)``, zero outside ``0 <= b <= a``."""
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


def delta_power(k: int) -> LaurentPoly:
    return _DELTA_POWERS[k]


# -- state sum ------------------------------------------------------------------

def split_ranges(total: int, parts: int) -> list[tuple[int, int]]:
    parts = max(1, min(parts, total))
    step, extra = divmod(total, parts)
    out, lo = [], 0
    for i in range(parts):
        hi = lo + step + (1 if i < extra else 0)
        out.append((lo, hi))
        lo = hi
    return out


def state_histogram(d: Diagram, ranges=None, workers: int = 1, backend: str | None = None,
                    convention: str = CONVENTION) -> np.ndarray:
    """``hist[b, c]`` = number of states with ``b`` B markers and ``c`` circles.

    ``ranges`` is a list of disjoint ``(start, stop)`` mask intervals covering
    ``[0, 2**n)``; partial histograms are summed, so the split never changes
    the result.
    """
    n = d.n_crossings
    if n == 0:
        hist = np.zeros((1, d.free_loops + 1), dtype=np.int64)
        hist[0, d.free_loops] = 1
        return hist
    if ranges is None:
        ranges = split_ranges(1 << n, workers)
    a_vertical = d.a_vertical(convention)

    def run(r):
        return _kernels.circle_histogram(d.wire, a_vertical, r[0], r[1], backend=backend)

    if workers > 1 and len(ranges) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(run, ranges))
    else:
        parts = [run(r) for r in ranges]
    hist = np.sum(parts, axis=0)
    if d.free_loops:
        hist = np.pad(hist, ((0, 0), (d.free_loops, 0)))
    return hist


def bracket_from_histogram(hist: np.ndarray, n_crossings: int) -> LaurentPoly:
    total = zero("A")
    for b, c in zip(*np.nonzero(hist)):
        b, c = int(b), int(c)
        count = int(hist[b, c])
        total = total + delta_power(c - 1).shift(n_crossings - 2 * b).scale(count)
    return total


def statesum(d: Diagram, max_crossings: int = DEFAULT_MAX_CROSSINGS, workers: int = 1,
             backend: str | None = None, convention: str = CONVENTION) -> LaurentPoly:
    """Bracket of an arbitrary :class:`Diagram` by full state enumeration."""
    check_budget(d, max_crossings)
    hist = state_histogram(d, workers=workers, backend=backend, convention=convention)
    return bracket_from_histogram(hist, d.n_crossings)


def bracket_statesum(spec, max_crossings: int = DEFAULT_MAX_CROSSINGS, workers: int = 1,
                     backend: str | None = None) -> BracketResult:
    d = build_diagram(spec)
    poly = statesum(d, max_crossings=max_crossings, workers=workers, backend=backend)
    return BracketResult(poly, Method.STATESUM, 1 << d.n_crossings)


# -- closed formulas ------------------------------------------------------------

def bracket_closed_p11n(n: int) -> BracketResult:
    """Closed form for ``<P(1,1,n)>``, ``n`` a positive integer other than 1."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 2:
        raise UnsupportedParameterError(f"closed P(1,1,n) formula needs an integer n >= 2, got {n!r}")
    d = delta_power
    total = d(2).shift(n + 2)
    total += d(1).shift(n).scale(n + 2)
    for j in range(2, n + 3):
        c = binom(n + 1, j - 1) + binom(n, j - 1)
        if c:
            total += d(j - 2).shift(n + 2 * (1 - j)).scale(c)
    for j in range(2, n + 1):
        total += d(j).shift(n + 2 * (1 - j)).scale(binom(n, j))
    return BracketResult(total, Method.CLOSED_P11N)


def bracket_closed_general(m: int, n: int) -> BracketResult:
    """Closed form for ``<P(1,...,1,n)>`` with ``m`` single-crossing tangles."""
    for name, v in (("m", m), ("n", n)):
        if isinstance(v, bool) or not isinstance(v, int) or v < 1:
            raise UnsupportedParameterError(f"closed P(1,...,1,n) formula needs integer {name} >= 1, got {v!r}")
    d = delta_power
    total = zero("A")
    for p in range(1, m + 1):
        for q in range(1, n + 1):
            total += d(p + q - 2).shift(2 * (p - q) + n - m).scale(binom(m, p) * binom(n, q))
    for p in range(1, m + 1):
        total += d(p).shift(2 * p + n - m).scale(binom(m, p))
    for q in range(1, n + 1):
        total += d(q).shift(-2 * q + n - m).scale(binom(n, q))
    total += lp_mono(1, n - m)
    return BracketResult(total, Method.CLOSED_GENERAL)


# -- tangle fast path -----------------------------------------------------------

def column_coefficients(p: int) -> tuple[LaurentPoly, LaurentPoly]:
    """Coefficients of a ``p``-crossing column on (vertical pair, horizontal pair).

    One crossing is ``A*I + A^-1*E`` when positive, ``A^-1*I + A*E`` when
    negative; stacking uses ``I*E = E*I = E`` and ``E*E = delta*E``.
    """
    if p > 0:
        ca, cb = lp_mono(1, 1), lp_mono(1, -1)
    else:
        ca, cb = lp_mono(1, -1), lp_mono(1, 1)
    a, b = one("A"), zero("A")
    for _ in range(abs(p)):
        a, b = a * ca, a * cb + b * ca + b * cb * DELTA
    return a, b


def bracket_tangle_eval(spec) -> BracketResult:
    """Bracket via column reduction.

    Closing up a choice of basis element per column gives one circle per
    vertical column, or two circles when every column is horizontal.
    ``acc`` sums the products with at least one vertical column, weighted by
    ``delta**(verticals - 1)``; ``horiz`` is the all-horizontal product.
    """
    spec = _as_spec(spec)
    acc, horiz = zero("A"), one("A")
    for p in spec.tangles:
        a, b = column_coefficients(p)
        acc, horiz = acc * (DELTA * a + b) + horiz * a, horiz * b
    return BracketResult(acc + DELTA * horiz, Method.TANGLE)
