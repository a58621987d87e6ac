"""Hot loops for exhaustive state enumeration.

Two interchangeable backends count the circles of every state in a mask
range and tally them into a histogram ``hist[b_count, circles]``:

* ``numba``: ``@njit`` cycle walk, one state at a time.
* ``numpy``: batched pointer doubling on the port permutation
  ``wire o smooth``; each circle appears as exactly two cycles of it.

The backend is picked once at import. Set ``PRETZELPOLY_DISABLE_NUMBA=1`` to
force the numpy path (also used when numba is not importable).

Port layout: crossing ``j`` owns ports ``4j + {0: NW, 1: NE, 2: SW, 3: SE}``.
A vertical smoothing joins NW-SW and NE-SE (``pos ^ 2``), a horizontal one
joins NW-NE and SW-SE (``pos ^ 1``). ``a_vertical[j]`` says which smoothing
the A marker selects; a B marker (mask bit set) selects the other one.
"""
from __future__ import annotations

import os

import numpy as np

_DISABLE = os.environ.get("PRETZELPOLY_DISABLE_NUMBA", "").strip().lower() in {"1", "true", "yes", "on"}

try:
    if _DISABLE:
        raise ImportError("numba disabled by PRETZELPOLY_DISABLE_NUMBA")
    from numba import njit

    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False

BACKEND = "numba" if HAVE_NUMBA else "numpy"

#: states processed per numpy batch; bounds memory at batch * 4c int64s
NUMPY_BATCH = 4096


def hist_shape(n_crossings: int) -> tuple[int, int]:
    # circles never exceed n_crossings + 1 for a connected diagram
    return n_crossings + 1, n_crossings + 2


# -- numpy backend --------------------------------------------------------------

def _numpy_circles(wire: np.ndarray, a_vertical: np.ndarray, masks: np.ndarray) -> np.ndarray:
    n_ports = wire.shape[0]
    ports = np.arange(n_ports, dtype=np.int64)
    owner = ports >> 2
    pos = ports & 3
    base = ports - pos

    bits = (masks[:, None] >> owner[None, :].astype(np.uint64)) & np.uint64(1)
    vertical = a_vertical[owner][None, :] ^ bits.astype(np.bool_)
    partner = base[None, :] + np.where(vertical, pos ^ 2, pos ^ 1)
    f = wire[partner]

    label = np.broadcast_to(ports, f.shape).copy()
    steps = max(1, int(np.ceil(np.log2(n_ports))) + 1)
    for _ in range(steps):
        label = np.minimum(label, np.take_along_axis(label, f, axis=1))
        f = np.take_along_axis(f, f, axis=1)
    cycles = np.count_nonzero(label == ports[None, :], axis=1)
    return cycles // 2


def numpy_circles(wire, a_vertical, masks) -> np.ndarray:
    masks = np.asarray(masks, dtype=np.uint64)
    wire = np.asarray(wire, dtype=np.int64)
    a_vertical = np.asarray(a_vertical, dtype=np.bool_)
    out = np.empty(masks.shape[0], dtype=np.int64)
    for lo in range(0, masks.shape[0], NUMPY_BATCH):
        hi = min(lo + NUMPY_BATCH, masks.shape[0])
        out[lo:hi] = _numpy_circles(wire, a_vertical, masks[lo:hi])
    return out


def _popcount(masks: np.ndarray, n_bits: int) -> np.ndarray:
    counts = np.zeros(masks.shape[0], dtype=np.int64)
    for j in range(n_bits):
        counts += ((masks >> np.uint64(j)) & np.uint64(1)).astype(np.int64)
    return counts


def numpy_histogram(wire, a_vertical, start: int, stop: int) -> np.ndarray:
    n = len(a_vertical)
    rows, cols = hist_shape(n)
    hist = np.zeros(rows * cols, dtype=np.int64)
    for lo in range(start, stop, NUMPY_BATCH):
        hi = min(lo + NUMPY_BATCH, stop)
        masks = np.arange(lo, hi, dtype=np.uint64)
        circles = numpy_circles(wire, a_vertical, masks)
        hist += np.bincount(_popcount(masks, n) * cols + circles, minlength=rows * cols)
    return hist.reshape(rows, cols)


# -- numba backend --------------------------------------------------------------

if HAVE_NUMBA:

    @njit(cache=True, nogil=True)
    def _walk_circles(wire, a_vertical, mask, seen):
        n_ports = wire.shape[0]
        for i in range(n_ports):
            seen[i] = False
        circles = 0
        for start in range(n_ports):
            if seen[start]:
                continue
            circles += 1
            cur = start
            while True:
                seen[cur] = True
                j = cur >> 2
                pos = cur & 3
                if a_vertical[j] != ((mask >> j) & 1):
                    other = (cur - pos) + (pos ^ 2)
                else:
                    other = (cur - pos) + (pos ^ 1)
                seen[other] = True
                cur = wire[other]
                if cur == start:
                    break
        return circles

    @njit(cache=True, nogil=True)
    def _numba_circles(wire, a_vertical, masks):
        seen = np.zeros(wire.shape[0], dtype=np.bool_)
        out = np.empty(masks.shape[0], dtype=np.int64)
        for k in range(masks.shape[0]):
            out[k] = _walk_circles(wire, a_vertical, masks[k], seen)
        return out

    @njit(cache=True, nogil=True)
    def _numba_histogram(wire, a_vertical, start, stop, hist):
        seen = np.zeros(wire.shape[0], dtype=np.bool_)
        for mask in range(start, stop):
            b = 0
            x = mask
            while x:
                x &= x - 1
                b += 1
            hist[b, _walk_circles(wire, a_vertical, mask, seen)] += 1
        return hist

    def numba_circles(wire, a_vertical, masks) -> np.ndarray:
        return _numba_circles(
            np.asarray(wire, dtype=np.int64),
            np.asarray(a_vertical, dtype=np.int64),
            np.asarray(masks, dtype=np.int64),
        )

    def numba_histogram(wire, a_vertical, start: int, stop: int) -> np.ndarray:
        hist = np.zeros(hist_shape(len(a_vertical)), dtype=np.int64)
        return _numba_histogram(
            np.asarray(wire, dtype=np.int64),
            np.asarray(a_vertical, dtype=np.int64),
            np.int64(start),
            np.int64(stop),
            hist,
        )

else:
    numba_circles = None
    numba_histogram = None


def available_backends() -> list[str]:
    return ["numba", "numpy"] if HAVE_NUMBA else ["numpy"]


def circles_for_masks(wire, a_vertical, masks, backend: str | None = None) -> np.ndarray:
    backend = backend or BACKEND
    if backend == "numba":
        if not HAVE_NUMBA:
            raise RuntimeError("numba backend requested but unavailable")
        return numba_circles(wire, a_vertical, masks)
    return numpy_circles(wire, a_vertical, masks)


def circle_histogram(wire, a_vertical, start: int, stop: int, backend: str | None = None) -> np.ndarray:
    backend = backend or BACKEND
    if backend == "numba":
        if not HAVE_NUMBA:
            raise RuntimeError("numba backend requested but unavailable")
        return numba_histogram(wire, a_vertical, start, stop)
    return numpy_histogram(wire, a_vertical, start, stop)
