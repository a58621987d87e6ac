"""Alexander-Conway polynomial of ``P(1,1,n)``.

Two routes: the closed parity formula, and a skein recursion at the first
crossing of the third tangle. Orientations are not computed from diagrams;
the roles are fixed per case. For ``n > 0`` that crossing is the negative one
of the skein triple, and switching it gives ``P(1,1,n-2)``; for ``n < 0`` it is
the positive one, and switching gives ``P(1,1,n+2)``. Smoothing it leaves the
Hopf link formed by the first two tangles, left-handed for odd ``n`` and
right-handed for even ``n``.

Recursion bottoms out at ``n`` in ``{1, 2, -1, -2}``.
"""
from __future__ import annotations

from types import MappingProxyType

from .errors import InvalidSpecError
from .laurent import LaurentPoly

Z = LaurentPoly({1: 1}, var="z")

BASE_CASES = MappingProxyType({
    "unknot": LaurentPoly({0: 1}, var="z"),
    "unlink": LaurentPoly({}, var="z"),
    "hopf_right": LaurentPoly({1: 1}, var="z"),
    "hopf_left": LaurentPoly({1: -1}, var="z"),
    "trefoil_right": LaurentPoly({0: 1, 2: 1}, var="z"),
})

# terminal P(1,1,n) values; n = -2 is read off the closed formula itself
_TERMINALS = MappingProxyType({
    1: BASE_CASES["trefoil_right"],
    2: LaurentPoly({0: 1, 2: -1}, var="z"),
    -1: BASE_CASES["unknot"],  # P(1,1,-1) cancels to the unknot
    -2: LaurentPoly({0: 1, 2: 1}, var="z"),
})


def _check_n(n) -> int:
    if isinstance(n, bool) or not isinstance(n, int):
        raise InvalidSpecError(f"n must be an integer, got {n!r}")
    if n == 0:
        raise InvalidSpecError("P(1,1,0) has an empty tangle")
    return n


def conway_closed_p11n(n: int) -> LaurentPoly:
    n = _check_n(n)
    if n % 2:
        c2 = (n + 1) // 2
    else:
        c2 = -(n // 2)
    return LaurentPoly({0: 1, 2: c2}, var="z")


def skein_negative(plus: LaurentPoly, smoothed: LaurentPoly) -> LaurentPoly:
    """``nabla(L-)`` from ``nabla(L+) = nabla(L-) + z nabla(L0)``."""
    return plus - Z * smoothed


def skein_positive(minus: LaurentPoly, smoothed: LaurentPoly) -> LaurentPoly:
    return minus + Z * smoothed


def _hopf(n: int) -> LaurentPoly:
    return BASE_CASES["hopf_left" if n % 2 else "hopf_right"]


def conway_skein_p11n(n: int) -> LaurentPoly:
    n = _check_n(n)
    step = -2 if n > 0 else 2
    chain = []
    k = n
    while k not in _TERMINALS:
        chain.append(k)
        k += step
    value = _TERMINALS[k]
    resolve = skein_negative if n > 0 else skein_positive
    for k in reversed(chain):
        value = resolve(value, _hopf(k))
    return value
