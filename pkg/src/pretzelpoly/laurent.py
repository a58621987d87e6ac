"""Exact sparse Laurent polynomials in one variable with integer coefficients.

A :class:`LaurentPoly` is an immutable map ``{exponent: coefficient}`` with no
zero coefficients stored, plus a variable tag (``"A"`` or ``"z"``) that only
affects rendering. Mixing tags in arithmetic raises :class:`VariableMismatch`.
"""
from __future__ import annotations

import json
from typing import Iterable, Mapping


class VariableMismatch(ValueError):
    """Raised when combining polynomials carrying different variable tags."""


class LaurentPoly:
    __slots__ = ("_terms", "_var", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = (), var: str = "A"):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for exp, coeff in items:
            exp = int(exp)
            acc[exp] = acc.get(exp, 0) + int(coeff)
        self._terms = {e: c for e, c in acc.items() if c != 0}
        self._var = var
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[int, int], var: str) -> "LaurentPoly":
        # caller guarantees canonical form
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._var = var
        obj._hash = None
        return obj

    # -- accessors -----------------------------------------------------------

    @property
    def var(self) -> str:
        return self._var

    @property
    def terms(self) -> dict[int, int]:
        """Copy of the exponent -> coefficient map."""
        return dict(self._terms)

    def coeff(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    def items(self) -> list[tuple[int, int]]:
        """Terms sorted by descending exponent."""
        return sorted(self._terms.items(), reverse=True)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        if not self._terms:
            raise ValueError("degree of the zero polynomial is undefined")
        return max(self._terms)

    def low_degree(self) -> int:
        if not self._terms:
            raise ValueError("low degree of the zero polynomial is undefined")
        return min(self._terms)

    def evaluate(self, x):
        """Evaluate at ``x`` (any number type supporting ``**`` with negative ints)."""
        return sum((c * x**e for e, c in self._terms.items()), 0)

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other._var != self._var:
                raise VariableMismatch(f"cannot combine {self._var!r} and {other._var!r} polynomials")
            return other
        if isinstance(other, int):
            return LaurentPoly._raw({0: other} if other else {}, self._var)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly._raw(out, self._var)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()}, self._var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) - c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly._raw(out, self._var)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly._raw({e: c for e, c in out.items() if c}, self._var)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers are supported")
        result = LaurentPoly._raw({0: 1}, self._var)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``x**k``."""
        return LaurentPoly._raw({e + k: c for e, c in self._terms.items()}, self._var)

    def scale(self, k: int) -> "LaurentPoly":
        if k == 0:
            return LaurentPoly._raw({}, self._var)
        return LaurentPoly._raw({e: c * k for e, c in self._terms.items()}, self._var)

    def substitute_inverse(self) -> "LaurentPoly":
        """The image under ``x -> x**-1``."""
        return LaurentPoly._raw({-e: c for e, c in self._terms.items()}, self._var)

    # -- comparison ----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._var == other._var and self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._var, frozenset(self._terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        return f"LaurentPoly({self.to_text()!r}, var={self._var!r})"

    def __str__(self):
        return self.to_text()

    # -- rendering -----------------------------------------------------------

    def _render_order(self) -> list[tuple[int, int]]:
        # Conway polynomials read naturally lowest degree first (1 + 3z^2)
        return sorted(self._terms.items(), reverse=self._var != "z")

    def to_text(self) -> str:
        return _render(self._render_order(), self._var, latex=False)

    def to_latex(self) -> str:
        return _render(self._render_order(), self._var, latex=True)

    def to_dict(self) -> dict:
        return {
            "variable": self._var,
            "terms": [{"exp": e, "coeff": str(c)} for e, c in self.items()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: Mapping) -> "LaurentPoly":
        terms = [(int(t["exp"]), int(t["coeff"])) for t in data["terms"]]
        return cls(terms, var=data["variable"])

    @classmethod
    def from_json(cls, text: str) -> "LaurentPoly":
        return cls.from_dict(json.loads(text))


def _render(terms: list[tuple[int, int]], var: str, latex: bool) -> str:
    if not terms:
        return "0"
    pieces = []
    for i, (exp, coeff) in enumerate(terms):
        mag = abs(coeff)
        if exp == 0:
            body = str(mag)
        else:
            if exp == 1:
                power = var
            elif latex:
                power = f"{var}^{{{exp}}}"
            else:
                power = f"{var}^{exp}"
            body = power if mag == 1 else f"{mag}{power}"
        if i == 0:
            pieces.append(f"-{body}" if coeff < 0 else body)
        else:
            pieces.append(f"{'-' if coeff < 0 else '+'} {body}")
    return " ".join(pieces)


# Functional surface -----------------------------------------------------------

def lp_mono(coeff: int, exp: int, var: str = "A") -> LaurentPoly:
    return LaurentPoly._raw({int(exp): int(coeff)} if coeff else {}, var)


def lp_add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    if a.var != b.var:
        raise VariableMismatch(f"cannot add {a.var!r} and {b.var!r} polynomials")
    return a + b


def lp_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    if a.var != b.var:
        raise VariableMismatch(f"cannot multiply {a.var!r} and {b.var!r} polynomials")
    return a * b


def lp_substitute_inverse(a: LaurentPoly) -> LaurentPoly:
    return a.substitute_inverse()


def zero(var: str = "A") -> LaurentPoly:
    return LaurentPoly._raw({}, var)


def one(var: str = "A") -> LaurentPoly:
    return LaurentPoly._raw({0: 1}, var)


#: loop value -A^2 - A^-2
DELTA = LaurentPoly({2: -1, -2: -1}, var="A")


class DeltaPowers:
    """Memoized powers of the loop value."""

    def __init__(self, base: LaurentPoly = DELTA):
        self._powers = [one(base.var), base]

    def __getitem__(self, k: int) -> LaurentPoly:
        if k < 0:
            raise ValueError("negative loop power")
        while len(self._powers) <= k:
            self._powers.append(self._powers[-1] * self._powers[1])
        return self._powers[k]
