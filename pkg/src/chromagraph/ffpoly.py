"""Integer-valued polynomials in the falling-factorial basis  sum_t N_t (k)_t.

Coefficients are exact rationals: an integer-valued polynomial has integral
coefficients in the binomial basis C(k, t) = (k)_t / t!, so only t! N_t is
guaranteed to be an integer. Integral coefficients are stored as ``int``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .colouring import falling


@lru_cache(maxsize=None)
def stirling1(t: int) -> tuple[int, ...]:
    """Signed Stirling numbers s(t, j), j = 0..t: monomial coefficients of (k)_t."""
    row = [1]
    for i in range(t):
        nxt = [0] * (len(row) + 1)
        for j, c in enumerate(row):
            nxt[j + 1] += c
            nxt[j] -= i * c
        row = nxt
    return tuple(row)


@lru_cache(maxsize=None)
def stirling2(j: int) -> tuple[int, ...]:
    """S(j, t), t = 0..j: k^j = sum_t S(j, t) (k)_t."""
    row = [1]
    for _ in range(j):
        nxt = [0] * (len(row) + 1)
        for t, c in enumerate(row):
            nxt[t] += t * c
            nxt[t + 1] += c
        row = nxt
    return tuple(row)


@dataclass(frozen=True, eq=False)
class FFPoly:
    coeffs: dict[int, int | Fraction]

    def __post_init__(self):
        clean = {int(t): _norm(c) for t, c in self.coeffs.items() if c}
        if any(t < 0 for t in clean):
            raise ValueError("negative falling-factorial index")
        object.__setattr__(self, "coeffs", dict(sorted(clean.items())))

    @classmethod
    def from_monomial(cls, mono) -> "FFPoly":
        out: dict[int, int] = {}
        for j, a in enumerate(mono):
            if a:
                for t, s in enumerate(stirling2(j)):
                    out[t] = out.get(t, 0) + a * s
        return cls(out)

    @classmethod
    def constant(cls, c: int) -> "FFPoly":
        return cls({0: c})

    @property
    def degree(self) -> int:
        return max(self.coeffs, default=-1)

    def __call__(self, k: int) -> int:
        return ffpoly_eval(self, k)

    def to_monomial(self) -> list[int]:
        return ffpoly_to_monomial(self)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = FFPoly.constant(other)
        return isinstance(other, FFPoly) and self.coeffs == other.coeffs

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = FFPoly.constant(other)
        out = dict(self.coeffs)
        for t, c in other.coeffs.items():
            out[t] = out.get(t, 0) + c
        return FFPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return FFPoly({t: -c for t, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return FFPoly({t: c * other for t, c in self.coeffs.items()})
        # (k)_a (k)_b = sum_j C(a,j) C(b,j) j! (k)_{a+b-j}
        out: dict[int, Fraction] = {}
        for a, x in self.coeffs.items():
            for b, y in other.coeffs.items():
                for j in range(min(a, b) + 1):
                    t = a + b - j
                    out[t] = out.get(t, 0) + x * y * comb(a, j) * comb(b, j) * factorial(j)
        return FFPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, d: int) -> "FFPoly":
        return FFPoly({t: Fraction(c) / d for t, c in self.coeffs.items()})

    def is_integer_valued(self) -> bool:
        return all((Fraction(c) * factorial(t)).denominator == 1 for t, c in self.coeffs.items())

    def binomial_coeffs(self) -> dict[int, int]:
        """b_t with p(k) = sum_t b_t C(k, t)."""
        out = {}
        for t, c in self.coeffs.items():
            b = Fraction(c) * factorial(t)
            if b.denominator != 1:
                raise ArithmeticError(f"t!*N_t is not integral at t={t}")
            out[t] = int(b)
        return out

    def to_json(self) -> dict:
        return {"basis": "falling", "coeffs": {str(t): str(c) for t, c in self.coeffs.items()}}

    @classmethod
    def from_json(cls, obj) -> "FFPoly":
        if isinstance(obj, str):
            obj = json.loads(obj)
        if obj.get("basis") != "falling":
            raise ValueError("expected basis 'falling'")
        return cls({int(t): Fraction(c) for t, c in obj["coeffs"].items()})

    def __repr__(self):
        if not self.coeffs:
            return "FFPoly(0)"
        return "FFPoly(" + " + ".join(f"{c}*(k)_{t}" for t, c in self.coeffs.items()) + ")"


def _norm(c):
    c = Fraction(c)
    return int(c) if c.denominator == 1 else c


def ffpoly_eval(p: FFPoly, k: int):
    """Exact value at k; an ``int`` whenever the value is integral."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return _norm(sum((c * falling(k, t) for t, c in p.coeffs.items()), Fraction(0)))


def ffpoly_to_monomial(p: FFPoly) -> list:
    """Monomial coefficients, lowest degree first (ints, or Fractions where needed)."""
    out = [Fraction(0)] * (p.degree + 1)
    for t, c in p.coeffs.items():
        for j, s in enumerate(stirling1(t)):
            out[j] += c * s
    while out and out[-1] == 0:
        out.pop()
    return [_norm(c) for c in out]


def eval_monomial(mono, k: int) -> int:
    return sum(a * k**j for j, a in enumerate(mono))
