"""Truncated formal power series in q with exponents on the 1/48 grid.

A :class:`QSeries` stores exact rational coefficients for the exponents
``min_exp_48/48, (min_exp_48 + 1)/48, ...`` up to (but excluding)
``prec_48/48``.  Coefficients at or above the cutoff are *unknown*, not
zero, and every operation propagates the cutoff so that no unknown
coefficient leaks into a reported one.

>>> one = QSeries.one(3)
>>> q = QSeries.monomial(1, prec=3)
>>> print((one + q) * (one - q))
1 - q^2 + O(q^3)
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

GRID = 48
DEFAULT_PREC = 26

Number = Union[int, Fraction]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating point coefficients are not allowed")
    return Fraction(x)


def to_grid(exponent) -> int:
    """Convert a rational q-exponent to 1/48 grid units, rejecting off-grid values."""
    e = _frac(exponent) * GRID
    if e.denominator != 1:
        raise ValueError(f"exponent {exponent} is not on the 1/{GRID} grid")
    return e.numerator


def format_rational(x: Fraction) -> str:
    x = _frac(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class QSeries:
    """Immutable truncated q-series with rational coefficients.

    ``min_exp_48`` is the grid index of ``coeffs[0]`` and ``prec_48`` the
    exclusive cutoff.  After construction the series is in normal form:
    leading zero slots are trimmed unless every coefficient is zero.
    """

    __slots__ = ("min_exp_48", "coeffs", "prec_48")

    def __init__(self, min_exp_48: int, coeffs: Iterable, prec_48: int):
        coeffs = [_frac(c) for c in coeffs]
        if prec_48 <= min_exp_48:
            raise ValueError("precision must exceed the leading exponent")
        if len(coeffs) > prec_48 - min_exp_48:
            coeffs = coeffs[: prec_48 - min_exp_48]
        coeffs.extend([Fraction(0)] * (prec_48 - min_exp_48 - len(coeffs)))
        lead = next((i for i, c in enumerate(coeffs) if c), None)
        if lead:
            min_exp_48 += lead
            coeffs = coeffs[lead:]
        object.__setattr__(self, "min_exp_48", int(min_exp_48))
        object.__setattr__(self, "coeffs", tuple(coeffs))
        object.__setattr__(self, "prec_48", int(prec_48))

    def __setattr__(self, name, value):
        raise AttributeError("QSeries is immutable")

    # -- constructors ----------------------------------------------------

    @classmethod
    def from_terms(cls, terms: Mapping[int, Number], prec_48: int) -> "QSeries":
        """Build from ``{grid exponent: coefficient}``; terms at or past ``prec_48`` are dropped."""
        live = {e: c for e, c in terms.items() if e < prec_48 and c}
        if not live:
            lo = min((e for e in terms if e < prec_48), default=prec_48 - 1)
            return cls(lo, [], prec_48)
        lo = min(live)
        coeffs = [Fraction(0)] * (prec_48 - lo)
        for e, c in live.items():
            coeffs[e - lo] = _frac(c)
        return cls(lo, coeffs, prec_48)

    @classmethod
    def one(cls, prec: Number = DEFAULT_PREC) -> "QSeries":
        """The constant 1, known below ``q^prec``."""
        return cls(0, [1], to_grid(prec))

    @classmethod
    def monomial(cls, exponent: Number, coeff: Number = 1, prec: Number | None = None) -> "QSeries":
        """``coeff * q^exponent``.  Without ``prec`` the relative precision is DEFAULT_PREC."""
        e = to_grid(exponent)
        p = e + GRID * DEFAULT_PREC if prec is None else to_grid(prec)
        return cls.from_terms({e: coeff}, p)

    @classmethod
    def zero(cls, prec: Number = DEFAULT_PREC) -> "QSeries":
        p = to_grid(prec)
        return cls(p - 1, [], p)

    # -- inspection ------------------------------------------------------

    def is_zero(self) -> bool:
        """True when every known coefficient vanishes."""
        return not any(self.coeffs)

    @property
    def valuation_48(self) -> int:
        """Grid index of the leading nonzero coefficient (the cutoff for a zero series)."""
        return self.prec_48 if self.is_zero() else self.min_exp_48

    @property
    def valuation(self) -> Fraction:
        if self.is_zero():
            raise ValueError("zero series has no leading term within precision")
        return Fraction(self.min_exp_48, GRID)

    @property
    def prec(self) -> Fraction:
        return Fraction(self.prec_48, GRID)

    @property
    def leading_coefficient(self) -> Fraction:
        if self.is_zero():
            raise ValueError("zero series has no leading term within precision")
        return self.coeffs[0]

    def coefficient_48(self, e: int) -> Fraction:
        if e >= self.prec_48:
            raise ValueError(f"coefficient of q^({format_rational(Fraction(e, GRID))}) is beyond precision")
        if e < self.min_exp_48:
            return Fraction(0)
        return self.coeffs[e - self.min_exp_48]

    def __getitem__(self, exponent) -> Fraction:
        """Coefficient of ``q^exponent`` for a rational exponent."""
        return self.coefficient_48(to_grid(exponent))

    def terms(self) -> Iterator[tuple[Fraction, Fraction]]:
        """Yield ``(exponent, coefficient)`` for every nonzero known term."""
        for k, c in enumerate(self.coeffs):
            if c:
                yield Fraction(self.min_exp_48 + k, GRID), c

    def _sparse(self) -> list[tuple[int, Fraction]]:
        return [(self.min_exp_48 + k, c) for k, c in enumerate(self.coeffs) if c]

    def truncate(self, prec_48: int) -> "QSeries":
        if prec_48 >= self.prec_48:
            return self
        return QSeries.from_terms(dict(self._sparse()), prec_48)

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, QSeries):
            other = self._coerce(other)
            if other is NotImplemented:
                return other
        prec = min(self.prec_48, other.prec_48)
        terms: dict[int, Fraction] = {}
        for e, c in self._sparse() + other._sparse():
            terms[e] = terms.get(e, 0) + c
        if not any(terms.values()):
            lo = min(self.valuation_48, other.valuation_48, prec - 1)
            return QSeries(lo, [], prec)
        return QSeries.from_terms(terms, prec)

    __radd__ = __add__

    def __neg__(self):
        return QSeries(self.min_exp_48, [-c for c in self.coeffs], self.prec_48)

    def __sub__(self, other):
        if not isinstance(other, QSeries):
            other = self._coerce(other)
            if other is NotImplemented:
                return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def _coerce(self, scalar):
        if isinstance(scalar, (int, Fraction)):
            return QSeries.from_terms({0: scalar}, self.prec_48) if self.prec_48 > 0 else QSeries(self.prec_48 - 1, [], self.prec_48)
        return NotImplemented

    def scale(self, factor: Number) -> "QSeries":
        factor = _frac(factor)
        return QSeries(self.min_exp_48, [factor * c for c in self.coeffs], self.prec_48)

    def shift(self, exponent: Number) -> "QSeries":
        """Multiply by ``q^exponent``; precision shifts with it."""
        d = to_grid(exponent)
        return QSeries(self.min_exp_48 + d, self.coeffs, self.prec_48 + d)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, QSeries):
            return NotImplemented
        va, vb = self.valuation_48, other.valuation_48
        prec = min(self.prec_48 + vb, other.prec_48 + va)
        if self.is_zero() or other.is_zero():
            return QSeries(min(va + vb, prec - 1), [], prec)
        a, b = self._sparse(), other._sparse()
        # integer convolution on a common denominator is far cheaper than Fraction arithmetic
        da = math.lcm(*(c.denominator for _, c in a))
        db = math.lcm(*(c.denominator for _, c in b))
        ia = [(e, c.numerator * (da // c.denominator)) for e, c in a]
        ib = [(e, c.numerator * (db // c.denominator)) for e, c in b]
        lo = va + vb
        acc = [0] * (prec - lo)
        for ea, ca in ia:
            off = ea - lo
            for eb, cb in ib:
                k = off + eb
                if k >= len(acc):
                    break
                acc[k] += ca * cb
        den = da * db
        return QSeries(lo, [Fraction(x, den) for x in acc], prec)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(1 / _frac(other))
        if isinstance(other, QSeries):
            return self * other.inv()
        return NotImplemented

    def inv(self) -> "QSeries":
        """Multiplicative inverse; the relative precision is preserved."""
        if self.is_zero():
            raise ZeroDivisionError("non-invertible series")
        m = self.min_exp_48
        rel = self.prec_48 - m
        a0 = self.coeffs[0]
        sparse = [(k, c) for k, c in enumerate(self.coeffs) if c and k]
        out = [Fraction(0)] * rel
        out[0] = 1 / a0
        for n in range(1, rel):
            s = Fraction(0)
            for k, c in sparse:
                if k > n:
                    break
                if out[n - k]:
                    s += c * out[n - k]
            out[n] = -s / a0
        return QSeries(-m, out, -m + rel)

    def sqrt(self) -> "QSeries":
        """Square root with leading coefficient 1 (requires leading coefficient 1, even grid exponent)."""
        if self.is_zero() or self.coeffs[0] != 1 or self.min_exp_48 % 2:
            raise ValueError("no grid square root")
        m = self.min_exp_48
        rel = self.prec_48 - m
        a = self.coeffs
        out = [Fraction(0)] * rel
        out[0] = Fraction(1)
        nz = [0]
        for n in range(1, rel):
            s = a[n]
            for k in nz:
                if k == 0:
                    continue
                j = n - k
                if j <= 0:
                    continue
                if out[j]:
                    s -= out[k] * out[j]
            out[n] = s / 2
            if out[n]:
                nz.append(n)
        return QSeries(m // 2, out, m // 2 + rel)

    def __pow__(self, k: int) -> "QSeries":
        if not isinstance(k, int):
            return NotImplemented
        base = self
        if k < 0:
            base, k = self.inv(), -k
        if k == 0:
            rel = base.prec_48 - base.valuation_48
            return QSeries(0, [1], rel if rel > 0 else GRID * DEFAULT_PREC)
        if base.is_zero():
            return QSeries(k * base.prec_48 - 1, [], k * base.prec_48)
        result = None
        while k:
            if k & 1:
                result = base if result is None else result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- comparison ------------------------------------------------------

    def overlap(self, other: "QSeries") -> int:
        """Grid cutoff up to which two series can be compared."""
        return min(self.prec_48, other.prec_48)

    def agrees_with(self, other: "QSeries", upto_48: int | None = None) -> bool:
        cut = self.overlap(other)
        if upto_48 is not None:
            if upto_48 > cut:
                raise ValueError("comparison requested beyond the known precision")
            cut = upto_48
        lo = min(self.min_exp_48, other.min_exp_48)
        return all(self.coefficient_48(e) == other.coefficient_48(e) for e in range(lo, cut))

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.agrees_with(other)

    __hash__ = None  # type: ignore[assignment]

    # -- serialization ---------------------------------------------------

    def to_json(self) -> dict:
        return {
            "den": GRID,
            "min_exp": self.min_exp_48,
            "prec": self.prec_48,
            "coeffs": [[c.numerator, c.denominator] for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "QSeries":
        if data.get("den") != GRID:
            raise ValueError(f"unsupported grid denominator {data.get('den')!r}")
        return cls(data["min_exp"], [Fraction(n, d) for n, d in data["coeffs"]], data["prec"])

    def __repr__(self):
        return f"QSeries(min_exp_48={self.min_exp_48}, prec_48={self.prec_48}, {self})"

    def __str__(self):
        parts = []
        for e, c in self.terms():
            if e == 0:
                mono = format_rational(abs(c))
            else:
                power = "q" if e == 1 else (f"q^{format_rational(e)}" if e.denominator == 1 and e > 0 else f"q^({format_rational(e)})")
                mono = power if abs(c) == 1 else f"{format_rational(abs(c))}*{power}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, mono))
        p = self.prec
        if p == 1:
            tail = "O(q)"
        elif p.denominator == 1 and p >= 0:
            tail = f"O(q^{format_rational(p)})"
        else:
            tail = f"O(q^({format_rational(p)}))"
        if not parts:
            return tail
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, mono in parts[1:]:
            out += f" {sign} {mono}"
        return f"{out} + {tail}"


def series_add(a: QSeries, b: QSeries) -> QSeries:
    return a + b


def series_mul(a: QSeries, b: QSeries) -> QSeries:
    return a * b


def series_inv(a: QSeries) -> QSeries:
    return a.inv()


def series_sqrt(a: QSeries) -> QSeries:
    return a.sqrt()


def series_pow(a: QSeries, k: int) -> QSeries:
    return a ** k
