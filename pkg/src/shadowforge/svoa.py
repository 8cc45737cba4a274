"""Character polynomials of self-dual SVOAs and their shadows.

A self-dual SVOA of rank ``c`` has character
``P(x, y) = sum_i A_i x^(2c - 16 i) y^i`` with ``x = chi_half`` and
``y = chi8``.  Its shadow character is ``alpha * P(sqrt(2) f, y)`` where
``f = chi_fermi_shadow`` and ``alpha`` is 1 for integral rank and
``1/sqrt(2)`` otherwise.  The product ``alpha * sqrt(2)^(2c - 16 i)`` is the
dyadic rational ``2^(floor(c) - 8 i)``, so everything stays in Q.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .modforms import chi8, chi_fermi_shadow, chi_half
from .qseries import DEFAULT_PREC, QSeries

HALF = Fraction(1, 2)


def as_rank(c) -> Fraction:
    c = Fraction(c) if not isinstance(c, str) else Fraction(c.replace("½", ".5").replace(" ", ""))
    if c < 0 or (2 * c).denominator != 1:
        raise ValueError(f"rank must be a nonnegative half-integer, got {c}")
    return c


def floor_rank(c) -> int:
    return math.floor(Fraction(c))


def top_index(c) -> int:
    """Largest i with x^(2c - 16 i) a genuine polynomial power: floor(c/8)."""
    return math.floor(Fraction(c) / 8)


def shadow_multiplier(c, i: int) -> Fraction:
    """``alpha * sqrt(2)^(2c - 16 i)`` written as the exact power ``2^(floor(c) - 8 i)``."""
    return Fraction(2) ** (floor_rank(c) - 8 * i)


def alpha_squared(c) -> Fraction:
    return Fraction(1) if Fraction(c).denominator == 1 else HALF


def long_shadow_dim1(c) -> Fraction:
    """``2c(23.5 - c)``, the weight-one dimension on the long-shadow boundary."""
    c = Fraction(c)
    return 2 * c * (Fraction(47, 2) - c)


@dataclass(frozen=True)
class CharacterPoly:
    """Rank plus the coefficients ``A_0..A_floor(c/8)`` of the character polynomial."""

    c: Fraction
    A: tuple[Fraction, ...]
    is_voa: bool = False

    def __post_init__(self):
        c = as_rank(self.c)
        A = tuple(Fraction(a) for a in self.A)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "A", A)
        if len(A) != top_index(c) + 1:
            raise ValueError(f"rank {c} needs exactly {top_index(c) + 1} coefficients, got {len(A)}")
        if sum(A) != 1:
            raise ValueError("not a character normalization: coefficients must sum to 1")
        if self.is_voa and c % 8:
            raise ValueError("a self-dual VOA must have rank divisible by 8")

    @classmethod
    def fermions(cls, count: int) -> "CharacterPoly":
        """``V_Fermi`` tensored ``count`` times: ``P = x^count``."""
        c = Fraction(count, 2)
        return cls(c, (1,) + (0,) * top_index(c))

    @classmethod
    def e8(cls) -> "CharacterPoly":
        return cls(Fraction(8), (0, 1), is_voa=True)

    def to_json(self) -> dict:
        return {
            "c": [self.c.numerator, self.c.denominator],
            "A": [[a.numerator, a.denominator] for a in self.A],
            "is_voa": self.is_voa,
        }

    @classmethod
    def from_json(cls, data) -> "CharacterPoly":
        return cls(Fraction(*data["c"]), tuple(Fraction(*a) for a in data["A"]), bool(data.get("is_voa", False)))


@dataclass(frozen=True)
class ShadowReport:
    h: Fraction
    dim_at_h: Fraction
    shadow_char: QSeries = field(compare=False)

    def to_json(self) -> dict:
        return {
            "h": [self.h.numerator, self.h.denominator],
            "dim_at_h": [self.dim_at_h.numerator, self.dim_at_h.denominator],
            "shadow_char": self.shadow_char.to_json(),
        }


def character(p: CharacterPoly, prec: int = DEFAULT_PREC) -> QSeries:
    """``chi_V = sum_i A_i chi_half^(2c-16i) chi8^i``, known below ``q^(-c/24 + prec)``."""
    x, y = chi_half(prec), chi8(prec)
    total = None
    for i, a in enumerate(p.A):
        term = (x ** int(2 * p.c - 16 * i) * y**i).scale(a)
        total = term if total is None else total + term
    return total


def shadow_character(p: CharacterPoly, prec: int = DEFAULT_PREC) -> QSeries:
    """Character of the shadow ``V'``; a pure VOA is its own shadow."""
    if p.is_voa:
        return character(p, prec)
    f, y = chi_fermi_shadow(prec), chi8(prec)
    total = None
    for i, a in enumerate(p.A):
        term = (f ** int(2 * p.c - 16 * i) * y**i).scale(a * shadow_multiplier(p.c, i))
        total = term if total is None else total + term
    return total


def minimal_weight(s: QSeries, c) -> Fraction:
    """Conformal weight of the leading term of a character of rank ``c``."""
    if s.is_zero():
        raise ValueError("minimal weight exceeds precision")
    return s.valuation + Fraction(c) / 24


def shadow_report(p: CharacterPoly, prec: int = DEFAULT_PREC) -> ShadowReport:
    s = shadow_character(p, prec)
    return ShadowReport(minimal_weight(s, p.c), s.leading_coefficient, s)


def _b_to_a(c: Fraction, B: Sequence[Fraction]) -> tuple[Fraction, ...]:
    # x^(2c-16i) (x^16 - y)^i = sum_j C(i,j) (-1)^j x^(2c-16j) y^j
    A = [Fraction(0)] * len(B)
    for i, b in enumerate(B):
        for j in range(i + 1):
            A[j] += b * math.comb(i, j) * (-1) ** j
    return tuple(A)


def _deviation_basis(c: Fraction, count: int, prec: int) -> list[QSeries]:
    """``x^(2c-16i) (x^16 - y)^i`` for i < count; the i-th starts at ``16^i q^(-c/24 + i/2)``."""
    x, y = chi_half(prec), chi8(prec)
    gap = x**16 - y
    return [x ** int(2 * c - 16 * i) * gap**i for i in range(count)]


def decompose(c, chi_prefix: Sequence) -> CharacterPoly:
    """Recover the character polynomial from leading coefficients of ``chi_V``.

    ``chi_prefix[k]`` is the coefficient of ``q^(-c/24 + k/2)``.  At least
    ``floor(c/8) + 1`` entries are required; any further entries must be
    reproduced by the reconstructed character.
    """
    c = as_rank(c)
    m = top_index(c) + 1
    prefix = [Fraction(v) for v in chi_prefix]
    if len(prefix) < m:
        raise ValueError(f"rank {c} needs at least {m} leading coefficients, got {len(prefix)}")
    prec = len(prefix) // 2 + 2
    base = -c / 24
    basis = _deviation_basis(c, m, prec)
    B = []
    for k in range(m):
        residual = prefix[k] - sum((b * basis[i][base + Fraction(k, 2)] for i, b in enumerate(B)), Fraction(0))
        B.append(residual / Fraction(16) ** k)
    A = _b_to_a(c, B)
    if sum(A) != 1:
        raise ValueError("inconsistent prefix: leading coefficient must be 1")
    p = CharacterPoly(c, A)
    chi = character(p, prec)
    for k, v in enumerate(prefix):
        if chi[base + Fraction(k, 2)] != v:
            raise ValueError(f"inconsistent prefix: coefficient {k} is {v}, polynomial gives {chi[base + Fraction(k, 2)]}")
    return p


def decompose_series(c, chi: QSeries, *, is_voa: bool = False) -> CharacterPoly:
    """Decompose a full character series, checking every known half-step coefficient."""
    c = as_rank(c)
    base = -c / 24
    prefix = []
    while base + Fraction(len(prefix), 2) < chi.prec:
        prefix.append(chi[base + Fraction(len(prefix), 2)])
    p = decompose(c, prefix)
    return CharacterPoly(p.c, p.A, is_voa) if is_voa else p


def three_term_B(c, dim_one) -> tuple[Fraction, Fraction, Fraction]:
    """Coefficients of ``x^2c``, ``x^(2c-16)(x^16-y)`` and ``x^(2c-32)(x^16-y)^2`` for ``dim V_1/2 = 0``."""
    c = as_rank(c)
    return Fraction(1), -c / 8, (Fraction(dim_one) - long_shadow_dim1(c)) / 256


def three_term(c, dim_one) -> CharacterPoly:
    """Character polynomial of a rank ``c < 24`` SVOA with no weight-1/2 states and given ``dim V_1``."""
    c = as_rank(c)
    if c >= 24:
        raise ValueError("formula out of range: rank must be below 24")
    B = three_term_B(c, dim_one)
    m = top_index(c) + 1
    if any(B[m:]):
        raise ValueError(f"dim V_1 = {dim_one} is not realizable at rank {c} without weight-1/2 states")
    return CharacterPoly(c, _b_to_a(c, B[:m]))


def three_term_character(c, dim_one, prec: int = DEFAULT_PREC) -> QSeries:
    """The three-term expansion evaluated directly, allowing negative powers of ``chi_half``."""
    c = as_rank(c)
    x, y = chi_half(prec), chi8(prec)
    gap = x**16 - y
    total = None
    for i, b in enumerate(three_term_B(c, dim_one)):
        if b:
            term = (x ** int(2 * c - 16 * i) * gap**i).scale(b)
            total = term if total is None else total + term
    return total


def three_term_shadow(c, dim_one, prec: int = DEFAULT_PREC) -> QSeries:
    """Shadow of :func:`three_term_character`, same negative-power allowance."""
    c = as_rank(c)
    f, y = chi_fermi_shadow(prec), chi8(prec)
    gap = f**16 * 256 - y
    total = None
    for i, b in enumerate(three_term_B(c, dim_one)):
        if b:
            term = (f ** int(2 * c - 16 * i) * gap**i).scale(b * shadow_multiplier(c, i))
            total = term if total is None else total + term
    return total


def long_shadow_bounds(c) -> tuple[Fraction, Fraction]:
    """``(minimal dim V_1, number of shadow states at weight c/8 - 1)``."""
    c = as_rank(c)
    return long_shadow_dim1(c), Fraction(2) ** (floor_rank(c) - 11) * c


def shadow_deficit(c, dim_one) -> Fraction:
    """``dim V'_(c/8 - 2)`` for a rank ``c < 24`` SVOA without weight-1/2 states.

    Equals ``alpha * 2^(c-24) * (dim V_1 - 2c(23.5 - c))``, i.e.
    ``2^(floor(c) - 24)`` times the excess over the bound.
    """
    c = as_rank(c)
    return Fraction(2) ** (floor_rank(c) - 24) * (Fraction(dim_one) - long_shadow_dim1(c))


@dataclass(frozen=True)
class Theorem1Verdict:
    c: Fraction
    h: Fraction
    bound_ok: bool
    vanishing_ok: bool
    extremal: bool
    pure_fermion: bool

    @property
    def holds(self) -> bool:
        return self.bound_ok and self.vanishing_ok and self.extremal == self.pure_fermion


def theorem1_check(p: CharacterPoly, prec: int = DEFAULT_PREC) -> Theorem1Verdict:
    """Check ``h(V') <= c/8``, the coefficient vanishing above ``c/8 - h``, and the equality case."""
    s = shadow_character(p, prec)
    h = minimal_weight(s, p.c)
    bound = p.c / 8
    vanishing = all(a == 0 for k, a in enumerate(p.A) if k > bound - h)
    pure = p.A[0] == 1 and not any(p.A[1:])
    return Theorem1Verdict(p.c, h, h <= bound, vanishing, h == bound, pure)


def tensor(p: CharacterPoly, q: CharacterPoly) -> CharacterPoly:
    """Character polynomial of ``V (x) W``: the product ``P_V P_W`` in the rank ``c + d`` basis."""
    c = p.c + q.c
    A = [Fraction(0)] * (top_index(c) + 1)
    for i, a in enumerate(p.A):
        for j, b in enumerate(q.A):
            A[i + j] += a * b
    return CharacterPoly(c, tuple(A), p.is_voa and q.is_voa)


def lemma_factor(c, d) -> int:
    """2 when both ranks are half-integral, else 1."""
    return 2 if Fraction(c).denominator == 2 and Fraction(d).denominator == 2 else 1


def strip_fermions(p: CharacterPoly, r: int) -> CharacterPoly:
    """Divide ``P_V`` by ``x^r``: the factor left after splitting off ``r`` free fermions."""
    if r < 0:
        raise ValueError("fermion count must be nonnegative")
    c = p.c - Fraction(r, 2)
    if c < 0:
        raise ValueError("fermion count exceeded")
    m = top_index(c) + 1
    if any(p.A[m:]):
        raise ValueError("fermion count exceeded: polynomial is not divisible by x^r")
    return CharacterPoly(c, p.A[:m], p.is_voa and r == 0)
