"""The named q-series every character is built from.

``prec`` is always the number of integer q-orders known past the series'
natural leading exponent: ``eta(prec)`` is ``q^(1/24)`` times a power
series known modulo ``q^prec``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .qseries import DEFAULT_PREC, GRID, QSeries


def _check(prec: int) -> int:
    if int(prec) != prec or prec <= 0:
        raise ValueError("prec must be a positive integer")
    return int(prec)


def divisor_sigma(n: int, k: int) -> int:
    return sum(d**k for d in range(1, n + 1) if n % d == 0)


@lru_cache(maxsize=None)
def euler_product(prec: int) -> QSeries:
    """prod_{n>=1} (1 - q^n) mod q^prec, via the pentagonal number theorem."""
    prec = _check(prec)
    terms = {}
    k = 0
    while True:
        hit = False
        for m in (k, -k) if k else (0,):
            e = m * (3 * m - 1) // 2
            if e < prec:
                terms[GRID * e] = -1 if m % 2 else 1
                hit = True
        if not hit:
            break
        k += 1
    return QSeries.from_terms(terms, GRID * prec)


@lru_cache(maxsize=None)
def eta(prec: int = DEFAULT_PREC) -> QSeries:
    """Dedekind eta: ``q^(1/24) prod (1 - q^n)``."""
    return euler_product(prec).shift(Fraction(1, 24))


@lru_cache(maxsize=None)
def theta_z(prec: int = DEFAULT_PREC) -> QSeries:
    """Theta series of Z: sum over n of q^(n^2/2)."""
    prec = _check(prec)
    terms = {}
    n = 0
    while n * n < 2 * prec:
        terms[24 * n * n] = 1 if n == 0 else 2
        n += 1
    return QSeries.from_terms(terms, GRID * prec)


@lru_cache(maxsize=None)
def theta_e8(prec: int = DEFAULT_PREC) -> QSeries:
    """Theta series of E8, ``1 + 240 sum sigma_3(n) q^n``."""
    prec = _check(prec)
    terms = {0: 1}
    for n in range(1, prec):
        terms[GRID * n] = 240 * divisor_sigma(n, 3)
    return QSeries.from_terms(terms, GRID * prec)


@lru_cache(maxsize=None)
def chi_half(prec: int = DEFAULT_PREC) -> QSeries:
    """Single-fermion character ``sqrt(theta_z / eta)``, leading term q^(-1/48)."""
    return (theta_z(prec) * eta(prec).inv()).sqrt()


@lru_cache(maxsize=None)
def chi8(prec: int = DEFAULT_PREC) -> QSeries:
    """E8 lattice-VOA character ``theta_e8 / eta^8``."""
    return theta_e8(prec) * eta(prec).inv() ** 8


@lru_cache(maxsize=None)
def chi_fermi_shadow(prec: int = DEFAULT_PREC) -> QSeries:
    """Shadow of the single fermion: ``q^(1/24) prod (1 + q^n)``.

    The coefficient of ``q^(1/24 + m)`` counts partitions of m into distinct parts.
    """
    prec = _check(prec)
    dist = [0] * prec
    dist[0] = 1
    for part in range(1, prec):
        for m in range(prec - 1, part - 1, -1):
            dist[m] += dist[m - part]
    series = QSeries.from_terms({GRID * m: c for m, c in enumerate(dist)}, GRID * prec)
    return series.shift(Fraction(1, 24))
