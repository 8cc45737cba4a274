"""Exact positive definite lattices, their cosets, theta series and shadows.

Vectors are written in coordinates with respect to the lattice basis, so a
coset ``L + lambda`` is a rational shift vector ``lambda`` and norms are
``y^T G y`` for the Gram matrix ``G``.  A lattice may additionally carry an
ambient basis (rows in ``Q^n`` under ``scale`` times the dot product); that
lets :func:`theta` split the lattice into cosets of an orthogonal frame
instead of enumerating every vector.
"""

from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Sequence, Union

from . import _linalg as la
from .modforms import eta
from .qseries import DEFAULT_PREC, GRID, QSeries

FRAME_LIMIT = 1 << 16
_EPS = 1e-9


def _as_tuple_matrix(rows) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


@dataclass(frozen=True)
class Lattice:
    """Positive definite lattice given by an exact Gram matrix.

    ``basis`` is optional: Construction A and Gram-only inputs have no rational
    ambient basis under the standard inner product, but Construction A does
    under ``scale = 1/2``.
    """

    gram: tuple[tuple[Fraction, ...], ...]
    basis: tuple[tuple[Fraction, ...], ...] | None = None
    scale: Fraction = Fraction(1)
    name: str = field(default="", compare=False)

    def __post_init__(self):
        gram = _as_tuple_matrix(self.gram)
        object.__setattr__(self, "gram", gram)
        object.__setattr__(self, "scale", Fraction(self.scale))
        n = len(gram)
        if any(len(row) != n for row in gram):
            raise ValueError("Gram matrix must be square")
        if any(gram[i][j] != gram[j][i] for i in range(n) for j in range(i)):
            raise ValueError("Gram matrix must be symmetric")
        la.quadratic_decomposition(gram)
        if self.basis is not None:
            basis = _as_tuple_matrix(self.basis)
            object.__setattr__(self, "basis", basis)
            if len(basis) != n or any(len(row) != n for row in basis):
                raise ValueError("basis must be n x n")
            if _as_tuple_matrix(la.gram_of(basis, self.scale)) != gram:
                raise ValueError("basis does not match Gram matrix")

    @classmethod
    def from_basis(cls, basis, scale=1, name: str = "") -> "Lattice":
        return cls(_as_tuple_matrix(la.gram_of(basis, scale)), basis, Fraction(scale), name)

    @classmethod
    def from_gram(cls, gram, name: str = "") -> "Lattice":
        return cls(_as_tuple_matrix(gram), None, Fraction(1), name)

    @property
    def n(self) -> int:
        return len(self.gram)

    @property
    def det(self) -> Fraction:
        return la.det(self.gram) if self.n else Fraction(1)

    @property
    def is_integral(self) -> bool:
        return all(x.denominator == 1 for row in self.gram for x in row)

    @property
    def is_self_dual(self) -> bool:
        return self.is_integral and self.det == 1

    @property
    def is_even(self) -> bool:
        return self.is_integral and all(self.gram[i][i] % 2 == 0 for i in range(self.n))

    def norm(self, coords: Sequence) -> Fraction:
        y = [Fraction(v) for v in coords]
        return sum((y[i] * self.gram[i][j] * y[j] for i in range(self.n) for j in range(self.n)), Fraction(0))

    def __str__(self):
        return self.name or f"Lattice(n={self.n})"


@dataclass(frozen=True)
class Coset:
    """``L + shift`` with the shift in basis coordinates, reduced modulo 1."""

    lattice: Lattice
    shift: tuple[Fraction, ...] = ()

    def __post_init__(self):
        shift = tuple(Fraction(s) for s in self.shift) or (Fraction(0),) * self.lattice.n
        if len(shift) != self.lattice.n:
            raise ValueError("shift has the wrong dimension")
        object.__setattr__(self, "shift", tuple(s - math.floor(s) for s in shift))

    def same_coset(self, other: "Coset") -> bool:
        return self.lattice == other.lattice and self.shift == other.shift


CosetLike = Union[Coset, Lattice]


def _as_coset(co: CosetLike) -> Coset:
    return co if isinstance(co, Coset) else Coset(co)


# -- enumeration -----------------------------------------------------------


class _ExactNorm:
    """Integer-arithmetic evaluation of ``(x + s)^T G (x + s)``."""

    def __init__(self, gram, shift):
        self.n = len(gram)
        self.sden = math.lcm(1, *(s.denominator for s in shift))
        self.gden = math.lcm(1, *(g.denominator for row in gram for g in row))
        self.g = [[int(g * self.gden) for g in row] for row in gram]
        self.s = [int(s * self.sden) for s in shift]
        self.den = self.sden * self.sden * self.gden

    def __call__(self, x) -> Fraction:
        y = [xi * self.sden + si for xi, si in zip(x, self.s)]
        g = self.g
        total = 0
        for i, yi in enumerate(y):
            if yi:
                row = g[i]
                total += yi * sum(row[j] * y[j] for j in range(self.n))
        return Fraction(total, self.den)


def enumerate_by_norm(co: CosetLike, max_norm) -> dict[Fraction, int]:
    """Count vectors of ``L + shift`` with norm at most ``max_norm``, grouped by norm.

    Fincke-Pohst depth-first search over the completed-square form of the
    Gram matrix.  Interval pruning uses floats with a safety margin; every
    candidate that survives is re-checked with exact arithmetic, so the
    counts are exact.
    """
    co = _as_coset(co)
    max_norm = Fraction(max_norm)
    n = co.lattice.n
    counts: Counter = Counter()
    if max_norm < 0:
        return {}
    if n == 0:
        return {Fraction(0): 1}
    q = la.quadratic_decomposition(co.lattice.gram)
    qd = [float(q[i][i]) for i in range(n)]
    qo = [[float(q[i][j]) for j in range(n)] for i in range(n)]
    sf = [float(s) for s in co.shift]
    exact = _ExactNorm(co.lattice.gram, co.shift)
    eps = _EPS * (1 + float(max_norm))
    x = [0] * n
    y = [0.0] * n

    def descend(i: int, remaining: float) -> None:
        row = qo[i]
        c = 0.0
        for j in range(i + 1, n):
            c += row[j] * y[j]
        r = math.sqrt(max(remaining, 0.0) / qd[i])
        lo = math.ceil(-c - r - eps - sf[i])
        hi = math.floor(-c + r + eps - sf[i])
        for xi in range(lo, hi + 1):
            yi = xi + sf[i]
            t = yi + c
            rest = remaining - qd[i] * t * t
            if rest < -eps:
                continue
            x[i] = xi
            y[i] = yi
            if i == 0:
                v = exact(x)
                if v <= max_norm:
                    counts[v] += 1
            else:
                descend(i - 1, rest)

    descend(n - 1, float(max_norm))
    return dict(sorted(counts.items()))


def enumerate_by_norm_box(co: CosetLike, max_norm) -> dict[Fraction, int]:
    """Brute-force count over the bounding box ``|y_i|^2 <= max_norm * (G^-1)_ii``.

    Exponential in the dimension; kept as an independent check for n <= 8.
    """
    co = _as_coset(co)
    n = co.lattice.n
    if n > 8:
        raise ValueError("box enumeration is limited to dimension 8")
    max_norm = Fraction(max_norm)
    if n == 0:
        return {Fraction(0): 1} if max_norm >= 0 else {}
    ginv = la.inverse(co.lattice.gram)
    ranges = []
    for i in range(n):
        r = math.isqrt(math.ceil(max_norm * ginv[i][i])) + 1
        s = co.shift[i]
        ranges.append(range(math.floor(-r - s), math.ceil(r - s) + 1))
    counts: Counter = Counter()
    for x in product(*ranges):
        v = co.lattice.norm([xi + si for xi, si in zip(x, co.shift)])
        if v <= max_norm:
            counts[v] += 1
    return dict(sorted(counts.items()))


# -- theta series ------------------------------------------------------------


def _grid_exponent(norm: Fraction) -> int:
    e = norm * GRID / 2
    if e.denominator != 1:
        raise ValueError(f"unsupported norm denominator: norm {norm} is off the 1/{GRID} grid")
    return e.numerator


def _frame_theta(co: Coset, prec: int) -> QSeries | None:
    """Theta series via the cosets of an orthogonal frame ``(dZ)^n`` inside ``L``.

    Each frame coset is a product of one-dimensional cosets, so its theta
    series is a product of sparse one-variable sums.  Returns ``None`` when
    the lattice has no ambient basis or the frame index is too large.
    """
    lat = co.lattice
    if lat.basis is None:
        return None
    n = lat.n
    B = lat.basis
    binv = la.inverse(B)
    d = math.lcm(1, *(x.denominator for row in binv for x in row))
    index = Fraction(d) ** n / abs(la.det(B))
    if index > FRAME_LIMIT:
        return None
    amb_shift = [sum((co.shift[i] * B[i][j] for i in range(n)), Fraction(0)) for j in range(n)]
    D = math.lcm(1, *(x.denominator for row in B for x in row), *(s.denominator for s in amb_shift))
    M = D * d
    gens = [tuple(int(x * D) % M for x in row) for row in B]
    seen = {(0,) * n}
    frontier = [(0,) * n]
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                s = tuple((a + b) % M for a, b in zip(g, h))
                if s not in seen:
                    seen.add(s)
                    nxt.append(s)
        frontier = nxt
    t = [int(s * D) for s in amb_shift]
    patterns: Counter = Counter()
    for g in seen:
        res = [(a + b) % M for a, b in zip(g, t)]
        patterns[tuple(sorted(min(r, M - r) for r in res))] += 1

    prec_48 = GRID * prec
    weight = lat.scale / (2 * D * D)
    one_dim: dict[int, QSeries] = {}

    def line(r: int) -> QSeries:
        if r not in one_dim:
            terms: Counter = Counter()
            # residues are canonicalised to 0 <= r <= M/2, so |u| grows along both rays
            for start, step in ((r, M), (r - M, -M)):
                u = start
                while True:
                    e = weight * u * u * GRID
                    if e.denominator != 1:
                        raise ValueError("unsupported norm denominator")
                    if e >= prec_48:
                        break
                    terms[e.numerator] += 1
                    u += step
            one_dim[r] = QSeries.from_terms(terms, prec_48)
        return one_dim[r]

    total = QSeries.zero(prec)
    for pattern, mult in patterns.items():
        term = QSeries.one(prec)
        for r in pattern:
            term = (term * line(r)).truncate(prec_48)
        total = total + term.scale(mult)
    return total.truncate(prec_48)


def theta(co: CosetLike, prec: int = DEFAULT_PREC) -> QSeries:
    """``sum_{x in L + shift} q^(<x,x>/2)``, known for exponents below ``prec``."""
    co = _as_coset(co)
    framed = _frame_theta(co, prec)
    if framed is not None:
        return framed
    counts = enumerate_by_norm(co, 2 * prec)
    terms = {_grid_exponent(v): c for v, c in counts.items() if v < 2 * prec}
    return QSeries.from_terms(terms, GRID * prec)


def lattice_character(co: CosetLike, prec: int = DEFAULT_PREC) -> QSeries:
    """Character of the lattice-SVOA module ``M_shift``: ``theta / eta^n``."""
    co = _as_coset(co)
    return theta(co, prec) * eta(prec).inv() ** co.lattice.n


# -- parity, shadows, characteristic vectors --------------------------------


def even_sublattice(lat: Lattice) -> Lattice:
    """Index-2 sublattice of vectors with even norm in an odd integral lattice."""
    if not lat.is_integral:
        raise ValueError("lattice must be integral")
    odd = [i for i in range(lat.n) if lat.gram[i][i] % 2]
    if not odd:
        raise ValueError("lattice is even")
    k = odd[0]
    M = []
    for j in range(lat.n):
        row = [0] * lat.n
        if j == k:
            row[k] = 2
        else:
            row[j] = 1
            if lat.gram[j][j] % 2:
                row[k] = -1
        M.append(row)
    gram = la.matmul(la.matmul(M, lat.gram), list(zip(*M)))
    basis = la.matmul(M, lat.basis) if lat.basis is not None else None
    name = f"{lat.name}_0" if lat.name else ""
    return Lattice(_as_tuple_matrix(gram), basis and _as_tuple_matrix(basis), lat.scale, name)


def characteristic_representative(lat: Lattice) -> tuple[int, ...]:
    """A characteristic vector (basis coordinates, entries 0/1) of a self-dual lattice.

    Solves ``<w, b_i> = <b_i, b_i> (mod 2)`` for every basis vector.
    """
    if not lat.is_self_dual:
        raise ValueError("lattice must be integral and self-dual")
    if lat.n == 0:
        return ()
    rows = [[int(x) % 2 for x in row] for row in lat.gram]
    rhs = [int(lat.gram[i][i]) % 2 for i in range(lat.n)]
    return tuple(la.gf2_solve(rows, rhs))


def shadow_coset(lat: Lattice) -> Coset:
    """The half-characteristic vectors ``{w/2}``: the coset ``L + w0/2``.

    For an odd lattice this is the union of the two cosets of the even
    sublattice's dual that lie outside ``L``; for an even lattice it is ``L``.
    """
    w0 = characteristic_representative(lat)
    return Coset(lat, tuple(Fraction(w, 2) for w in w0))


def shadow_theta(lat: Lattice, prec: int = DEFAULT_PREC) -> QSeries:
    return theta(shadow_coset(lat), prec)


@dataclass(frozen=True)
class CharacteristicVectors:
    min_norm: Fraction
    min_count: int
    counts: dict[Fraction, int]


def characteristic_vectors(lat: Lattice, max_norm=None) -> CharacteristicVectors:
    """Characteristic vectors of a self-dual lattice counted by norm.

    Characteristic vectors are ``2 * (L + w0/2)``, so the shadow coset is
    enumerated and norms are multiplied by 4.  The search radius grows
    until the minimal norm is found.
    """
    sc = shadow_coset(lat)

    def scaled(limit) -> dict[Fraction, int]:
        return {4 * v: c for v, c in enumerate_by_norm(sc, Fraction(limit) / 4).items()}

    counts = scaled(max_norm) if max_norm is not None else {}
    radius = Fraction(max(1, lat.n % 8))
    found = counts
    while not found:
        found = scaled(radius)
        radius *= 2
    m = min(found)
    return CharacteristicVectors(m, found[m], counts if max_norm is not None else found)


@dataclass(frozen=True)
class CorollaryReport:
    n: int
    norm1: int
    norm2: int
    char_min: Fraction
    char_count: int
    char_count_n_minus_8: int
    dim_v1: Fraction
    part1: bool
    applicable: bool
    bound_met: bool | None
    iff_ok: bool | None
    count_ok: bool | None

    @property
    def v1_ok(self) -> bool:
        return self.dim_v1 == self.n + self.norm2

    @property
    def passed(self) -> bool:
        part2 = not self.applicable or (self.bound_met and self.iff_ok and self.count_ok)
        return bool(self.part1 and part2 and self.v1_ok)

    def to_json(self) -> dict:
        return {
            "norm1": self.norm1,
            "norm2": self.norm2,
            "char_min": [self.char_min.numerator, self.char_min.denominator],
            "char_count": self.char_count,
            "part1": self.part1,
            "part2": {
                "applicable": self.applicable,
                "bound_met": self.bound_met,
                "iff_ok": self.iff_ok,
                "count_ok": self.count_ok,
            },
            "dim_v1": int(self.dim_v1),
            "v1_ok": self.v1_ok,
        }


def corollary_check(lat: Lattice) -> CorollaryReport:
    """Check the lattice analogues of the two shadow theorems on one self-dual lattice."""
    if not lat.is_self_dual:
        raise ValueError("lattice must be integral and self-dual")
    n = lat.n
    short = enumerate_by_norm(lat, 2)
    norm1, norm2 = short.get(Fraction(1), 0), short.get(Fraction(2), 0)
    cv = characteristic_vectors(lat, max(n - 8, 0))
    at_n8 = cv.counts.get(Fraction(n - 8), 0)
    chi = lattice_character(lat, 2)
    dim_v1 = chi[Fraction(-n, 24) + 1]
    part1 = (cv.min_norm == n) == (norm1 == 2 * n)
    applicable = norm1 == 0
    bound_met = iff_ok = count_ok = None
    if applicable:
        bound = 2 * n * (23 - n)
        bound_met = norm2 >= bound
        iff_ok = (norm2 == bound) == (cv.min_norm >= n - 8)
        count_ok = norm2 != bound or Fraction(at_n8) == Fraction(2) ** (n - 11) * n
    return CorollaryReport(n, norm1, norm2, cv.min_norm, cv.min_count, at_n8, dim_v1, part1, applicable, bound_met, iff_ok, count_ok)


# -- constructors and text format -----------------------------------------


def direct_sum(a: Lattice, b: Lattice) -> Lattice:
    n, m = a.n, b.n
    gram = [list(r) + [0] * m for r in a.gram] + [[0] * n + list(r) for r in b.gram]
    name = f"{a.name}+{b.name}" if a.name and b.name else ""
    if a.basis is not None and b.basis is not None and a.scale == b.scale:
        basis = [list(r) + [0] * m for r in a.basis] + [[0] * n + list(r) for r in b.basis]
        return Lattice.from_basis(basis, a.scale, name)
    return Lattice.from_gram(gram, name)


def z_lattice(n: int) -> Lattice:
    return Lattice.from_basis([[int(i == j) for j in range(n)] for i in range(n)], name=f"Z^{n}")


def _d_basis(n: int) -> list[list[int]]:
    rows = []
    for i in range(n - 1):
        row = [0] * n
        row[i], row[i + 1] = 1, -1
        rows.append(row)
    last = [0] * n
    last[n - 2], last[n - 1] = 1, 1
    rows.append(last)
    return rows


def d_lattice(n: int) -> Lattice:
    if n < 2:
        raise ValueError("D_n needs n >= 2")
    return Lattice.from_basis(_d_basis(n), name=f"D{n}")


def d_plus_lattice(n: int) -> Lattice:
    """``D_n`` glued with ``(1/2, ..., 1/2)``; integral and self-dual for n divisible by 4."""
    if n < 4 or n % 4:
        raise ValueError("D_n^+ is integral only for n divisible by 4")
    doubled = [[2 * x for x in row] for row in _d_basis(n)] + [[1] * n]
    basis = [[Fraction(x, 2) for x in row] for row in la.hermite_basis(doubled)]
    return Lattice.from_basis(basis, name=f"D{n}+")


def e8_lattice() -> Lattice:
    lat = d_plus_lattice(8)
    return Lattice(lat.gram, lat.basis, lat.scale, "E8")


def _cartan(n: int, edges) -> list[list[int]]:
    g = [[2 * int(i == j) for j in range(n)] for i in range(n)]
    for i, j in edges:
        g[i][j] = g[j][i] = -1
    return g


def a_lattice(n: int) -> Lattice:
    return Lattice.from_gram(_cartan(n, [(i, i + 1) for i in range(n - 1)]), f"A{n}")


def e_lattice(n: int) -> Lattice:
    """Root lattice E6, E7 or E8 from its Cartan matrix (Bourbaki labelling)."""
    if n not in (6, 7, 8):
        raise ValueError("E_n exists only for n = 6, 7, 8")
    edges = [(0, 2), (1, 3), (2, 3)] + [(k, k + 1) for k in range(3, n - 1)]
    return Lattice.from_gram(_cartan(n, edges), f"E{n}")


def builtin(name: str) -> Lattice:
    """Named lattices: ``z<n>``, ``d<n>``, ``d<n>plus``, ``a<n>``, ``e6``, ``e7``, ``e8``."""
    key = name.strip().lower()
    if key == "e8":
        return e8_lattice()
    if key in ("e6", "e7"):
        return e_lattice(int(key[1]))
    m = re.fullmatch(r"([zda])(\d+)(plus|\+)?", key)
    if not m:
        raise ValueError(f"unknown lattice {name!r}")
    family, n, plus = m.group(1), int(m.group(2)), m.group(3)
    if plus and family != "d":
        raise ValueError(f"unknown lattice {name!r}")
    if family == "z":
        return z_lattice(n)
    if family == "a":
        return a_lattice(n)
    return d_plus_lattice(n) if plus else d_lattice(n)


def parse_lattice_text(text: str, gram: bool = False, name: str = "") -> Lattice:
    """Parse ``n`` followed by ``n`` rows of ``n`` rationals.

    Rows are a basis, or a Gram matrix when ``gram`` is set or the text
    carries a ``# gram`` comment line.
    """
    gram = gram or any(ln.strip().lower().startswith("# gram") for ln in text.splitlines())
    lines = [ln.split("#")[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ValueError("empty lattice description")
    n = int(lines[0])
    rows = [[Fraction(tok) for tok in ln.replace(",", " ").split()] for ln in lines[1 : n + 1]]
    if len(rows) != n or any(len(r) != n for r in rows):
        raise ValueError(f"expected {n} rows of {n} entries")
    return Lattice.from_gram(rows, name) if gram else Lattice.from_basis(rows, name=name)


def format_lattice_text(lat: Lattice) -> str:
    as_basis = lat.basis is not None and lat.scale == 1
    rows = lat.basis if as_basis else lat.gram
    head = [] if as_basis else ["# gram"]
    return "\n".join(head + [str(lat.n)] + [" ".join(str(x) for x in row) for row in rows]) + "\n"
