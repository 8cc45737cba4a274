"""Binary linear codes, their shadows, and Construction A."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from . import _linalg as la
from .lattice import Lattice


@dataclass(frozen=True)
class BinaryCode:
    """A binary linear code of length ``n``; generators are kept in reduced row echelon form."""

    n: int
    generators: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = [tuple(int(b) for b in row) for row in self.generators]
        if any(len(r) != self.n for r in rows):
            raise ValueError(f"every generator must have length {self.n}")
        if any(b not in (0, 1) for r in rows for b in r):
            raise ValueError("generators must be 0/1 vectors")
        red, _ = la.gf2_rref(rows) if rows else ([], [])
        if len(red) != len(rows):
            raise ValueError("generators are linearly dependent over GF(2)")
        object.__setattr__(self, "generators", tuple(tuple(r) for r in red))

    @property
    def k(self) -> int:
        return len(self.generators)

    def codewords(self) -> Iterator[tuple[int, ...]]:
        """All ``2^k`` codewords, in Gray-code order."""
        word = [0] * self.n
        yield tuple(word)
        for step in range(1, 1 << self.k):
            bit = (step & -step).bit_length() - 1
            word = [a ^ b for a, b in zip(word, self.generators[bit])]
            yield tuple(word)

    @property
    def is_self_orthogonal(self) -> bool:
        g = self.generators
        return all(sum(a & b for a, b in zip(g[i], g[j])) % 2 == 0 for i in range(self.k) for j in range(i, self.k))

    @property
    def is_self_dual(self) -> bool:
        return 2 * self.k == self.n and self.is_self_orthogonal


def weight_enumerator(code: BinaryCode) -> dict[int, int]:
    counts = Counter(sum(w) for w in code.codewords())
    return dict(sorted(counts.items()))


def shadow_vectors(code: BinaryCode) -> Iterator[tuple[int, ...]]:
    """Vectors ``v`` with ``v.c = wt(c)/2 (mod 2)`` for every codeword ``c``.

    On a self-dual code ``c -> wt(c)/2 mod 2`` is linear, so the condition
    on the generators suffices and the solutions form ``v0 + C``.
    """
    if not code.is_self_dual:
        raise ValueError("code must be self-dual")
    if code.n == 0:
        yield ()
        return
    rhs = [(sum(g) // 2) % 2 for g in code.generators]
    v0 = la.gf2_solve([list(g) for g in code.generators], rhs)
    for c in code.codewords():
        yield tuple(a ^ b for a, b in zip(v0, c))


def code_shadow_weights(code: BinaryCode) -> dict[int, int]:
    counts = Counter(sum(v) for v in shadow_vectors(code))
    return dict(sorted(counts.items()))


def construction_a(code: BinaryCode) -> Lattice:
    """The lattice ``{x / sqrt(2) : x in Z^n, x mod 2 in C}``.

    Stored with an integer ambient basis under inner product ``dot / 2`` so
    that the Gram matrix stays rational.
    """
    n = code.n
    gens = [list(g) for g in code.generators] + [[2 * int(i == j) for j in range(n)] for i in range(n)]
    basis = la.hermite_basis(gens) if n else []
    return Lattice.from_basis(basis, Fraction(1, 2), name=f"A({code.n},{code.k})")


def direct_sum(a: BinaryCode, b: BinaryCode) -> BinaryCode:
    rows = [tuple(r) + (0,) * b.n for r in a.generators] + [(0,) * a.n + tuple(r) for r in b.generators]
    return BinaryCode(a.n + b.n, tuple(rows))


def repetition2() -> BinaryCode:
    return BinaryCode(2, ((1, 1),))


def extended_hamming8() -> BinaryCode:
    rows = ("11110000", "00111100", "00001111", "01010101")
    return BinaryCode(8, tuple(tuple(int(b) for b in r) for r in rows))


BUILTIN_CODES = {"rep2": repetition2, "e8code": extended_hamming8}


def builtin_code(name: str) -> BinaryCode:
    try:
        return BUILTIN_CODES[name.strip().lower()]()
    except KeyError:
        raise ValueError(f"unknown code {name!r}; builtins: {', '.join(BUILTIN_CODES)}") from None


def parse_code_text(text: str) -> BinaryCode:
    """First line ``n k``, then ``k`` rows of ``n`` bits (spaces optional)."""
    lines = [ln.split("#")[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ValueError("empty code description")
    n, k = (int(t) for t in lines[0].split())
    rows = [tuple(int(ch) for ch in ln if ch in "01") for ln in lines[1 : k + 1]]
    if len(rows) != k:
        raise ValueError(f"expected {k} generator rows")
    return BinaryCode(n, tuple(rows))


def format_code_text(code: BinaryCode) -> str:
    return "\n".join([f"{code.n} {code.k}"] + ["".join(map(str, r)) for r in code.generators]) + "\n"


def weights_json(weights: dict[int, int]) -> dict:
    return {"weights": {str(w): c for w, c in weights.items()}}
