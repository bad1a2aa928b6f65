"""Exact rational matrices: token parsing, symmetry, nonzero-pattern
extraction, and rank by fraction-free (Bareiss) elimination.

Everything runs on fractions.Fraction; there is no floating point
anywhere on this path.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from minrank_atlas.graphs import Graph

_RATIONAL_RE = re.compile(r"([+-]?\d+)(?:/(\d+))?\Z")


def parse_rational(text: str) -> Fraction:
    """Parse 'sign? digits (/ digits)?' into a reduced fraction."""
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"malformed rational token {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(num, den)


@dataclass(frozen=True)
class RationalMatrix:
    """Square matrix of Fractions, stored as a tuple of row tuples."""

    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.rows)
        if n == 0:
            raise ValueError("empty matrix")
        for row in self.rows:
            if len(row) != n:
                raise ValueError(f"matrix is not square: {n}x{len(row)} row")

    @classmethod
    def from_rows(cls, rows) -> RationalMatrix:
        return cls(tuple(tuple(Fraction(x) for x in row) for row in rows))

    @classmethod
    def identity(cls, n: int) -> RationalMatrix:
        one, zero = Fraction(1), Fraction(0)
        return cls(tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)))

    @classmethod
    def zero(cls, n: int) -> RationalMatrix:
        return cls.from_rows([[0] * n for _ in range(n)])

    @property
    def n(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> Fraction:
        return self.rows[i][j]


def is_symmetric(m: RationalMatrix) -> bool:
    rows = m.rows
    return all(rows[i][j] == rows[j][i] for i in range(m.n) for j in range(i + 1, m.n))


def rank(m: RationalMatrix) -> int:
    """Rank over the rationals by Bareiss elimination.

    Pivot rule: first row with a nonzero entry in the current column;
    with exact arithmetic only determinism matters.  On integer input
    every intermediate value stays integral.
    """
    n = m.n
    a = [list(row) for row in m.rows]
    prev = Fraction(1)
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, n) if a[i][c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            a[r], a[piv] = a[piv], a[r]
        for i in range(r + 1, n):
            for j in range(c + 1, n):
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev
            a[i][c] = Fraction(0)
        prev = a[r][c]
        r += 1
        if r == n:
            break
    return r


def pattern_graph(m: RationalMatrix) -> Graph:
    """Graph on n vertices with i ~ j iff the (i,j) entry is nonzero (i != j).

    The diagonal is ignored; asymmetric input is rejected.
    """
    if not is_symmetric(m):
        raise ValueError("pattern graph requires a symmetric matrix")
    rows = []
    for i in range(m.n):
        row = 0
        for j in range(m.n):
            if i != j and m.rows[i][j] != 0:
                row |= 1 << j
        rows.append(row)
    return Graph(m.n, tuple(rows))
