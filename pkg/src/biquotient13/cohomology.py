"""Cohomology groups of the quotients, computed exactly over the integers.

The only nonstandard input is the 6x6 relation matrix presenting H^6 as a
quotient of Z^6; everything else is integer linear algebra (fraction-free
determinants and Smith normal form on Python ints).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import ParityError
from .tuples import Tuple5, as_tuple5, symmetric_invariants

FREE_DEGREES = (0, 2, 4, 9, 11, 13)
ZERO_DEGREES = (1, 3, 5, 7, 10, 12)
TORSION_DEGREES = (6, 8)
DIMENSION = 13

Matrix = list[list[int]]


@dataclass(frozen=True)
class RelationMatrix:
    m: tuple[tuple[int, ...], ...]
    tuple: Tuple5
    sigma1: int
    sigma2: int
    sigma3: int
    n: int

    def rows(self) -> Matrix:
        return [list(r) for r in self.m]


def relation_matrix(t) -> RelationMatrix:
    """Relations among the six degree-6 generators, with ``n = (1 - s1) / 2``."""
    t = as_tuple5(t)
    inv = symmetric_invariants(t)
    s1, s2, s3 = inv.sigma[:3]
    if inv.n is None:
        raise ParityError(t, s1)
    n = inv.n
    m = (
        (s1, -2, 0, 0, 0, 0),
        (0, s1, -2, 0, 0, 0),
        (0, 0, s1, -2, 0, 0),
        (0, 0, 0, 0, s1, -2),
        (n * s2, s2, -n, -1, n, 1),
        (s3, 0, 0, 0, 0, 1),
    )
    return RelationMatrix(m, t, s1, s2, s3, n)


def _as_matrix(m) -> Matrix:
    if isinstance(m, RelationMatrix):
        return m.rows()
    return [[int(v) for v in row] for row in m]


def det_exact(m) -> int:
    """Determinant by Bareiss fraction-free elimination (exact on ints)."""
    a = _as_matrix(m)
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("det_exact needs a square matrix")
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(m) -> tuple[Matrix, Matrix, Matrix]:
    """Return ``(left, diag, right)`` with ``left @ m @ right == diag``.

    ``left`` and ``right`` are unimodular, the diagonal is nonnegative and
    each nonzero entry divides the next.
    """
    d = _as_matrix(m)
    rows = len(d)
    cols = len(d[0]) if rows else 0
    left, right = _identity(rows), _identity(cols)

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        left[i], left[j] = left[j], left[i]

    def swap_cols(i, j):
        for r in d:
            r[i], r[j] = r[j], r[i]
        for r in right:
            r[i], r[j] = r[j], r[i]

    def add_row(src, dst, q):  # row_dst -= q * row_src
        d[dst] = [x - q * y for x, y in zip(d[dst], d[src])]
        left[dst] = [x - q * y for x, y in zip(left[dst], left[src])]

    def add_col(src, dst, q):  # col_dst -= q * col_src
        for r in d:
            r[dst] -= q * r[src]
        for r in right:
            r[dst] -= q * r[src]

    for k in range(min(rows, cols)):
        while True:
            nz = [(abs(d[i][j]), i, j) for i in range(k, rows) for j in range(k, cols) if d[i][j]]
            if not nz:
                break
            _, i, j = min(nz)
            swap_rows(k, i)
            swap_cols(k, j)
            p = d[k][k]
            clean = True
            for i in range(k + 1, rows):
                q = d[i][k] // p
                if q:
                    add_row(k, i, q)
                clean &= d[i][k] == 0
            for j in range(k + 1, cols):
                q = d[k][j] // p
                if q:
                    add_col(k, j, q)
                clean &= d[k][j] == 0
            if not clean:
                continue
            bad = next((i for i in range(k + 1, rows)
                        for j in range(k + 1, cols) if d[i][j] % p), None)
            if bad is None:
                break
            # fold the offending row in; the next pass lowers the pivot
            d[k] = [x + y for x, y in zip(d[k], d[bad])]
            left[k] = [x + y for x, y in zip(left[k], left[bad])]
        if k < rows and k < cols and d[k][k] < 0:
            d[k] = [-x for x in d[k]]
            left[k] = [-x for x in left[k]]
    return left, d, right


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    return [[sum(x * y for x, y in zip(row, col)) for col in zip(*b)] for row in a]


@dataclass(frozen=True)
class AbelianGroupPresentation:
    """Z^cols modulo the row span of an integer relation matrix."""

    invariant_factors: tuple[int, ...]
    free_rank: int = 0

    @classmethod
    def from_relations(cls, m) -> "AbelianGroupPresentation":
        rel = _as_matrix(m)
        cols = len(rel[0]) if rel else 0
        _, d, _ = smith_normal_form(rel)
        factors = tuple(d[i][i] for i in range(min(len(d), cols)) if d[i][i] != 0)
        return cls(factors, cols - len(factors))

    @property
    def torsion(self) -> tuple[int, ...]:
        """Invariant factors different from 1."""
        return tuple(f for f in self.invariant_factors if f != 1)

    @property
    def order(self):
        """Group order, or None for an infinite group."""
        if self.free_rank:
            return None
        out = 1
        for f in self.invariant_factors:
            out *= f
        return out

    def __str__(self):
        parts = [f"Z/{f}" for f in self.torsion] + ["Z"] * self.free_rank
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class CohomologySummary:
    tuple: Tuple5
    r: int
    h6: AbelianGroupPresentation
    betti: tuple[int, ...] = field(
        default=tuple(int(i in FREE_DEGREES) for i in range(DIMENSION + 1)))

    def group(self, i) -> str:
        if i in FREE_DEGREES:
            return "Z"
        if i in ZERO_DEGREES:
            return "0"
        if i == 6:
            return str(self.h6)
        if i == 8:
            return f"finite of order {self.r}"
        raise ValueError(f"degree {i} out of range 0..{DIMENSION}")

    def to_dict(self):
        return {
            "schema": 1,
            "tuple": list(self.tuple),
            "betti": list(self.betti),
            "r": self.r,
            "h6_order": self.h6.order,
            "h6_invariant_factors": list(self.h6.torsion),
            "h8_order": self.r,
            "groups": {str(i): self.group(i) for i in range(DIMENSION + 1)},
        }


def cohomology_summary(t) -> CohomologySummary:
    """Integral cohomology; H^6 structure read off the presented quotient.

    H^8 is reported by its order only.
    """
    rel = relation_matrix(t)
    h6 = AbelianGroupPresentation.from_relations(rel)
    return CohomologySummary(rel.tuple, symmetric_invariants(rel.tuple).r, h6)


def invariant_factors(m: Sequence[Sequence[int]]) -> list[int]:
    _, d, _ = smith_normal_form(m)
    return [d[i][i] for i in range(min(len(d), len(d[0]) if d else 0)) if d[i][i]]
