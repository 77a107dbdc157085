"""Exact linear algebra over the rationals.

All scalars are `fractions.Fraction`, so every result is exact: no
tolerances, no conditioning concerns. Row reduction internally runs on
integer-scaled rows (clearing denominators keeps the hot loop in plain
big-integer arithmetic), but public results always come back as reduced
fractions.

`Subspace` canonicalizes on construction: the stored basis is the reduced
row echelon form of whatever spanning set was supplied. The canonical
form is unique per span, so `==` on subspaces is mathematical equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Optional, Sequence

Rational = Fraction
Vector = tuple[Fraction, ...]


class DimensionMismatch(ValueError):
    """Operands live in different ambient dimensions."""


# ---------------------------------------------------------------------------
# vector helpers
# ---------------------------------------------------------------------------

def vec(values: Iterable) -> Vector:
    return tuple(Fraction(v) for v in values)


def zero_vector(n: int) -> Vector:
    return (Fraction(0),) * n


def basis_vector(n: int, i: int) -> Vector:
    return tuple(Fraction(1 if j == i else 0) for j in range(n))


def vadd(x: Vector, y: Vector) -> Vector:
    return tuple(a + b for a, b in zip(x, y))


def vsub(x: Vector, y: Vector) -> Vector:
    return tuple(a - b for a, b in zip(x, y))


def vscale(c, x: Vector) -> Vector:
    c = Fraction(c)
    return tuple(c * a for a in x)


def is_zero_vector(x: Vector) -> bool:
    return all(a == 0 for a in x)


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Matrix:
    """Dense rational matrix, row-major immutable storage."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"entry count {len(self.entries)} != rows*cols "
                f"{self.rows}*{self.cols}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "Matrix":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        flat = []
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged rows")
            flat.extend(Fraction(v) for v in r)
        return cls(nrows, ncols, tuple(flat))

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[Vector]:
        return [self.row(i) for i in range(self.rows)]

    def entry(self, i: int, j: int) -> Fraction:
        return self.entries[i * self.cols + j]


def identity_matrix(n: int) -> Matrix:
    return Matrix(n, n, tuple(
        Fraction(1 if i == j else 0) for i in range(n) for j in range(n)
    ))


def zero_matrix(rows: int, cols: int) -> Matrix:
    return Matrix(rows, cols, (Fraction(0),) * (rows * cols))


def transpose(m: Matrix) -> Matrix:
    return Matrix(m.cols, m.rows, tuple(
        m.entries[i * m.cols + j] for j in range(m.cols) for i in range(m.rows)
    ))


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if a.cols != b.rows:
        raise DimensionMismatch(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    flat = []
    for i in range(a.rows):
        arow = a.row(i)
        for j in range(b.cols):
            flat.append(sum(
                (arow[k] * b.entries[k * b.cols + j] for k in range(a.cols) if arow[k]),
                Fraction(0),
            ))
    return Matrix(a.rows, b.cols, tuple(flat))


def apply_matrix(m: Matrix, v: Sequence) -> Vector:
    if m.cols != len(v):
        raise DimensionMismatch(f"matrix has {m.cols} columns, vector has {len(v)}")
    out = []
    for i in range(m.rows):
        base = i * m.cols
        out.append(sum(
            (m.entries[base + j] * vj for j, vj in enumerate(v) if vj),
            Fraction(0),
        ))
    return tuple(out)


# ---------------------------------------------------------------------------
# integer echelon core
#
# Rows are scaled to integers, reduced incrementally against the pivot rows
# found so far, and gcd-normalized after each combination so entries stay
# small. Exactness is the contract; the integer detour is only a speedup.
# ---------------------------------------------------------------------------

def _int_row(row: Sequence) -> list[int]:
    fracs = [Fraction(v) for v in row]
    scale = 1
    for f in fracs:
        if f.denominator != 1:
            scale = lcm(scale, f.denominator)
    return [int(f * scale) for f in fracs]


def _normalize_int_row(row: list[int], lead: int) -> list[int]:
    g = 0
    for v in row:
        if v:
            g = gcd(g, v)
    if g == 0:
        return row
    if row[lead] < 0:
        g = -g
    return [v // g for v in row]


def _first_nonzero(row: list[int], start: int = 0) -> Optional[int]:
    for i in range(start, len(row)):
        if row[i]:
            return i
    return None


def _echelon_insert(row: list[int], pivot_rows: dict[int, list[int]]) -> bool:
    """Reduce `row` against current pivots; install it if independent."""
    c = _first_nonzero(row)
    while c is not None:
        p = pivot_rows.get(c)
        if p is None:
            pivot_rows[c] = _normalize_int_row(row, c)
            return True
        a, b = p[c], row[c]
        g = gcd(a, b)
        am, bm = a // g, b // g
        row = [am * x - bm * y for x, y in zip(row, p)]
        c = _first_nonzero(row, c + 1)
    return False


def _back_eliminate(pivot_rows: dict[int, list[int]]) -> tuple[list[Vector], tuple[int, ...]]:
    """Turn an echelon pivot map into RREF rows over Fraction (pivots = 1)."""
    cols = sorted(pivot_rows)
    rows = [pivot_rows[c] for c in cols]
    for i in range(len(rows) - 1, -1, -1):
        c = cols[i]
        p = rows[i]
        a = p[c]
        for j in range(i):
            b = rows[j][c]
            if b:
                g = gcd(a, b)
                am, bm = a // g, b // g
                combined = [am * x - bm * y for x, y in zip(rows[j], p)]
                rows[j] = _normalize_int_row(combined, cols[j])
    out = []
    for c, r in zip(cols, rows):
        lead = Fraction(r[c])
        out.append(tuple(Fraction(v) / lead for v in r))
    return out, tuple(cols)


def _rref_of_rows(rows: Iterable[Sequence], ncols: int) -> tuple[list[Vector], tuple[int, ...]]:
    pivot_rows: dict[int, list[int]] = {}
    for r in rows:
        if all(type(v) is int for v in r):
            ir = list(r)
        else:
            ir = _int_row(r)
        if len(ir) != ncols:
            raise DimensionMismatch(f"row length {len(ir)} != {ncols}")
        _echelon_insert(ir, pivot_rows)
    if not pivot_rows:
        return [], ()
    return _back_eliminate(pivot_rows)


# ---------------------------------------------------------------------------
# public solvers
# ---------------------------------------------------------------------------

def rref(m: Matrix) -> tuple[Matrix, int, tuple[int, ...]]:
    """Reduced row echelon form of `m`, with its rank and pivot columns.

    The returned matrix has the shape of `m`, zero rows at the bottom.
    """
    reduced, pivots = _rref_of_rows(m.to_rows(), m.cols)
    flat: list[Fraction] = []
    for r in reduced:
        flat.extend(r)
    flat.extend(zero_vector(m.cols) * (m.rows - len(reduced)))
    return Matrix(m.rows, m.cols, tuple(flat)), len(reduced), pivots


def nullspace_of_rows(rows: Iterable[Sequence], ncols: int) -> "Subspace":
    """Solution space of the homogeneous system given by `rows`."""
    reduced, pivots = _rref_of_rows(rows, ncols)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, p in zip(reduced, pivots):
            v[p] = -r[f]
        basis.append(tuple(v))
    return Subspace.span(ncols, basis)


def nullspace(m: Matrix) -> "Subspace":
    return nullspace_of_rows(m.to_rows(), m.cols)


def solve_affine_rows(
    rows: Sequence[Sequence], rhs: Sequence, ncols: int
) -> Optional[tuple[Vector, "Subspace"]]:
    """Solve the affine system rows*x = rhs.

    Returns a particular solution (free variables set to zero) together
    with the homogeneous solution space, or None when inconsistent.
    """
    if len(rows) != len(rhs):
        raise DimensionMismatch("rhs length != number of rows")
    augmented = [list(r) + [b] for r, b in zip(rows, rhs)]
    reduced, pivots = _rref_of_rows(augmented, ncols + 1)
    if ncols in pivots:
        return None  # a row reduced to 0 = 1
    particular = [Fraction(0)] * ncols
    for r, p in zip(reduced, pivots):
        particular[p] = r[ncols]
    return tuple(particular), nullspace_of_rows(rows, ncols)


def solve_affine(m: Matrix, b: Sequence) -> Optional[tuple[Vector, "Subspace"]]:
    return solve_affine_rows(m.to_rows(), vec(b), m.cols)


# ---------------------------------------------------------------------------
# subspaces
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Subspace:
    """A linear subspace of Q^n held in canonical (RREF basis) form."""

    ambient_dim: int
    basis: tuple[Vector, ...]

    def __post_init__(self):
        last_pivot = -1
        for row in self.basis:
            if len(row) != self.ambient_dim:
                raise ValueError("basis vector of wrong length")
            p = next((i for i, v in enumerate(row) if v != 0), None)
            if p is None or p <= last_pivot or row[p] != 1:
                raise ValueError("basis is not in reduced row echelon form")
            for other in self.basis:
                if other is not row and other[p] != 0:
                    raise ValueError("basis is not in reduced row echelon form")
            last_pivot = p

    @classmethod
    def span(cls, ambient_dim: int, vectors: Iterable[Sequence]) -> "Subspace":
        reduced, _ = _rref_of_rows(vectors, ambient_dim)
        return cls(ambient_dim, tuple(reduced))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def pivots(self) -> tuple[int, ...]:
        return tuple(
            next(i for i, v in enumerate(row) if v != 0) for row in self.basis
        )

    def reduce_vector(self, v: Sequence) -> Vector:
        """Remainder of v after eliminating all basis pivots."""
        w = list(vec(v))
        if len(w) != self.ambient_dim:
            raise DimensionMismatch("vector length != ambient dimension")
        for row, p in zip(self.basis, self.pivots()):
            c = w[p]
            if c:
                for i, rv in enumerate(row):
                    if rv:
                        w[i] -= c * rv
        return tuple(w)

    def contains_vector(self, v: Sequence) -> bool:
        return is_zero_vector(self.reduce_vector(v))


def full_space(n: int) -> Subspace:
    return Subspace(n, tuple(basis_vector(n, i) for i in range(n)))


def zero_subspace(n: int) -> Subspace:
    return Subspace(n, ())


def _check_ambient(s: Subspace, t: Subspace) -> None:
    if s.ambient_dim != t.ambient_dim:
        raise DimensionMismatch(
            f"ambient dimensions differ: {s.ambient_dim} vs {t.ambient_dim}"
        )


def subspace_equal(s: Subspace, t: Subspace) -> bool:
    _check_ambient(s, t)
    return s.basis == t.basis


def subspace_contains(s: Subspace, t: Subspace) -> bool:
    """True when t is a subspace of s."""
    _check_ambient(s, t)
    return all(s.contains_vector(v) for v in t.basis)


def subspace_sum(s: Subspace, t: Subspace) -> Subspace:
    _check_ambient(s, t)
    return Subspace.span(s.ambient_dim, list(s.basis) + list(t.basis))


def subspace_intersect(s: Subspace, t: Subspace) -> Subspace:
    """Zassenhaus: echelonize [v|v] for v in s and [w|0] for w in t; rows
    whose left block vanished carry an intersection basis in the right block."""
    _check_ambient(s, t)
    n = s.ambient_dim
    zero = zero_vector(n)
    stacked = [list(v) + list(v) for v in s.basis]
    stacked += [list(w) + list(zero) for w in t.basis]
    reduced, _ = _rref_of_rows(stacked, 2 * n)
    hits = [r[n:] for r in reduced if is_zero_vector(r[:n])]
    return Subspace.span(n, hits)
