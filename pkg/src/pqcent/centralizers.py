"""Solvers for weighted, Jordan, and one-sided centralizer spaces.

For a fixed weight pair (p, q) the weighted centralizers are the linear
operators T with

    (p+q) T(ab) = p T(a)b + q a T(b)      for all a, b,

the Jordan variant imposes the same identity only on squares, and the
one-sided spaces impose T(ab) = T(a)b (left) or T(ab) = a T(b) (right).
Each space is cut out by linear equations on the n^2 matrix entries of T,
obtained by letting a, b run over basis pairs, and is solved exactly as a
nullspace. Operators are stored as matrices whose columns are the images
of the basis vectors; an operator T corresponds to the flat vector of its
row-major entries, so operator spaces are canonical subspaces of n^2-space.

The defining conditions quantify over additive maps, but an additive map on
a Q-vector space is automatically Q-linear, so solving for linear operators
loses nothing. The Jordan condition is solved through its polarized form
(p+q)T(ab+ba) = pT(a)b + pT(b)a + qaT(b) + qbT(a), which is equivalent to
the square condition for linear T because 2 is invertible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from .algebras import Algebra, multiply
from .linalg import (
    Matrix,
    Subspace,
    Vector,
    apply_matrix,
    basis_vector,
    identity_matrix,
    matmul,
    nullspace_of_rows,
    subspace_contains,
    subspace_intersect,
    zero_matrix,
)

_ZERO = Fraction(0)


@dataclass(frozen=True)
class Weights:
    """A pair of positive integer weights.

    The defining convention takes p != q; equal weights are accepted only
    with an explicit opt-in, because the (1,1) space is a genuinely
    different object and an accidental p = q would silently test it.
    """

    p: int
    q: int
    allow_equal: bool = False

    def __post_init__(self):
        if not (isinstance(self.p, int) and isinstance(self.q, int)):
            raise TypeError("weights must be integers")
        if self.p < 1 or self.q < 1:
            raise ValueError("weights must be positive")
        if self.p == self.q and not self.allow_equal:
            raise ValueError(
                "equal weights rejected by convention; pass allow_equal=True"
            )

    @property
    def pair(self) -> tuple[int, int]:
        return (self.p, self.q)


@dataclass(frozen=True)
class OperatorSpace:
    """A linear space of operators on an algebra, canonically represented.

    The backing subspace lives in n^2-space via row-major flattening, so
    equality of operator spaces is exact span equality.
    """

    algebra_dim: int
    space: Subspace

    def __post_init__(self):
        if self.space.ambient_dim != self.algebra_dim ** 2:
            raise ValueError("backing subspace must live in n^2-space")

    @property
    def dim(self) -> int:
        return self.space.dim

    def operators(self) -> tuple[Matrix, ...]:
        n = self.algebra_dim
        return tuple(Matrix(n, n, v) for v in self.space.basis)

    def contains_operator(self, t: Matrix) -> bool:
        return self.space.contains_vector(t.entries)


def operator_space(n: int, flats: Sequence[Sequence]) -> OperatorSpace:
    return OperatorSpace(n, Subspace.span(n * n, flats))


def identity_operator(n: int) -> Matrix:
    return identity_matrix(n)


def zero_operator(n: int) -> Matrix:
    return zero_matrix(n, n)


def apply_operator(t: Matrix, x: Sequence) -> Vector:
    return apply_matrix(t, x)


def compose(s: Matrix, t: Matrix) -> Matrix:
    """The operator x -> s(t(x))."""
    return matmul(s, t)


def right_mul(a: Algebra, x: Sequence) -> Matrix:
    """Right multiplication operator b -> b*x."""
    n = a.dim
    entries = [_ZERO] * (n * n)
    for j, xj in enumerate(x):
        if not xj:
            continue
        for k in range(n):
            for m, c in a.by_right_factor[j][k]:
                entries[k * n + m] += xj * c
    return Matrix(n, n, tuple(entries))


def left_mul(a: Algebra, x: Sequence) -> Matrix:
    """Left multiplication operator b -> x*b."""
    n = a.dim
    entries = [_ZERO] * (n * n)
    for i, xi in enumerate(x):
        if not xi:
            continue
        for k in range(n):
            for m, c in a.by_left_factor[i][k]:
                entries[k * n + m] += xi * c
    return Matrix(n, n, tuple(entries))


@lru_cache(maxsize=None)
def right_mul_space(a: Algebra) -> OperatorSpace:
    """All right multiplication operators, as an operator space."""
    n = a.dim
    return operator_space(
        n, [right_mul(a, basis_vector(n, i)).entries for i in range(n)]
    )


@lru_cache(maxsize=None)
def left_mul_space(a: Algebra) -> OperatorSpace:
    n = a.dim
    return operator_space(
        n, [left_mul(a, basis_vector(n, i)).entries for i in range(n)]
    )


def right_mul_image(a: Algebra, s: Subspace) -> OperatorSpace:
    """The operator space of right multiplications by elements of s."""
    return operator_space(a.dim, [right_mul(a, v).entries for v in s.basis])


@lru_cache(maxsize=None)
def two_sided_mul_elements(a: Algebra) -> Subspace:
    """Elements v whose right multiplication is a two-sided centralizer.

    Right multiplication is always a right centralizer by associativity;
    the extra condition is (xy)v = (xv)y on all basis pairs. On a unital
    algebra this is exactly the center; without a unit it can be larger.
    """
    n = a.dim
    rows = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                row = [_ZERO] * n
                for l, c1 in a.products[i][j]:
                    for m, c2 in a.by_left_factor[l][k]:
                        row[m] += c1 * c2
                for l, c2 in a.by_right_factor[j][k]:
                    for m, c1 in a.by_left_factor[i][l]:
                        row[m] -= c1 * c2
                if any(row):
                    rows.append(row)
    return nullspace_of_rows(rows, n)


# ---------------------------------------------------------------------------
# space solvers
#
# Unknowns are the flat entries t[k*n + m] = coefficient of b_k in T(b_m).
# One scalar equation per basis pair (i, j) and output coordinate k.
# ---------------------------------------------------------------------------

def _solve_rows(n: int, rows: list) -> OperatorSpace:
    unique = []
    seen = set()
    for row in rows:
        key = tuple(row)
        if key not in seen:
            seen.add(key)
            unique.append(row)
    return OperatorSpace(n, nullspace_of_rows(unique, n * n))


def _weighted_rows(a: Algebra, p: int, q: int) -> list:
    n = a.dim
    nn = n * n
    rows = []
    s = Fraction(p + q)
    fp, fq = Fraction(p), Fraction(q)
    for i in range(n):
        for j in range(n):
            prod_ij = a.products[i][j]
            for k in range(n):
                row = [_ZERO] * nn
                for m, c in prod_ij:
                    row[k * n + m] += s * c
                for m, c in a.by_right_factor[j][k]:
                    row[m * n + i] -= fp * c
                for m, c in a.by_left_factor[i][k]:
                    row[m * n + j] -= fq * c
                if any(row):
                    rows.append(row)
    return rows


@lru_cache(maxsize=None)
def pq_centralizers(a: Algebra, w: Weights) -> OperatorSpace:
    """The space of (p, q)-weighted centralizers of a."""
    return _solve_rows(a.dim, _weighted_rows(a, w.p, w.q))


@lru_cache(maxsize=None)
def pq_jordan_centralizers(a: Algebra, w: Weights) -> OperatorSpace:
    """Weighted Jordan centralizers, via the polarized identity."""
    n = a.dim
    nn = n * n
    rows = []
    s = Fraction(w.p + w.q)
    fp, fq = Fraction(w.p), Fraction(w.q)
    for i in range(n):
        for j in range(i, n):
            prod_ij = a.products[i][j]
            prod_ji = a.products[j][i]
            for k in range(n):
                row = [_ZERO] * nn
                for m, c in prod_ij:
                    row[k * n + m] += s * c
                for m, c in prod_ji:
                    row[k * n + m] += s * c
                for m, c in a.by_right_factor[j][k]:
                    row[m * n + i] -= fp * c
                for m, c in a.by_right_factor[i][k]:
                    row[m * n + j] -= fp * c
                for m, c in a.by_left_factor[i][k]:
                    row[m * n + j] -= fq * c
                for m, c in a.by_left_factor[j][k]:
                    row[m * n + i] -= fq * c
                if any(row):
                    rows.append(row)
    return _solve_rows(n, rows)


@lru_cache(maxsize=None)
def left_centralizers(a: Algebra) -> OperatorSpace:
    """Solutions of T(ab) = T(a)b."""
    n = a.dim
    nn = n * n
    rows = []
    for i in range(n):
        for j in range(n):
            prod_ij = a.products[i][j]
            for k in range(n):
                row = [_ZERO] * nn
                for m, c in prod_ij:
                    row[k * n + m] += c
                for m, c in a.by_right_factor[j][k]:
                    row[m * n + i] -= c
                if any(row):
                    rows.append(row)
    return _solve_rows(n, rows)


@lru_cache(maxsize=None)
def right_centralizers(a: Algebra) -> OperatorSpace:
    """Solutions of T(ab) = a T(b)."""
    n = a.dim
    nn = n * n
    rows = []
    for i in range(n):
        for j in range(n):
            prod_ij = a.products[i][j]
            for k in range(n):
                row = [_ZERO] * nn
                for m, c in prod_ij:
                    row[k * n + m] += c
                for m, c in a.by_left_factor[i][k]:
                    row[m * n + j] -= c
                if any(row):
                    rows.append(row)
    return _solve_rows(n, rows)


@lru_cache(maxsize=None)
def two_sided_centralizers(a: Algebra) -> OperatorSpace:
    """Operators that are left and right centralizers at once."""
    meet = subspace_intersect(
        left_centralizers(a).space, right_centralizers(a).space
    )
    return OperatorSpace(a.dim, meet)


# ---------------------------------------------------------------------------
# membership predicates
#
# Direct identity checks on basis pairs, independent of the solvers; each
# returns the first failing (i, j, residual) for use as a report witness.
# ---------------------------------------------------------------------------

def _columns(t: Matrix) -> list[Vector]:
    n = t.rows
    return [tuple(t.entries[k * n + m] for k in range(n)) for m in range(n)]


def pq_residual(a: Algebra, t: Matrix, w: Weights
                ) -> Optional[tuple[int, int, Vector]]:
    n = a.dim
    cols = _columns(t)
    for i in range(n):
        ei = basis_vector(n, i)
        for j in range(n):
            ej = basis_vector(n, j)
            lhs = apply_matrix(t, multiply(a, ei, ej))
            r1 = multiply(a, cols[i], ej)
            r2 = multiply(a, ei, cols[j])
            res = tuple(
                (w.p + w.q) * l - w.p * x - w.q * y
                for l, x, y in zip(lhs, r1, r2)
            )
            if any(res):
                return i, j, res
    return None


def jordan_residual(a: Algebra, t: Matrix, w: Weights
                    ) -> Optional[tuple[int, int, Vector]]:
    n = a.dim
    cols = _columns(t)
    for i in range(n):
        ei = basis_vector(n, i)
        for j in range(i, n):
            ej = basis_vector(n, j)
            both = tuple(
                x + y for x, y in
                zip(multiply(a, ei, ej), multiply(a, ej, ei))
            )
            lhs = apply_matrix(t, both)
            res = tuple(
                (w.p + w.q) * l
                - w.p * (x1 + x2) - w.q * (y1 + y2)
                for l, x1, x2, y1, y2 in zip(
                    lhs,
                    multiply(a, cols[i], ej),
                    multiply(a, cols[j], ei),
                    multiply(a, ei, cols[j]),
                    multiply(a, ej, cols[i]),
                )
            )
            if any(res):
                return i, j, res
    return None


def left_residual(a: Algebra, t: Matrix) -> Optional[tuple[int, int, Vector]]:
    n = a.dim
    cols = _columns(t)
    for i in range(n):
        ei = basis_vector(n, i)
        for j in range(n):
            ej = basis_vector(n, j)
            lhs = apply_matrix(t, multiply(a, ei, ej))
            rhs = multiply(a, cols[i], ej)
            res = tuple(l - r for l, r in zip(lhs, rhs))
            if any(res):
                return i, j, res
    return None


def right_residual(a: Algebra, t: Matrix) -> Optional[tuple[int, int, Vector]]:
    n = a.dim
    cols = _columns(t)
    for i in range(n):
        ei = basis_vector(n, i)
        for j in range(n):
            ej = basis_vector(n, j)
            lhs = apply_matrix(t, multiply(a, ei, ej))
            rhs = multiply(a, ei, cols[j])
            res = tuple(l - r for l, r in zip(lhs, rhs))
            if any(res):
                return i, j, res
    return None


def is_pq_centralizer(a: Algebra, t: Matrix, w: Weights) -> bool:
    return pq_residual(a, t, w) is None


def is_pq_jordan_centralizer(a: Algebra, t: Matrix, w: Weights) -> bool:
    return jordan_residual(a, t, w) is None


def is_left_centralizer(a: Algebra, t: Matrix) -> bool:
    return left_residual(a, t) is None


def is_right_centralizer(a: Algebra, t: Matrix) -> bool:
    return right_residual(a, t) is None


def is_two_sided_centralizer(a: Algebra, t: Matrix) -> bool:
    return left_residual(a, t) is None and right_residual(a, t) is None


def inclusion_chain_holds(a: Algebra, w: Weights) -> bool:
    """two-sided inside weighted inside weighted-Jordan."""
    cts = two_sided_centralizers(a).space
    cpq = pq_centralizers(a, w).space
    cj = pq_jordan_centralizers(a, w).space
    return subspace_contains(cpq, cts) and subspace_contains(cj, cpq)
