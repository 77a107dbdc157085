"""Finite-dimensional associative algebras over Q via structure constants.

An algebra of dimension n is determined by the rational tensor c[i][j][k]
with basis products b_i b_j = sum_k c[i][j][k] b_k. Associativity is checked
exhaustively at construction; everything downstream assumes it. Elements are
plain coefficient tuples in the defining basis, and subspaces of the algebra
reuse the canonical `Subspace` type from `linalg`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Optional, Sequence

from .linalg import (
    DimensionMismatch,
    Subspace,
    Vector,
    basis_vector,
    nullspace_of_rows,
    solve_affine_rows,
    subspace_intersect,
    vadd,
)

Table = tuple[tuple[tuple[Fraction, ...], ...], ...]

_ZERO = Fraction(0)


class NonAssociativeError(ValueError):
    """Structure constants fail associativity on some basis triple."""

    def __init__(self, triple: tuple[int, int, int]):
        self.triple = triple
        i, j, k = triple
        super().__init__(
            f"structure constants are not associative: "
            f"(b{i}*b{j})*b{k} != b{i}*(b{j}*b{k})"
        )


# eq=False: algebras hash and compare by identity, which lets the solvers
# lru_cache per algebra object without hashing the whole tensor.
@dataclass(frozen=True, eq=False)
class Algebra:
    dim: int
    table: Table
    name: str = ""
    basis_names: Optional[tuple[str, ...]] = None

    @cached_property
    def products(self) -> tuple:
        """products[i][j] = nonzero (k, c[i][j][k]) pairs of b_i * b_j."""
        return tuple(
            tuple(
                tuple((k, c) for k, c in enumerate(row) if c)
                for row in plane
            )
            for plane in self.table
        )

    @cached_property
    def by_right_factor(self) -> tuple:
        """by_right_factor[j][k] = nonzero (m, c[m][j][k]) pairs.

        These are the sparse rows of the right-multiplication-by-b_j matrix.
        """
        n = self.dim
        return tuple(
            tuple(
                tuple(
                    (m, self.table[m][j][k]) for m in range(n)
                    if self.table[m][j][k]
                )
                for k in range(n)
            )
            for j in range(n)
        )

    @cached_property
    def by_left_factor(self) -> tuple:
        """by_left_factor[i][k] = nonzero (m, c[i][m][k]) pairs."""
        n = self.dim
        return tuple(
            tuple(
                tuple(
                    (m, self.table[i][m][k]) for m in range(n)
                    if self.table[i][m][k]
                )
                for k in range(n)
            )
            for i in range(n)
        )

    def basis_name(self, i: int) -> str:
        if self.basis_names is not None:
            return self.basis_names[i]
        return f"b{i}"

    def __repr__(self):
        return f"Algebra({self.name or '?'}, dim={self.dim})"


def _normalize_table(dim: int, constants) -> Table:
    if len(constants) != dim:
        raise ValueError(f"expected {dim} planes of structure constants")
    planes = []
    for plane in constants:
        if len(plane) != dim:
            raise ValueError("structure constants must be dim x dim x dim")
        rows = []
        for row in plane:
            if len(row) != dim:
                raise ValueError("structure constants must be dim x dim x dim")
            rows.append(tuple(Fraction(c) for c in row))
        planes.append(tuple(rows))
    return tuple(planes)


def _check_associativity(a: Algebra) -> None:
    n = a.dim
    prod = a.products
    for i in range(n):
        for j in range(n):
            left_factors = prod[i][j]
            for k in range(n):
                acc: dict[int, Fraction] = {}
                for m, c in left_factors:
                    for l, c2 in prod[m][k]:
                        acc[l] = acc.get(l, _ZERO) + c * c2
                for m, c in prod[j][k]:
                    for l, c2 in prod[i][m]:
                        acc[l] = acc.get(l, _ZERO) - c * c2
                if any(acc.values()):
                    raise NonAssociativeError((i, j, k))


def make_algebra(dim: int, structure_constants, *, name: str = "",
                 basis_names: Optional[Sequence[str]] = None) -> Algebra:
    """Build a validated algebra from a dim x dim x dim constant array."""
    if dim < 1:
        raise ValueError("algebra dimension must be at least 1")
    table = _normalize_table(dim, structure_constants)
    names = tuple(basis_names) if basis_names is not None else None
    if names is not None and len(names) != dim:
        raise ValueError("need one basis name per dimension")
    a = Algebra(dim, table, name, names)
    _check_associativity(a)
    return a


def _check_element(a: Algebra, x: Sequence) -> None:
    if len(x) != a.dim:
        raise DimensionMismatch(
            f"element of length {len(x)} in algebra of dimension {a.dim}"
        )


def multiply(a: Algebra, x: Sequence, y: Sequence) -> Vector:
    """Product of two elements given by coefficient vectors."""
    _check_element(a, x)
    _check_element(a, y)
    out = [_ZERO] * a.dim
    prod = a.products
    for i, xi in enumerate(x):
        if not xi:
            continue
        row = prod[i]
        for j, yj in enumerate(y):
            if not yj:
                continue
            s = xi * yj
            for k, c in row[j]:
                out[k] += s * c
    return tuple(out)


def right_identities(a: Algebra) -> Optional[tuple[Vector, Subspace]]:
    """Affine set of all u with x*u = x for every x, or None.

    Returned as (particular solution, homogeneous subspace); every right
    identity is particular + h with h in the subspace. The set is genuinely
    non-unique on some algebras, so callers must not assume a point.
    """
    n = a.dim
    rows, rhs = [], []
    for i in range(n):
        for k in range(n):
            row = [_ZERO] * n
            for m, c in a.by_left_factor[i][k]:
                row[m] = c
            rows.append(row)
            rhs.append(Fraction(1 if i == k else 0))
    return solve_affine_rows(rows, rhs, n)


def right_identity_samples(a: Algebra) -> tuple[Vector, ...]:
    """Extreme points used to test statements quantified over a right identity.

    Particular solution, particular + each homogeneous basis vector, and
    (when the family has dimension >= 2) particular + their sum.
    """
    sol = right_identities(a)
    if sol is None:
        return ()
    particular, homogeneous = sol
    samples = [particular]
    samples.extend(vadd(particular, h) for h in homogeneous.basis)
    if homogeneous.dim >= 2:
        total = particular
        for h in homogeneous.basis:
            total = vadd(total, h)
        samples.append(total)
    return tuple(samples)


def identity(a: Algebra) -> Optional[Vector]:
    """The two-sided identity element, if one exists."""
    n = a.dim
    rows, rhs = [], []
    for i in range(n):
        for k in range(n):
            row = [_ZERO] * n
            for m, c in a.by_left_factor[i][k]:
                row[m] = c
            rows.append(row)
            rhs.append(Fraction(1 if i == k else 0))
            row = [_ZERO] * n
            for m, c in a.by_right_factor[i][k]:
                row[m] = c
            rows.append(row)
            rhs.append(Fraction(1 if i == k else 0))
    sol = solve_affine_rows(rows, rhs, n)
    if sol is None:
        return None
    particular, homogeneous = sol
    # two-sided identities are unique, so the system cannot be underdetermined
    assert homogeneous.dim == 0
    return particular


def is_unital(a: Algebra) -> bool:
    return identity(a) is not None


def is_commutative(a: Algebra) -> bool:
    n = a.dim
    return all(
        a.table[i][j] == a.table[j][i]
        for i in range(n) for j in range(i + 1, n)
    )


@lru_cache(maxsize=None)
def center(a: Algebra) -> Subspace:
    """Elements commuting with the whole algebra."""
    n = a.dim
    rows = []
    for j in range(n):
        for k in range(n):
            row = [_ZERO] * n
            for m, c in a.by_right_factor[j][k]:
                row[m] += c
            for m, c in a.by_left_factor[j][k]:
                row[m] -= c
            if any(row):
                rows.append(row)
    return nullspace_of_rows(rows, n)


def relative_center(a: Algebra, s: Subspace, t: Subspace) -> Subspace:
    """Elements of s commuting with everything in t."""
    n = a.dim
    if s.ambient_dim != n or t.ambient_dim != n:
        raise DimensionMismatch("subspaces must live in the algebra")
    rows = []
    for tv in t.basis:
        for k in range(n):
            row = [_ZERO] * n
            for j, tj in enumerate(tv):
                if not tj:
                    continue
                for m, c in a.by_right_factor[j][k]:
                    row[m] += tj * c
                for m, c in a.by_left_factor[j][k]:
                    row[m] -= tj * c
            if any(row):
                rows.append(row)
    return subspace_intersect(s, nullspace_of_rows(rows, n))


@lru_cache(maxsize=None)
def radical(a: Algebra) -> Subspace:
    """Jacobson radical, via the trace form of the unitization.

    Over Q the radical of a finite-dimensional unital algebra is the radical
    of the bilinear form (x, y) -> trace(L_{xy}) of the left regular
    representation. Adjoining a unit first makes that criterion apply to
    non-unital input as well; the radical never meets the adjoined line, so
    intersecting back with the original algebra loses nothing.
    """
    n = a.dim
    # s[m] = trace of left multiplication by b_m
    s = [_ZERO] * n
    for m in range(n):
        for k in range(n):
            for l, c in a.products[m][k]:
                if l == k:
                    s[m] += c
    gram = []
    top = [Fraction(n + 1)] + s
    gram.append(top)
    for i in range(n):
        row = [s[i]] + [_ZERO] * n
        for j in range(n):
            row[j + 1] = sum((c * s[m] for m, c in a.products[i][j]), _ZERO)
        gram.append(row)
    null = nullspace_of_rows(gram, n + 1)
    embedded = Subspace.span(
        n + 1, [basis_vector(n + 1, i + 1) for i in range(n)]
    )
    inside = subspace_intersect(null, embedded)
    return Subspace.span(n, [v[1:] for v in inside.basis])


def subspace_product(a: Algebra, s: Subspace, t: Subspace) -> Subspace:
    """Span of all products s_i * t_j over the two bases."""
    n = a.dim
    if s.ambient_dim != n or t.ambient_dim != n:
        raise DimensionMismatch("subspaces must live in the algebra")
    return Subspace.span(
        n, [multiply(a, u, v) for u in s.basis for v in t.basis]
    )


def is_nilpotent_subspace(a: Algebra, s: Subspace) -> tuple[bool, Optional[int]]:
    """Whether iterated span-of-products of s vanish, and the first power that does.

    Powers are S^1 = S, S^{k+1} = span(S^k * S). If no power vanishes by
    dim(A)+1 none ever will: once a power repeats, the sequence is constant,
    and the tail sums Sum_{k>=m} S^k form a strictly decreasing chain until
    they stabilize, which bounds the index of a nilpotent subspace by
    dim(A)+1 exactly.
    """
    power = s
    for k in range(1, a.dim + 2):
        if power.dim == 0:
            return True, k
        nxt = subspace_product(a, power, s)
        if nxt == power:
            return False, None
        power = nxt
    return False, None
