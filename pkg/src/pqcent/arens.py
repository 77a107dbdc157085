"""Bidual of a finite-dimensional algebra under the staged (first) product.

Coordinates: elements, functionals, and bidual elements all live in the same
n-dimensional rational coordinate space, written against the algebra basis,
its dual basis, and the double-dual basis respectively. The staged product
is built strictly from the two intermediate module actions:

    functional * element   (f.a)(x) = f(a x)
    bidual * functional    (H.f)(a) = H(f.a)
    bidual * bidual        (F * H)(f) = F(H.f)

On double duals of finite-dimensional spaces the double adjoint of an
operator has the same matrix, but every identity checked here is routed
through the staged actions rather than through that shortcut.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .algebras import Algebra, multiply, right_identity_samples
from .centralizers import (
    Weights,
    apply_operator,
    left_residual,
    pq_centralizers,
    right_residual,
)
from .linalg import Matrix, Vector, basis_vector, transpose, vec
from .reports import (
    Assertion,
    Report,
    fmt_vector,
    precondition_unmet,
    report_from_assertions,
)

_ZERO = Fraction(0)


def dual_pairing(f: Sequence, x: Sequence) -> Fraction:
    """Value of the functional with coordinates f at the element x."""
    return sum((fk * xk for fk, xk in zip(f, x)), _ZERO)


def functional_times_element(a: Algebra, f: Sequence, x: Sequence) -> Vector:
    """Right action of the algebra on its dual: (f.x)(y) = f(x y)."""
    n = a.dim
    out = [_ZERO] * n
    for j in range(n):
        acc = _ZERO
        for i, xi in enumerate(x):
            if xi:
                for k, c in a.products[i][j]:
                    acc += f[k] * xi * c
        out[j] = acc
    return vec(out)


def bidual_times_functional(a: Algebra, h: Sequence, f: Sequence) -> Vector:
    """Left action of the bidual on the dual: (H.f)(x) = H(f.x)."""
    n = a.dim
    return vec(
        dual_pairing(h, functional_times_element(a, f, basis_vector(n, j)))
        for j in range(n)
    )


def arens_product(a: Algebra, big_f: Sequence, big_h: Sequence) -> Vector:
    """Staged product on the bidual: (F * H)(f) = F(H.f)."""
    n = a.dim
    return vec(
        dual_pairing(big_f, bidual_times_functional(a, big_h, basis_vector(n, i)))
        for i in range(n)
    )


def adjoint(t: Matrix) -> Matrix:
    """Matrix of the dual operator against the dual basis."""
    return transpose(t)


def double_adjoint(t: Matrix) -> Matrix:
    """Matrix of the bidual operator against the double-dual basis."""
    return transpose(transpose(t))


@lru_cache(maxsize=None)
def arens_basis_products(a: Algebra) -> tuple:
    """Staged products of all pairs of double-dual basis vectors.

    Expanding by bilinearity, these determine the full product, so the
    weighted identity on the bidual can be checked exhaustively from them.
    """
    n = a.dim
    return tuple(
        tuple(
            arens_product(a, basis_vector(n, i), basis_vector(n, j))
            for j in range(n)
        )
        for i in range(n)
    )


def _expand_product(products, x: Sequence, y: Sequence, n: int) -> Vector:
    out = [_ZERO] * n
    for i, xi in enumerate(x):
        if xi:
            for j, yj in enumerate(y):
                if yj:
                    row = products[i][j]
                    c = xi * yj
                    for k in range(n):
                        if row[k]:
                            out[k] += c * row[k]
    return vec(out)


def verify_bidual_extension(a: Algebra, w: Weights) -> Report:
    """Check id 2.4: each weighted centralizer lifts through the double
    adjoint to a centralizer-like map of the bidual, which is then an
    ordinary two-sided centralizer for the staged product.

    Routed through the staged actions: the basis product table comes from
    the three-step pipeline, the weighted identity is expanded bilinearly
    from that table, and a few dense vectors rerun the full pipeline.
    """
    if not right_identity_samples(a):
        return precondition_unmet("2.4", _target(a), w.pair, "no right identity")

    n = a.dim
    p, q = w.pair
    products = arens_basis_products(a)

    bad = next(
        (
            (i, j)
            for i in range(n)
            for j in range(n)
            if products[i][j]
            != multiply(a, basis_vector(n, i), basis_vector(n, j))
        ),
        None,
    )
    assertions = [Assertion(
        "staged product extends the algebra product on embedded basis pairs",
        bad is None,
        None if bad is None else f"basis pair {bad}",
    )]

    spot_pairs = (
        (vec([1] * n), vec((-1) ** k for k in range(n))),
        (vec(range(1, n + 1)), vec([1] * n)),
    )

    cpq = pq_centralizers(a, w)
    for idx, t in enumerate(cpq.operators()):
        tdd = double_adjoint(t)
        assertions.append(Assertion(
            f"basis operator {idx}: double adjoint has the original matrix",
            tdd == t, None if tdd == t else "matrices differ",
        ))

        bad_pair = None
        for i in range(n):
            for j in range(n):
                lhs = tuple(
                    (p + q) * v for v in apply_operator(tdd, products[i][j])
                )
                rhs = [_ZERO] * n
                for k in range(n):
                    cki = tdd.entry(k, i)
                    if cki:
                        for m in range(n):
                            rhs[m] += p * cki * products[k][j][m]
                    ckj = tdd.entry(k, j)
                    if ckj:
                        for m in range(n):
                            rhs[m] += q * ckj * products[i][k][m]
                if lhs != tuple(rhs):
                    bad_pair = (i, j)
                    break
            if bad_pair:
                break
        assertions.append(Assertion(
            f"basis operator {idx}: weighted identity holds on all "
            f"double-dual basis pairs",
            bad_pair is None,
            None if bad_pair is None else f"basis pair {bad_pair}",
        ))

        for s, (big_f, big_h) in enumerate(spot_pairs):
            lhs = tuple(
                (p + q) * v
                for v in apply_operator(tdd, arens_product(a, big_f, big_h))
            )
            rhs = tuple(
                p * x + q * y
                for x, y in zip(
                    _expand_product(products, apply_operator(tdd, big_f), big_h, n),
                    _expand_product(products, big_f, apply_operator(tdd, big_h), n),
                )
            )
            assertions.append(Assertion(
                f"basis operator {idx}: weighted identity holds on dense "
                f"pipeline sample {s}",
                lhs == rhs,
                None if lhs == rhs
                else f"F = {fmt_vector(big_f)}, H = {fmt_vector(big_h)}",
            ))

        tstar = adjoint(t)
        bad_adj = None
        for r in range(n):
            f = basis_vector(n, r)
            tstar_f = apply_operator(tstar, f)
            for i in range(n):
                e = basis_vector(n, i)
                lhs = tuple(
                    (p + q) * v for v in functional_times_element(a, tstar_f, e)
                )
                rhs = tuple(
                    p * x + q * y
                    for x, y in zip(
                        functional_times_element(a, f, apply_operator(t, e)),
                        apply_operator(
                            tstar, functional_times_element(a, f, e)
                        ),
                    )
                )
                if lhs != rhs:
                    bad_adj = (r, i)
                    break
            if bad_adj:
                break
        assertions.append(Assertion(
            f"basis operator {idx}: adjoint satisfies the transposed "
            f"weighted identity on the dual",
            bad_adj is None,
            None if bad_adj is None else f"dual basis, basis pair {bad_adj}",
        ))

        res_l = left_residual(a, t)
        res_r = right_residual(a, t)
        assertions.append(Assertion(
            f"basis operator {idx}: extension restricts to a two-sided "
            f"centralizer of the algebra",
            res_l is None and res_r is None,
            None if res_l is None and res_r is None else "one-sided residual",
        ))

    return report_from_assertions(
        "2.4", _target(a), w.pair, assertions,
        f"space dim {cpq.dim}; staged basis table cached",
    )


def _target(a: Algebra) -> str:
    return a.name or f"algebra(dim={a.dim})"
