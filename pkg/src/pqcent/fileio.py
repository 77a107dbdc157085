"""Line-oriented on-disk formats for algebras and Cayley tables.

Algebra format (sparse, diff-friendly):

    # optional comments anywhere
    dim 3
    mul 0 0 = 1 @0
    mul 0 1 = 1/2 @1 + -3 @2

`mul i j = ...` gives the structure constants of b_i * b_j; omitted pairs
multiply to zero. Coefficients are rationals written `a` or `a/b`.

Cayley format: a line `order n` followed by n rows of n 0-based indices.
Parsing checks syntax and index ranges only; the group axioms are the job
of `groups.validate_group`.
"""

from __future__ import annotations

import os
from fractions import Fraction

from .algebras import Algebra, make_algebra
from .groups import CayleyTable, cayley_table

_ZERO = Fraction(0)


class AlgebraFormatError(ValueError):
    """Syntax or range error in the algebra file format, with line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class CayleyFormatError(ValueError):
    """Syntax or range error in the Cayley table format, with line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _significant_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _parse_rational(token: str, lineno: int) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise AlgebraFormatError(lineno, f"invalid rational '{token}'") from None


def parse_algebra_text(text: str, name: str = "") -> Algebra:
    """Parse the algebra format; associativity is validated on construction."""
    dim = None
    table = None
    seen: set[tuple[int, int]] = set()
    for lineno, line in _significant_lines(text):
        tokens = line.split()
        if dim is None:
            if len(tokens) != 2 or tokens[0] != "dim":
                raise AlgebraFormatError(lineno, "expected 'dim <n>' first")
            try:
                dim = int(tokens[1])
            except ValueError:
                raise AlgebraFormatError(
                    lineno, f"invalid dimension '{tokens[1]}'") from None
            if dim < 1:
                raise AlgebraFormatError(lineno, "dimension must be positive")
            table = [[[_ZERO] * dim for _ in range(dim)] for _ in range(dim)]
            continue
        if tokens[0] != "mul":
            raise AlgebraFormatError(lineno, f"expected 'mul', got '{tokens[0]}'")
        if len(tokens) < 6 or tokens[3] != "=":
            raise AlgebraFormatError(lineno, "expected 'mul i j = c @k [+ ...]'")
        i = _parse_index(tokens[1], dim, lineno)
        j = _parse_index(tokens[2], dim, lineno)
        if (i, j) in seen:
            raise AlgebraFormatError(lineno, f"duplicate product {i} {j}")
        seen.add((i, j))
        rest = tokens[4:]
        pos = 0
        while True:
            if pos + 1 >= len(rest):
                raise AlgebraFormatError(lineno, "expected '<coeff> @<index>'")
            coeff = _parse_rational(rest[pos], lineno)
            target = rest[pos + 1]
            if not target.startswith("@"):
                raise AlgebraFormatError(
                    lineno, f"expected '@<index>', got '{target}'")
            k = _parse_index(target[1:], dim, lineno)
            table[i][j][k] += coeff
            pos += 2
            if pos == len(rest):
                break
            if rest[pos] != "+":
                raise AlgebraFormatError(
                    lineno, f"expected '+' between terms, got '{rest[pos]}'")
            pos += 1
    if dim is None:
        raise AlgebraFormatError(1, "missing 'dim' line")
    return make_algebra(dim, table, name=name)


def _parse_index(token: str, dim: int, lineno: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise AlgebraFormatError(lineno, f"invalid index '{token}'") from None
    if not 0 <= value < dim:
        raise AlgebraFormatError(
            lineno, f"index {value} out of range for dimension {dim}")
    return value


def parse_algebra_file(path: str) -> Algebra:
    with open(path, encoding="utf-8") as handle:
        text = handle.read()
    name = os.path.splitext(os.path.basename(path))[0]
    return parse_algebra_text(text, name=name)


def serialize_algebra(a: Algebra) -> str:
    """Emit the sparse format; reparsing restores the structure constants."""
    lines = []
    if a.name:
        lines.append(f"# {a.name}")
    lines.append(f"dim {a.dim}")
    for i in range(a.dim):
        for j in range(a.dim):
            terms = a.products[i][j]
            if terms:
                body = " + ".join(f"{c} @{k}" for k, c in terms)
                lines.append(f"mul {i} {j} = {body}")
    return "\n".join(lines) + "\n"


def parse_cayley_text(text: str, name: str = "") -> CayleyTable:
    order = None
    rows: list[list[int]] = []
    for lineno, line in _significant_lines(text):
        tokens = line.split()
        if order is None:
            if len(tokens) != 2 or tokens[0] != "order":
                raise CayleyFormatError(lineno, "expected 'order <n>' first")
            try:
                order = int(tokens[1])
            except ValueError:
                raise CayleyFormatError(
                    lineno, f"invalid order '{tokens[1]}'") from None
            if order < 1:
                raise CayleyFormatError(lineno, "order must be positive")
            continue
        if len(rows) == order:
            raise CayleyFormatError(lineno, f"more than {order} rows")
        if len(tokens) != order:
            raise CayleyFormatError(
                lineno, f"expected {order} entries, got {len(tokens)}")
        row = []
        for token in tokens:
            try:
                value = int(token)
            except ValueError:
                raise CayleyFormatError(
                    lineno, f"invalid entry '{token}'") from None
            if not 0 <= value < order:
                raise CayleyFormatError(
                    lineno, f"entry {value} out of range for order {order}")
            row.append(value)
        rows.append(row)
    if order is None:
        raise CayleyFormatError(1, "missing 'order' line")
    if len(rows) != order:
        raise CayleyFormatError(1, f"expected {order} rows, got {len(rows)}")
    return cayley_table(rows, name=name)


def parse_cayley_file(path: str) -> CayleyTable:
    with open(path, encoding="utf-8") as handle:
        text = handle.read()
    name = os.path.splitext(os.path.basename(path))[0]
    return parse_cayley_text(text, name=name)


def serialize_cayley(t: CayleyTable) -> str:
    lines = []
    if t.name:
        lines.append(f"# {t.name}")
    lines.append(f"order {t.order}")
    lines.extend(" ".join(str(v) for v in row) for row in t.table)
    return "\n".join(lines) + "\n"


def sniff_is_cayley(text: str) -> bool:
    """True when the first significant line is an 'order' header."""
    for _, line in _significant_lines(text):
        return line.split()[0] == "order"
    return False
