"""Exact max-plus (tropical) arithmetic: scalars, square matrices, permanents, minors.

The semiring carries addition ``x (+) y = max(x, y)`` and multiplication
``x (*) y = x + y`` over exact rationals extended with ``-inf``, the additive
identity.  Everything here is exact: finite scalars are ``fractions.Fraction``
values and no floating point is accepted anywhere.

Tropical permanents are evaluated exhaustively over permutations together with
their attainment multiplicity (how many permutations reach the maximum).  The
multiplicity, not the value, is what the geometric layer consumes: a point lies
on a tropical span when every relevant minor attains its maximum at least
twice, and sits at a vertex when the Laplace terms of every minor coincide.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union


class _NegInf:
    """Additive identity of the max-plus semiring; orders below every rational."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "-inf"

    def __lt__(self, other: object) -> bool:
        return other is not NEG_INF

    def __le__(self, other: object) -> bool:
        return True

    def __gt__(self, other: object) -> bool:
        return False

    def __ge__(self, other: object) -> bool:
        return other is NEG_INF

    def __neg__(self) -> "_NegInf":
        raise ArithmeticError("negation of -inf is undefined here")


NEG_INF = _NegInf()

TropScalar = Union[Fraction, _NegInf]

#: Hard cap on permanent evaluation; minors used downstream stay tiny.
PERMANENT_SIZE_LIMIT = 10


def as_scalar(value: object) -> TropScalar:
    """Coerce ``value`` to a tropical scalar (exact rational or ``NEG_INF``).

    Floats are rejected: tolerating them would silently destroy exactness.
    """
    if isinstance(value, _NegInf):
        return NEG_INF
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a tropical scalar")
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"tropical scalars are exact rationals or -inf, got {value!r}")


def trop_add(x: TropScalar, y: TropScalar) -> TropScalar:
    """Tropical addition: max, with ``NEG_INF`` neutral."""
    if x is NEG_INF:
        return y
    if y is NEG_INF:
        return x
    return x if x >= y else y


def trop_mul(x: TropScalar, y: TropScalar) -> TropScalar:
    """Tropical multiplication: classical addition, with ``NEG_INF`` absorbing."""
    if x is NEG_INF or y is NEG_INF:
        return NEG_INF
    return x + y


@dataclass(frozen=True)
class TropMatrix:
    """Square matrix over the max-plus semiring.

    Public indexing is 1-based throughout (``entry(1, 1)`` is the top-left
    corner); the internal tuple-of-tuples storage is an implementation detail.
    Instances are immutable and safe to share.
    """

    entries: tuple[tuple[TropScalar, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.entries)
        if n < 2:
            raise ValueError("matrix size must be at least 2")
        if any(len(row) != n for row in self.entries):
            raise ValueError("matrix must be square")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[object]]) -> "TropMatrix":
        return cls(tuple(tuple(as_scalar(v) for v in row) for row in rows))

    @property
    def n(self) -> int:
        return len(self.entries)

    def entry(self, i: int, j: int) -> TropScalar:
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise IndexError(f"index ({i}, {j}) out of range for size {self.n}")
        return self.entries[i - 1][j - 1]

    def row(self, i: int) -> tuple[TropScalar, ...]:
        if not 1 <= i <= self.n:
            raise IndexError(f"row {i} out of range for size {self.n}")
        return self.entries[i - 1]

    def column(self, j: int) -> tuple[TropScalar, ...]:
        if not 1 <= j <= self.n:
            raise IndexError(f"column {j} out of range for size {self.n}")
        return tuple(row[j - 1] for row in self.entries)

    def is_finite(self) -> bool:
        return all(not isinstance(v, _NegInf) for row in self.entries for v in row)

    def replace_column(self, j: int, values: Sequence[object]) -> "TropMatrix":
        """Return a copy with column ``j`` (1-based) replaced by ``values``."""
        if len(values) != self.n:
            raise ValueError("replacement column has wrong length")
        coerced = [as_scalar(v) for v in values]
        rows = [
            tuple(coerced[r] if c == j - 1 else row[c] for c in range(self.n))
            for r, row in enumerate(self.entries)
        ]
        return TropMatrix(tuple(rows))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(v) for v in row) for row in self.entries)
        return f"TropMatrix[{body}]"


def mat_mul(a: TropMatrix, b: TropMatrix) -> TropMatrix:
    """Tropical matrix product: ``(a*b)[i,k] = max_j (a[i,j] + b[j,k])``."""
    if a.n != b.n:
        raise ValueError(f"size mismatch: {a.n} vs {b.n}")
    n = a.n
    rows = []
    for i in range(n):
        arow = a.entries[i]
        out = []
        for k in range(n):
            best: TropScalar = NEG_INF
            for j in range(n):
                term = trop_mul(arow[j], b.entries[j][k])
                if term is not NEG_INF and (best is NEG_INF or term > best):
                    best = term
            out.append(best)
        rows.append(tuple(out))
    return TropMatrix(tuple(rows))


@dataclass(frozen=True)
class MinorEvaluation:
    """Value of a tropical permanent plus its exact attainment multiplicity."""

    value: TropScalar
    multiplicity: int


def _grid_permanent(grid: Sequence[Sequence[TropScalar]]) -> MinorEvaluation:
    """Exhaustive tropical permanent of a square grid with multiplicity."""
    k = len(grid)
    if k == 0:
        # Empty product: the multiplicative identity, attained once.
        return MinorEvaluation(Fraction(0), 1)
    best: Fraction | None = None
    count = 0
    for perm in itertools.permutations(range(k)):
        total = Fraction(0)
        dead = False
        for r in range(k):
            v = grid[r][perm[r]]
            if v is NEG_INF:
                dead = True
                break
            total += v
        if dead:
            continue
        if best is None or total > best:
            best = total
            count = 1
        elif total == best:
            count += 1
    if best is None:
        # Every permutation hits -inf, so all of them attain the maximum.
        return MinorEvaluation(NEG_INF, math.factorial(k))
    return MinorEvaluation(best, count)


def _check_selection(
    a: TropMatrix, rows: Iterable[int], cols: Iterable[int]
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    row_idx = tuple(sorted(set(rows)))
    col_idx = tuple(sorted(set(cols)))
    if len(row_idx) != len(col_idx):
        raise ValueError(f"ragged selection: {len(row_idx)} rows vs {len(col_idx)} columns")
    if not row_idx:
        raise ValueError("empty selection")
    for i in row_idx:
        if not 1 <= i <= a.n:
            raise ValueError(f"row index {i} out of range")
    for j in col_idx:
        if not 1 <= j <= a.n:
            raise ValueError(f"column index {j} out of range")
    return row_idx, col_idx


def trop_permanent(a: TropMatrix, *, size_limit: int = PERMANENT_SIZE_LIMIT) -> MinorEvaluation:
    """Tropical permanent of the whole matrix, exhaustive over permutations."""
    if a.n > size_limit:
        raise ValueError(f"matrix size {a.n} exceeds permanent limit {size_limit}")
    return _grid_permanent(a.entries)


def trop_minor(
    a: TropMatrix,
    rows: Iterable[int],
    cols: Iterable[int],
    *,
    size_limit: int = PERMANENT_SIZE_LIMIT,
) -> MinorEvaluation:
    """Tropical permanent of the square submatrix on ``rows`` x ``cols`` (1-based)."""
    row_idx, col_idx = _check_selection(a, rows, cols)
    if len(row_idx) > size_limit:
        raise ValueError(f"minor order {len(row_idx)} exceeds permanent limit {size_limit}")
    grid = [[a.entries[i - 1][j - 1] for j in col_idx] for i in row_idx]
    return _grid_permanent(grid)


def laplace_terms(
    a: TropMatrix,
    rows: Iterable[int],
    cols: Iterable[int],
    expansion_col: int,
    *,
    size_limit: int = PERMANENT_SIZE_LIMIT,
) -> list[TropScalar]:
    """Terms of the tropical Laplace expansion of a minor along one column.

    For the selection ``rows`` x ``cols`` and a column ``expansion_col`` of the
    selection, the k-th term is ``a[i_k, expansion_col] + M_k`` where ``M_k``
    is the complementary minor omitting row ``i_k`` and the expansion column.
    Terms are returned in ascending row order; their maximum equals the value
    of the full minor.
    """
    row_idx, col_idx = _check_selection(a, rows, cols)
    if expansion_col not in col_idx:
        raise ValueError(f"expansion column {expansion_col} not in selection")
    if len(row_idx) > size_limit:
        raise ValueError(f"minor order {len(row_idx)} exceeds permanent limit {size_limit}")
    other_cols = [j for j in col_idx if j != expansion_col]
    terms: list[TropScalar] = []
    for i in row_idx:
        sub = [
            [a.entries[r - 1][c - 1] for c in other_cols]
            for r in row_idx
            if r != i
        ]
        comp = _grid_permanent(sub)
        terms.append(trop_mul(a.entries[i - 1][expansion_col - 1], comp.value))
    return terms


def conjugate_diag(a: TropMatrix, diag: Sequence[object]) -> TropMatrix:
    """Conjugate by a diagonal matrix: entries become ``a[i,j] + d_i - d_j``.

    The last diagonal entry must be zero; geometrically this is translation of
    the associated polyhedron.
    """
    if len(diag) != a.n:
        raise ValueError(f"diagonal length {len(diag)} does not match size {a.n}")
    shifts = []
    for v in diag:
        s = as_scalar(v)
        if s is NEG_INF or isinstance(s, _NegInf):
            raise ValueError("diagonal entries must be finite")
        shifts.append(s)
    if shifts[-1] != 0:
        raise ValueError("last diagonal entry must be zero")
    rows = []
    for i in range(a.n):
        out = []
        for j in range(a.n):
            v = a.entries[i][j]
            out.append(NEG_INF if v is NEG_INF else v + shifts[i] - shifts[j])
        rows.append(tuple(out))
    return TropMatrix(tuple(rows))
