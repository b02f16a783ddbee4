"""Exact rational scalars and dense linear algebra over them.

The scalar type throughout the package is ``fractions.Fraction``: arbitrary
precision and always canonical (reduced, positive denominator, zero is 0/1),
so equality is structural and no comparison ever needs a tolerance.
``QVector`` and ``QMatrix`` are immutable; elimination-heavy routines
dispatch to ``dictlp._kernels``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Union

from dictlp import _kernels

Rational = Fraction
RationalLike = Union[Fraction, int, str]

_RATIONAL_RE = re.compile(r"-?\d+(?:/\d+)?\Z")


def rational(num: RationalLike, den: int | None = None) -> Fraction:
    """Canonical rational from an int, text token, Fraction, or num/den pair.

    The sign is carried by the numerator and the result is fully reduced;
    a zero denominator is an error.
    """
    if den is not None:
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        return Fraction(num, den)
    if isinstance(num, Fraction):
        return num
    if isinstance(num, int):
        return Fraction(num)
    return parse_rational(num)


def parse_rational(token: str) -> Fraction:
    """Parse the canonical text syntax: optional '-', digits, optional '/digits'."""
    if not _RATIONAL_RE.fullmatch(token):
        raise ValueError(f"malformed rational {token!r}")
    num, slash, den = token.partition("/")
    if slash:
        d = int(den)
        if d == 0:
            raise ZeroDivisionError(f"zero denominator in {token!r}")
        return Fraction(int(num), d)
    return Fraction(int(num))


def format_rational(value: Fraction) -> str:
    """Canonical text form: ``-11/2``, ``3``, ``0``."""
    return str(value)


class QVector:
    """Immutable vector of rationals; length fixed at construction."""

    __slots__ = ("_entries",)

    def __init__(self, entries: Iterable[RationalLike]):
        self._entries = tuple(rational(e) for e in entries)
        if not self._entries:
            raise ValueError("empty vector")

    @property
    def entries(self) -> tuple[Fraction, ...]:
        return self._entries

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self):
        return iter(self._entries)

    def __getitem__(self, i: int) -> Fraction:
        return self._entries[i]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, QVector) and self._entries == other._entries

    def __hash__(self) -> int:
        return hash(self._entries)

    def __repr__(self) -> str:
        return f"QVector({', '.join(map(str, self._entries))})"

    def __add__(self, other: "QVector") -> "QVector":
        self._check_len(other)
        return QVector(a + b for a, b in zip(self, other))

    def __sub__(self, other: "QVector") -> "QVector":
        self._check_len(other)
        return QVector(a - b for a, b in zip(self, other))

    def __neg__(self) -> "QVector":
        return QVector(-a for a in self)

    def scale(self, k: RationalLike) -> "QVector":
        f = rational(k)
        return QVector(f * a for a in self)

    def dot(self, other: "QVector") -> Fraction:
        self._check_len(other)
        return sum((a * b for a, b in zip(self, other)), Fraction(0))

    def concat(self, other: "QVector") -> "QVector":
        return QVector(self._entries + other._entries)

    def _check_len(self, other: "QVector") -> None:
        if len(self) != len(other):
            raise ValueError(f"dimension mismatch: {len(self)} vs {len(other)}")


class QMatrix:
    """Immutable dense matrix of rationals (row-major)."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Iterable[RationalLike]]):
        self._rows = tuple(tuple(rational(e) for e in row) for row in rows)
        if not self._rows or not self._rows[0]:
            raise ValueError("empty matrix")
        width = len(self._rows[0])
        if any(len(row) != width for row in self._rows):
            raise ValueError("ragged rows")

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, cols: Iterable[Iterable[RationalLike]]) -> "QMatrix":
        grid = [tuple(col) for col in cols]
        return cls(zip(*grid))

    @property
    def rows(self) -> int:
        return len(self._rows)

    @property
    def cols(self) -> int:
        return len(self._rows[0])

    def entry(self, i: int, j: int) -> Fraction:
        return self._rows[i][j]

    def row(self, i: int) -> QVector:
        return QVector(self._rows[i])

    def column(self, j: int) -> QVector:
        return QVector(row[j] for row in self._rows)

    def row_lists(self) -> list[list[Fraction]]:
        """Rows as fresh mutable lists (the kernel exchange format)."""
        return [list(row) for row in self._rows]

    def transpose(self) -> "QMatrix":
        return QMatrix(zip(*self._rows))

    def __neg__(self) -> "QMatrix":
        return QMatrix((-e for e in row) for row in self._rows)

    def mul(self, other: "QMatrix") -> "QMatrix":
        if self.cols != other.rows:
            raise ValueError(f"dimension mismatch: {self.cols} vs {other.rows}")
        tcols = list(zip(*other._rows))
        return QMatrix(
            [sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in tcols]
            for row in self._rows
        )

    def mul_vec(self, v: QVector) -> QVector:
        if self.cols != len(v):
            raise ValueError(f"dimension mismatch: {self.cols} vs {len(v)}")
        return QVector(
            sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in self._rows
        )

    def vstack(self, other: "QMatrix") -> "QMatrix":
        if self.cols != other.cols:
            raise ValueError(f"column-count mismatch: {self.cols} vs {other.cols}")
        return QMatrix(self._rows + other._rows)

    def with_row(self, v: QVector) -> "QMatrix":
        if self.cols != len(v):
            raise ValueError(f"dimension mismatch: {self.cols} vs {len(v)}")
        return QMatrix(self._rows + (tuple(v),))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, QMatrix) and self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(map(str, row)) for row in self._rows)
        return f"QMatrix[{body}]"


def rref(m: QMatrix) -> tuple[QMatrix, int, tuple[int, ...]]:
    """Reduced row echelon form, rank, and 0-based pivot columns."""
    reduced, rank, pivot_cols = _kernels.rref(m.row_lists())
    return QMatrix(reduced), rank, tuple(pivot_cols)


def rank(m: QMatrix) -> int:
    return _kernels.rref(m.row_lists())[1]


def solve_linear(m: QMatrix, rhs: QVector) -> QVector | None:
    """Unique solution of a square system, or None when the matrix is singular."""
    if m.rows != m.cols:
        raise ValueError(f"matrix not square: {m.rows}x{m.cols}")
    if len(rhs) != m.rows:
        raise ValueError(f"dimension mismatch: {m.rows} vs {len(rhs)}")
    n = m.rows
    aug = [list(row) + [b] for row, b in zip(m.row_lists(), rhs)]
    reduced, rnk, pivot_cols = _kernels.rref(aug)
    if rnk != n or tuple(pivot_cols) != tuple(range(n)):
        return None
    return QVector(row[n] for row in reduced)


def rowspace_contains(m: QMatrix, v: QVector) -> bool:
    """True iff v is a linear combination of the rows of m (exact rank test)."""
    if len(v) != m.cols:
        raise ValueError(f"dimension mismatch: {m.cols} vs {len(v)}")
    return rank(m) == rank(m.with_row(v))


def rowspace_equal(m1: QMatrix, m2: QMatrix) -> bool:
    """True iff the two matrices span the same row space."""
    if m1.cols != m2.cols:
        raise ValueError(f"column-count mismatch: {m1.cols} vs {m2.cols}")
    r1 = rank(m1)
    r2 = rank(m2)
    return r1 == r2 == rank(m1.vstack(m2))
