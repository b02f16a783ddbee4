"""Orthogonal-subspace view of duality and the executable bijection theorem.

One (m+1) x (m+n+2) matrix R encodes both problems: augmented-feasible
primal points embed into its kernel, dual points into its row space, and the
two subspaces are orthogonal complements. On top of that sits the theorem
this package exists to check: the dual dictionary with basic set N is
exactly the negative transpose of the primal dictionary with basis B, for
every valid basis. ``verify_bijection`` tests both the dictionary identity
and the underlying row-space equality, per basis, in exact arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from dictlp.exact import QMatrix, QVector, rank, rowspace_contains, rowspace_equal
from dictlp.dictionary import (
    Dictionary,
    basic_solution,
    canonical,
    dictionary_from_basis,
    negative_transpose,
)
from dictlp.model import StandardLP, augment, dual_lp


class BasisCountError(ValueError):
    """Exhaustive enumeration refused; carries the candidate-subset count."""

    def __init__(self, count: int, limit: int):
        super().__init__(f"C(m+n, m) = {count} candidate bases exceed the limit {limit}")
        self.count = count
        self.limit = limit


@dataclass(frozen=True)
class RMatrix:
    """The combined-system matrix: rows [0 | A0 | I | -b] over [1 | -c | 0 | 0].

    Columns are labeled 0, 1..m+n, m+n+1: the objective coordinate, the
    augmented variables, and the homogenizing coordinate.
    """

    mat: QMatrix
    m: int
    n: int


@dataclass(frozen=True)
class BijectionReport:
    basis: tuple[int, ...]
    negative_transpose_matches: bool
    rowspace_matches: bool
    details: str

    @property
    def passed(self) -> bool:
        return self.negative_transpose_matches and self.rowspace_matches


def build_R(lp: StandardLP) -> RMatrix:
    rows = []
    for i in range(lp.m):
        row = [Fraction(0)]
        row.extend(lp.A0.entry(i, j) for j in range(lp.n))
        row.extend(Fraction(1) if k == i else Fraction(0) for k in range(lp.m))
        row.append(-lp.b[i])
        rows.append(row)
    last = [Fraction(1)]
    last.extend(-x for x in lp.c)
    last.extend([Fraction(0)] * (lp.m + 1))
    rows.append(last)
    return RMatrix(mat=QMatrix(rows), m=lp.m, n=lp.n)


def in_kernel(r: RMatrix, xbar: QVector) -> bool:
    """True iff R . xbar = 0 exactly."""
    if len(xbar) != r.mat.cols:
        raise ValueError(f"dimension mismatch: {r.mat.cols} vs {len(xbar)}")
    return all(x == 0 for x in r.mat.mul_vec(xbar))


def in_rowspace(r: RMatrix, ybar: QVector) -> bool:
    """True iff ybar is a combination of the rows of R (exact rank test)."""
    return rowspace_contains(r.mat, ybar)


def kernel_embedding(d: Dictionary) -> QVector:
    """Basic solution lifted to the combined system: [z*, x, 1]."""
    return QVector([d.z_star]).concat(basic_solution(d)).concat(QVector([Fraction(1)]))


def rowspace_embedding(d: Dictionary) -> QVector:
    """Dual basic solution lifted to the combined system: [1, y, objective].

    The last coordinate is the dual dictionary's constant, i.e. the max-form
    dual objective value -w at its basic solution.
    """
    return QVector([Fraction(1)]).concat(basic_solution(d)).concat(QVector([d.z_star]))


def dictionary_matrix(d: Dictionary) -> QMatrix:
    """The dictionary as a combined-system matrix, columns ordered (0, N, B, last).

    Rows read [0 | Q | I | -p] and [1 | -q | 0 | -z*]; its row space equals
    the row space of R after the columns are permuted back to natural order.
    """
    rows = []
    for i in range(d.m):
        row = [Fraction(0)]
        row.extend(d.Q.entry(i, j) for j in range(d.n))
        row.extend(Fraction(1) if k == i else Fraction(0) for k in range(d.m))
        row.append(-d.p[i])
        rows.append(row)
    last = [Fraction(1)]
    last.extend(-x for x in d.q)
    last.extend([Fraction(0)] * d.m)
    last.append(-d.z_star)
    rows.append(last)
    return QMatrix(rows)


def dictionary_matrix_natural(d: Dictionary) -> QMatrix:
    """``dictionary_matrix`` with columns permuted to natural order 0, 1..m+n, last."""
    mat = dictionary_matrix(d)
    total = d.m + d.n
    labels = [0, *d.nonbasis, *d.basis, total + 1]
    position = {label: k for k, label in enumerate(labels)}
    order = [position[label] for label in range(total + 2)]
    return QMatrix([[mat.entry(i, k) for k in order] for i in range(mat.rows)])


def dual_dictionary_direct(lp: StandardLP, dual_basis: tuple[int, ...] | list[int]) -> Dictionary:
    """Dual-side dictionary built from the dual LP itself, no transpose involved.

    ``dual_basis`` lists dual variables by their y-indices (slacks y1..yn,
    decisions y(n+1)..y(n+m)). The dual LP is augmented and eliminated like
    any primal instance, then relabeled back to y-indices.
    """
    dual, index_map = dual_lp(lp)
    columns = tuple(index_map.column_of(j) for j in dual_basis)
    raw = dictionary_from_basis(augment(dual), columns)
    return Dictionary(
        side="dual",
        basis=tuple(index_map.variable_of(col) for col in raw.basis),
        nonbasis=tuple(index_map.variable_of(col) for col in raw.nonbasis),
        p=raw.p,
        Q=raw.Q,
        q=raw.q,
        z_star=raw.z_star,
    )


def verify_bijection(lp: StandardLP, basis: tuple[int, ...] | list[int]) -> BijectionReport:
    """Check the primal-dual dictionary bijection for one basis.

    Two independent checks: the negative transpose of the primal dictionary
    must equal (up to row/column order) the dual dictionary constructed
    directly from the dual LP with basic set N, and the primal dictionary's
    combined-system matrix must span the same row space as R.
    """
    prim = dictionary_from_basis(augment(lp), tuple(basis))
    flipped = canonical(negative_transpose(prim))
    direct = canonical(dual_dictionary_direct(lp, prim.nonbasis))
    nt_ok = flipped == direct
    rs_ok = rowspace_equal(dictionary_matrix_natural(prim), build_R(lp).mat)

    notes = []
    if not nt_ok:
        notes.append(f"negative transpose differs from direct dual dictionary on N={prim.nonbasis}")
    if not rs_ok:
        notes.append("dictionary row space differs from row space of R")
    return BijectionReport(
        basis=tuple(basis),
        negative_transpose_matches=nt_ok,
        rowspace_matches=rs_ok,
        details="; ".join(notes) if notes else "ok",
    )


def enumerate_bases(lp: StandardLP, limit: int = 100_000) -> list[tuple[int, ...]]:
    """All valid bases (ascending within and across), guarded by a subset budget."""
    m, total = lp.m, lp.m + lp.n
    count = comb(total, m)
    if count > limit:
        raise BasisCountError(count, limit)
    aug = augment(lp)
    bases = []
    for combo in combinations(range(1, total + 1), m):
        a_b = QMatrix.from_columns([aug.A.column(v - 1) for v in combo])
        if rank(a_b) == m:
            bases.append(combo)
    return bases
