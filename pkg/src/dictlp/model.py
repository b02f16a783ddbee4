"""LP problem representation, slack augmentation, duals, and the file format.

Instances are max-form: maximize ``c . x`` subject to ``A0 x <= b`` and
``x >= 0``. Variable indices are 1-based everywhere in the public API:
``x1..xn`` are decision variables and ``x(n+1)..x(n+m)`` the slacks that
appear after augmentation. The dual is materialized as another max-form
instance so every dictionary operation applies uniformly to both sides.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from dictlp.exact import QMatrix, QVector, format_rational, parse_rational


class ParseError(ValueError):
    """LP file rejected; carries the 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class StandardLP:
    """Max-form instance: maximize c.x subject to A0 x <= b, x >= 0."""

    A0: QMatrix
    b: QVector
    c: QVector

    def __post_init__(self):
        if len(self.b) != self.A0.rows:
            raise ValueError("b length must match constraint count")
        if len(self.c) != self.A0.cols:
            raise ValueError("c length must match decision-variable count")

    @property
    def m(self) -> int:
        return self.A0.rows

    @property
    def n(self) -> int:
        return self.A0.cols


@dataclass(frozen=True)
class AugmentedLP:
    """The instance with slack columns appended: A = [A0 I], c extended by zeros."""

    base: StandardLP
    A: QMatrix
    c_ext: QVector

    @property
    def m(self) -> int:
        return self.base.m

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def var_count(self) -> int:
        return self.base.m + self.base.n


@dataclass(frozen=True)
class DualIndexMap:
    """Translates between dual variable names and dual matrix columns.

    The dual of an m x n instance has m decision variables and n slacks, but
    they are named so the primal/dual correspondence is index-preserving:
    y(n+1)..y(n+m) are the dual decisions and y1..yn its slacks.
    """

    m: int
    n: int

    def column_of(self, j: int) -> int:
        """Column (1-based) of dual variable y_j in the dual augmentation."""
        if 1 <= j <= self.n:
            return self.m + j
        if self.n < j <= self.n + self.m:
            return j - self.n
        raise ValueError(f"dual variable index out of range: {j}")

    def variable_of(self, col: int) -> int:
        """Dual variable y-index for a 1-based dual augmentation column."""
        if 1 <= col <= self.m:
            return self.n + col
        if self.m < col <= self.m + self.n:
            return col - self.m
        raise ValueError(f"dual column out of range: {col}")


def parse_lp(text: str) -> StandardLP:
    """Parse the LP file format (see ``serialize_lp`` for the grammar)."""
    lines: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            lines.append((lineno, stripped.split()))

    if not lines:
        raise ParseError(1, "empty input")
    if lines[0][1] != ["lp", "v1"]:
        raise ParseError(lines[0][0], "expected header 'lp v1'")
    if len(lines) < 2:
        raise ParseError(lines[0][0] + 1, "missing dimension line")

    dim_line, dim_tokens = lines[1]
    if len(dim_tokens) != 2:
        raise ParseError(dim_line, "dimension line must be '<m> <n>'")
    try:
        m, n = int(dim_tokens[0]), int(dim_tokens[1])
    except ValueError:
        raise ParseError(dim_line, "dimensions must be decimal integers") from None
    if m < 1 or n < 1:
        raise ParseError(dim_line, f"dimensions must be at least 1, got m={m} n={n}")

    if len(lines) != 3 + m:
        last = lines[-1][0]
        raise ParseError(last, f"expected {3 + m} content lines, found {len(lines)}")

    def parse_row(lineno: int, tokens: list[str], expected: int, what: str) -> list[Fraction]:
        if len(tokens) != expected:
            raise ParseError(lineno, f"{what}: expected {expected} values, found {len(tokens)}")
        out = []
        for tok in tokens:
            try:
                out.append(parse_rational(tok))
            except (ValueError, ZeroDivisionError) as exc:
                raise ParseError(lineno, str(exc)) from None
        return out

    c = parse_row(lines[2][0], lines[2][1], n, "objective row")
    a_rows = []
    b = []
    for i in range(m):
        lineno, tokens = lines[3 + i]
        row = parse_row(lineno, tokens, n + 1, f"constraint row {i + 1}")
        a_rows.append(row[:n])
        b.append(row[n])
    return StandardLP(A0=QMatrix(a_rows), b=QVector(b), c=QVector(c))


def serialize_lp(lp: StandardLP) -> str:
    """Canonical text form: single spaces, newline-terminated lines.

    Grammar ('#' starts a comment):
      line 1        : ``lp v1``
      line 2        : ``<m> <n>``
      line 3        : n rationals -- the objective c
      lines 4..3+m  : n+1 rationals -- row i of A0, then b_i
    """
    out = ["lp v1", f"{lp.m} {lp.n}", " ".join(format_rational(x) for x in lp.c)]
    for i in range(lp.m):
        row = [format_rational(lp.A0.entry(i, j)) for j in range(lp.n)]
        row.append(format_rational(lp.b[i]))
        out.append(" ".join(row))
    return "\n".join(out) + "\n"


def augment(lp: StandardLP) -> AugmentedLP:
    """Append slack columns: A = [A0 I], c extended by m zeros."""
    rows = []
    for i in range(lp.m):
        row = [lp.A0.entry(i, j) for j in range(lp.n)]
        row.extend(Fraction(1) if k == i else Fraction(0) for k in range(lp.m))
        rows.append(row)
    c_ext = QVector(list(lp.c) + [Fraction(0)] * lp.m)
    return AugmentedLP(base=lp, A=QMatrix(rows), c_ext=c_ext)


def dual_lp(lp: StandardLP) -> tuple[StandardLP, DualIndexMap]:
    """The dual, itself in max form: maximize -b.y s.t. -A0^T y <= -c, y >= 0."""
    dual = StandardLP(A0=-lp.A0.transpose(), b=-lp.c, c=-lp.b)
    return dual, DualIndexMap(m=lp.m, n=lp.n)
