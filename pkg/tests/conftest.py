from __future__ import annotations

from fractions import Fraction
from pathlib import Path

import pytest

from dictlp.cli import random_lp
from dictlp.exact import QMatrix, QVector
from dictlp.model import StandardLP

DATA = Path(__file__).parent / "data"

E1_TEXT = (DATA / "e1.lp").read_text(encoding="utf-8")


def qm(rows) -> QMatrix:
    return QMatrix(rows)


def qv(entries) -> QVector:
    return QVector(entries)


def fr(num, den=1) -> Fraction:
    return Fraction(num, den)


@pytest.fixture
def e1() -> StandardLP:
    return StandardLP(
        A0=qm([[4, 2, -2], [-1, -1, -2]]),
        b=qv([18, -3]),
        c=qv([8, 11, -10]),
    )


@pytest.fixture
def e1_path() -> str:
    return str(DATA / "e1.lp")


def suite_instance(seed: int, bound: int = 5) -> StandardLP:
    """Deterministic small instance: m, n cycle over {1, 2, 3} with the seed."""
    m = seed % 3 + 1
    n = (seed // 3) % 3 + 1
    return random_lp(m, n, seed, bound)


def dual_feasible_instance(seed: int, bound: int = 5) -> StandardLP:
    """Like suite_instance but with c forced nonpositive (initial dict dual feasible)."""
    lp = suite_instance(seed, bound)
    return StandardLP(A0=lp.A0, b=lp.b, c=QVector(-abs(x) for x in lp.c))


def check_point(d, full_values) -> bool:
    """Whether a full assignment (1-based variables) satisfies every dictionary row."""
    for r, v in enumerate(d.basis):
        rhs = d.p[r] - sum(
            (d.Q.entry(r, j) * full_values[w - 1] for j, w in enumerate(d.nonbasis)),
            Fraction(0),
        )
        if full_values[v - 1] != rhs:
            return False
    return True


def objective_at(d, full_values) -> Fraction:
    return d.z_star + sum(
        (d.q[j] * full_values[w - 1] for j, w in enumerate(d.nonbasis)), Fraction(0)
    )
