"""Pivot selection, primal and dual simplex, and the two-phase driver.

Both methods run on ``Dictionary`` values and return exact certificates:

* Optimal(point, value) -- point feasible, objective equals value exactly;
* Unbounded(point, ray) -- feasible point plus an improving recession ray;
* Infeasible(farkas)    -- u >= 0 with u.A0 >= 0 and u.b < 0.

The default rule is Bland's (termination guaranteed); Dantzig's largest-
coefficient rule is opt-in, with ties always broken toward the smallest
variable index so every run is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from dictlp.exact import QMatrix, QVector, solve_linear
from dictlp.dictionary import (
    Dictionary,
    dictionary_from_basis,
    initial_dictionary,
    is_dual_feasible,
    is_primal_feasible,
    pivot,
)
from dictlp.model import StandardLP, augment


class PivotRule(Enum):
    BLAND = "bland"
    DANTZIG = "dantzig"


class Terminal(Enum):
    OPTIMAL = "optimal"
    UNBOUNDED = "unbounded"
    INFEASIBLE = "infeasible"


@dataclass(frozen=True)
class PivotStep:
    enter: int
    leave: int
    dictionary: Dictionary


@dataclass(frozen=True)
class TracePhase:
    """One simplex run: a starting dictionary and the pivots applied to it."""

    name: str
    start: Dictionary
    steps: tuple[PivotStep, ...]


@dataclass(frozen=True)
class SolveTrace:
    phases: tuple[TracePhase, ...]

    @property
    def pivot_count(self) -> int:
        return sum(len(ph.steps) for ph in self.phases)


@dataclass(frozen=True)
class Optimal:
    point: QVector
    value: Fraction


@dataclass(frozen=True)
class Unbounded:
    point: QVector
    ray: QVector


@dataclass(frozen=True)
class Infeasible:
    farkas: QVector


SolveOutcome = Optimal | Unbounded | Infeasible


def choose_entering(d: Dictionary, rule: PivotRule) -> int | None:
    """Entering variable, or None when the dictionary is optimal (q <= 0).

    Bland: smallest variable index with a positive objective coefficient.
    Dantzig: largest coefficient, smallest index on ties.
    """
    candidates = [(v, d.q[j]) for j, v in enumerate(d.nonbasis) if d.q[j] > 0]
    if not candidates:
        return None
    if rule is PivotRule.BLAND:
        return min(v for v, _ in candidates)
    best = max(coef for _, coef in candidates)
    return min(v for v, coef in candidates if coef == best)


def choose_leaving(d: Dictionary, s: int, rule: PivotRule) -> int | None:
    """Ratio-test leaving variable for entering position ``s`` (0-based in N).

    Minimizes p_r / Q[r][s] over rows with Q[r][s] > 0, ties to the smallest
    variable index; None signals an unbounded direction. Both rules share
    this test.
    """
    del rule
    best: tuple[Fraction, int] | None = None
    for r, v in enumerate(d.basis):
        coef = d.Q.entry(r, s)
        if coef > 0:
            key = (d.p[r] / coef, v)
            if best is None or key < best:
                best = key
    return None if best is None else best[1]


def _dual_choose_leaving(d: Dictionary, rule: PivotRule) -> int | None:
    """Row choice for dual simplex: a basic variable with negative constant."""
    candidates = [(v, d.p[r]) for r, v in enumerate(d.basis) if d.p[r] < 0]
    if not candidates:
        return None
    if rule is PivotRule.BLAND:
        return min(v for v, _ in candidates)
    worst = min(const for _, const in candidates)
    return min(v for v, const in candidates if const == worst)


def _dual_choose_entering(d: Dictionary, r: int, rule: PivotRule) -> int | None:
    """Dual ratio test on row ``r``: minimize q_k / Q[r][k] over Q[r][k] < 0."""
    del rule
    best: tuple[Fraction, int] | None = None
    for k, v in enumerate(d.nonbasis):
        coef = d.Q.entry(r, k)
        if coef < 0:
            key = (d.q[k] / coef, v)
            if best is None or key < best:
                best = key
    return None if best is None else best[1]


def primal_simplex(
    d: Dictionary, rule: PivotRule = PivotRule.BLAND
) -> tuple[Dictionary, Terminal, list[PivotStep]]:
    """Run primal simplex from a primal-feasible dictionary.

    Terminates OPTIMAL when q <= 0, or UNBOUNDED when the entering column has
    no positive entry. Every intermediate dictionary stays primal feasible.
    """
    if not is_primal_feasible(d):
        raise ValueError("primal simplex requires a primal-feasible dictionary")
    steps: list[PivotStep] = []
    while True:
        enter = choose_entering(d, rule)
        if enter is None:
            return d, Terminal.OPTIMAL, steps
        leave = choose_leaving(d, d.nonbasis.index(enter), rule)
        if leave is None:
            return d, Terminal.UNBOUNDED, steps
        d = pivot(d, enter, leave)
        steps.append(PivotStep(enter=enter, leave=leave, dictionary=d))


def dual_simplex(
    d: Dictionary, rule: PivotRule = PivotRule.BLAND
) -> tuple[Dictionary, Terminal, list[PivotStep]]:
    """Run dual simplex from a dual-feasible dictionary.

    Terminates OPTIMAL when p >= 0, or INFEASIBLE when some row has a
    negative constant and no negative coefficient. Every intermediate
    dictionary stays dual feasible. Through the negative transpose this is
    step-for-step the primal method on the flipped dictionary: a pivot
    (enter j, leave i) here corresponds to (enter i, leave j) there.
    """
    if not is_dual_feasible(d):
        raise ValueError("dual simplex requires a dual-feasible dictionary")
    steps: list[PivotStep] = []
    while True:
        leave = _dual_choose_leaving(d, rule)
        if leave is None:
            return d, Terminal.OPTIMAL, steps
        enter = _dual_choose_entering(d, d.basis.index(leave), rule)
        if enter is None:
            return d, Terminal.INFEASIBLE, steps
        d = pivot(d, enter, leave)
        steps.append(PivotStep(enter=enter, leave=leave, dictionary=d))


def _decision_point(d: Dictionary, n: int) -> QVector:
    values = [Fraction(0)] * n
    for i, v in enumerate(d.basis):
        if v <= n:
            values[v - 1] = d.p[i]
    return QVector(values)


def _unbounded_ray(d: Dictionary, enter: int, n: int) -> QVector:
    """Improving recession ray read off the entering column, decision part only."""
    s = d.nonbasis.index(enter)
    values = [Fraction(0)] * n
    if enter <= n:
        values[enter - 1] = Fraction(1)
    for i, v in enumerate(d.basis):
        if v <= n:
            values[v - 1] = -d.Q.entry(i, s)
    return QVector(values)


def _farkas_vector(d: Dictionary, aug_A: QMatrix, leave: int) -> QVector:
    """Infeasibility certificate from the signal row: row r of A_B^{-1}.

    With p_r < 0 and Q[r][.] >= 0, that row u satisfies u >= 0, u.A0 >= 0 and
    u.b = p_r < 0 exactly.
    """
    r = d.basis.index(leave)
    m = d.m
    a_b = QMatrix.from_columns([aug_A.column(v - 1) for v in d.basis])
    unit = QVector([Fraction(1) if i == r else Fraction(0) for i in range(m)])
    u = solve_linear(a_b.transpose(), unit)
    assert u is not None, "basis matrix became singular"
    return u


def solve(
    lp: StandardLP, rule: PivotRule = PivotRule.BLAND
) -> tuple[SolveOutcome, SolveTrace]:
    """Two-phase driver producing an exact outcome certificate.

    Starts primal simplex when the initial dictionary is primal feasible and
    dual simplex when it is dual feasible. Otherwise phase 1 swaps in the
    all-(-1) objective (dual feasible by construction), drives to primal
    feasibility with dual simplex, rebuilds the true objective on the final
    basis, and finishes with primal simplex.
    """
    aug = augment(lp)
    d0 = initial_dictionary(lp)
    n = lp.n

    if is_primal_feasible(d0):
        final, terminal, steps = primal_simplex(d0, rule)
        trace = SolveTrace(phases=(TracePhase("primal simplex", d0, tuple(steps)),))
        return _primal_outcome(final, terminal, rule, n), trace

    if is_dual_feasible(d0):
        final, terminal, steps = dual_simplex(d0, rule)
        trace = SolveTrace(phases=(TracePhase("dual simplex", d0, tuple(steps)),))
        if terminal is Terminal.OPTIMAL:
            return Optimal(point=_decision_point(final, n), value=final.z_star), trace
        leave = _dual_choose_leaving(final, rule)
        assert leave is not None
        return Infeasible(farkas=_farkas_vector(final, aug.A, leave)), trace

    phase1_start = Dictionary(
        side="primal",
        basis=d0.basis,
        nonbasis=d0.nonbasis,
        p=d0.p,
        Q=d0.Q,
        q=QVector([Fraction(-1)] * n),
        z_star=Fraction(0),
    )
    final1, terminal1, steps1 = dual_simplex(phase1_start, rule)
    phase1 = TracePhase("phase 1: dual simplex, auxiliary objective", phase1_start, tuple(steps1))
    if terminal1 is Terminal.INFEASIBLE:
        leave = _dual_choose_leaving(final1, rule)
        assert leave is not None
        trace = SolveTrace(phases=(phase1,))
        return Infeasible(farkas=_farkas_vector(final1, aug.A, leave)), trace

    phase2_start = dictionary_from_basis(aug, final1.basis)
    final2, terminal2, steps2 = primal_simplex(phase2_start, rule)
    trace = SolveTrace(
        phases=(phase1, TracePhase("phase 2: primal simplex", phase2_start, tuple(steps2)))
    )
    return _primal_outcome(final2, terminal2, rule, n), trace


def _primal_outcome(
    final: Dictionary, terminal: Terminal, rule: PivotRule, n: int
) -> SolveOutcome:
    if terminal is Terminal.OPTIMAL:
        return Optimal(point=_decision_point(final, n), value=final.z_star)
    enter = choose_entering(final, rule)
    assert enter is not None
    return Unbounded(point=_decision_point(final, n), ray=_unbounded_ray(final, enter, n))
