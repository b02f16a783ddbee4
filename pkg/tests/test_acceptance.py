"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines as they
complete. Everything here is exact arithmetic; the only tolerances are the
wall-clock budgets stated alongside the criteria.
"""

import random
import time
from contextlib import contextmanager
from fractions import Fraction
from math import comb

import pytest

from dictlp.cli import main
from dictlp.dictionary import (
    basic_solution,
    dictionary_from_basis,
    initial_dictionary,
    negative_transpose,
)
from dictlp.duality import (
    build_R,
    dual_dictionary_direct,
    enumerate_bases,
    in_kernel,
    in_rowspace,
    kernel_embedding,
    rowspace_embedding,
    verify_bijection,
)
from dictlp.exact import QVector
from dictlp.model import augment, parse_lp
from dictlp.simplex import PivotRule, Unbounded, dual_simplex, primal_simplex, solve

from conftest import E1_TEXT, dual_feasible_instance, suite_instance
from oracle import check_outcome, oracle_solve, outcome_kind

BIJECTION_SEEDS = range(100)
SOLVER_SEEDS = range(50)
LOCKSTEP_SEEDS = range(25)

E1_BLOCKS = [
    "x4 = 18 - 4x1 - 2x2 + 2x3\nx5 = -3 + x1 + x2 + 2x3\nz = 8x1 + 11x2 - 10x3",
    "y1 = -8 + 4y4 - y5\ny2 = -11 + 2y4 - y5\ny3 = 10 - 2y4 - 2y5\n-w = -18y4 + 3y5",
    "x4 = 6 - 4x5 + 2x2 + 10x3\nx1 = 3 + x5 - x2 - 2x3\nz = 24 + 8x5 + 3x2 - 26x3",
    "y5 = -8 + 4y4 - y1\ny2 = -3 - 2y4 + y1\ny3 = 26 - 10y4 + 2y1\n-w = -24 - 6y4 - 3y1",
]


@contextmanager
def criterion(number: int, description: str):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE {number}: FAIL - {description}")
        raise
    elapsed = time.perf_counter() - start
    print(f"ACCEPTANCE {number}: PASS - {description} ({elapsed:.2f}s)")


@pytest.fixture(scope="module")
def e1():
    return parse_lp(E1_TEXT)


@pytest.fixture(scope="module")
def solver_runs():
    runs = []
    for seed in SOLVER_SEEDS:
        lp = suite_instance(seed)
        outcome, trace = solve(lp, PivotRule.BLAND)
        runs.append((lp, outcome, trace))
    return runs


@pytest.fixture(scope="module")
def lockstep_runs():
    runs = []
    for seed in LOCKSTEP_SEEDS:
        lp = dual_feasible_instance(seed)
        d = initial_dictionary(lp)
        dual_result = dual_simplex(d, PivotRule.BLAND)
        primal_result = primal_simplex(negative_transpose(d), PivotRule.BLAND)
        runs.append((lp, d, dual_result, primal_result))
    return runs


def test_criterion_1_worked_example_bit_exact(e1_path, capsys):
    with criterion(1, "E1 worked-example trace reproduced character-for-character"):
        start = time.perf_counter()
        code = main(["trace", e1_path, "--pivot", "1,5", "--dual-view"])
        elapsed = time.perf_counter() - start
        out = capsys.readouterr().out
        assert code == 0
        for block in E1_BLOCKS:
            assert block in out
        assert "x4 = 6 - 4x5 + 2x2 + 10x3" in out
        assert "-w = -24 - 6y4 - 3y1" in out
        assert elapsed < 1.0


def test_criterion_2_bijection_exhaustive_on_e1(e1_path, capsys):
    with criterion(2, "verify reports 10/10 bases passing both checks on E1"):
        start = time.perf_counter()
        code = main(["verify", e1_path])
        elapsed = time.perf_counter() - start
        out = capsys.readouterr().out
        assert code == 0
        assert "verified 10/10 bases" in out
        assert out.count(": pass") == 10
        assert elapsed < 1.0


def test_criterion_3_bijection_randomized():
    with criterion(3, "bijection holds for every basis of 100 random instances"):
        start = time.perf_counter()
        bases_checked = 0
        for seed in BIJECTION_SEEDS:
            lp = suite_instance(seed, bound=5)
            for basis in enumerate_bases(lp):
                report = verify_bijection(lp, basis)
                assert report.passed, (seed, basis, report.details)
                bases_checked += 1
        elapsed = time.perf_counter() - start
        assert bases_checked > 100
        assert elapsed < 60.0


def test_criterion_4_orthogonal_subspace_properties():
    with criterion(4, "row space orthogonal to kernel; basic solutions embed into both"):
        rng = random.Random(20240)
        for seed in BIJECTION_SEEDS:
            lp = suite_instance(seed, bound=5)
            r = build_R(lp)

            # random row-space vector dot random kernel vector is exactly zero
            coeffs = [Fraction(rng.randint(-9, 9), rng.randint(1, 3)) for _ in range(lp.m + 1)]
            ybar = QVector(
                [
                    sum(
                        (coeffs[i] * r.mat.entry(i, j) for i in range(lp.m + 1)),
                        Fraction(0),
                    )
                    for j in range(r.mat.cols)
                ]
            )
            xs = [Fraction(rng.randint(-9, 9), rng.randint(1, 3)) for _ in range(lp.n)]
            dec = QVector(xs) if xs else None
            slack = lp.b - lp.A0.mul_vec(dec)
            xbar = QVector([lp.c.dot(dec)] + xs + list(slack) + [Fraction(1)])
            assert in_kernel(r, xbar)
            assert in_rowspace(r, ybar)
            assert ybar.dot(xbar) == 0

            aug = augment(lp)
            for basis in enumerate_bases(lp):
                prim = dictionary_from_basis(aug, basis)
                assert in_kernel(r, kernel_embedding(prim))
                dual = dual_dictionary_direct(lp, prim.nonbasis)
                assert in_rowspace(r, rowspace_embedding(dual))


def test_criterion_5_solver_matches_brute_force(solver_runs):
    with criterion(5, "solve agrees with the vertex-enumeration oracle on 50 instances"):
        for lp, outcome, _trace in solver_runs:
            check_outcome(lp, outcome)
            kind, value = oracle_solve(lp)
            assert outcome_kind(outcome) == kind
            if kind == "optimal":
                assert outcome.value == value


def test_criterion_6_lockstep_duality(lockstep_runs):
    with criterion(6, "dual simplex mirrors primal simplex through the negative transpose"):
        for _lp, _d, dual_result, primal_result in lockstep_runs:
            dual_final, _dt, dual_steps = dual_result
            primal_final, _pt, primal_steps = primal_result
            assert [(s.enter, s.leave) for s in primal_steps] == [
                (s.leave, s.enter) for s in dual_steps
            ]
            assert negative_transpose(dual_final) == primal_final


def test_criterion_7_bland_termination(solver_runs, lockstep_runs):
    with criterion(7, "Bland's rule never revisits a basis; counts below C(m+n, m)"):
        def check_run(start_dict, steps, bound):
            seen = {frozenset(start_dict.basis)}
            for step in steps:
                key = frozenset(step.dictionary.basis)
                assert key not in seen
                seen.add(key)
            assert len(steps) <= bound

        for lp, _outcome, trace in solver_runs:
            bound = comb(lp.m + lp.n, lp.m)
            for phase in trace.phases:
                check_run(phase.start, phase.steps, bound)
        for lp, d, dual_result, primal_result in lockstep_runs:
            bound = comb(lp.m + lp.n, lp.m)
            check_run(d, dual_result[2], bound)
            check_run(negative_transpose(d), primal_result[2], bound)


def test_criterion_8_e1_unbounded_certificate(e1):
    with criterion(8, "E1 solves to Unbounded with a substitution-checked ray"):
        outcome, _trace = solve(e1, PivotRule.BLAND)
        assert isinstance(outcome, Unbounded)
        ray = outcome.ray
        assert len(ray) == e1.n
        assert all(v >= 0 for v in ray)
        a0_ray = e1.A0.mul_vec(ray)
        assert all(v <= 0 for v in a0_ray)
        assert e1.c.dot(ray) > 0
        point = outcome.point
        assert all(v >= 0 for v in point)
        assert all(lhs <= bi for lhs, bi in zip(e1.A0.mul_vec(point), e1.b))
