from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dictlp.dictionary import (
    Dictionary,
    NotABasisError,
    PivotError,
    basic_solution,
    canonical,
    dictionary_from_basis,
    initial_dictionary,
    is_dual_feasible,
    is_primal_feasible,
    negative_transpose,
    pivot,
)
from dictlp.model import StandardLP, augment

from conftest import check_point, objective_at, qm, qv, suite_instance


@pytest.fixture
def e1_initial(e1):
    return initial_dictionary(e1)


@pytest.fixture
def e1_second(e1):
    # the worked pivot: x1 enters, x5 leaves
    return pivot(initial_dictionary(e1), 1, 5)


def random_pivots(d, rng_choices):
    """Apply a sequence of legal pivots driven by a list of (i, j) index picks."""
    out = [d]
    for a, b in rng_choices:
        enter = d.nonbasis[a % len(d.nonbasis)]
        leave_candidates = [
            v for r, v in enumerate(d.basis) if d.Q.entry(r, d.nonbasis.index(enter)) != 0
        ]
        if not leave_candidates:
            continue
        leave = leave_candidates[b % len(leave_candidates)]
        d = pivot(d, enter, leave)
        out.append(d)
    return out


class TestFromBasis:
    def test_slack_basis_is_initial(self, e1, e1_initial):
        assert dictionary_from_basis(augment(e1), (4, 5)) == e1_initial

    def test_second_basis(self, e1):
        d = dictionary_from_basis(augment(e1), (4, 1))
        assert d.basis == (4, 1)
        assert d.nonbasis == (2, 3, 5)
        assert d.p == qv([6, 3])
        assert d.Q == qm([[-2, -10, 4], [1, 2, -1]])
        assert d.q == qv([3, -26, 8])
        assert d.z_star == 24

    def test_decision_basis_nonsingular(self, e1):
        # A_B = [[4, 2], [-1, -1]] has determinant -2
        d = dictionary_from_basis(augment(e1), (1, 2))
        assert d.basis == (1, 2)

    def test_singular_basis_rejected(self):
        lp = StandardLP(A0=qm([[0]]), b=qv([1]), c=qv([1]))
        with pytest.raises(NotABasisError):
            dictionary_from_basis(augment(lp), (1,))

    def test_wrong_size_rejected(self, e1):
        with pytest.raises(NotABasisError):
            dictionary_from_basis(augment(e1), (4,))
        with pytest.raises(NotABasisError):
            dictionary_from_basis(augment(e1), (4, 4))
        with pytest.raises(NotABasisError):
            dictionary_from_basis(augment(e1), (4, 6))


class TestPivot:
    def test_worked_pivot(self, e1_second):
        assert e1_second.basis == (4, 1)
        assert e1_second.nonbasis == (5, 2, 3)
        assert e1_second.p == qv([6, 3])
        assert e1_second.Q == qm([[4, -2, -10], [-1, 1, 2]])
        assert e1_second.q == qv([8, 3, -26])
        assert e1_second.z_star == 24

    def test_involution(self, e1_initial):
        assert pivot(pivot(e1_initial, 1, 5), 5, 1) == e1_initial

    def test_matches_from_basis_after_reordering(self, e1, e1_second):
        rebuilt = dictionary_from_basis(augment(e1), e1_second.basis)
        assert canonical(rebuilt) == canonical(e1_second)

    def test_enter_not_nonbasic(self, e1_initial):
        with pytest.raises(PivotError):
            pivot(e1_initial, 4, 5)

    def test_leave_not_basic(self, e1_initial):
        with pytest.raises(PivotError):
            pivot(e1_initial, 1, 2)

    def test_zero_pivot_element(self):
        lp = StandardLP(A0=qm([[0, 1]]), b=qv([1]), c=qv([1, 1]))
        with pytest.raises(PivotError, match="degenerate"):
            pivot(initial_dictionary(lp), 1, 3)

    @given(
        seed=st.integers(0, 500),
        picks=st.lists(st.tuples(st.integers(0, 10), st.integers(0, 10)), max_size=4),
    )
    @settings(max_examples=60, deadline=None)
    def test_pivot_chain_properties(self, seed, picks):
        lp = suite_instance(seed)
        total = lp.m + lp.n
        chain = random_pivots(initial_dictionary(lp), picks)
        for d in chain:
            assert sorted(d.basis + d.nonbasis) == list(range(1, total + 1))
        # from-basis coherence on the final dictionary
        final = chain[-1]
        rebuilt = dictionary_from_basis(augment(lp), final.basis)
        assert canonical(rebuilt) == canonical(final)

    @given(
        seed=st.integers(0, 500),
        picks=st.lists(st.tuples(st.integers(0, 10), st.integers(0, 10)), min_size=1, max_size=3),
        data=st.data(),
    )
    @settings(max_examples=60, deadline=None)
    def test_pivot_preserves_solution_set(self, seed, picks, data):
        lp = suite_instance(seed)
        chain = random_pivots(initial_dictionary(lp), picks)
        before, after = chain[0], chain[-1]
        xs = data.draw(
            st.lists(
                st.fractions(min_value=-6, max_value=6, max_denominator=3),
                min_size=before.n,
                max_size=before.n,
            )
        )
        # build a full assignment from the first dictionary's equations
        full = [Fraction(0)] * (before.m + before.n)
        for value, v in zip(xs, before.nonbasis):
            full[v - 1] = value
        for r, v in enumerate(before.basis):
            full[v - 1] = before.p[r] - sum(
                (before.Q.entry(r, j) * full[w - 1] for j, w in enumerate(before.nonbasis)),
                Fraction(0),
            )
        assert check_point(after, full)
        assert objective_at(before, full) == objective_at(after, full)


class TestFeasibility:
    def test_initial_e1_not_primal_feasible(self, e1_initial):
        assert not is_primal_feasible(e1_initial)

    def test_second_e1_primal_feasible(self, e1_second):
        assert is_primal_feasible(e1_second)

    def test_zero_p_is_feasible(self, e1_initial):
        d = Dictionary(
            side="primal",
            basis=e1_initial.basis,
            nonbasis=e1_initial.nonbasis,
            p=qv([0, 0]),
            Q=e1_initial.Q,
            q=e1_initial.q,
            z_star=Fraction(0),
        )
        assert is_primal_feasible(d)

    def test_initial_e1_not_dual_feasible(self, e1_initial):
        assert not is_dual_feasible(e1_initial)

    def test_zero_q_is_dual_feasible(self, e1_initial):
        d = Dictionary(
            side="primal",
            basis=e1_initial.basis,
            nonbasis=e1_initial.nonbasis,
            p=e1_initial.p,
            Q=e1_initial.Q,
            q=qv([0, 0, 0]),
            z_star=Fraction(0),
        )
        assert is_dual_feasible(d)

    @given(seed=st.integers(0, 300))
    @settings(max_examples=40, deadline=None)
    def test_negative_transpose_swaps_feasibility(self, seed):
        d = initial_dictionary(suite_instance(seed))
        assert is_primal_feasible(negative_transpose(d)) == is_dual_feasible(d)
        assert is_dual_feasible(negative_transpose(d)) == is_primal_feasible(d)


class TestNegativeTranspose:
    def test_initial_e1(self, e1_initial):
        nt = negative_transpose(e1_initial)
        assert nt.side == "dual"
        assert nt.basis == (1, 2, 3)
        assert nt.nonbasis == (4, 5)
        assert nt.p == qv([-8, -11, 10])
        assert nt.Q == qm([[-4, 1], [-2, 1], [2, 2]])
        assert nt.q == qv([-18, 3])
        assert nt.z_star == 0

    def test_second_e1(self, e1_second):
        nt = negative_transpose(e1_second)
        assert nt.basis == (5, 2, 3)
        assert nt.nonbasis == (4, 1)
        assert nt.p == qv([-8, -3, 26])
        assert nt.Q == qm([[-4, 1], [2, -1], [10, -2]])
        assert nt.q == qv([-6, -3])
        assert nt.z_star == -24

    def test_involution(self, e1_second):
        assert negative_transpose(negative_transpose(e1_second)) == e1_second


class TestBasicSolution:
    def test_initial_e1(self, e1_initial):
        assert basic_solution(e1_initial) == qv([0, 0, 0, 18, -3])
        assert e1_initial.z_star == 0

    def test_second_e1(self, e1_second):
        assert basic_solution(e1_second) == qv([3, 0, 0, 6, 0])
        assert e1_second.z_star == 24

    @given(seed=st.integers(0, 300))
    @settings(max_examples=40, deadline=None)
    def test_satisfies_every_row(self, seed):
        d = initial_dictionary(suite_instance(seed))
        x = basic_solution(d)
        assert check_point(d, list(x))
        assert objective_at(d, list(x)) == d.z_star


class TestCanonical:
    def test_sorts_orders(self, e1_second):
        c = canonical(e1_second)
        assert c.basis == (1, 4)
        assert c.nonbasis == (2, 3, 5)
        assert c.p == qv([3, 6])
        # row 0 is now x1, columns reordered to (2, 3, 5)
        assert c.Q == qm([[1, 2, -1], [-2, -10, 4]])
        assert c.q == qv([3, -26, 8])

    def test_idempotent(self, e1_second):
        assert canonical(canonical(e1_second)) == canonical(e1_second)
