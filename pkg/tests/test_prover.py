import random

import pytest

from vcbench import exprs as E
from vcbench import model as M
from vcbench.prover.engine import (ProofBudget, ProofSession, PROVED,
                                   UNPROVABLE, prove)
from vcbench.theory import builtin_theorems, parse_theory_text

ENTRY = E.ent("Entry")


def S(name, level=0, sort=E.STR):
    return E.sym(name, level, sort)


class TestSaturation:
    def test_reverse_chain_fires(self, theorems):
        # terms containing <E'> o Q''' let Reverse_Concat and
        # Reverse_Singleton rewrite Reverse of the whole
        e1 = E.sing(S("E", 1, ENTRY))
        q0, q3 = S("Q"), S("Q", 3)
        session = ProofSession(theorems)
        session.assert_fact(E.eq(q0, E.cat(e1, q3)))
        session.saturate()
        fired = {t.rule for t in session.trace}
        assert "Reverse_Concat" in fired and "Reverse_Singleton" in fired
        rev_whole = session.store.intern_exp(E.rev(E.cat(e1, q3)))
        rewritten = session.store.intern_exp(E.cat(E.rev(q3), e1))
        assert session.store.congruent(rev_whole, rewritten)

    def test_no_string_terms_reaches_fixpoint_immediately(self, theorems):
        session = ProofSession(theorems)
        session.assert_fact(E.le(S("x", 0, E.INT), S("y", 0, E.INT)))
        session.saturate()
        assert [t for t in session.trace if t.rule.startswith("Reverse")] == []
        assert session.saturation_complete

    def test_cancel_left_under_entailed_hypothesis(self, theorems):
        # |Copy| = |#Q| by the linear layer plus congruent concatenations
        copy, q, qf = S("Copy"), S("Q"), S("Q", 1)
        n = S("N", 0, E.INT)
        session = ProofSession(theorems)
        session.assert_fact(E.eq(E.cat(copy, qf), E.cat(q, copy)))
        session.assert_fact(E.eq(E.add(n, E.length(copy)), E.length(q)))
        session.assert_fact(E.eq(n, E.lit(0)))
        session.saturate()
        assert session.store.congruent(session.store.intern_exp(copy),
                                       session.store.intern_exp(q))

    def test_hypothesis_blocks_instantiation_until_entailed(self, theorems):
        u = S("u")
        session = ProofSession(theorems)
        session.assert_fact(E.le(E.length(u), E.lit(0)))  # not |u| = 0
        session.saturate()
        # Empty_From_Length must not fire from a mere upper bound...
        # but Length_Nonneg gives 0 <= |u|, so equality IS entailed
        assert session.store.congruent(session.store.intern_exp(u),
                                       session.store.intern_exp(E.EMPTY))

    def test_budget_rounds_cap(self, theorems):
        session = ProofSession(theorems, ProofBudget(max_rounds=0))
        session.assert_fact(E.eq(S("Q"), E.cat(E.sing(S("E", 1, ENTRY)), S("Q", 3))))
        session.saturate()
        assert session.trace == []


class TestGoalChecking:
    def test_true_goal(self, theorems):
        assert prove(E.TRUE, [], theorems).status == PROVED

    def test_exchange_bound_goal_without_requires(self, theorems):
        i, j = S("I", 0, E.INT), S("J", 0, E.INT)
        givens = [E.le(E.MIN_INT, i), E.le(i, E.MAX_INT),
                  E.le(E.MIN_INT, j), E.le(j, E.MAX_INT)]
        res = prove(E.le(E.MIN_INT, E.add(i, j)), givens, theorems)
        assert res.status == UNPROVABLE
        assert res.trace == []

    def test_exchange_bound_goal_with_requires(self, theorems):
        i, j = S("I", 0, E.INT), S("J", 0, E.INT)
        givens = [E.le(E.MIN_INT, E.add(i, j))]
        res = prove(E.le(E.MIN_INT, E.add(i, j)), givens, theorems)
        assert res.status == PROVED
        assert res.trace and res.trace[-1].rule == "goal"

    def test_faulty_invert_goal_stays_open(self, theorems):
        e1 = E.sing(S("E", 1, ENTRY))
        q, q1, q2, q3 = S("Q"), S("Q", 1), S("Q", 2), S("Q", 3)
        givens = [E.ne(E.length(q), E.lit(0)),
                  E.eq(q, E.cat(e1, q1)),
                  E.eq(q2, E.rev(q1)),
                  E.eq(q3, E.cat(e1, q2))]     # Inject: wrong side
        assert prove(E.eq(q3, E.rev(q)), givens, theorems).status == UNPROVABLE
        fixed = givens[:3] + [E.eq(q3, E.cat(q2, e1))]
        assert prove(E.eq(q3, E.rev(q)), fixed, theorems).status == PROVED


class TestEngineProperties:
    def _random_vc(self, rng):
        strs = [S(n) for n in "uv"]
        ints = [S(n, 0, E.INT) for n in "xy"]
        entries = [S("e", 0, ENTRY)]

        def str_exp(depth):
            if depth == 0:
                return rng.choice(strs + [E.EMPTY])
            pick = rng.random()
            if pick < 0.4:
                return E.cat(str_exp(depth - 1), str_exp(depth - 1))
            if pick < 0.6:
                return E.rev(str_exp(depth - 1))
            if pick < 0.8:
                return E.sing(rng.choice(entries))
            return rng.choice(strs)

        def int_exp(depth):
            if depth == 0:
                return rng.choice(ints + [E.lit(rng.randint(-3, 3))])
            if rng.random() < 0.5:
                return E.length(str_exp(depth - 1))
            return (E.add if rng.random() < 0.5 else E.sub)(
                int_exp(depth - 1), int_exp(depth - 1))

        def literal():
            if rng.random() < 0.5:
                op = rng.choice([E.eq, E.ne])
                return op(str_exp(2), str_exp(2))
            op = rng.choice([E.eq, E.ne, E.le, E.lt])
            return op(int_exp(1), int_exp(1))

        givens = [literal() for _ in range(rng.randint(0, 4))]
        if givens and rng.random() < 0.5:
            goal = rng.choice(givens)       # derivable half the time
        else:
            goal = literal()
        return givens, goal

    def test_monotonicity_adding_a_given_never_loses_a_proof(self, theorems):
        rng = random.Random(17)
        flips = 0
        for _ in range(120):
            givens, goal = self._random_vc(rng)
            extra = self._random_vc(rng)[1]
            before = prove(goal, givens, theorems).status
            after = prove(goal, givens + [extra], theorems).status
            if before == PROVED:
                assert after == PROVED, (givens, extra, goal)
                flips += 1
        assert flips >= 20

    def test_determinism_same_budget_same_result(self, theorems):
        rng = random.Random(23)
        for _ in range(60):
            givens, goal = self._random_vc(rng)
            budget = ProofBudget(max_rounds=3, timeout_ms=0)
            r1 = prove(goal, givens, theorems, budget)
            r2 = prove(goal, givens, theorems, budget)
            assert r1.status == r2.status
            assert [(t.rule, t.detail, t.fact) for t in r1.trace] == \
                [(t.rule, t.detail, t.fact) for t in r2.trace]

    def test_non_refutation_goal_never_changes_asserted_facts(self, theorems):
        rng = random.Random(31)
        for _ in range(80):
            givens, goal = self._random_vc(rng)
            budget = ProofBudget(max_rounds=3, timeout_ms=0)
            with_goal = ProofSession(theorems, budget)
            for g in givens:
                with_goal.assert_fact(g)
            with_goal.saturate()
            with_goal.check_goal(goal)
            without = ProofSession(theorems, budget)
            for g in givens:
                without.assert_fact(g)
            without.saturate()
            assert with_goal.asserted_log == without.asserted_log

    def test_contradictory_givens_are_recorded_not_exploited(self, theorems):
        x = S("x", 0, E.INT)
        givens = [E.eq(x, E.lit(0)), E.ne(x, E.lit(0))]
        session = ProofSession(theorems)
        for g in givens:
            session.assert_fact(g)
        assert session.contradiction
        # an unrelated goal must not become provable
        other = E.eq(S("u"), S("v"))
        assert prove(other, givens, theorems).status == UNPROVABLE


class TestSoundnessFuzz:
    def test_no_countermodel_for_proved_goals(self, theorems):
        rng = random.Random(404)
        model = M.Model(alphabet=2, max_len=2, lo=-4, hi=4)
        proved = 0
        props = TestEngineProperties()
        for _ in range(250):
            givens, goal = props._random_vc(rng)
            if prove(goal, givens, theorems).status != PROVED:
                continue
            proved += 1
            assert M.find_countermodel(givens, goal, model) is None, \
                (givens, goal)
        assert proved >= 40
