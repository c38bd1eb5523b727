import itertools

import pytest

from vcbench import exprs as E
from vcbench import model as M
from vcbench.theory import (ENTRY_ANY, Theorem, TheoryError,
                            builtin_integer_facts, builtin_string_theory,
                            parse_theory_text)

MODEL = M.Model(alphabet=3, max_len=4, lo=-8, hi=8)


def by_conclusion_shape(theorems):
    return {t.name: t for t in theorems}


def holds_everywhere(theorem: Theorem, model: M.Model) -> bool:
    """Exhaustive model check of the universally quantified closure."""
    body = theorem.conclusion
    if theorem.hypothesis is not None:
        body = E.implies(theorem.hypothesis, body)
    names = list(theorem.universals)
    for env in M.assignments(names, model):
        if not M.eval_exp(body, env, model):
            return False
    return True


def cancel_holds_everywhere(theorem: Theorem, model: M.Model) -> bool:
    """Hypothesis-pruned exhaustive check for the cancellation theorems:
    with |u| = |w| fixed, the hypothesis u o v = w o x forces x, so only
    (u, w, v) need enumeration - identical coverage to the full product."""
    u, v, w, x = theorem.universals
    strings = model.strings()
    for us in strings:
        for ws in strings:
            if len(us) != len(ws):
                continue        # hypothesis |u| = |w| fails: vacuous
            for vs in strings:
                whole = us + vs
                if whole[:len(ws)] != ws:
                    continue    # no x can satisfy u o v = w o x: vacuous
                xs = whole[len(ws):]
                env = {u: us, v: vs, w: ws, x: xs}
                assert M.eval_exp(theorem.hypothesis, env, model)
                if not M.eval_exp(theorem.conclusion, env, model):
                    return False
    return True


def check_theorem(theorem: Theorem, model: M.Model = MODEL) -> bool:
    if theorem.name.startswith("Cancel"):
        return cancel_holds_everywhere(theorem, model)
    return holds_everywhere(theorem, model)


class TestBuiltinStringTheory:
    def test_required_results_present(self):
        thms = by_conclusion_shape(builtin_string_theory())
        u, v = E.qvar("u", E.STR), E.qvar("v", E.STR)
        e = E.qvar("e", ENTRY_ANY)
        assert thms["Reverse_Concat"].conclusion == \
            E.eq(E.rev(E.cat(u, v)), E.cat(E.rev(v), E.rev(u)))
        assert thms["Reverse_Singleton"].conclusion == \
            E.eq(E.rev(E.sing(e)), E.sing(e))
        assert thms["Reverse_Empty"].conclusion == E.eq(E.rev(E.EMPTY), E.EMPTY)
        assert thms["Length_Empty"].conclusion == E.eq(E.length(E.EMPTY), E.lit(0))
        assert thms["Length_Singleton"].conclusion == \
            E.eq(E.length(E.sing(e)), E.lit(1))
        assert thms["Length_Concat"].conclusion == \
            E.eq(E.length(E.cat(u, v)), E.add(E.length(u), E.length(v)))
        assert thms["Length_Reverse"].conclusion == \
            E.eq(E.length(E.rev(u)), E.length(u))
        assert thms["Length_Nonneg"].conclusion == E.le(E.lit(0), E.length(u))
        w, x = E.qvar("w", E.STR), E.qvar("x", E.STR)
        joint = E.conj(E.eq(E.length(u), E.length(w)),
                       E.eq(E.cat(u, v), E.cat(w, x)))
        assert thms["Cancel_Left"].hypothesis == joint
        assert thms["Cancel_Left"].conclusion == E.eq(u, w)
        assert thms["Cancel_Right"].conclusion == E.eq(v, x)

    def test_reverse_concat_instance(self):
        # u = <E'>, v = Q''' yields the step-4 rewrite shape
        thm = by_conclusion_shape(builtin_string_theory())["Reverse_Concat"]
        e1 = E.sing(E.sym("E", 1, E.ent("Entry")))
        q3 = E.sym("Q", 3, E.STR)
        inst = E.substitute(thm.conclusion,
                            {thm.universals[0]: e1, thm.universals[1]: q3})
        assert E.render(inst) == \
            "Reverse(<E'> o Q''') = Reverse(Q''') o Reverse(<E'>)"


class TestBuiltinIntegerFacts:
    def test_required_facts_present(self):
        thms = by_conclusion_shape(builtin_integer_facts())
        assert thms["Min_Int_Nonpositive"].conclusion == E.le(E.MIN_INT, E.lit(0))
        assert thms["Max_Int_Positive"].conclusion == E.lt(E.lit(0), E.MAX_INT)
        n = E.qvar("n", E.INT)
        nz = thms["Positive_From_Nonzero"]
        assert nz.hypothesis == E.conj(E.le(E.lit(0), n), E.ne(n, E.lit(0)))
        assert nz.conclusion == E.le(E.lit(1), n)

    def test_nonzero_nat_instance_for_loop_condition(self):
        # brute-force verification over the integer window
        for d in range(-8, 9):
            if 0 <= d and d != 0:
                assert 1 <= d


class TestTriggerCompleteness:
    def test_every_universal_bound_by_triggers(self):
        for thm in builtin_string_theory() + builtin_integer_facts():
            bound = set()
            for pat in thm.triggers:
                bound |= {n.payload[0] for n in E.walk(pat) if n.kind == "qvar"}
            assert {q.payload[0] for q in thm.universals} <= bound

    def test_unbound_universal_rejected_on_load(self):
        with pytest.raises(TheoryError):
            parse_theory_text(
                "Theorem Bad: For all u, v: String, u = v triggers u o u;\n")

    def test_bare_variable_trigger_rejected(self):
        with pytest.raises(TheoryError):
            parse_theory_text(
                "Theorem Bad: For all u: String, u = u triggers u;\n")

    def test_quantified_theorem_needs_triggers(self):
        with pytest.raises(TheoryError):
            parse_theory_text(
                "Theorem Bad: For all u: String, Reverse(u) = Reverse(u);\n")


class TestTheoryFileFormat:
    def test_stanza_round_trip(self):
        text = ("Theorem Skip_Front:\n"
                "    For all u, v: String, e: Entry,\n"
                "    if u o <e> = v o <e> then u = v\n"
                "    triggers u o <e>, v o <e>;\n")
        thms = parse_theory_text(text)
        assert len(thms) == 1
        thm = thms[0]
        assert [q.payload[0] for q in thm.universals] == ["u", "v", "e"]
        assert thm.hypothesis is not None
        assert len(thm.triggers) == 2

    def test_ground_theorem(self):
        thms = parse_theory_text("Theorem Zero: |empty_string| = 0;\n")
        assert thms[0].is_ground and not thms[0].triggers


class TestFiniteModelValidity:
    """Every shipped theorem holds under exhaustive evaluation; fast
    configuration here, full parameters in the acceptance suite."""

    SMALL = M.Model(alphabet=2, max_len=2, lo=-4, hi=4)

    @pytest.mark.parametrize("thm", builtin_string_theory() +
                             builtin_integer_facts(), ids=lambda t: t.name)
    def test_theorem_valid_in_small_model(self, thm):
        assert check_theorem(thm, self.SMALL)

    def test_invalid_theorem_is_caught(self):
        bogus = parse_theory_text(
            "Theorem Wrong: For all u, v: String, u o v = v o u "
            "triggers u o v;\n")[0]
        assert not holds_everywhere(bogus, self.SMALL)

    def test_cancel_pruning_matches_plain_enumeration(self):
        # the pruned strategy agrees with the naive product on a tiny model
        tiny = M.Model(alphabet=2, max_len=1, lo=-2, hi=2)
        for thm in builtin_string_theory():
            if thm.name.startswith("Cancel"):
                assert cancel_holds_everywhere(thm, tiny) == \
                    holds_everywhere(thm, tiny)
