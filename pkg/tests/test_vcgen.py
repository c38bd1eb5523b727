import pytest

from vcbench import exprs as E
from vcbench.checker import check_module
from vcbench.components import corpus_text
from vcbench.diagnostics import FrontEndError
from vcbench.parser import parse_module
from vcbench.vcgen import generate_vcs


def vcs_for(text, library):
    return generate_vcs(check_module(parse_module(text), library))


def corpus_vcs(name, library):
    return vcs_for(corpus_text(name), library)


def dump(vcs):
    return [(vc.id, vc.line, vc.kind, E.render(vc.goal),
             [(g.index, E.render(g.exp), g.relevant) for g in vc.givens],
             vc.description) for vc in vcs]


FACILITY = ("Facility F;\n"
            "    Operation Op (updates I: Integer; updates J: Integer);\n"
            "        ensures true;\n"
            "    Procedure Op (updates I: Integer; updates J: Integer);\n"
            "{body}"
            "    end Op;\n"
            "end F;\n")


class TestExchange:
    def test_exactly_eight_vcs(self, library):
        vcs = corpus_vcs("exchange_missing_requires", library)
        assert [vc.id for vc in vcs] == [f"0_{i}" for i in range(1, 9)]
        assert [vc.kind for vc in vcs] == ["operation-precondition"] * 6 + \
            ["procedure-ensures"] * 2

    def test_first_statement_owns_the_bound_obligations(self, library):
        vcs = corpus_vcs("exchange_missing_requires", library)
        assert E.render(vcs[0].goal) == "min_int <= I + J"
        assert E.render(vcs[1].goal) == "I + J <= max_int"
        assert vcs[0].line == vcs[1].line
        assert "Sum" in vcs[0].description

    def test_ensures_goals_relate_final_to_entry_values(self, library):
        vcs = corpus_vcs("exchange_missing_requires", library)
        assert E.render(vcs[6].goal) == "I'' = J"
        assert E.render(vcs[7].goal) == "J' = I"

    def test_adding_requires_keeps_count_and_prepends_givens(self, library):
        vcs = corpus_vcs("exchange_fixed", library)
        assert len(vcs) == 8
        for vc in vcs:
            assert E.render(vc.givens[0].exp) == "min_int <= I + J"
            assert E.render(vc.givens[1].exp) == "I + J <= max_int"


class TestInvert:
    def test_faulty_invert_ids_and_kinds(self, library):
        vcs = corpus_vcs("invert_faulty", library)
        assert [vc.id for vc in vcs] == ["0_1", "0_2", "0_3", "0_4"]
        assert [vc.kind for vc in vcs] == [
            "operation-precondition", "termination-progress",
            "procedure-ensures", "procedure-ensures"]
        # 0_3 is the then-path ensures: its givens include the call chain
        then_path = vcs[2]
        rendered = [E.render(g.exp) for g in then_path.givens]
        assert "Q = <E'> o Q'" in rendered
        assert "Q'' = Reverse(Q')" in rendered
        assert "Q''' = <E'> o Q''" in rendered
        # 0_4 is the else path: the queue was never touched
        assert E.render(vcs[3].goal) == "Q = Reverse(Q)"

    def test_fixed_invert_same_ids_different_then_goal(self, library):
        faulty = corpus_vcs("invert_faulty", library)
        fixed = corpus_vcs("invert_fixed", library)
        assert [vc.id for vc in faulty] == [vc.id for vc in fixed]
        f3 = [E.render(g.exp) for g in fixed[2].givens]
        assert "Q''' = Q'' o <E'>" in f3

    def test_termination_vc_compares_callee_metric_to_entry(self, library):
        vcs = corpus_vcs("invert_faulty", library)
        assert E.render(vcs[1].goal) == "|Q'| < |Q|"


class TestCallRule:
    def test_dequeue_emits_requires_then_assumes_ensures(self, library):
        text = ("Realization R for Invert_Capability of Preemptable_Queue_Template;\n"
                "    Procedure Invert (updates Q: P_Queue);\n"
                "        decreasing |Q|;\n"
                "        Var E: Entry;\n"
                "        Dequeue(E, Q);\n"
                "    end Invert;\n"
                "end R;\n")
        vcs = vcs_for(text, library)
        pre = vcs[0]
        assert (pre.kind, E.render(pre.goal)) == ("operation-precondition",
                                                  "|Q| /= 0")
        ensures_vc = vcs[1]
        rendered = [E.render(g.exp) for g in ensures_vc.givens]
        assert "Q = <E'> o Q'" in rendered  # dequeued entry shape

    def test_call_with_true_requires_emits_no_vc(self, library):
        text = ("Realization R for Invert_Capability of Preemptable_Queue_Template;\n"
                "    Procedure Invert (updates Q: P_Queue);\n"
                "        decreasing |Q|;\n"
                "        Var E: Entry;\n"
                "        Enqueue(E, Q);\n"
                "    end Invert;\n"
                "end R;\n")
        vcs = vcs_for(text, library)
        assert [vc.kind for vc in vcs] == ["procedure-ensures"]

    def test_clears_formal_assumes_initial_value(self, library):
        text = ("Realization R for Copying_Capability of Preemptable_Queue_Template;\n"
                "    Procedure Copy_Queue (restores Q: P_Queue; replaces Q_Copy: P_Queue);\n"
                "        Clear(Q_Copy);\n"
                "    end Copy_Queue;\n"
                "end R;\n")
        vcs = vcs_for(text, library)
        givens = [E.render(g.exp) for g in vcs[0].givens]
        assert "Q_Copy' = empty_string" in givens

    def test_integer_assignment_desugars_to_sum_contract(self, library):
        body = "        I := I + J;\n"
        vcs = vcs_for(FACILITY.format(body=body), library)
        assert [E.render(vc.goal) for vc in vcs[:2]] == [
            "min_int <= I + J", "I + J <= max_int"]
        ensures = vcs[2]
        assert "I' = I + J" in [E.render(g.exp) for g in ensures.givens]


class TestIfRule:
    def test_then_and_else_paths_to_procedure_end(self, library):
        body = ("        If I = 0 then\n"
                "            I := I + J;\n"
                "        Else\n"
                "            I := I - J;\n"
                "        end;\n")
        vcs = vcs_for(FACILITY.format(body=body), library)
        # per path: two bound VCs and one ensures(true)
        assert len(vcs) == 6
        then_givens = [E.render(g.exp) for g in vcs[0].givens]
        assert "I = 0" in then_givens
        else_givens = [E.render(g.exp) for g in vcs[3].givens]
        assert "I /= 0" in else_givens

    def test_path_count_is_two_to_the_depth(self, library):
        # ensures-true VC count equals the number of paths: an oracle of
        # 2^depth for a chain of depth sequential Ifs
        for depth in (1, 2, 3):
            body = "".join("        If I = 0 then\n        end;\n"
                           for _ in range(depth))
            vcs = vcs_for(FACILITY.format(body=body), library)
            ensures = [vc for vc in vcs if vc.kind == "procedure-ensures"]
            assert len(ensures) == 2 ** depth


class TestWhileRule:
    LOOP = ("Facility F;\n"
            "    Operation Op (updates I: Integer);\n"
            "        ensures true;\n"
            "    Procedure Op (updates I: Integer);\n"
            "        While I /= 0\n"
            "            maintaining {inv};\n"
            "            decreasing I;\n"
            "{extra}"
            "        do\n"
            "{body}"
            "        end;\n"
            "    end Op;\n"
            "end F;\n")

    def test_empty_body_loop_shapes(self, library):
        text = self.LOOP.format(inv="true", extra="", body="")
        vcs = vcs_for(text, library)
        kinds = [(vc.id, vc.kind) for vc in vcs]
        assert kinds == [
            ("0_1", "loop-invariant-base"),
            ("1_1", "termination-progress"),
            ("1_2", "termination-bound"),
            ("2_1", "loop-invariant-preservation"),
            ("2_2", "procedure-ensures"),
        ]
        # nothing changes, so the progress goal is the unprovable I < I shape
        progress = vcs[1]
        assert E.render(progress.goal) == "I < I"

    def test_changing_clause_defaults_to_assigned_variables(self, library):
        body = "            I := I - 1;\n"
        text = self.LOOP.format(inv="true", extra="", body=body)
        vcs = vcs_for(text, library)
        progress = [vc for vc in vcs if vc.kind == "termination-progress"][0]
        # I advanced at loop entry: the iteration starts from a fresh value
        assert E.render(progress.goal) == "I'' < I'"

    def test_regions_match_loop_boundaries(self, library):
        vcs = corpus_vcs("flip_onto_stage2", library)
        by_id = {vc.id: vc for vc in vcs}
        assert by_id["0_1"].kind == "loop-invariant-base"
        assert "Pop" in by_id["1_1"].description
        assert "Push" in by_id["1_2"].description
        assert by_id["2_1"].kind == "loop-invariant-preservation"
        assert by_id["2_2"].kind == "procedure-ensures"

    def test_invariant_conjuncts_split_in_order(self, library):
        vcs = corpus_vcs("copy_queue", library)
        base = [vc for vc in vcs if vc.kind == "loop-invariant-base"]
        assert [vc.id for vc in base] == ["0_1", "0_2", "0_3", "0_4"]
        assert E.render(base[0].goal) == "Q_Copy' o Q = Q o Q_Copy'"
        restores = [vc for vc in vcs if vc.kind == "restores-obligation"]
        assert len(restores) == 1
        assert "unchanged" in restores[0].description

    def test_condition_requires_confirmed_under_invariant_alone(self, library):
        # a function call in the condition generates its requires VCs in the
        # body region, before the condition itself is assumed
        text = ("Realization R for Invert_Capability of Preemptable_Queue_Template;\n"
                "    Procedure Invert (updates Q: P_Queue);\n"
                "        decreasing |Q|;\n"
                "        Var E: Entry;\n"
                "        Var N: Integer;\n"
                "        N := Length(Q);\n"
                "        While N /= 0\n"
                "            maintaining N = |Q|;\n"
                "            decreasing N;\n"
                "            changing E, N, Q;\n"
                "        do\n"
                "            Dequeue(E, Q);\n"
                "            N := N - 1;\n"
                "        end;\n"
                "    end Invert;\n"
                "end R;\n")
        vcs = vcs_for(text, library)
        dequeue = [vc for vc in vcs if "Dequeue" in vc.description][0]
        givens = [E.render(g.exp) for g in dequeue.givens]
        assert "N'' /= 0" in givens  # the loop condition is available


class TestHygiene:
    def test_goals_and_givens_are_pure(self, library):
        for name in ("exchange_fixed", "invert_faulty", "flip_onto_stage3",
                     "copy_queue"):
            for vc in corpus_vcs(name, library):
                assert not E.mentions_old(vc.goal)
                assert not E.mentions_qvar(vc.goal)
                for g in vc.givens:
                    assert not E.mentions_old(g.exp)
                    assert not E.mentions_qvar(g.exp)

    def test_every_line_points_into_the_source(self, library):
        for name in ("exchange_fixed", "invert_faulty", "flip_onto_stage3",
                     "copy_queue"):
            module = parse_module(corpus_text(name))
            for vc in corpus_vcs(name, library):
                assert 1 <= vc.line <= module.line_count

    def test_givens_numbered_from_one_in_order(self, library):
        for vc in corpus_vcs("copy_queue", library):
            assert [g.index for g in vc.givens] == \
                list(range(1, len(vc.givens) + 1))

    def test_determinism(self, library):
        a = dump(corpus_vcs("copy_queue", library))
        b = dump(corpus_vcs("copy_queue", library))
        assert a == b

    def test_ensures_true_yields_single_trivial_vc(self, library):
        vcs = vcs_for(FACILITY.format(body=""), library)
        assert len(vcs) == 1
        assert (vcs[0].kind, E.render(vcs[0].goal)) == ("procedure-ensures",
                                                        "true")

    def test_irrelevant_givens_marked_for_demotion(self, library):
        body = ("        If J = 0 then\n"
                "        end;\n"
                "        I := I + 1;\n")
        text = ("Facility F;\n"
                "    Operation Op (updates I: Integer; updates J: Integer);\n"
                "        ensures true;\n"
                "    Procedure Op (updates I: Integer; updates J: Integer);\n"
                + body +
                "    end Op;\n"
                "end F;\n")
        vcs = vcs_for(text, library)
        bound = [vc for vc in vcs if vc.kind == "operation-precondition"][0]
        flags = {E.render(g.exp): g.relevant for g in bound.givens}
        assert flags["J = 0"] is False      # J never reaches the goal
        assert flags["min_int <= I"] is True


class TestMultiOperationModules:
    def test_regions_span_operations_so_ids_stay_unique(self, library):
        text = ("Facility F;\n"
                "    Operation A (updates I: Integer);\n"
                "        ensures true;\n"
                "    Procedure A (updates I: Integer);\n"
                "        I := I + 1;\n"
                "    end A;\n"
                "    Operation B (updates I: Integer);\n"
                "        ensures true;\n"
                "    Procedure B (updates I: Integer);\n"
                "        I := I - 1;\n"
                "    end B;\n"
                "end F;\n")
        vcs = vcs_for(text, library)
        ids = [vc.id for vc in vcs]
        assert len(ids) == len(set(ids))
        assert ids[0].startswith("0_") and ids[-1].startswith("1_")


class TestNestedForks:
    def test_if_inside_while_confirms_invariant_per_body_path(self, library):
        text = ("Facility F;\n"
                "    Operation Op (updates I: Integer);\n"
                "        ensures true;\n"
                "    Procedure Op (updates I: Integer);\n"
                "        While I /= 0\n"
                "            maintaining 0 <= I;\n"
                "            decreasing I;\n"
                "        do\n"
                "            If I = 1 then\n"
                "                I := I - 1;\n"
                "            Else\n"
                "                I := I - 1;\n"
                "            end;\n"
                "        end;\n"
                "    end Op;\n"
                "end F;\n")
        vcs = vcs_for(text, library)
        preserve = [vc for vc in vcs
                    if vc.kind == "loop-invariant-preservation"]
        progress = [vc for vc in vcs if vc.kind == "termination-progress"]
        assert len(preserve) == 2    # one per body path
        assert len(progress) == 2
