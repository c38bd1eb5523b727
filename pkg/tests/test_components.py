from vcbench import exprs as E
from vcbench.components import standard_components


def concepts():
    return {c.name: c for c in standard_components()}


def contract(concept, name):
    return concepts()[concept].contracts[name][0]


ENTRY = E.ent("Entry")


def test_integer_template_contracts():
    sum_ = contract("Integer_Template", "Sum")
    i, j = E.var("I", E.INT), E.var("J", E.INT)
    assert sum_.requires == E.conj(E.le(E.MIN_INT, E.add(i, j)),
                                   E.le(E.add(i, j), E.MAX_INT))
    assert sum_.ensures == E.eq(E.var("result", E.INT), E.add(i, j))
    assert [f.mode for f in sum_.formals] == ["evaluates", "evaluates"]
    diff = contract("Integer_Template", "Difference")
    assert diff.ensures == E.eq(E.var("result", E.INT), E.sub(i, j))


def test_integer_type_range_constraint():
    integer = concepts()["Integer_Template"].types["Integer"]
    v = E.var("Integer", E.INT)
    assert integer.constraint == E.conj(E.le(E.MIN_INT, v), E.le(v, E.MAX_INT))
    assert integer.initial == E.lit(0)


def test_queue_contracts_match_their_models():
    q, r = E.var("Q", E.STR), E.var("R", ENTRY)
    oq, oe = E.old("Q", E.STR), E.old("E", ENTRY)
    enqueue = contract("Preemptable_Queue_Template", "Enqueue")
    assert enqueue.ensures == E.eq(q, E.cat(oq, E.sing(oe)))
    dequeue = contract("Preemptable_Queue_Template", "Dequeue")
    assert dequeue.requires == E.ne(E.length(q), E.lit(0))
    assert dequeue.ensures == E.eq(oq, E.cat(E.sing(r), q))
    inject = contract("Preemptable_Queue_Template", "Inject")
    assert inject.ensures == E.eq(q, E.cat(E.sing(oe), oq))
    length = contract("Preemptable_Queue_Template", "Length")
    assert length.is_function and length.result_sort == E.INT
    assert length.ensures == E.eq(E.var("result", E.INT), E.length(q))
    clear = contract("Preemptable_Queue_Template", "Clear")
    assert [f.mode for f in clear.formals] == ["clears"]
    replica = contract("Preemptable_Queue_Template", "Replica")
    assert replica.ensures == E.eq(E.var("result", ENTRY), E.var("E", ENTRY))


def test_queue_is_unbounded_and_strings_initialize_empty():
    queue = concepts()["Preemptable_Queue_Template"].types["P_Queue"]
    assert queue.constraint is None
    assert queue.initial == E.EMPTY


def test_stack_contracts_and_bound():
    stack = concepts()["Stack_Template"]
    s = E.var("S", E.STR)
    push = contract("Stack_Template", "Push")
    assert push.requires == E.le(E.add(E.length(s), E.lit(1)),
                                 E.sym("Max_Depth", 0, E.INT))
    pop = contract("Stack_Template", "Pop")
    assert pop.requires == E.ne(E.length(s), E.lit(0))
    assert stack.constraint == E.lt(E.lit(0), E.sym("Max_Depth", 0, E.INT))
    bound = stack.types["Stack"].constraint
    assert bound == E.le(E.length(E.var("Stack", E.STR)),
                         E.sym("Max_Depth", 0, E.INT))


def test_push_requires_instance_in_loop_context():
    push = contract("Stack_Template", "Push")
    t2 = E.sym("T", 2, E.STR)
    inst = E.substitute(push.requires, {
        E.var("S", E.STR): t2,
        E.old("S", E.STR): t2,
        E.var("E", ENTRY): E.sym("E", 2, ENTRY),
        E.old("E", ENTRY): E.sym("E", 2, ENTRY),
    })
    assert E.render(inst) == "|T''| + 1 <= Max_Depth"
