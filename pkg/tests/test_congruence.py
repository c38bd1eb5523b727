import random

from vcbench import exprs as E
from vcbench.prover.terms import TermStore


class NaiveClosure:
    """Independent oracle: congruence closure by repeated full scans,
    O(n^3)-ish, no union-find, no signatures."""

    def __init__(self, terms):
        # terms: list of (op, arg indices)
        self.terms = terms
        self.cls = list(range(len(terms)))

    def merge(self, a, b):
        ca, cb = self.cls[a], self.cls[b]
        if ca == cb:
            return
        for i, c in enumerate(self.cls):
            if c == cb:
                self.cls[i] = ca

    def assert_eqs(self, eqs):
        for a, b in eqs:
            self.merge(a, b)
        changed = True
        while changed:
            changed = False
            for i, (op_i, args_i) in enumerate(self.terms):
                for j, (op_j, args_j) in enumerate(self.terms):
                    if j <= i or op_i != op_j or len(args_i) != len(args_j):
                        continue
                    if self.cls[i] == self.cls[j]:
                        continue
                    if all(self.cls[a] == self.cls[b]
                           for a, b in zip(args_i, args_j)):
                        self.merge(i, j)
                        changed = True

    def congruent(self, a, b):
        return self.cls[a] == self.cls[b]


def random_instance(rng, n_terms=10, n_eqs=5):
    """A random ground term graph over a few unary/binary operators."""
    ops = [("a", 0), ("b", 0), ("c", 0), ("f", 1), ("g", 1), ("h", 2)]
    terms = []
    for i in range(n_terms):
        op, arity = rng.choice(ops if i >= 2 else ops[:3])
        args = tuple(rng.randrange(i) for _ in range(arity)) if i else ()
        if arity and i == 0:
            op, args = "a", ()
        terms.append((op, args))
    eqs = [(rng.randrange(n_terms), rng.randrange(n_terms))
           for _ in range(rng.randint(0, n_eqs))]
    return terms, eqs


def run_store(terms, eqs):
    store = TermStore()
    ids = []
    for op, args in terms:
        tid = store.intern(f"u:{op}", (), tuple(ids[a] for a in args), E.INT)
        ids.append(tid)
    for a, b in eqs:
        store.merge(ids[a], ids[b])
    return store, ids


def check_against_oracle(terms, eqs):
    store, ids = run_store(terms, eqs)
    oracle = NaiveClosure(terms)
    oracle.assert_eqs(eqs)
    for i in range(len(terms)):
        for j in range(len(terms)):
            got = store.congruent(ids[i], ids[j])
            want = oracle.congruent(i, j)
            assert got == want, (i, j, terms, eqs)


def test_one_step_congruence():
    # a = b makes f(a) and f(b) congruent
    terms = [("a", ()), ("b", ()), ("f", (0,)), ("f", (1,))]
    store, ids = run_store(terms, [(0, 1)])
    assert store.congruent(ids[2], ids[3])


def test_reverse_of_congruent_queues():
    # Q = <E'> o Q''' makes Reverse(Q) and Reverse(<E'> o Q''') congruent
    store = TermStore()
    q = store.intern_exp(E.sym("Q", 0, E.STR))
    rhs = store.intern_exp(E.cat(E.sing(E.sym("E", 1, E.ent("Entry"))),
                                 E.sym("Q", 3, E.STR)))
    rev_q = store.intern_exp(E.rev(E.sym("Q", 0, E.STR)))
    rev_rhs = store.intern_exp(E.rev(E.cat(E.sing(E.sym("E", 1, E.ent("Entry"))),
                                           E.sym("Q", 3, E.STR))))
    assert not store.congruent(rev_q, rev_rhs)
    store.merge(q, rhs)
    assert store.congruent(rev_q, rev_rhs)


def test_closure_matches_naive_oracle_on_random_instances():
    rng = random.Random(2024)
    for _ in range(300):
        terms, eqs = random_instance(rng)
        check_against_oracle(terms, eqs)


def test_deterministic_representatives():
    rng = random.Random(99)
    for _ in range(50):
        terms, eqs = random_instance(rng)
        store1, ids1 = run_store(terms, eqs)
        store2, ids2 = run_store(terms, eqs)
        assert [store1.find(t) for t in ids1] == [store2.find(t) for t in ids2]


def test_hash_consing_shares_structure():
    store = TermStore()
    a = store.intern_exp(E.length(E.sym("Q", 0, E.STR)))
    b = store.intern_exp(E.length(E.sym("Q", 0, E.STR)))
    assert a == b
