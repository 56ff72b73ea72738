import math
import random
from fractions import Fraction
from itertools import combinations_with_replacement

import pytest

from ramseykit.certify import NotRealizable, certify, realize
from ramseykit.construct import builtin_params, builtin_witness
from ramseykit.engine import (
    DC,
    DC_STRICT,
    LOWER,
    RULES,
    UPPER,
    KnowledgeBase,
    best_bounds,
    canonicalize,
    check_dc,
    dc_moved,
    dc_status,
    derive_closure,
    explain,
    r3cf_bound,
    ratio_report,
    reduce_params,
)


def kb_of(*facts, assumptions=()):
    kb = KnowledgeBase(assumptions)
    for params, kind, value in facts:
        kb.assert_fact(params, kind, value)
    return kb


class TestParams:
    def test_canonicalize_sorts(self):
        assert canonicalize([4, 3, 5]) == (3, 4, 5)

    @pytest.mark.parametrize("bad", [[], [1, 3], [3, 0]])
    def test_canonicalize_rejects(self, bad):
        with pytest.raises(ValueError):
            canonicalize(bad)

    def test_reduce_params(self):
        assert reduce_params((2, 3, 3)) == (3, 3)
        assert reduce_params((2, 2)) == (2,)


class TestAssertFact:
    def test_exact_sets_both(self):
        kb = kb_of(((3, 3), "exact", 6))
        assert best_bounds(kb, (3, 3)) == (6, 6)

    def test_only_tightens(self):
        kb = kb_of(((3, 4), LOWER, 9), ((3, 4), LOWER, 7), ((3, 4), UPPER, 12), ((3, 4), UPPER, 15))
        assert best_bounds(kb, (4, 3)) == (9, 12)

    def test_bad_value_and_kind(self):
        kb = KnowledgeBase()
        with pytest.raises(ValueError):
            kb.assert_fact((3, 3), LOWER, 0)
        with pytest.raises(ValueError):
            kb.assert_fact((3, 3), "maybe", 5)

    def test_inconsistency_flagged(self):
        kb = kb_of(((3, 3), LOWER, 10), ((3, 3), UPPER, 6))
        assert kb.inconsistent == ((3, 3), 10, 6)

    def test_unknown_params(self):
        assert best_bounds(KnowledgeBase(), (5, 5)) == (None, None)


class TestR3cf:
    @staticmethod
    def float_free_oracle(r):
        # e to 60 digits via a long partial sum; far more than enough for r <= 14
        e = sum(Fraction(1, math.factorial(j)) for j in range(60))
        return math.floor((e - Fraction(1, 6)) * math.factorial(r)) + 1

    @pytest.mark.parametrize("r", range(1, 15))
    def test_matches_oracle(self, r):
        assert r3cf_bound(r) == self.float_free_oracle(r)

    def test_table_values(self):
        assert [r3cf_bound(r) for r in range(4, 11)] == [62, 307, 1838, 12861, 102882, 925931, 9259302]


class TestClosure:
    def test_es_from_seeds(self):
        kb = kb_of(((3, 3), "exact", 6), ((3, 3, 3, 3), UPPER, 62))
        derive_closure(kb, ["R-base", "R-ES"])
        ups = [best_bounds(kb, (3,) * r)[1] for r in range(2, 11)]
        assert ups == [6, 17, 62, 307, 1838, 12861, 102882, 925931, 9259302]

    def test_es_two_color(self):
        kb = KnowledgeBase()
        derive_closure(kb, ["R-base", "R-ES"], max_r=2, targets=[(3, 3), (3, 4), (4, 4)])
        assert best_bounds(kb, (3, 3))[1] == 6
        assert best_bounds(kb, (3, 4))[1] == 10
        assert best_bounds(kb, (4, 4))[1] == 20

    def test_es_even_strengthening(self):
        kb = KnowledgeBase()
        derive_closure(kb, ["R-base", "R-ES"], max_r=2, targets=[(3, 4)], es_even=True)
        assert best_bounds(kb, (3, 4))[1] == 9

    def test_abbott_lower(self):
        kb = kb_of(((3, 3), LOWER, 6), ((3, 3, 3), LOWER, 17))
        derive_closure(kb, ["R-abbott"], max_r=5)
        assert best_bounds(kb, (3,) * 5)[0] == 81

    def test_diagprod(self):
        kb = kb_of(((3, 3), LOWER, 6))
        derive_closure(kb, ["R-diagprod"], max_r=2, targets=[(5, 5)])
        assert best_bounds(kb, (5, 5))[0] == 26

    def test_power_and_2r(self):
        kb = KnowledgeBase()
        derive_closure(kb, ["R-power", "R-2r"], max_r=4, targets=[(5, 5, 5)])
        assert best_bounds(kb, (5, 5, 5))[0] == 65
        assert best_bounds(kb, (3, 3, 3, 3))[0] == 17

    def test_befs(self):
        kb = kb_of(((3, 5), "exact", 14))
        derive_closure(kb, ["R-befs"], max_r=2, targets=[(4, 5)])
        assert best_bounds(kb, (4, 5))[0] == 21

    def test_mono(self):
        kb = kb_of(((3, 5), LOWER, 14), ((4, 5), UPPER, 25))
        derive_closure(kb, ["R-mono"], max_r=2, targets=[(3, 6), (3, 4)])
        assert best_bounds(kb, (3, 6))[0] == 14
        assert best_bounds(kb, (3, 4))[1] == 25

    def test_out_of_budget_counted(self):
        # the DC move (4,4) -> (3,5) leaves a budget capped at k <= 4
        kb = kb_of(((4, 4), LOWER, 18), assumptions={DC})
        stats = derive_closure(kb, ["R-dc"], max_r=2, max_k=4)
        assert stats.out_of_budget > 0

    def test_unknown_rule(self):
        with pytest.raises(ValueError, match="unknown rules"):
            derive_closure(KnowledgeBase(), ["R-magic"])

    def test_dc_needs_assumption(self):
        facts = (((3, 3), "exact", 6), ((5, 5), LOWER, 26))
        plain = kb_of(*facts)
        derive_closure(plain, ["R-base", "R-abbott", "R-dc"], max_r=4, targets=[(4, 4, 4, 4)])
        for f in plain.facts.values():
            for d in (f.lower_proof, f.upper_proof):
                assert d is None or "R-dc" not in d.rules_used()
        assumed = kb_of(*facts, assumptions={DC})
        derive_closure(assumed, ["R-base", "R-abbott", "R-dc"], max_r=4, targets=[(4, 4, 4, 4)])
        assert best_bounds(assumed, (4, 4, 4, 4))[0] >= 126
        assert best_bounds(plain, (4, 4, 4, 4))[0] is None or best_bounds(plain, (4, 4, 4, 4))[0] < 126

    def test_strict_dc_adds_one(self):
        kb = kb_of(((3, 5), LOWER, 14), assumptions={DC, DC_STRICT})
        derive_closure(kb, ["R-dc"], max_r=2, max_k=5, targets=[(4, 4)])
        assert best_bounds(kb, (4, 4))[0] == 15


class TestExplain:
    def test_es_chain(self):
        kb = kb_of(((3, 3), "exact", 6), ((3, 3, 3, 3), UPPER, 62))
        derive_closure(kb, ["R-base", "R-ES"])
        text = explain(kb, (3,) * 5, UPPER)
        lines = text.splitlines()
        assert lines[0].startswith("R(3,3,3,3,3) <= 307  [R-ES] 2 - 5 + 5*62")
        assert lines[1].strip().startswith("R(3,3,3,3) <= 62  [external]")

    def test_every_node_rechecks(self):
        kb = kb_of(((3, 3), LOWER, 6), ((3, 3, 3), LOWER, 17))
        derive_closure(kb, max_r=6)
        for f in kb.facts.values():
            for d in (f.lower_proof, f.upper_proof):
                if d is not None:
                    d.render()  # raises if any node fails to re-check

    def test_missing(self):
        with pytest.raises(KeyError):
            explain(KnowledgeBase(), (3, 3), LOWER)


class TestDC:
    def test_moves(self):
        assert dc_moved((3, 4, 4)) == [(2, 4, 5), (3, 3, 5)]
        assert dc_moved((3, 3)) == [(2, 4)]
        assert dc_moved((2, 5)) == []

    def test_statuses(self):
        kb = kb_of(((3, 3, 5), LOWER, 45), ((3, 4, 4), LOWER, 55))
        assert dc_status(kb, (3, 3, 5), (3, 4, 4)).status == "consistent"
        kb = kb_of(((7, 11), LOWER, 405), ((8, 10), LOWER, 343))
        assert dc_status(kb, (7, 11), (8, 10)).status == "not-followed"
        kb = kb_of(((3, 5), LOWER, 30), ((4, 4), UPPER, 18))
        assert dc_status(kb, (3, 5), (4, 4)).status == "contradiction"

    def test_not_adjacent(self):
        with pytest.raises(ValueError, match="not a DC move"):
            dc_status(KnowledgeBase(), (3, 3), (4, 4))

    def test_empty_kb(self):
        assert check_dc(KnowledgeBase()) == []


class TestRatios:
    def test_values(self):
        kb = kb_of(((3, 3), "exact", 6), ((3,) * 6, LOWER, 1074))
        rep = ratio_report(kb, 3, 6)
        rows = {row.r: row for row in rep.rows}
        assert rows[2].lower_root == pytest.approx(math.sqrt(5), abs=1e-9)
        assert rows[6].lower_root == pytest.approx(1073 ** (1 / 6), abs=1e-9)
        assert rep.sup_lower == max(row.lower_root for row in rep.rows)
        assert "3.1996" in rep.format()

    def test_k_too_small(self):
        with pytest.raises(ValueError):
            ratio_report(KnowledgeBase(), 1, 3)


# --- properties over random knowledge bases ---------------------------------

SMALL = [canonicalize(p) for p in [(3, 3), (3, 4), (4, 4), (3, 5), (3, 3, 3), (3, 3, 4), (3, 3, 3, 3), (4, 5)]]


def random_kb(rng: random.Random, dc: bool) -> KnowledgeBase:
    kb = KnowledgeBase({DC} if dc else ())
    for p in rng.sample(SMALL, rng.randint(1, 5)):
        if rng.random() < 0.7:
            kb.assert_fact(p, LOWER, rng.randint(2, 60))
        if rng.random() < 0.7:
            kb.assert_fact(p, UPPER, rng.randint(30, 400))
    return kb


BUDGET = dict(max_r=4, max_k=6)


def test_closure_monotone_idempotent_and_order_free():
    rng = random.Random(7)
    for trial in range(100):
        kb = random_kb(rng, dc=trial % 3 == 0)
        before = kb.snapshot()
        closed = kb.copy()
        derive_closure(closed, **BUDGET)
        after = closed.snapshot()
        for p, (lo, up) in before.items():
            lo2, up2 = after[p]
            assert lo is None or lo2 >= lo
            assert up is None or up2 <= up
        again = closed.copy()
        derive_closure(again, **BUDGET)
        assert again.snapshot() == after
        order = list(RULES)
        rng.shuffle(order)
        shuffled = kb.copy()
        derive_closure(shuffled, order, **BUDGET)
        assert shuffled.snapshot() == after


def test_canonical_invariance():
    rng = random.Random(11)
    kb = kb_of(((3, 3), "exact", 6), ((3, 4), "exact", 9), ((3, 3, 3), LOWER, 17))
    derive_closure(kb, max_r=4, max_k=6)
    for p in kb.facts:
        for _ in range(3):
            q = list(p)
            rng.shuffle(q)
            assert best_bounds(kb, q) == best_bounds(kb, p)


def test_derived_lower_bounds_certify_with_witnesses():
    """Every constructive lower bound up to 100 vertices replays as a valid coloring."""
    witnesses = {}
    kb = KnowledgeBase()
    for name in ("c5", "wagner8", "cyc13", "paley17", "gf16"):
        c, ks = builtin_witness(name), builtin_params(name)
        witnesses[canonicalize(ks)] = c
        kb.assert_fact(ks, LOWER, c.n + 1, name)
    rules = ["R-base", "R-mono", "R-abbott", "R-diagprod", "R-power", "R-2r"]
    targets = [ks for r in (1, 2, 3) for ks in combinations_with_replacement(range(2, 8), r)]
    derive_closure(kb, rules, max_r=4, max_k=9, targets=targets + [(3, 3, 3, 3)])
    checked = 0
    for p, f in kb.facts.items():
        d = f.lower_proof
        if d is None or d.value - 1 > 100 or d.rule == "external":
            continue
        rep = certify(d, witnesses)
        assert rep.valid, (p, d.render())
        checked += 1
    assert checked >= 20
    assert any(f.lower_proof is not None and f.lower_proof.rule == "R-abbott" for f in kb.facts.values())
    assert any(f.lower_proof is not None and f.lower_proof.rule == "R-diagprod" for f in kb.facts.values())


def test_upper_bounds_are_not_realizable():
    kb = kb_of(((3, 3), "exact", 6))
    with pytest.raises(NotRealizable):
        realize(kb.proof((3, 3), UPPER), {})
