"""What the diagonal conjecture buys: R(4,4,4,4) from R(3,3) and R(5,5)."""

from ramseykit import DC, KnowledgeBase, best_bounds, derive_closure, explain

def closed(assumptions):
    kb = KnowledgeBase(assumptions)
    kb.assert_fact((3, 3), "exact", 6)
    kb.assert_fact((5, 5), "lower", 26)
    derive_closure(kb, ["R-base", "R-abbott", "R-dc"], max_r=4, targets=[(4, 4, 4, 4)])
    return kb

plain, assumed = closed(()), closed({DC})
print("without DC:", best_bounds(plain, (4, 4, 4, 4)))
print("with DC:   ", best_bounds(assumed, (4, 4, 4, 4)))
print(explain(assumed, (4, 4, 4, 4), "lower"))
