"""Rebuild the upper column of the R_r(3) table from two seeds."""

from ramseykit import KnowledgeBase, derive_closure, explain, r3cf_bound
from ramseykit.cli import render_table_r3
from ramseykit.fileio import survey_kb

kb = KnowledgeBase()
kb.assert_fact((3, 3), "exact", 6)
kb.assert_fact((3, 3, 3, 3), "upper", 62)
stats = derive_closure(kb, ["R-base", "R-ES"], max_r=10)
print(render_table_r3(kb, 10))
print(stats)
print(explain(kb, (3,) * 6, "upper"))

# The closed-form bound floor((e - 1/6) r!) + 1 lands on the same integers.
print([r3cf_bound(r) for r in range(4, 11)])

print("\nshipped survey:")
print(render_table_r3(survey_kb(), 10))
