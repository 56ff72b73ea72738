"""Check the classical small colorings and show what a failure looks like."""

from ramseykit import builtin_params, builtin_witness, make_coloring, verify_witness
from ramseykit.construct import BUILTIN_NAMES

for name in BUILTIN_NAMES:
    c = builtin_witness(name)
    print(f"{name:8s} n={c.n:2d} r={c.r}  {verify_witness(c, builtin_params(name))}")

# K_6 in one color obviously contains a triangle; the report names one.
print(verify_witness(make_coloring(6, 2, [1] * 15), (3, 3)))
