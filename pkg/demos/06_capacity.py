"""Independence numbers of strong powers: the pentagon and the color classes."""

from ramseykit.capacity import (
    capacity_lower,
    circulant,
    color_class,
    independence_number,
    independent_set_of_size,
    strong_power,
)
from ramseykit.construct import BUILTIN_NAMES, builtin_witness

print(capacity_lower(circulant(5, [1]), 2))

# Exact alpha of the squares gets expensive past ~100 vertices, so only
# confirm that alpha(g)^2 is reached, which is all supermultiplicativity needs.
for name in BUILTIN_NAMES:
    c = builtin_witness(name)
    for color in range(1, c.r + 1):
        g = color_class(c, color)
        a = independence_number(g)
        sq = strong_power(g, 2)
        ok = independent_set_of_size(sq, a * a) is not None
        print(f"{name:8s} color {color}: alpha={a}  alpha(g^2) >= {a * a} on {sq.n} vertices: {ok}")
