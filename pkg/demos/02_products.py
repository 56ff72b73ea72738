"""Grow larger witnesses out of small ones and verify them exhaustively."""

import time

from ramseykit import abbott_product, builtin_witness, diagonal_product, verify_witness
from ramseykit.construct import schur_coloring, shipped_partition

c5, gf16 = builtin_witness("c5"), builtin_witness("gf16")

t = time.perf_counter()
big = abbott_product(c5, gf16)  # 5 * 16 vertices, colors 1-2 from c5, 3-5 from gf16
print(verify_witness(big, (3, 3, 3, 3, 3)), f"[{time.perf_counter() - t:.2f}s]")

# Same colors in both factors: triangle-free classes multiply to K_5-free ones.
print(verify_witness(diagonal_product(c5, c5), (5, 5)))

for r in range(1, 5):
    c = schur_coloring(shipped_partition(r))
    print(f"Schur r={r}:", verify_witness(c, (3,) * r))
