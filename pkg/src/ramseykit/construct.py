"""Constructive lower bounds: classical witnesses, products, Schur colorings."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import NamedTuple, Optional, Sequence

from .coloring import EdgeColoring, cyclic_coloring, pair_index, verify_witness

GF16_MODULUS = 0b10011  # x^4 + x + 1

PALEY17_RESIDUES = (1, 2, 4, 8, 9, 13, 15, 16)


def _rest(m: int, cls: Sequence[int]) -> list[int]:
    return [d for d in range(1, m) if d not in cls]


def gf16_exp_table() -> list[int]:
    """Powers g^0..g^14 of the generator g = x in GF(2^4)."""
    table = [1]
    for _ in range(14):
        x = table[-1] << 1
        if x & 0x10:
            x ^= GF16_MODULUS
        table.append(x)
    return table


def gf16_coloring() -> EdgeColoring:
    """3-coloring of K_16 by cubic-residue cosets of GF(16)*.

    Vertices are field elements 0..15 (bit i = coefficient of x^i); edge
    {a, b} gets color i + 1 where a + b = a XOR b lies in {g^(3j + i)}.
    """
    exp = gf16_exp_table()
    coset = {exp[e]: e % 3 + 1 for e in range(15)}
    colors = tuple(coset[a ^ b] for a in range(16) for b in range(a + 1, 16))
    return EdgeColoring(16, 3, colors)


# name -> (constructor, the clique targets it must witness)
_BUILTINS = {
    "c5": (lambda: cyclic_coloring(5, [[1, 4], [2, 3]]), (3, 3)),
    "wagner8": (lambda: cyclic_coloring(8, [[1, 4, 7], _rest(8, [1, 4, 7])]), (3, 4)),
    "cyc13": (lambda: cyclic_coloring(13, [[1, 5, 8, 12], _rest(13, [1, 5, 8, 12])]), (3, 5)),
    "paley17": (lambda: cyclic_coloring(17, [PALEY17_RESIDUES, _rest(17, PALEY17_RESIDUES)]), (4, 4)),
    "gf16": (gf16_coloring, (3, 3, 3)),
}

BUILTIN_NAMES = tuple(_BUILTINS)


def builtin_params(name: str) -> tuple[int, ...]:
    try:
        return _BUILTINS[name][1]
    except KeyError:
        raise ValueError(f"unknown builtin {name!r}; choose from {', '.join(BUILTIN_NAMES)}") from None


@lru_cache(maxsize=None)
def builtin_witness(name: str) -> EdgeColoring:
    """One of the classical colorings, re-verified before it is handed out."""
    params = builtin_params(name)
    coloring = _BUILTINS[name][0]()
    report = verify_witness(coloring, params)
    if not report.valid:
        raise RuntimeError(f"builtin {name} failed verification: {report}")
    return coloring


def abbott_product(c1: EdgeColoring, c2: EdgeColoring) -> EdgeColoring:
    """Blow up every vertex of ``c1`` into a copy of ``c2`` on fresh colors.

    Vertex (u, v) has index ``u * n2 + v``.  Edges between different blocks
    keep ``c1``'s color; edges inside a block take ``r1 + c2``'s color.  A
    monochromatic clique therefore lives in one block or meets each block
    at most once, so witnesses for (k_1..k_i) and (k_{i+1}..k_r) combine
    into a witness for (k_1..k_r).
    """
    n1, n2, r1 = c1.n, c2.n, c1.r
    n = n1 * n2
    colors = []
    for a in range(n):
        u1, v1 = divmod(a, n2)
        for b in range(a + 1, n):
            u2, v2 = divmod(b, n2)
            if u1 != u2:
                colors.append(c1.colors[pair_index(n1, u1, u2)])
            else:
                colors.append(r1 + c2.colors[pair_index(n2, v1, v2)])
    return EdgeColoring(n, r1 + c2.r, tuple(colors))


def diagonal_product(c1: EdgeColoring, c2: EdgeColoring) -> EdgeColoring:
    """Same-color product: cross-block edges from ``c1``, in-block from ``c2``.

    If color i of ``c1`` has no K_{s+1} and of ``c2`` no K_{t+1}, color i of
    the product has no K_{st+1}.
    """
    if c1.r != c2.r:
        raise ValueError(f"color counts differ: {c1.r} vs {c2.r}")
    n1, n2 = c1.n, c2.n
    n = n1 * n2
    colors = []
    for a in range(n):
        u1, v1 = divmod(a, n2)
        for b in range(a + 1, n):
            u2, v2 = divmod(b, n2)
            if u1 != u2:
                colors.append(c1.colors[pair_index(n1, u1, u2)])
            else:
                colors.append(c2.colors[pair_index(n2, v1, v2)])
    return EdgeColoring(n, c1.r, tuple(colors))


@dataclass(frozen=True)
class SumFreePartition:
    """Partition of {1..n} (linear) or of Z_n minus 0 (cyclic, n = modulus)."""

    n: int
    mode: str
    parts: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.mode not in ("linear", "cyclic"):
            raise ValueError(f"mode must be linear or cyclic, got {self.mode!r}")
        object.__setattr__(self, "parts", tuple(tuple(sorted(p)) for p in self.parts))

    @property
    def r(self) -> int:
        return len(self.parts)

    def ground_set(self) -> range:
        return range(1, self.n + 1) if self.mode == "linear" else range(1, self.n)


class PartitionReport(NamedTuple):
    valid: bool
    violation: Optional[tuple[int, int, int, int]] = None  # (x, y, z, part), part 1-based


def check_partition_structure(p: SumFreePartition) -> None:
    seen: dict[int, int] = {}
    ground = set(p.ground_set())
    for idx, part in enumerate(p.parts, start=1):
        for x in part:
            if x not in ground:
                raise ValueError(f"element {x} of part {idx} is outside the ground set")
            if x in seen:
                raise ValueError(f"element {x} is in parts {seen[x]} and {idx}")
            seen[x] = idx
    missing = sorted(ground - seen.keys())
    if missing:
        raise ValueError(f"ground set not partitioned; missing {missing}")
    if p.mode == "cyclic":
        for idx, part in enumerate(p.parts, start=1):
            s = set(part)
            for x in part:
                if p.n - x not in s:
                    raise ValueError(f"part {idx} is not symmetric: has {x} but not {p.n - x}")


def validate_partition(p: SumFreePartition) -> PartitionReport:
    """Sum-free check; reports the first (x, y, z, part) with x + y = z, x <= y."""
    check_partition_structure(p)
    for idx, part in enumerate(p.parts, start=1):
        s = set(part)
        for i, x in enumerate(part):
            for y in part[i:]:
                z = x + y if p.mode == "linear" else (x + y) % p.n
                if z in s:
                    return PartitionReport(False, (x, y, z, idx))
    return PartitionReport(True)


def schur_coloring(p: SumFreePartition) -> EdgeColoring:
    """Coloring whose classes are triangle-free because the parts are sum-free.

    Linear mode colors K_{n+1} on 0..n by the part holding |i - j|, so an
    r-part partition of {1..n} gives R_r(3) >= n + 2.
    """
    report = validate_partition(p)
    if not report.valid:
        x, y, z, part = report.violation
        raise ValueError(f"part {part} is not sum-free: {x} + {y} = {z}")
    if p.mode == "cyclic":
        return cyclic_coloring(p.n, p.parts)
    which = {d: idx for idx, part in enumerate(p.parts, start=1) for d in part}
    m = p.n + 1
    colors = tuple(which[j - i] for i in range(m) for j in range(i + 1, m))
    return EdgeColoring(m, p.r, colors)


def shipped_partition(r: int) -> SumFreePartition:
    """Maximal linear Schur partitions bundled for r = 1..4."""
    from .fileio import parse_partition_file

    if not 1 <= r <= 4:
        raise ValueError("bundled Schur partitions cover r = 1..4 only")
    text = resources.files("ramseykit.data").joinpath(f"schur_r{r}.partition").read_text()
    return parse_partition_file(text)


def single_color_clique(n: int) -> EdgeColoring:
    """K_n with every edge in color 1 (witnesses R(n+1) > n)."""
    return EdgeColoring(n, 1, (1,) * (n * (n - 1) // 2))
