"""Edge colorings of complete graphs and exact witness verification."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .clique import find_clique


def pair_index(n: int, i: int, j: int) -> int:
    """Position of edge {i, j} in the row-major upper-triangle array."""
    if i > j:
        i, j = j, i
    return i * n - i * (i + 1) // 2 + (j - i - 1)


@dataclass(frozen=True)
class EdgeColoring:
    """An ``r``-coloring of the edges of ``K_n``.

    ``colors`` holds the color (1..r) of every pair {i, j}, i < j, in
    row-major order: (0,1), (0,2), ..., (0,n-1), (1,2), ...
    """

    n: int
    r: int
    colors: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1 or self.r < 1:
            raise ValueError(f"need n >= 1 and r >= 1, got n={self.n} r={self.r}")
        expected = self.n * (self.n - 1) // 2
        if len(self.colors) != expected:
            raise ValueError(
                f"expected {expected} edge colors for n={self.n}, got {len(self.colors)}"
            )
        for idx, col in enumerate(self.colors):
            if not 1 <= col <= self.r:
                raise ValueError(f"edge #{idx} has color {col}, outside 1..{self.r}")

    def color(self, i: int, j: int) -> int:
        if i == j:
            raise ValueError("a vertex has no loop edge")
        if not (0 <= i < self.n and 0 <= j < self.n):
            raise IndexError(f"vertex out of range for n={self.n}")
        return self.colors[pair_index(self.n, i, j)]

    def edges(self):
        """Yield ``(i, j, color)`` for i < j in row-major order."""
        it = iter(self.colors)
        for i in range(self.n):
            for j in range(i + 1, self.n):
                yield i, j, next(it)

    @cached_property
    def _masks(self) -> tuple[tuple[int, ...], ...]:
        per_color = [[0] * self.n for _ in range(self.r)]
        for i, j, col in self.edges():
            m = per_color[col - 1]
            m[i] |= 1 << j
            m[j] |= 1 << i
        return tuple(tuple(m) for m in per_color)

    def neighbor_masks(self, color: int) -> tuple[int, ...]:
        """Bitmask neighbourhoods of the graph formed by one color class."""
        self._check_color(color)
        return self._masks[color - 1]

    def class_sizes(self) -> list[int]:
        sizes = [0] * self.r
        for col in self.colors:
            sizes[col - 1] += 1
        return sizes

    def relabel(self, perm: Sequence[int]) -> "EdgeColoring":
        """Coloring in which old vertex ``v`` becomes ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of range(n)")
        new = [0] * len(self.colors)
        for i, j, col in self.edges():
            new[pair_index(self.n, perm[i], perm[j])] = col
        return EdgeColoring(self.n, self.r, tuple(new))

    def recolor(self, mapping: Sequence[int], r: Optional[int] = None) -> "EdgeColoring":
        """Rename color ``c`` to ``mapping[c - 1]``; ``r`` may grow to add unused colors."""
        r = self.r if r is None else r
        return EdgeColoring(self.n, r, tuple(mapping[c - 1] for c in self.colors))

    def _check_color(self, color: int) -> None:
        if not 1 <= color <= self.r:
            raise ValueError(f"color {color} outside 1..{self.r}")


@dataclass(frozen=True)
class CliqueWitness:
    color: int
    vertices: tuple[int, ...]


@dataclass(frozen=True)
class VerificationReport:
    valid: bool
    params: tuple[int, ...]
    counterexample: Optional[CliqueWitness] = None
    implied_fact: Optional[str] = field(default=None)

    def __str__(self) -> str:
        ks = ",".join(map(str, self.params))
        if self.valid:
            return f"valid witness for ({ks}): {self.implied_fact}"
        cx = self.counterexample
        verts = " ".join(map(str, cx.vertices))
        return f"invalid for ({ks}): color {cx.color} has K_{len(cx.vertices)} on {verts}"


def make_coloring(n: int, r: int, upper_triangle: Iterable[int]) -> EdgeColoring:
    return EdgeColoring(n, r, tuple(int(c) for c in upper_triangle))


def _check_difference_classes(m: int, classes: Sequence[Iterable[int]]) -> list[frozenset[int]]:
    sets = [frozenset(int(d) for d in cls) for cls in classes]
    seen: dict[int, int] = {}
    for idx, s in enumerate(sets):
        for d in s:
            if not 1 <= d <= m - 1:
                raise ValueError(f"difference {d} outside 1..{m - 1}")
            if d in seen:
                raise ValueError(f"difference {d} appears in classes {seen[d] + 1} and {idx + 1}")
            seen[d] = idx
            if (m - d) not in s:
                raise ValueError(f"class {idx + 1} is not symmetric: has {d} but not {m - d}")
    missing = sorted(set(range(1, m)) - seen.keys())
    if missing:
        raise ValueError(f"differences not covered by any class: {missing}")
    return sets


def cyclic_coloring(m: int, classes: Sequence[Iterable[int]]) -> EdgeColoring:
    """Circulant coloring of ``K_m``: {i, j} gets the class holding (j - i) mod m."""
    sets = _check_difference_classes(m, classes)
    if not sets:
        raise ValueError("need at least one class")
    which = {d: idx + 1 for idx, s in enumerate(sets) for d in s}
    colors = tuple(which[(j - i) % m] for i in range(m) for j in range(i + 1, m))
    return EdgeColoring(m, len(sets), colors)


def find_mono_clique(c: EdgeColoring, color: int, k: int) -> Optional[CliqueWitness]:
    """Lexicographically least ``k``-clique in one color class, or None.

    Exact: the search is exhaustive up to pruning that cannot discard a clique.
    ``k = 1`` returns vertex 0 and ``k = 2`` any edge of the color.
    """
    c._check_color(color)
    if k < 1:
        raise ValueError(f"clique size must be >= 1, got {k}")
    found = find_clique(c.neighbor_masks(color), k)
    if found is None:
        return None
    return CliqueWitness(color, tuple(found))


def verify_witness(c: EdgeColoring, params: Sequence[int]) -> VerificationReport:
    """Check that color ``i`` has no ``K_{params[i-1]}`` for every ``i``.

    A valid coloring on ``n`` vertices certifies ``R(params) >= n + 1``.
    """
    ks = tuple(int(k) for k in params)
    if len(ks) != c.r:
        raise ValueError(f"{len(ks)} clique targets given for a {c.r}-coloring")
    if any(k < 1 for k in ks):
        raise ValueError("clique targets must be >= 1")
    for color, k in enumerate(ks, start=1):
        hit = find_mono_clique(c, color, k)
        if hit is not None:
            return VerificationReport(False, ks, hit)
    fact = f"R({','.join(map(str, sorted(ks)))}) >= {c.n + 1}"
    return VerificationReport(True, ks, None, fact)


def naive_mono_clique(c: EdgeColoring, color: int, k: int) -> Optional[CliqueWitness]:
    """Brute-force reference: scan all ``k``-subsets in lex order."""
    for combo in combinations(range(c.n), k):
        if all(c.color(a, b) == color for a, b in combinations(combo, 2)):
            return CliqueWitness(color, combo)
    return None
