"""Independence numbers of strong graph powers, as finite capacity probes."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional

from .clique import complement_masks, max_clique
from .coloring import EdgeColoring

DEFAULT_VERTEX_BUDGET = 4096


class BudgetExceeded(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on 0..n-1 with bitmask neighbourhoods."""

    n: int
    masks: tuple[int, ...]

    def __post_init__(self):
        if len(self.masks) != self.n:
            raise ValueError("need one neighbourhood mask per vertex")
        for v, m in enumerate(self.masks):
            if m >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            if m >> self.n:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
        for v, m in enumerate(self.masks):
            u = m
            while u:
                low = u & -u
                w = low.bit_length() - 1
                if not self.masks[w] >> v & 1:
                    raise ValueError(f"edge {v}-{w} is not symmetric")
                u ^= low

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        masks = [0] * n
        for a, b in edges:
            masks[a] |= 1 << b
            masks[b] |= 1 << a
        return cls(n, tuple(masks))

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.masks[v].bit_count()

    def edges(self):
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if self.masks[u] >> v & 1:
                    yield u, v

    def is_independent(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        mask = 0
        for v in vs:
            mask |= 1 << v
        return len(set(vs)) == len(vs) and all(not (self.masks[v] & mask) for v in vs)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def circulant(m: int, jumps: Iterable[int]) -> Graph:
    ds = {d % m for d in jumps} | {(-d) % m for d in jumps}
    ds.discard(0)
    return Graph(m, tuple(sum(1 << ((v + d) % m) for d in ds) for v in range(m)))


def color_class(c: EdgeColoring, color: int) -> Graph:
    """The graph formed by the edges of one color."""
    return Graph(c.n, tuple(c.neighbor_masks(color)))


def strong_product(g: Graph, h: Graph) -> Graph:
    """G ⊠ H on pairs (u, v), indexed u * h.n + v."""
    nh = h.n
    closed_h = [m | (1 << v) for v, m in enumerate(h.masks)]
    # spread a mask over h-vertices into the block of every listed g-vertex
    masks = []
    for u in range(g.n):
        closed_g = g.masks[u] | (1 << u)
        for v in range(nh):
            m = 0
            rest = closed_g
            while rest:
                low = rest & -rest
                u2 = low.bit_length() - 1
                m |= closed_h[v] << (u2 * nh)
                rest ^= low
            masks.append(m & ~(1 << (u * nh + v)))
    return Graph(g.n * nh, tuple(masks))


def strong_power(g: Graph, r: int, vertex_budget: int = DEFAULT_VERTEX_BUDGET) -> Graph:
    if r < 1:
        raise ValueError("power must be >= 1")
    if g.n ** r > vertex_budget:
        raise BudgetExceeded(f"{g.n}^{r} = {g.n ** r} vertices exceeds the budget of {vertex_budget}")
    out = g
    for _ in range(r - 1):
        out = strong_product(out, g)
    return out


def maximum_independent_set(g: Graph) -> list[int]:
    if g.n == 0:
        return []
    return max_clique(complement_masks(g.masks))


def independence_number(g: Graph) -> int:
    """Exact α(g) via maximum clique search in the complement."""
    return len(maximum_independent_set(g))


def independent_set_of_size(g: Graph, size: int) -> Optional[list[int]]:
    """An independent set with at least ``size`` vertices, or None if α(g) < size.

    Exact decision: the search stops at the first set reaching ``size``, so it
    settles α(g) >= size without having to prove optimality.
    """
    if size <= 0:
        return []
    if size > g.n:
        return None
    found = max_clique(complement_masks(g.masks), stop_at=size)
    return found if len(found) >= size else None


class CapacityProbe(NamedTuple):
    value: float
    power: int
    alphas: tuple[int, ...]  # α(g^⊠r) for r = 1..r_max


def capacity_lower(g: Graph, r_max: int, vertex_budget: int = DEFAULT_VERTEX_BUDGET) -> CapacityProbe:
    """max over 1 <= r <= r_max of α(g^⊠r)^(1/r), with the power achieving it."""
    if r_max < 1:
        raise ValueError("r_max must be >= 1")
    if g.n ** r_max > vertex_budget:
        raise BudgetExceeded(f"{g.n}^{r_max} = {g.n ** r_max} vertices exceeds the budget of {vertex_budget}")
    alphas = []
    best, best_r = -1.0, 0
    power = None
    for r in range(1, r_max + 1):
        power = g if power is None else strong_product(power, g)
        a = independence_number(power)
        alphas.append(a)
        root = a ** (1.0 / r)
        # ties keep the smaller power; equal roots may differ in the last float bit
        if root > best + 1e-12:
            best, best_r = root, r
    return CapacityProbe(best, best_r, tuple(alphas))


def parse_graph_literal(text: str) -> Graph:
    """``cyclic:<m>:<d1,d2,...>`` (circulant) or ``complete:<n>``."""
    kind, _, rest = text.partition(":")
    try:
        if kind == "complete":
            return complete_graph(int(rest))
        if kind == "cyclic":
            m_text, _, ds_text = rest.partition(":")
            m = int(m_text)
            jumps = [int(d) for d in ds_text.split(",") if d.strip()]
            return circulant(m, jumps)
    except ValueError:
        pass
    raise ValueError(f"bad graph literal {text!r}; use cyclic:<m>:<d1,d2,...> or complete:<n>")

