"""Exact clique search over bitmask adjacency.

Graphs are given as a list ``masks`` where bit ``j`` of ``masks[i]`` is set
iff ``i`` and ``j`` are adjacent.  Python ints serve as arbitrary-width
bitsets, so neighbourhood intersection is a single ``&``.
"""

from __future__ import annotations

from itertools import combinations
from typing import Optional, Sequence


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _color_bound(masks: Sequence[int], cand: int, need: int) -> bool:
    """True if a greedy coloring of ``cand`` uses at least ``need`` colors."""
    used = 0
    uncolored = cand
    while uncolored:
        used += 1
        if used >= need:
            return True
        q = uncolored
        while q:
            low = q & -q
            v = low.bit_length() - 1
            uncolored ^= low
            q &= ~masks[v]
            q ^= low
    return False


def find_clique(masks: Sequence[int], k: int, within: Optional[int] = None) -> Optional[list[int]]:
    """Return the lexicographically least ``k``-clique, or None.

    Vertices are branched on in increasing order, so the first clique reached
    is the lex-least one; pruning only discards subtrees that provably hold
    no ``k``-clique, which keeps that property intact.
    """
    n = len(masks)
    if within is None:
        within = (1 << n) - 1
    if k <= 0:
        return []
    if k == 1:
        if not within:
            return None
        return [(within & -within).bit_length() - 1]

    stack: list[int] = []

    def extend(cand: int, need: int) -> bool:
        if need == 0:
            return True
        if cand.bit_count() < need:
            return False
        if need > 2 and not _color_bound(masks, cand, need):
            return False
        rest = cand
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            # only vertices above v remain, so later branches see fewer candidates
            if rest.bit_count() + 1 < need:
                return False
            stack.append(v)
            if extend(rest & masks[v], need - 1):
                return True
            stack.pop()
        return False

    if extend(within, k):
        return list(stack)
    return None


class _Done(Exception):
    pass


def max_clique(masks: Sequence[int], lower: int = 0, stop_at: Optional[int] = None) -> list[int]:
    """Maximum clique by branch and bound with greedy-coloring bounds.

    ``lower`` is a size already known to be achievable; it only sharpens
    pruning, the returned clique is still exact.  Vertices are renumbered by
    non-increasing degree so low bits are the high-degree vertices.
    """
    n = len(masks)
    if n == 0:
        return []
    order = sorted(range(n), key=lambda v: (-masks[v].bit_count(), v))
    pos = {v: i for i, v in enumerate(order)}
    adj = [0] * n
    for i, v in enumerate(order):
        m = 0
        for u in _bits(masks[v]):
            m |= 1 << pos[u]
        adj[i] = m

    best: list[int] = []
    best_size = max(lower - 1, 0)
    current: list[int] = []

    def color_sort(cand: int) -> tuple[list[int], list[int]]:
        verts: list[int] = []
        cols: list[int] = []
        uncolored = cand
        col = 0
        while uncolored:
            col += 1
            q = uncolored
            while q:
                low = q & -q
                v = low.bit_length() - 1
                uncolored ^= low
                q &= ~adj[v]
                q ^= low
                verts.append(v)
                cols.append(col)
        return verts, cols

    def expand(cand: int) -> None:
        nonlocal best, best_size
        verts, cols = color_sort(cand)
        for idx in range(len(verts) - 1, -1, -1):
            if len(current) + cols[idx] <= best_size:
                return
            v = verts[idx]
            current.append(v)
            nxt = cand & adj[v]
            if nxt:
                expand(nxt)
            elif len(current) > best_size:
                best = list(current)
                best_size = len(best)
                if stop_at is not None and best_size >= stop_at:
                    raise _Done
            current.pop()
            cand &= ~(1 << v)

    try:
        expand((1 << n) - 1)
    except _Done:
        pass
    if not best:
        # everything was pruned against ``lower``; fall back to a plain search
        if lower > 1:
            return max_clique(masks, 0)
        best = [0]
    return sorted(order[i] for i in best)


def naive_find_clique(masks: Sequence[int], k: int) -> Optional[list[int]]:
    """Reference search: enumerate all ``k``-subsets in lex order."""
    n = len(masks)
    if k <= 0:
        return []
    for combo in combinations(range(n), k):
        if all(masks[a] >> b & 1 for a, b in combinations(combo, 2)):
            return list(combo)
    return None


def complement_masks(masks: Sequence[int]) -> list[int]:
    n = len(masks)
    full = (1 << n) - 1
    return [(~m & full) & ~(1 << i) for i, m in enumerate(masks)]
