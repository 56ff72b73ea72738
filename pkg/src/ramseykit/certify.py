"""Turn lower-bound derivations back into explicit witness colorings.

A derivation of ``R(P) >= v`` built from product-type rules can be replayed
with the coloring constructors; the result should be a coloring of
``K_{v-1}`` that :func:`verify_witness` accepts for ``P``.
"""

from __future__ import annotations

from typing import Mapping

from .coloring import EdgeColoring, VerificationReport, verify_witness
from .construct import abbott_product, diagonal_product, single_color_clique
from .engine import LOWER, Derivation, Params, canonicalize

# A realized witness: a coloring plus the clique target of each color, in color order.
Realized = tuple[EdgeColoring, tuple[int, ...]]


class NotRealizable(ValueError):
    pass


def _align(real: Realized, target: Params) -> Realized:
    """Re-express a witness for ``ks`` as a witness for ``target``.

    Works when ``target`` dominates ``ks`` after padding with 2-entries (a
    2-entry is an unused color).  Colors are renumbered so color i carries
    ``target[i]``.
    """
    c, ks = real
    want = list(target)
    have = sorted(range(len(ks)), key=lambda i: ks[i])
    sizes = c.class_sizes()
    # a color with target 2 holds no edge and may be dropped
    while len(have) > len(want) and ks[have[0]] == 2 and sizes[have[0]] == 0:
        have.pop(0)
    if len(have) > len(want):
        raise NotRealizable(f"cannot fit {len(ks)} colors into {target}")
    spare = len(want) - len(have)
    mapping = [0] * len(ks)
    for rank, old in enumerate(have):
        slot = spare + rank
        if ks[old] > want[slot]:
            raise NotRealizable(f"witness for {tuple(sorted(ks))} does not dominate into {target}")
        mapping[old] = slot + 1
    return c.recolor(mapping, r=len(want)), tuple(want)


def realize(d: Derivation, witnesses: Mapping[Params, EdgeColoring]) -> Realized:
    """Replay ``d`` (a lower bound) as a coloring on ``d.value - 1`` vertices.

    ``witnesses`` maps canonical params to colorings whose colors are in
    canonical (sorted) order; external leaves must be found there.
    """
    if d.kind != LOWER:
        raise NotRealizable("only lower bounds have witnesses")
    p = d.params
    if d.rule == "external":
        c = witnesses.get(p)
        if c is None or c.n != d.value - 1:
            raise NotRealizable(f"no stored witness on {d.value - 1} vertices for {p}")
        return c, p
    if d.rule == "R-base":
        if not d.premises:
            return single_color_clique(p[0] - 1), p
        return _align(realize(d.premises[0], witnesses), p)
    if d.rule == "R-mono":
        return _align(realize(d.premises[0], witnesses), p)
    if d.rule == "R-abbott":
        ca, ka = realize(d.premises[0], witnesses)
        cb, kb = realize(d.premises[1], witnesses)
        return _align((abbott_product(ca, cb), ka + kb), p)
    if d.rule == "R-diagprod":
        ca, _ = realize(d.premises[0], witnesses)
        cb, _ = realize(d.premises[1], witnesses)
        return diagonal_product(ca, cb), p
    if d.rule in ("R-power", "R-2r"):
        k, r = p[0], len(p)
        c, ks = single_color_clique(k - 1), (k,)
        for _ in range(r - 1):
            c, ks = abbott_product(c, single_color_clique(k - 1)), ks + (k,)
        return c, ks
    raise NotRealizable(f"rule {d.rule} has no constructive counterpart")


def certify(d: Derivation, witnesses: Mapping[Params, EdgeColoring]) -> VerificationReport:
    """Realize ``d`` and verify the coloring exhaustively."""
    c, ks = realize(d, witnesses)
    if c.n != d.value - 1:
        raise AssertionError(f"realized {c.n} vertices for a bound of {d.value}")
    if canonicalize(ks) != d.params:
        raise AssertionError(f"realized params {ks} differ from {d.params}")
    return verify_witness(c, ks)
