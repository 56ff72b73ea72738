"""Knowledge base of Ramsey-number bounds and its closure under inference rules.

Every bound carries a :class:`Derivation`; closure runs chaotic iteration of
monotone rules over a finite, budgeted set of parameter vectors, so the
resulting values do not depend on the order in which rules fire.
"""

from __future__ import annotations

import math
from collections import Counter, deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Callable, Iterable, NamedTuple, Optional, Sequence

Params = tuple[int, ...]

RULES = (
    "R-base",
    "R-mono",
    "R-ES",
    "R-abbott",
    "R-diagprod",
    "R-power",
    "R-2r",
    "R-r3cf",
    "R-befs",
    "R-dc",
)

DC = "DC"
DC_STRICT = "DC-strict"

LOWER, UPPER, EXACT = "lower", "upper", "exact"


def canonicalize(raw: Iterable[int]) -> Params:
    ks = tuple(sorted(int(k) for k in raw))
    if not ks:
        raise ValueError("params must be nonempty")
    if ks[0] < 2:
        raise ValueError(f"every clique target must be >= 2, got {ks[0]}")
    return ks


def reduce_params(p: Params) -> Params:
    """Drop 2-entries, using R(2, rest) = R(rest); all-2 vectors become (2,)."""
    rest = tuple(k for k in p if k != 2)
    return rest if rest else (2,)


def fmt_params(p: Sequence[int]) -> str:
    return f"R({','.join(map(str, p))})"


def is_diagonal(p: Params) -> bool:
    return all(k == p[0] for k in p)


@lru_cache(maxsize=None)
def r3cf_bound(r: int) -> int:
    """floor((e - 1/6) * r!) + 1, with the floor decided by rational bracketing.

    e lies strictly between the partial sum S_N = sum_{j<=N} 1/j! and
    S_N + 1/(N! * N); N grows until both ends share a floor.
    """
    fact = math.factorial(r)
    n_terms = r + 2
    partial = sum(Fraction(1, math.factorial(j)) for j in range(n_terms + 1))
    while True:
        tail = Fraction(1, math.factorial(n_terms) * n_terms)
        lo = math.floor((partial - Fraction(1, 6)) * fact)
        hi = math.floor((partial + tail - Fraction(1, 6)) * fact)
        if lo == hi:
            return lo + 1
        n_terms += 1
        partial += Fraction(1, math.factorial(n_terms))


@dataclass(frozen=True, eq=False)
class Derivation:
    """Justification of one bound: a rule applied to earlier bounds.

    ``combine`` recomputes ``value`` from the premise values, so every node
    can be re-checked after the fact.
    """

    params: Params
    kind: str
    value: int
    rule: str
    premises: tuple["Derivation", ...] = ()
    note: str = ""
    combine: Optional[Callable[[list[int]], int]] = field(default=None, repr=False)
    depth: int = field(init=False)

    def __post_init__(self):
        depth = 1 + max((p.depth for p in self.premises), default=-1) if self.premises else 0
        object.__setattr__(self, "depth", depth)

    def recheck(self) -> bool:
        if self.combine is None:
            return not self.premises
        return self.combine([p.value for p in self.premises]) == self.value

    def rules_used(self) -> set[str]:
        out = {self.rule}
        for p in self.premises:
            out |= p.rules_used()
        return out

    def conclusion(self) -> str:
        op = ">=" if self.kind == LOWER else "<="
        return f"{fmt_params(self.params)} {op} {self.value}"

    def render(self) -> str:
        lines: list[str] = []

        def walk(node: "Derivation", indent: int) -> None:
            if not node.recheck():
                raise ArithmeticError(f"derivation of {node.conclusion()} does not re-check")
            detail = f" {node.note}" if node.note else ""
            lines.append(f"{'  ' * indent}{node.conclusion()}  [{node.rule}]{detail}")
            for p in node.premises:
                walk(p, indent + 1)

        walk(self, 0)
        return "\n".join(lines)


class Source(NamedTuple):
    tag: str
    premises: tuple[str, ...]
    citation: str


@dataclass
class BoundFact:
    params: Params
    lower: Optional[int] = None
    upper: Optional[int] = None
    lower_proof: Optional[Derivation] = None
    upper_proof: Optional[Derivation] = None
    sources: list[Source] = field(default_factory=list)


class KnowledgeBase:
    """Bounds keyed by canonical params, tightened monotonically."""

    def __init__(self, assumptions: Iterable[str] = ()):
        self.facts: dict[Params, BoundFact] = {}
        self.assumptions: set[str] = set(assumptions)
        self.notes: dict[Params, list[str]] = {}
        self.inconsistent: Optional[tuple[Params, int, int]] = None

    def __contains__(self, params) -> bool:
        return canonicalize(params) in self.facts

    def __len__(self) -> int:
        return len(self.facts)

    def copy(self) -> "KnowledgeBase":
        kb = KnowledgeBase(self.assumptions)
        for p, f in self.facts.items():
            kb.facts[p] = BoundFact(p, f.lower, f.upper, f.lower_proof, f.upper_proof, list(f.sources))
        kb.notes = {p: list(v) for p, v in self.notes.items()}
        kb.inconsistent = self.inconsistent
        return kb

    def snapshot(self) -> dict[Params, tuple[Optional[int], Optional[int]]]:
        return {p: (f.lower, f.upper) for p, f in sorted(self.facts.items())}

    def annotate(self, params, text: str) -> None:
        self.notes.setdefault(canonicalize(params), []).append(text)

    def assert_fact(self, params, kind: str, value: int, source: str = "") -> "KnowledgeBase":
        if kind not in (LOWER, UPPER, EXACT):
            raise ValueError(f"kind must be lower, upper or exact, got {kind!r}")
        value = int(value)
        if value < 1:
            raise ValueError(f"bound values must be >= 1, got {value}")
        p = canonicalize(params)
        kinds = (LOWER, UPPER) if kind == EXACT else (kind,)
        for k in kinds:
            self.improve(Derivation(p, k, value, "external", note=source))
        return self

    def improve(self, d: Derivation) -> bool:
        """Record ``d`` if it is tighter (or equally tight but shallower)."""
        fact = self.facts.get(d.params)
        if fact is None:
            fact = self.facts[d.params] = BoundFact(d.params)
        if d.kind == LOWER:
            cur, proof = fact.lower, fact.lower_proof
            better = cur is None or d.value > cur or (d.value == cur and d.depth < proof.depth)
        else:
            cur, proof = fact.upper, fact.upper_proof
            better = cur is None or d.value < cur or (d.value == cur and d.depth < proof.depth)
        if not better:
            return False
        if d.kind == LOWER:
            fact.lower, fact.lower_proof = d.value, d
        else:
            fact.upper, fact.upper_proof = d.value, d
        fact.sources.append(
            Source(d.rule, tuple(x.conclusion() for x in d.premises), d.note if d.rule == "external" else "")
        )
        if fact.lower is not None and fact.upper is not None and fact.lower > fact.upper:
            if self.inconsistent is None:
                self.inconsistent = (d.params, fact.lower, fact.upper)
        return True

    def proof(self, params, kind: str) -> Optional[Derivation]:
        fact = self.facts.get(canonicalize(params))
        if fact is None:
            return None
        return fact.lower_proof if kind == LOWER else fact.upper_proof


def best_bounds(kb: KnowledgeBase, params) -> tuple[Optional[int], Optional[int]]:
    """Known (lower, upper) for ``params`` in any order; (None, None) if unknown."""
    p = canonicalize(params)
    fact = kb.facts.get(p)
    if fact is None and 2 in p:
        fact = kb.facts.get(reduce_params(p))
    if fact is None:
        return None, None
    return fact.lower, fact.upper


def explain(kb: KnowledgeBase, params, kind: str) -> str:
    """Render the derivation tree behind one stored bound."""
    if kind not in (LOWER, UPPER):
        raise ValueError("kind must be lower or upper")
    p = canonicalize(params)
    proof = kb.proof(p, kind)
    if proof is None and 2 in p:
        proof = kb.proof(reduce_params(p), kind)
    if proof is None:
        raise KeyError(f"no {kind} bound known for {fmt_params(p)}")
    return proof.render()


# --- closure -----------------------------------------------------------------


@dataclass
class ClosureStats:
    passes: int = 0
    updates: int = 0
    universe: int = 0
    out_of_budget: int = 0


def _replace(p: Params, i: int, new: int) -> list[int]:
    out = list(p)
    out[i] = new
    return out


def _distinct_indices(p: Params) -> list[int]:
    return [i for i in range(len(p)) if i == 0 or p[i] != p[i - 1]]


def _index_pairs(p: Params) -> list[tuple[int, int]]:
    """Index pairs i < j with distinct value pairs (p[i], p[j])."""
    seen = set()
    out = []
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if (p[i], p[j]) not in seen:
                seen.add((p[i], p[j]))
                out.append((i, j))
    return out


def _submultisets(p: Params) -> list[tuple[Params, Params]]:
    counts = sorted(Counter(p).items())
    out = []
    for take in product(*(range(c + 1) for _, c in counts)):
        a = tuple(k for (k, _), t in zip(counts, take) for _ in range(t))
        b = tuple(k for (k, c), t in zip(counts, take) for _ in range(c - t))
        if a and b and a <= b:
            out.append((a, b))
    return out


class _Closure:
    def __init__(self, kb: KnowledgeBase, rules: Sequence[str], max_r: int, max_k: int, es_even: bool):
        unknown = set(rules) - set(RULES)
        if unknown:
            raise ValueError(f"unknown rules: {sorted(unknown)}")
        self.kb = kb
        self.rules = list(dict.fromkeys(rules))
        self.enabled = set(self.rules)
        self.max_r, self.max_k = max_r, max_k
        self.es_even = es_even
        self.base = "R-base" in self.enabled
        self.strict = DC_STRICT in kb.assumptions
        self.dc = "R-dc" in self.enabled and bool({DC, DC_STRICT} & kb.assumptions)
        self.stats = ClosureStats()
        self.universe: set[Params] = set()
        self.literals_of: dict[Params, list[Params]] = {}

    # keys and neighbourhoods

    def key(self, raw: Iterable[int]) -> Params:
        p = canonicalize(raw)
        return reduce_params(p) if self.base else p

    def in_budget(self, p: Params) -> bool:
        return len(reduce_params(p)) <= self.max_r and p[-1] <= self.max_k

    def decrements(self, p: Params) -> list[Params]:
        return [self.key(_replace(p, i, p[i] - 1)) for i in _distinct_indices(p) if p[i] >= 3]

    def increments(self, p: Params) -> list[Params]:
        out = [self.key(_replace(p, i, p[i] + 1)) for i in _distinct_indices(p)]
        if self.base:
            out.append(self.key(p + (3,)))
        return out

    def splits(self, p: Params) -> list[tuple[Params, Params]]:
        return [(self.key(a), self.key(b)) for a, b in _submultisets(p)]

    def diag_premises(self, p: Params) -> list[tuple[int, int, Params, Params]]:
        if not is_diagonal(p) or p[0] < 5:
            return []
        k, r = p[0], len(p)
        out = []
        for s in range(2, k):
            t, rem = divmod(k - 1, s)
            if rem or t < s:
                continue
            out.append((s, t, self.key((s + 1,) * r), self.key((t + 1,) * r)))
        return out

    def befs_premise(self, p: Params) -> Optional[tuple[int, Params]]:
        if len(p) != 2 or 4 not in p:
            return None
        t = p[1] if p[0] == 4 else p[0]
        if t < 3:
            return None
        return t, self.key((3, t))

    def dc_away(self, p: Params) -> list[Params]:
        """Params obtained by moving one pair (a, b), a <= b, to (a - 1, b + 1)."""
        if len(p) < 2 or p[0] < 3:
            return []
        out = []
        for i, j in _index_pairs(p):
            q = list(p)
            q[i] -= 1
            q[j] += 1
            out.append(self.key(q))
        return out

    def dc_toward(self, p: Params) -> list[Params]:
        """Params P whose moved-away neighbour is ``p`` (as a key)."""
        cands = []
        for i, j in _index_pairs(p):
            if p[i] + 1 <= p[j] - 1:
                q = list(p)
                q[i] += 1
                q[j] -= 1
                cands.append(tuple(q))
        if self.base:
            # p may be the reduction of (2, rest): lift the 2 back to 3
            for j in _distinct_indices(p):
                if p[j] >= 4:
                    cands.append(tuple(_replace(p, j, p[j] - 1)) + (3,))
        out = []
        for q in cands:
            q = canonicalize(q)
            if q[0] >= 3 and p in self.dc_away(q):
                out.append(self.key(q))
        return out

    def premise_params(self, p: Params) -> list[Params]:
        on = self.enabled
        out: list[Params] = []
        if self.base and 2 in p:
            out.append(reduce_params(p))
        if on & {"R-mono", "R-ES"}:
            out += self.decrements(p)
        if "R-abbott" in on and len(p) > 1:
            for a, b in self.splits(p):
                out += [a, b]
        if "R-diagprod" in on:
            for _, _, a, b in self.diag_premises(p):
                out += [a, b]
        if "R-befs" in on:
            hit = self.befs_premise(p)
            if hit:
                out.append(hit[1])
        if self.dc:
            out += self.dc_away(p)
            out += self.dc_toward(p)
        return out

    def build_universe(self, roots: Iterable[Params]) -> None:
        queue = deque()
        for p in roots:
            for q in {p, self.key(p)}:
                if q not in self.universe:
                    self.universe.add(q)
                    queue.append(q)
        while queue:
            p = queue.popleft()
            for q in self.premise_params(p):
                if q in self.universe:
                    continue
                if not self.in_budget(q):
                    self.stats.out_of_budget += 1
                    continue
                self.universe.add(q)
                queue.append(q)
        if self.base:
            for p in self.universe:
                if 2 in p and len(p) > 1:
                    self.literals_of.setdefault(reduce_params(p), []).append(p)
        self.stats.universe = len(self.universe)

    # rule bodies: each yields candidate Derivations concluding at p

    def _proof(self, p: Params, kind: str) -> Optional[Derivation]:
        if p not in self.universe:
            return None
        return self.kb.proof(p, kind)

    def rule_base(self, p):
        if len(p) == 1:
            for kind in (LOWER, UPPER):
                yield Derivation(p, kind, p[0], "R-base", note=f"{fmt_params(p)} = {p[0]}")
            return
        links = [reduce_params(p)] if 2 in p else self.literals_of.get(p, [])
        for q in links:
            for kind in (LOWER, UPPER):
                d = self._proof(q, kind)
                if d is not None:
                    yield Derivation(p, kind, d.value, "R-base", (d,), "R(2,rest) = R(rest)", lambda v: v[0])

    def rule_mono(self, p):
        for q in self.decrements(p):
            d = self._proof(q, LOWER)
            if d is not None:
                yield Derivation(p, LOWER, d.value, "R-mono", (d,), "", lambda v: v[0])
        for q in self.increments(p):
            d = self._proof(q, UPPER)
            if d is not None:
                yield Derivation(p, UPPER, d.value, "R-mono", (d,), "", lambda v: v[0])

    def rule_es(self, p):
        r = len(p)
        proofs: list[Derivation] = []
        mult: list[int] = []
        ones = 0
        for i in range(r):
            if p[i] == 2:
                ones += 1  # R(..., 1, ...) = 1
                continue
            d = self._proof(self.key(_replace(p, i, p[i] - 1)), UPPER)
            if d is None:
                return
            for idx, prev in enumerate(proofs):
                if prev is d:
                    mult[idx] += 1
                    break
            else:
                proofs.append(d)
                mult.append(1)
        values = [d.value for d in proofs]
        terms = [v for v, m in zip(values, mult) for _ in range(m)] + [1] * ones
        even = self.es_even and r == 2 and len(terms) == 2 and all(t % 2 == 0 for t in terms)
        adjust = 1 if even else 0
        const = 2 - r + ones - adjust

        def combine(v, mult=tuple(mult), const=const):
            return const + sum(x * m for x, m in zip(v, mult))

        parts = " + ".join(f"{m}*{v}" if m > 1 else str(v) for v, m in zip(values, mult))
        if ones:
            parts += f" + {ones}*1"
        note = f"2 - {r} + {parts}" + (" - 1 (both even)" if even else "")
        yield Derivation(p, UPPER, combine(values), "R-ES", tuple(proofs), note, combine)

    def rule_abbott(self, p):
        if len(p) < 2:
            return
        for a, b in self.splits(p):
            da, db = self._proof(a, LOWER), self._proof(b, LOWER)
            if da is None or db is None:
                continue
            val = (da.value - 1) * (db.value - 1) + 1
            note = f"({da.value}-1)*({db.value}-1) + 1"
            yield Derivation(p, LOWER, val, "R-abbott", (da, db), note, lambda v: (v[0] - 1) * (v[1] - 1) + 1)

    def rule_diagprod(self, p):
        for s, t, a, b in self.diag_premises(p):
            da, db = self._proof(a, LOWER), self._proof(b, LOWER)
            if da is None or db is None:
                continue
            val = (da.value - 1) * (db.value - 1) + 1
            note = f"s={s}, t={t}: ({da.value}-1)*({db.value}-1) + 1"
            yield Derivation(p, LOWER, val, "R-diagprod", (da, db), note, lambda v: (v[0] - 1) * (v[1] - 1) + 1)

    def rule_power(self, p):
        if is_diagonal(p):
            k, r = p[0], len(p)
            yield Derivation(p, LOWER, (k - 1) ** r + 1, "R-power", note=f"({k}-1)^{r} + 1")

    def rule_2r(self, p):
        if p[0] == 3 and is_diagonal(p):
            yield Derivation(p, LOWER, 2 ** len(p) + 1, "R-2r", note=f"2^{len(p)} + 1")

    def rule_r3cf(self, p):
        if p[0] == 3 and is_diagonal(p) and len(p) >= 4:
            r = len(p)
            yield Derivation(p, UPPER, r3cf_bound(r), "R-r3cf", note=f"floor((e - 1/6)*{r}!) + 1")

    def rule_befs(self, p):
        hit = self.befs_premise(p)
        if hit is None:
            return
        t, q = hit
        d = self._proof(q, LOWER)
        if d is not None:
            val = d.value + 2 * t - 3
            note = f"{d.value} + 2*{t} - 3"
            yield Derivation(p, LOWER, val, "R-befs", (d,), note, lambda v, t=t: v[0] + 2 * t - 3)

    def rule_dc(self, p):
        if not self.dc:
            return
        bump = 1 if self.strict else 0
        tag = DC_STRICT if self.strict else DC
        for q in self.dc_away(p):
            d = self._proof(q, LOWER)
            if d is not None:
                yield Derivation(
                    p, LOWER, d.value + bump, "R-dc", (d,), f"assuming {tag}", lambda v, b=bump: v[0] + b
                )
        for q in self.dc_toward(p):
            d = self._proof(q, UPPER)
            if d is not None:
                yield Derivation(
                    p, UPPER, d.value - bump, "R-dc", (d,), f"assuming {tag}", lambda v, b=bump: v[0] - b
                )

    def run(self, max_passes: int = 10_000) -> ClosureStats:
        bodies = {
            "R-base": self.rule_base,
            "R-mono": self.rule_mono,
            "R-ES": self.rule_es,
            "R-abbott": self.rule_abbott,
            "R-diagprod": self.rule_diagprod,
            "R-power": self.rule_power,
            "R-2r": self.rule_2r,
            "R-r3cf": self.rule_r3cf,
            "R-befs": self.rule_befs,
            "R-dc": self.rule_dc,
        }
        order = sorted(self.universe, key=lambda p: (sum(p), len(p), p))
        changed = True
        while changed:
            if self.stats.passes >= max_passes:
                raise RuntimeError("closure did not reach a fixpoint")
            changed = False
            self.stats.passes += 1
            for name in self.rules:
                body = bodies[name]
                for p in order:
                    for d in body(p):
                        if d.value >= 1 and self.kb.improve(d):
                            self.stats.updates += 1
                            changed = True
        return self.stats


def derive_closure(
    kb: KnowledgeBase,
    rules: Optional[Sequence[str]] = None,
    *,
    max_r: int = 10,
    max_k: int = 17,
    targets: Iterable[Iterable[int]] = (),
    es_even: bool = False,
) -> ClosureStats:
    """Close ``kb`` in place under ``rules`` (default: all, R-dc only under DC).

    The params considered are the existing keys, the ``targets`` and the
    diagonal vectors (3,...,3) up to ``max_r`` colors, together with every
    vector their enabled rules draw premises from, within the budget.
    """
    rules = list(RULES) if rules is None else list(rules)
    closure = _Closure(kb, rules, max_r, max_k, es_even)
    roots = list(kb.facts)
    roots += [canonicalize(t) for t in targets]
    roots += [(3,) * r for r in range(1, max_r + 1)]
    closure.build_universe(roots)
    return closure.run()


# --- DC consistency ----------------------------------------------------------


class DCPairStatus(NamedTuple):
    moved: Params  # P1, the pair pushed away from the diagonal
    original: Params  # P2
    lower_moved: Optional[int]
    lower_original: Optional[int]
    upper_original: Optional[int]
    status: str  # contradiction | not-followed | consistent


def dc_moved(p2) -> list[Params]:
    """All P1 obtained from P2 by one move (a, b) -> (a - 1, b + 1), a <= b."""
    p = canonicalize(p2)
    if len(p) < 2 or p[0] < 3:
        return []
    out = []
    for i, j in _index_pairs(p):
        q = list(p)
        q[i] -= 1
        q[j] += 1
        out.append(canonicalize(q))
    return out


def _has_bounds(kb: KnowledgeBase, p: Params) -> bool:
    return best_bounds(kb, p) != (None, None)


def dc_status(kb: KnowledgeBase, p1, p2) -> DCPairStatus:
    p1, p2 = canonicalize(p1), canonicalize(p2)
    if p1 not in dc_moved(p2):
        raise ValueError(f"{fmt_params(p1)} is not a DC move of {fmt_params(p2)}")
    lb1, _ = best_bounds(kb, p1)
    lb2, ub2 = best_bounds(kb, p2)
    if lb1 is not None and ub2 is not None and lb1 > ub2:
        status = "contradiction"
    elif lb1 is not None and lb2 is not None and lb1 > lb2:
        status = "not-followed"
    else:
        status = "consistent"
    return DCPairStatus(p1, p2, lb1, lb2, ub2, status)


def check_dc(
    kb: KnowledgeBase,
    pairs: Optional[Iterable[tuple[Iterable[int], Iterable[int]]]] = None,
    *,
    max_r: int = 10,
    max_k: int = 17,
) -> list[DCPairStatus]:
    """Classify DC-adjacent pairs (P1 moved away, P2 original).

    Without explicit ``pairs``, every P2 in the KB (within budget) is paired
    with each of its moves P1 that the KB also knows something about.
    """
    if pairs is not None:
        return [dc_status(kb, p1, p2) for p1, p2 in pairs]
    out = []
    for p2 in sorted(kb.facts, key=lambda p: (len(p), p)):
        if len(p2) > max_r:
            continue
        for p1 in dc_moved(p2):
            if p1[-1] <= max_k and _has_bounds(kb, p1):
                out.append(dc_status(kb, p1, p2))
    return out


# --- growth-rate proxies -----------------------------------------------------


def _root(x: int, r: int) -> float:
    return math.exp(math.log(x) / r) if x > 0 else 0.0


class RatioRow(NamedTuple):
    r: int
    lower: Optional[int]
    upper: Optional[int]
    lower_root: Optional[float]  # (lower - 1)^(1/r)
    upper_root: Optional[float]  # (upper - 1)^(1/r)


@dataclass
class RatioReport:
    k: int
    rows: list[RatioRow]
    sup_lower: Optional[float]

    def format(self) -> str:
        def cell(x):
            return "?" if x is None else f"{x:.4f}"

        lines = [f"k={self.k}", f"{'r':>3} {'lower':>10} {'upper':>10} {'(lo-1)^(1/r)':>13} {'(up-1)^(1/r)':>13}"]
        for row in self.rows:
            lo = "?" if row.lower is None else str(row.lower)
            up = "?" if row.upper is None else str(row.upper)
            lines.append(f"{row.r:>3} {lo:>10} {up:>10} {cell(row.lower_root):>13} {cell(row.upper_root):>13}")
        lines.append(f"sup over r of (lower-1)^(1/r): {cell(self.sup_lower)}")
        return "\n".join(lines)


def ratio_report(kb: KnowledgeBase, k: int, r_max: int) -> RatioReport:
    """Finite-r proxies for the growth rate of R_r(k), i.e. (R_r(k) - 1)^(1/r).

    R_r(k) - 1 is supermultiplicative in r, so the running supremum of the
    lower-bound roots is itself a lower bound on the limit.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    rows = []
    for r in range(1, r_max + 1):
        lo, up = best_bounds(kb, (k,) * r)
        if lo is None and up is None:
            continue
        lo_root = _root(lo - 1, r) if lo is not None else None
        up_root = _root(up - 1, r) if up is not None else None
        rows.append(RatioRow(r, lo, up, lo_root, up_root))
    roots = [row.lower_root for row in rows if row.lower_root is not None]
    return RatioReport(k, rows, max(roots) if roots else None)
