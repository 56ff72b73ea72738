"""Plain-text formats: facts files, witness files, partition files.

Facts (one per line, ``#`` starts a comment)::

    R(3,3) = 6 src="exact"
    R(3,3,3,3) <= 62 src="computer-assisted"
    note R(3,3,3,3) "conjectured to equal 51"

Witness::

    witness v1
    n=5 r=2
    1 2 2 1
    ...

Cyclic witness::

    cyclic v1
    m=5 r=2
    class 1: 1 4
    class 2: 2 3

Partition::

    partition v1
    n=4 r=2 mode=linear
    part: 1 4
    part: 2 3
"""

from __future__ import annotations

import re
from importlib import resources
from pathlib import Path
from typing import Iterable, NamedTuple, Optional, Sequence, Union

from .coloring import EdgeColoring, cyclic_coloring
from .construct import SumFreePartition, check_partition_structure
from .engine import EXACT, LOWER, UPPER, KnowledgeBase, Params, canonicalize


class ParseError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class FactLine(NamedTuple):
    params: Params
    kind: str
    value: int
    source: str = ""


class NoteLine(NamedTuple):
    params: Params
    text: str


_OPS = {">=": LOWER, "<=": UPPER, "=": EXACT}
_OP_TEXT = {v: k for k, v in _OPS.items()}

_FACT_RE = re.compile(
    r'^R\(\s*(?P<ks>[^)]*)\)\s*(?P<op>>=|<=|=)\s*(?P<val>-?\d+)(?:\s+src="(?P<src>[^"]*)")?$'
)
_NOTE_RE = re.compile(r'^note\s+R\(\s*(?P<ks>[^)]*)\)\s+"(?P<text>[^"]*)"$')


def _strip_comment(line: str) -> str:
    # '#' inside a quoted src/note string is text, not a comment
    in_quote = False
    for i, ch in enumerate(line):
        if ch == '"':
            in_quote = not in_quote
        elif ch == "#" and not in_quote:
            return line[:i]
    return line


def _parse_ks(text: str, lineno: int) -> Params:
    try:
        ks = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise ParseError(f"bad parameter list {text!r}", lineno) from None
    try:
        return canonicalize(ks)
    except ValueError as exc:
        raise ParseError(str(exc), lineno) from None


def parse_facts(text: str) -> list[Union[FactLine, NoteLine]]:
    """Parse a facts file into fact and note records, in file order."""
    out: list[Union[FactLine, NoteLine]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw).strip()
        if not line:
            continue
        m = _NOTE_RE.match(line)
        if m:
            out.append(NoteLine(_parse_ks(m["ks"], lineno), m["text"]))
            continue
        m = _FACT_RE.match(line)
        if not m:
            raise ParseError(f"cannot parse {raw.strip()!r}", lineno)
        value = int(m["val"])
        if value < 1:
            raise ParseError(f"bound value must be >= 1, got {value}", lineno)
        out.append(FactLine(_parse_ks(m["ks"], lineno), _OPS[m["op"]], value, m["src"] or ""))
    return out


def parse_facts_file(text: str) -> list[FactLine]:
    """Only the bound facts of a facts file (notes dropped)."""
    return [rec for rec in parse_facts(text) if isinstance(rec, FactLine)]


def format_fact(rec: Union[FactLine, NoteLine]) -> str:
    ks = ",".join(map(str, rec.params))
    if isinstance(rec, NoteLine):
        return f'note R({ks}) "{rec.text}"'
    line = f"R({ks}) {_OP_TEXT[rec.kind]} {rec.value}"
    return f'{line} src="{rec.source}"' if rec.source else line


def export_facts(records: Iterable[Union[FactLine, NoteLine]]) -> str:
    return "".join(format_fact(rec) + "\n" for rec in records)


def load_kb(texts: Iterable[str], assumptions: Iterable[str] = ()) -> KnowledgeBase:
    kb = KnowledgeBase(assumptions)
    for text in texts:
        for rec in parse_facts(text):
            if isinstance(rec, NoteLine):
                kb.annotate(rec.params, rec.text)
            else:
                kb.assert_fact(rec.params, rec.kind, rec.value, rec.source)
    return kb


def survey_text() -> str:
    return resources.files("ramseykit.data").joinpath("survey_small.facts").read_text()


def survey_kb(assumptions: Iterable[str] = ()) -> KnowledgeBase:
    """The bundled bounds: diagonal R_r(3) bounds, DC-adjacent lower bounds, small exact values."""
    return load_kb([survey_text()], assumptions)


def kb_to_facts(kb: KnowledgeBase) -> list[FactLine]:
    """Current bounds as fact records (exact when lower == upper)."""
    out = []
    for p, f in sorted(kb.facts.items(), key=lambda item: (len(item[0]), item[0])):
        if f.lower is not None and f.lower == f.upper:
            out.append(FactLine(p, EXACT, f.lower))
            continue
        if f.lower is not None:
            out.append(FactLine(p, LOWER, f.lower))
        if f.upper is not None:
            out.append(FactLine(p, UPPER, f.upper))
    return out


# --- witnesses ---------------------------------------------------------------


def _header_fields(line: str, names: Sequence[str], lineno: int) -> list[int]:
    parts = line.split()
    if len(parts) != len(names):
        raise ParseError(f"expected '{' '.join(n + '=<int>' for n in names)}'", lineno)
    out = []
    for part, name in zip(parts, names):
        key, _, val = part.partition("=")
        if key != name or not val.lstrip("-").isdigit():
            raise ParseError(f"expected {name}=<int>, got {part!r}", lineno)
        out.append(int(val))
    return out


def _ints(tokens: Sequence[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError("expected integers", lineno) from None


def parse_witness_file(text: str) -> EdgeColoring:
    """Parse either the dense ``witness v1`` or the ``cyclic v1`` format."""
    lines = text.splitlines()
    if not lines:
        raise ParseError("empty witness file")
    head = lines[0].strip()
    if head == "witness v1":
        return _parse_dense(lines)
    if head == "cyclic v1":
        return _parse_cyclic(lines)
    raise ParseError(f"unknown header {head!r}", 1)


def _parse_dense(lines: list[str]) -> EdgeColoring:
    if len(lines) < 2:
        raise ParseError("missing 'n=<int> r=<int>' line", 2)
    n, r = _header_fields(lines[1], ("n", "r"), 2)
    if n < 1 or r < 1:
        raise ParseError("need n >= 1 and r >= 1", 2)
    rows = lines[2:]
    while rows and not rows[-1].strip():
        rows.pop()
    if len(rows) != n - 1:
        raise ParseError(f"expected {n - 1} rows for n={n}, got {len(rows)}", 2 + len(rows))
    colors: list[int] = []
    for i, row in enumerate(rows):
        lineno = i + 3
        vals = _ints(row.split(), lineno)
        if len(vals) != n - 1 - i:
            raise ParseError(f"row {i} has {len(vals)} entries, expected {n - 1 - i}", lineno)
        for v in vals:
            if not 1 <= v <= r:
                raise ParseError(f"row {i}: color {v} outside 1..{r}", lineno)
        colors.extend(vals)
    return EdgeColoring(n, r, tuple(colors))


def _parse_cyclic(lines: list[str]) -> EdgeColoring:
    if len(lines) < 2:
        raise ParseError("missing 'm=<int> r=<int>' line", 2)
    m, r = _header_fields(lines[1], ("m", "r"), 2)
    body = [(i + 3, ln) for i, ln in enumerate(lines[2:]) if ln.strip()]
    if len(body) != r:
        raise ParseError(f"expected {r} class lines, got {len(body)}", 2)
    classes = []
    for expected, (lineno, ln) in enumerate(body, start=1):
        label, sep, rest = ln.partition(":")
        if not sep or label.split() != ["class", str(expected)]:
            raise ParseError(f"expected 'class {expected}: ...'", lineno)
        classes.append(_ints(rest.split(), lineno))
    try:
        return cyclic_coloring(m, classes)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def export_witness(c: EdgeColoring) -> str:
    lines = ["witness v1", f"n={c.n} r={c.r}"]
    pos = 0
    for i in range(c.n - 1):
        width = c.n - 1 - i
        lines.append(" ".join(map(str, c.colors[pos:pos + width])))
        pos += width
    return "\n".join(lines) + "\n"


def export_cyclic(m: int, classes: Sequence[Iterable[int]]) -> str:
    lines = ["cyclic v1", f"m={m} r={len(classes)}"]
    for i, cls in enumerate(classes, start=1):
        lines.append(f"class {i}: " + " ".join(map(str, sorted(cls))))
    return "\n".join(lines) + "\n"


# --- partitions --------------------------------------------------------------


def parse_partition_file(text: str) -> SumFreePartition:
    lines = text.splitlines()
    if not lines or lines[0].strip() != "partition v1":
        raise ParseError("expected header 'partition v1'", 1)
    if len(lines) < 2:
        raise ParseError("missing 'n=<int> r=<int> mode=<linear|cyclic>' line", 2)
    fields = dict(part.partition("=")[::2] for part in lines[1].split())
    if set(fields) != {"n", "r", "mode"}:
        raise ParseError("expected 'n=<int> r=<int> mode=<linear|cyclic>'", 2)
    try:
        n, r = int(fields["n"]), int(fields["r"])
    except ValueError:
        raise ParseError("n and r must be integers", 2) from None
    mode = fields["mode"]
    if mode not in ("linear", "cyclic"):
        raise ParseError(f"mode must be linear or cyclic, got {mode!r}", 2)
    body = [(i + 3, ln) for i, ln in enumerate(lines[2:]) if ln.strip()]
    if len(body) != r:
        raise ParseError(f"expected {r} part lines, got {len(body)}", 2)
    parts = []
    for lineno, ln in body:
        label, sep, rest = ln.partition(":")
        if not sep or label.strip() != "part":
            raise ParseError("expected 'part: d1 d2 ...'", lineno)
        parts.append(tuple(_ints(rest.split(), lineno)))
    p = SumFreePartition(n, mode, tuple(parts))
    try:
        check_partition_structure(p)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    return p


def export_partition(p: SumFreePartition) -> str:
    lines = ["partition v1", f"n={p.n} r={p.r} mode={p.mode}"]
    lines += ["part: " + " ".join(map(str, part)) for part in p.parts]
    return "\n".join(lines) + "\n"


def read_text(path: Union[str, Path]) -> str:
    return Path(path).read_text(encoding="utf-8")
