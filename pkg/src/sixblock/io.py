"""Edge-list and DOT-subset parsing, plus JSON serialisation of digraphs and colorings."""
from __future__ import annotations

import json
import re
from typing import Any

from .graph import Digraph, VertexColoring

SCHEMA_VERSION = 1


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class _Builder:
    def __init__(self) -> None:
        self.ids: dict[str, int] = {}
        self.arcs: list[tuple[int, int]] = []
        self.seen: set[tuple[int, int]] = set()

    def vertex(self, name: str) -> int:
        if name not in self.ids:
            self.ids[name] = len(self.ids)
        return self.ids[name]

    def arc(self, a: str, b: str, line: int) -> None:
        if a == b:
            raise ParseError(f"loop {a!r} -> {b!r} rejected", line)
        arc = (self.vertex(a), self.vertex(b))
        if arc in self.seen:
            raise ParseError(f"duplicate arc {a!r} -> {b!r} rejected", line)
        self.seen.add(arc)
        self.arcs.append(arc)

    def build(self) -> Digraph:
        names = tuple(sorted(self.ids, key=self.ids.__getitem__))
        return Digraph(len(names), frozenset(self.arcs), names)


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0]


def parse_edge_list(text: str) -> Digraph:
    """One arc ``u v`` per line; a lone token declares an isolated vertex."""
    b = _Builder()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = _strip_comment(raw).split()
        if not tokens:
            continue
        if len(tokens) == 1:
            b.vertex(tokens[0])
        elif len(tokens) == 2:
            b.arc(tokens[0], tokens[1], lineno)
        else:
            raise ParseError(f"expected 'u v', got {len(tokens)} tokens", lineno)
    return b.build()


_DOT_TOKEN = re.compile(r'\s*(?:(->)|([{};])|"((?:[^"\\]|\\.)*)"|([A-Za-z0-9_.]+)|(\S))')


def _dot_tokens(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("//", 1)[0]
        if line.lstrip().startswith("#"):
            continue
        pos = 0
        while pos < len(line):
            m = _DOT_TOKEN.match(line, pos)
            if m is None:  # trailing whitespace
                break
            pos = m.end()
            arrow, punct, quoted, ident, other = m.groups()
            if arrow:
                yield "->", arrow, lineno
            elif punct:
                yield punct, punct, lineno
            elif quoted is not None:
                yield "id", quoted.replace('\\"', '"'), lineno
            elif ident:
                yield "id", ident, lineno
            elif other:
                raise ParseError(f"unexpected character {other!r}", lineno)


def parse_dot(text: str) -> Digraph:
    """``digraph [name] { a -> b; c; a -> b -> c; }`` without attributes."""
    toks = list(_dot_tokens(text))
    b = _Builder()
    i = 0

    def expect(kind: str) -> tuple[str, str, int]:
        nonlocal i
        if i >= len(toks):
            raise ParseError(f"unexpected end of input, expected {kind!r}", toks[-1][2] if toks else None)
        tok = toks[i]
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, got {tok[1]!r}", tok[2])
        i += 1
        return tok

    head = expect("id")
    if head[1] != "digraph":
        raise ParseError(f"expected 'digraph', got {head[1]!r}", head[2])
    if i < len(toks) and toks[i][0] == "id":
        i += 1
    expect("{")
    while True:
        if i >= len(toks):
            raise ParseError("missing closing '}'", toks[-1][2])
        kind, value, line = toks[i]
        if kind == "}":
            i += 1
            break
        if kind == ";":
            i += 1
            continue
        chain = [expect("id")]
        while i < len(toks) and toks[i][0] == "->":
            i += 1
            chain.append(expect("id"))
        if len(chain) == 1:
            b.vertex(chain[0][1])
        for (_, a, _), (_, c, ln) in zip(chain, chain[1:]):
            b.arc(a, c, ln)
        if i < len(toks) and toks[i][0] not in (";", "}"):
            # statements on separate lines need no ';'
            if toks[i][2] == chain[-1][2]:
                raise ParseError(f"expected ';' or '->', got {toks[i][1]!r}", toks[i][2])
    if i != len(toks):
        raise ParseError(f"trailing input after '}}': {toks[i][1]!r}", toks[i][2])
    return b.build()


def parse_digraph(text: str) -> Digraph:
    """Dispatch on the document: DOT if it opens with ``digraph``, edge list otherwise."""
    for raw in text.splitlines():
        line = _strip_comment(raw).strip()
        if line:
            if re.match(r"digraph\b", line):
                return parse_dot(text)
            break
    return parse_edge_list(text)


def to_edge_list(d: Digraph) -> str:
    lines = [f"{d.name(u)} {d.name(v)}" for u, v in d.sorted_arcs()]
    touched = {v for arc in d.arcs for v in arc}
    lines += [d.name(v) for v in range(d.n) if v not in touched]
    return "\n".join(lines) + "\n"


def _dot_id(name: str) -> str:
    return name if re.fullmatch(r"[A-Za-z0-9_.]+", name) else '"' + name.replace('"', '\\"') + '"'


def to_dot(d: Digraph) -> str:
    body = [f"  {_dot_id(d.name(u))} -> {_dot_id(d.name(v))};" for u, v in d.sorted_arcs()]
    touched = {v for arc in d.arcs for v in arc}
    body += [f"  {_dot_id(d.name(v))};" for v in range(d.n) if v not in touched]
    return "digraph {\n" + "\n".join(body) + "\n}\n"


def digraph_to_json(d: Digraph) -> dict[str, Any]:
    return {
        "schema": SCHEMA_VERSION,
        "n": d.n,
        "names": [d.name(v) for v in range(d.n)],
        "arcs": [[u, v] for u, v in d.sorted_arcs()],
    }


def digraph_from_json(doc: dict[str, Any]) -> Digraph:
    names = doc.get("names")
    return Digraph.from_arcs(int(doc["n"]), [tuple(a) for a in doc["arcs"]], names)


def coloring_to_json(d: Digraph, c: VertexColoring) -> dict[str, Any]:
    return {
        "palette_size": c.palette_size,
        "colors": {d.name(v): c[v] for v in sorted(c.assignment)},
    }


def coloring_from_json(d: Digraph, doc: dict[str, Any]) -> VertexColoring:
    index = {d.name(v): v for v in range(d.n)}
    try:
        return VertexColoring({index[str(name)]: int(col) for name, col in doc["colors"].items()})
    except KeyError as exc:
        raise ParseError(f"coloring names unknown vertex {exc.args[0]!r}") from None


def dumps(doc: Any) -> str:
    """Canonical JSON text: sorted keys, fixed separators, trailing newline."""
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"
