"""Line-oriented text formats for graphs, divisors and scrambles.

Graph::

    # comment
    n 3
    e 0 1 3
    e 1 2 3

A ``# product <n1> <n2>`` comment is written for Cartesian products and,
when read back, restores the column/row metadata.

Divisor::

    d 3
    c 0 2

Scramble (one egg per line)::

    egg 0 1
    egg 2
"""

from __future__ import annotations

from typing import Sequence

from .errors import FormatError, ScrambleKitError
from .multigraph import Multigraph, build
from .scrambles import Scramble


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def _ints(tokens, lineno):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise FormatError(f"line {lineno}: expected integers, got {' '.join(tokens)!r}") from None


def dump_graph(g: Multigraph) -> str:
    out = []
    if g.factors is not None:
        out.append(f"# product {g.factors[0]} {g.factors[1]}")
    out.append(f"n {g.n}")
    out += [f"e {u} {v} {m}" for u, v, m in g.edges()]
    return "\n".join(out) + "\n"


def load_graph(text: str) -> Multigraph:
    n = None
    edges = []
    factors = None
    for raw in text.splitlines():
        parts = raw.strip().split()
        if parts[:2] == ["#", "product"] and len(parts) == 4:
            factors = tuple(_ints(parts[2:], 0))
    for lineno, tok in _lines(text):
        if n is None:
            if tok[0] != "n" or len(tok) != 2:
                raise FormatError(f"line {lineno}: expected 'n <count>' first")
            (n,) = _ints(tok[1:], lineno)
        elif tok[0] == "e" and len(tok) in (3, 4):
            edges.append(_ints(tok[1:], lineno))
        else:
            raise FormatError(f"line {lineno}: unexpected {' '.join(tok)!r}")
    if n is None:
        raise FormatError("missing 'n <count>' line")
    if factors is not None and factors[0] * factors[1] != n:
        factors = None
    return build(n, edges, factors)


def dump_dot(g: Multigraph, name: str = "G") -> str:
    out = [f"graph {name} {{"]
    out += [f"  {v};" for v in g.vertices]
    for u, v, m in g.edges():
        out.append(f"  {u} -- {v} [label={m}];" if m > 1 else f"  {u} -- {v};")
    out.append("}")
    return "\n".join(out) + "\n"


def dump_divisor(d: Sequence[int]) -> str:
    out = [f"d {len(d)}"]
    out += [f"c {v} {c}" for v, c in enumerate(d) if c]
    return "\n".join(out) + "\n"


def load_divisor(text: str, n: int | None = None) -> tuple[int, ...]:
    chips = None
    for lineno, tok in _lines(text):
        if chips is None:
            if tok[0] != "d" or len(tok) != 2:
                raise FormatError(f"line {lineno}: expected 'd <count>' first")
            (size,) = _ints(tok[1:], lineno)
            chips = [0] * size
        elif tok[0] == "c" and len(tok) == 3:
            v, c = _ints(tok[1:], lineno)
            if not 0 <= v < len(chips):
                raise FormatError(f"line {lineno}: vertex {v} out of range")
            chips[v] += c
        else:
            raise FormatError(f"line {lineno}: unexpected {' '.join(tok)!r}")
    if chips is None:
        raise FormatError("missing 'd <count>' line")
    if n is not None and len(chips) != n:
        raise FormatError(f"divisor is for {len(chips)} vertices, graph has {n}")
    return tuple(chips)


def dump_scramble(s: Scramble) -> str:
    return "".join("egg " + " ".join(map(str, sorted(e))) + "\n" for e in s.eggs)


def load_scramble(text: str, g: Multigraph) -> Scramble:
    eggs = []
    for lineno, tok in _lines(text):
        if tok[0] != "egg" or len(tok) < 2:
            raise FormatError(f"line {lineno}: expected 'egg <v1> <v2> ...'")
        eggs.append(_ints(tok[1:], lineno))
    try:
        return Scramble(g, eggs)
    except ScrambleKitError as exc:
        raise FormatError(str(exc)) from exc
