"""The ``mct 1`` certificate text format.

::

    # comment
    mct 1
    n 5
    cycle 0 1 2 3 4
    cycle 0 2 4 1 3
    part 0 1

The header comes first, then exactly one ``n`` line, then any mix of
``cycle`` and ``part`` lines. Blank lines and ``#`` comments are ignored.
When any ``part`` line is present, every vertex needs exactly one.
"""
from __future__ import annotations

from typing import Optional

from .analyzer import BlowupPartition
from .errors import InvalidCertificate, ParseError
from .graph import ColoredGraph, build_colored_graph

HEADER = "mct 1"


def _int(tok: str, lineno: int, what: str) -> int:
    # base-10 digits only: no signs, no underscores
    if not tok.isascii() or not tok.isdigit():
        raise ParseError(lineno, f"{what} must be a nonnegative base-10 integer, got {tok!r}")
    return int(tok)


def parse(text: str) -> tuple[ColoredGraph, Optional[BlowupPartition]]:
    """Parse certificate text into a validated graph and optional partition.

    Syntax problems raise ParseError(line, reason). A well-formed file whose
    classes are not an edge-disjoint C5 decomposition raises the
    InvalidCertificate subclass from :func:`build_colored_graph`.
    """
    n: Optional[int] = None
    seen_header = False
    classes: list[tuple[int, ...]] = []
    parts: dict[int, int] = {}
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        last_line = lineno
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        toks = line.split()
        head = toks[0]
        if not seen_header:
            if toks != ["mct", "1"]:
                if head == "mct":
                    raise ParseError(lineno, f"unsupported format version {' '.join(toks[1:])!r}")
                raise ParseError(lineno, "expected header 'mct 1'")
            seen_header = True
            continue
        if head == "mct":
            raise ParseError(lineno, "duplicate header")
        if head == "n":
            if n is not None:
                raise ParseError(lineno, "duplicate 'n' line")
            if len(toks) != 2:
                raise ParseError(lineno, "wrong arity: expected 'n <N>'")
            n = _int(toks[1], lineno, "vertex count")
            continue
        if head not in ("cycle", "part"):
            raise ParseError(lineno, f"unknown directive {head!r}")
        if n is None:
            raise ParseError(lineno, f"'{head}' before 'n' line")
        if head == "cycle":
            if len(toks) != 6:
                raise ParseError(lineno, f"wrong arity: cycle needs 5 vertices, got {len(toks) - 1}")
            classes.append(tuple(_int(x, lineno, "vertex") for x in toks[1:]))
        else:
            if len(toks) != 3:
                raise ParseError(lineno, "wrong arity: expected 'part <v> <i>'")
            v = _int(toks[1], lineno, "vertex")
            p = _int(toks[2], lineno, "part")
            if v >= n:
                raise ParseError(lineno, f"vertex {v} out of range for n={n}")
            if not 1 <= p <= 5:
                raise ParseError(lineno, f"part index {p} not in 1..5")
            if v in parts:
                raise ParseError(lineno, f"vertex {v} assigned twice")
            parts[v] = p
    if not seen_header:
        raise ParseError(max(last_line, 1), "missing header 'mct 1'")
    if n is None:
        raise ParseError(max(last_line, 1), "missing 'n' line")
    partition = None
    if parts:
        missing = [v for v in range(n) if v not in parts]
        if missing:
            raise ParseError(last_line, f"partition misses {len(missing)} vertices, first {missing[0]}")
        partition = BlowupPartition([parts[v] for v in range(n)])
    return build_colored_graph(n, classes), partition


def render(G: ColoredGraph, partition: Optional[BlowupPartition] = None,
           comments: tuple = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(HEADER)
    lines.append(f"n {G.n}")
    lines.extend("cycle " + " ".join(map(str, cyc)) for cyc in G.classes)
    if partition is not None:
        lines.extend(f"part {v} {p}" for v, p in enumerate(partition.part_of))
    return "\n".join(lines) + "\n"


def render_dot(G: ColoredGraph) -> str:
    lines = ["graph mct {"]
    lines.extend(f"  {v};" for v in range(G.n))
    for u, v, c in G.edges():
        lines.append(f'  {u} -- {v} [label="{c}", colorscheme=set312, color={c % 12 + 1}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


__all__ = ["parse", "render", "render_dot", "HEADER", "InvalidCertificate", "ParseError"]
