"""Text format for Cartan data and Graphviz export of Dynkin diagrams.

A spec file looks like::

    cartan-spec v1
    name: sl(1|2)
    n: 2
    parity: 11
    entries:
    0 1
    1 0

``name`` is optional.  Blank lines and lines starting with ``#`` are ignored
by the parser; :func:`print_spec` never emits them.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .cartan import CartanSpec, VertexType, vertex_type
from .errors import DataError, InvariantViolation, SpecSyntaxError
from .scalar import format_scalar, parse_scalar

HEADER = "cartan-spec v1"


@dataclass(frozen=True)
class SpecFile:
    spec: CartanSpec
    name: str | None = None


def _lines(text: str) -> list[tuple[int, str]]:
    out = []
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.rstrip()
        if line.strip() and not line.lstrip().startswith("#"):
            out.append((no, line))
    return out


def _field(lines, pos: int, key: str) -> tuple[int, str, int]:
    if pos >= len(lines):
        last = lines[-1][0] if lines else 1
        raise SpecSyntaxError(f"missing '{key}:' line", last + 1, 1)
    no, line = lines[pos]
    prefix = key + ":"
    if not line.startswith(prefix):
        raise SpecSyntaxError(f"expected '{prefix}'", no, 1)
    return no, line[len(prefix):].strip(), len(prefix) + 2


def parse_specfile(text: str) -> SpecFile:
    lines = _lines(text)
    if not lines:
        raise SpecSyntaxError("empty input", 1, 1)
    no, line = lines[0]
    if line.strip() != HEADER:
        raise SpecSyntaxError(f"expected header '{HEADER}'", no, 1)
    pos = 1

    name = None
    if pos < len(lines) and lines[pos][1].startswith("name:"):
        name = _field(lines, pos, "name")[1] or None
        pos += 1
    no, value, col = _field(lines, pos, "n")
    pos += 1
    if not re.fullmatch(r"\d+", value) or int(value) < 1:
        raise SpecSyntaxError("n must be a positive integer", no, col)
    n = int(value)
    no, value, col = _field(lines, pos, "parity")
    pos += 1
    if not re.fullmatch(r"[01]+", value):
        raise SpecSyntaxError("parity must be a string of 0 and 1", no, col)
    if len(value) != n:
        raise InvariantViolation(f"parity has length {len(value)} but n = {n}")
    parity = tuple(int(c) for c in value)
    no, value, col = _field(lines, pos, "entries")
    pos += 1
    if value:
        raise SpecSyntaxError("entries start on the next line", no, col)

    rows = []
    for no, line in lines[pos:]:
        row = []
        for m in re.finditer(r"\S+", line):
            try:
                row.append(parse_scalar(m.group()))
            except (ValueError, DataError) as exc:
                raise SpecSyntaxError(f"bad scalar {m.group()!r}: {exc}", no, m.start() + 1) from None
        if len(row) != n:
            raise InvariantViolation(f"line {no}: expected {n} entries, found {len(row)}")
        rows.append(row)
    if len(rows) != n:
        raise InvariantViolation(f"expected {n} rows of entries, found {len(rows)}")
    return SpecFile(CartanSpec.from_rows(rows, parity), name)


def parse_spec(text: str) -> CartanSpec:
    return parse_specfile(text).spec


def print_spec(spec: CartanSpec, name: str | None = None) -> str:
    out = [HEADER]
    if name:
        out.append(f"name: {name}")
    out.append(f"n: {spec.n}")
    out.append("parity: " + "".join(map(str, spec.parity)))
    out.append("entries:")
    for row in spec.entries:
        out.append(" ".join(format_scalar(x) for x in row))
    return "\n".join(out) + "\n"


def print_specfile(f: SpecFile) -> str:
    return print_spec(f.spec, f.name)


GLYPHS = {
    VertexType.SL2: ("◯", "circle", "white"),
    VertexType.HEISENBERG: ("◯", "circle", "gray"),
    VertexType.OSP12: ("⬤", "circle", "black"),
    VertexType.SL11: ("⊗", "circle", "white"),
}


def _dot_escape(s: str) -> str:
    return s.replace("\\", "\\\\").replace('"', '\\"')


def to_dot(spec: CartanSpec, name: str = "cartan") -> str:
    """Graphviz digraph with one node per vertex and an edge ``i -> j`` labelled ``a_ij``.

    Edges are drawn between every connected pair, so the ``0`` opposite a
    nonzero entry at a singular vertex stays visible.
    """
    lines = [f'digraph "{_dot_escape(name)}" {{']
    for i in range(spec.n):
        t = vertex_type(spec, i)
        glyph, shape, fill = GLYPHS[t]
        lines.append(
            f'  v{i + 1} [label="{glyph}", xlabel="{i + 1}", shape={shape}, '
            f'style=filled, fillcolor={fill}, tooltip="{t.name}"];'
        )
    for i in range(spec.n):
        for j in range(spec.n):
            if i != j and (spec.entries[i][j] or spec.entries[j][i]):
                lines.append(f'  v{i + 1} -> v{j + 1} [label="{_dot_escape(format_scalar(spec.entries[i][j]))}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def orbit_to_dot(nodes, edges, name: str = "orbit") -> str:
    """Reflection graph: ``nodes`` is an ordered list of specs, ``edges`` holds
    ``(source index, target index, vertex, kind, singular)`` with 1-based indices."""
    lines = [f'digraph "{_dot_escape(name)}" {{', "  node [shape=box, fontname=monospace];"]
    for i, spec in enumerate(nodes, 1):
        label = "\\n".join(_dot_escape(" ".join(format_scalar(x) for x in row)) for row in spec.entries)
        parity = "".join(map(str, spec.parity))
        lines.append(f'  m{i} [label="#{i} p={parity}\\n{label}"];')
    for src, dst, vertex, kind, singular in edges:
        style = ", style=dashed" if singular else ""
        lines.append(f'  m{src} -> m{dst} [label="{kind} {vertex}"{style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
