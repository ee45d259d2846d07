"""Reflection orbits of Cartan matrices, deduplicated up to relabeling and row rescaling."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Callable, NamedTuple

from .cartan import (
    CartanSpec,
    has_zero_row,
    is_indecomposable,
    is_isotropic,
    is_regular,
    normalize,
)
from .conditions import is_gcm
from .errors import Decomposable, TooLarge, ZeroRow
from .reflection import odd_reflect_spec
from .scalar import format_scalar

log = logging.getLogger(__name__)

MAX_CANONICAL_N = 8


def _encode(a: CartanSpec) -> str:
    rows = ";".join(",".join(format_scalar(x) for x in row) for row in a.entries)
    return "".join(map(str, a.parity)) + "|" + rows


def _vertex_class(a: CartanSpec, i: int) -> tuple:
    """Relabeling- and rescaling-invariant data of vertex ``i``."""
    e = a.entries
    return (
        a.parity[i],
        bool(e[i][i]),
        sum(1 for x in e[i] if x),
        sum(1 for row in e if row[i]),
    )


def _candidate_perms(a: CartanSpec):
    """Permutations listing vertices in nondecreasing class order.

    Equivalent matrices have the same class sequence, so the minimum over
    these candidates is still a canonical key.
    """
    classes: dict[tuple, list[int]] = {}
    for i in range(a.n):
        classes.setdefault(_vertex_class(a, i), []).append(i)
    groups = [classes[c] for c in sorted(classes)]
    for parts in product(*(permutations(g) for g in groups)):
        yield tuple(i for part in parts for i in part)


def canonical_form(a: CartanSpec) -> tuple[CartanSpec, tuple[int, ...]]:
    """The normalized relabeling of ``a`` with minimal encoding, and its permutation."""
    if a.n > MAX_CANONICAL_N:
        raise TooLarge(f"canonical labeling is brute force and limited to n <= {MAX_CANONICAL_N}")
    best = None
    for perm in _candidate_perms(a):
        b = normalize(a.permuted(perm))
        enc = _encode(b)
        if best is None or enc < best[0]:
            best = (enc, b, perm)
    return best[1], best[2]


def canonical_key(a: CartanSpec) -> bytes:
    if a.n > MAX_CANONICAL_N:
        raise TooLarge(f"canonical labeling is brute force and limited to n <= {MAX_CANONICAL_N}")
    return min(_encode(normalize(a.permuted(perm))) for perm in _candidate_perms(a)).encode()


def find_equivalence(a: CartanSpec, b: CartanSpec) -> tuple[int, ...] | None:
    """A permutation ``perm`` with ``normalize(a.permuted(perm)) == normalize(b)``, if any."""
    if a.n != b.n:
        return None
    target = normalize(b)
    for perm in permutations(range(a.n)):
        if normalize(a.permuted(perm)) == target:
            return perm
    return None


class Edge(NamedTuple):
    source: bytes
    vertex: int
    kind: str
    target: bytes
    singular: bool = False


@dataclass
class OrbitGraph:
    nodes: dict[bytes, CartanSpec] = field(default_factory=dict)
    depth: dict[bytes, int] = field(default_factory=dict)
    edges: list[Edge] = field(default_factory=list)
    status: str = "complete"  # complete | truncated(depth) | truncated(states) | stopped
    any_singular_step: bool = False
    any_singular_vertex: bool = False
    all_nodes_gcm: bool = True
    max_depth_reached: int = 0
    stopped_at: bytes | None = None

    @property
    def complete(self) -> bool:
        return self.status == "complete"

    @property
    def truncated(self) -> bool:
        return self.status.startswith("truncated")

    def __len__(self):
        return len(self.nodes)


def _even_reflectable(a: CartanSpec, k: int) -> bool:
    if not a.entries[k][k]:
        return False
    step = 2 if a.parity[k] else 1
    return all(x.is_integer() and int(x.rat) % step == 0 for x in a.entries[k])


def explore(
    a: CartanSpec,
    odd_only: bool = True,
    allow_singular: bool = False,
    max_depth: int = 16,
    max_states: int = 5000,
    stop_on: Callable[[CartanSpec], bool] | None = None,
) -> OrbitGraph:
    """Breadth-first closure of ``a`` under reflections.

    Each BFS layer is processed in key order, so node sets and representatives
    do not depend on discovery order.  Nodes at ``max_depth`` are probed but
    their new neighbours are not added; finding one marks the graph truncated.
    ``stop_on`` ends the search at the first node for which it returns true.
    """
    if has_zero_row(a):
        raise ZeroRow("matrix has a zero row")
    if not is_indecomposable(a):
        raise Decomposable("matrix is decomposable; split it into blocks first")

    g = OrbitGraph()
    start = normalize(a)
    key = canonical_key(start)
    g.nodes[key] = start
    g.depth[key] = 0
    frontier = [key]
    layer = 0

    def visit(k: bytes, spec: CartanSpec) -> bool:
        if not is_gcm(spec):
            g.all_nodes_gcm = False
        if any(is_isotropic(spec, i) and not is_regular(spec, i) for i in range(spec.n)):
            g.any_singular_vertex = True
        if stop_on is not None and stop_on(spec):
            g.status = "stopped"
            g.stopped_at = k
            return True
        return False

    if visit(key, start):
        return g

    while frontier:
        next_layer: dict[bytes, CartanSpec] = {}
        for src in sorted(frontier):
            spec = g.nodes[src]
            for k in range(spec.n):
                if is_isotropic(spec, k):
                    singular = not is_regular(spec, k)
                    if singular and not allow_singular:
                        continue
                    b = odd_reflect_spec(spec, k)
                    dst = canonical_key(b)
                    if singular:
                        g.any_singular_step = True
                    kind = "odd"
                elif not odd_only and _even_reflectable(spec, k):
                    b, dst, singular, kind = spec, src, False, "even"
                else:
                    continue
                if dst not in g.nodes and dst not in next_layer:
                    if layer >= max_depth:
                        g.status = "truncated(depth)"
                        continue
                    if len(g.nodes) + len(next_layer) >= max_states:
                        g.status = "truncated(states)"
                        continue
                    next_layer[dst] = b
                if dst in g.nodes or dst in next_layer:
                    g.edges.append(Edge(src, k, kind, dst, singular))
        layer += 1
        for k2 in sorted(next_layer):
            g.nodes[k2] = next_layer[k2]
            g.depth[k2] = layer
            g.max_depth_reached = layer
            if visit(k2, next_layer[k2]):
                return g
        frontier = list(next_layer)
    if g.truncated:
        log.debug("orbit truncated with %d nodes (%s)", len(g.nodes), g.status)
    return g
