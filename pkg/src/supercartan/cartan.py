"""The pair (A, p) defining a contragredient Lie superalgebra.

Vertex indices are 0-based throughout the Python API; the CLI and all text
renderings are 1-based.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from .errors import EmptySubset, InvariantViolation, ZeroRow
from .scalar import Scalar, common_field, parse_scalar


class VertexType(enum.Enum):
    SL2 = "sl2"
    HEISENBERG = "heisenberg"
    OSP12 = "osp12"
    SL11 = "sl11"


def _to_scalar(x) -> Scalar:
    if isinstance(x, str):
        return parse_scalar(x)
    return Scalar.coerce(x)


@dataclass(frozen=True)
class CartanSpec:
    entries: tuple[tuple[Scalar, ...], ...]
    parity: tuple[int, ...]

    def __post_init__(self):
        n = len(self.entries)
        if n == 0:
            raise InvariantViolation("empty matrix")
        if any(len(row) != n for row in self.entries):
            raise InvariantViolation("matrix is not square")
        if len(self.parity) != n:
            raise InvariantViolation(f"parity has length {len(self.parity)}, expected {n}")
        if any(p not in (0, 1) for p in self.parity):
            raise InvariantViolation("parity entries must be 0 or 1")
        common_field(x for row in self.entries for x in row)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable], parity: Iterable[int]) -> CartanSpec:
        """Build from nested ints, Fractions, Scalars or Scalar literals."""
        entries = tuple(tuple(_to_scalar(x) for x in row) for row in rows)
        return cls(entries, tuple(int(p) for p in parity))

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> Scalar:
        i, j = ij
        return self.entries[i][j]

    @property
    def field(self) -> int:
        return common_field(x for row in self.entries for x in row)

    def rows(self) -> list[list[Scalar]]:
        return [list(row) for row in self.entries]

    def permuted(self, perm: Sequence[int]) -> CartanSpec:
        """Relabel so that new vertex ``k`` is old vertex ``perm[k]``."""
        entries = tuple(tuple(self.entries[i][j] for j in perm) for i in perm)
        return CartanSpec(entries, tuple(self.parity[i] for i in perm))

    def __str__(self):
        rows = "; ".join(" ".join(str(x) for x in row) for row in self.entries)
        return f"[{rows}] p={''.join(map(str, self.parity))}"


def normalize_row(row: Sequence[Scalar], i: int) -> tuple[Scalar, ...]:
    if row[i]:
        scale = 2 / row[i]
    else:
        lead = next((x for x in row if x), None)
        if lead is None:
            raise ZeroRow(f"row {i + 1} is zero")
        scale = 1 / lead
    return tuple(x * scale for x in row)


def normalize(a: CartanSpec) -> CartanSpec:
    """Rescale rows: nonzero diagonal to 2, otherwise leading nonzero entry to 1."""
    entries = tuple(normalize_row(row, i) for i, row in enumerate(a.entries))
    if entries == a.entries:
        return a
    return CartanSpec(entries, a.parity)


def is_normalized(a: CartanSpec) -> bool:
    try:
        return normalize(a) == a
    except ZeroRow:
        return False


def row_scales(a: CartanSpec, b: CartanSpec) -> list[Scalar] | None:
    """Diagonal ``D`` with ``D a == b`` if one exists (all ``D`` entries nonzero)."""
    if a.n != b.n:
        return None
    scales = []
    for ra, rb in zip(a.entries, b.entries):
        k = next((j for j, x in enumerate(ra) if x), None)
        if k is None:
            return None
        s = rb[k] / ra[k]
        if not s or any(x * s != y for x, y in zip(ra, rb)):
            return None
        scales.append(s)
    return scales


def vertex_type(a: CartanSpec, i: int) -> VertexType:
    nonzero_diag = bool(a.entries[i][i])
    if a.parity[i] == 0:
        return VertexType.SL2 if nonzero_diag else VertexType.HEISENBERG
    return VertexType.OSP12 if nonzero_diag else VertexType.SL11


def is_isotropic(a: CartanSpec, i: int) -> bool:
    return vertex_type(a, i) is VertexType.SL11


def is_regular(a: CartanSpec, i: int) -> bool:
    """Whether ``a[i,j] == 0`` forces ``a[j,i] == 0`` for every other ``j``."""
    return all(a.entries[i][j] or not a.entries[j][i] for j in range(a.n) if j != i)


def singular_vertices(a: CartanSpec) -> list[int]:
    return [i for i in range(a.n) if not is_regular(a, i)]


def connected(a: CartanSpec, i: int, j: int) -> bool:
    return bool(a.entries[i][j]) or bool(a.entries[j][i])


def components(a: CartanSpec) -> list[list[int]]:
    """Connected components of the graph ``i -- j`` iff ``a[i,j] or a[j,i]``."""
    seen: set[int] = set()
    comps = []
    for start in range(a.n):
        if start in seen:
            continue
        comp, stack = [], [start]
        seen.add(start)
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(a.n):
                if j not in seen and connected(a, i, j):
                    seen.add(j)
                    stack.append(j)
        comps.append(sorted(comp))
    return comps


def is_indecomposable(a: CartanSpec) -> bool:
    return len(components(a)) == 1


def submatrix(a: CartanSpec, indices: Iterable[int]) -> CartanSpec:
    idx = list(indices)
    if not idx:
        raise EmptySubset("index set is empty")
    return a.permuted(idx)


def has_zero_row(a: CartanSpec) -> bool:
    return any(not any(row) for row in a.entries)


def _primitive(ds: list[Scalar]) -> list[Scalar]:
    # integral, coprime representative when all rational; left alone otherwise
    if not all(d.is_rational for d in ds):
        return ds
    fr = [d.rat for d in ds]
    den = lcm(*(f.denominator for f in fr))
    nums = [int(f * den) for f in fr]
    g = gcd(*nums)
    if nums[0] < 0:
        g = -g
    return [Scalar(Fraction(x, g)) for x in nums]


def symmetrizer(a: CartanSpec) -> list[Scalar] | None:
    """Diagonal ``D`` with ``D a`` symmetric, or ``None`` if there is none.

    Zero patterns must be symmetric.  ``D`` is propagated along a spanning
    tree via ``d_j = d_i a_ij / a_ji``; every remaining edge then checks one
    fundamental cycle, which is the cycle-product condition.
    """
    n = a.n
    e = a.entries
    for i in range(n):
        for j in range(n):
            if bool(e[i][j]) != bool(e[j][i]):
                return None
    d: list[Scalar | None] = [None] * n
    for comp in components(a):
        root = comp[0]
        d[root] = Scalar(1)
        stack = [root]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j != i and e[i][j] and d[j] is None:
                    d[j] = d[i] * e[i][j] / e[j][i]
                    stack.append(j)
    for i in range(n):
        for j in range(i + 1, n):
            if d[i] * e[i][j] != d[j] * e[j][i]:
                return None
    return _primitive(d)


def is_symmetrizable(a: CartanSpec) -> bool:
    return symmetrizer(a) is not None


def rank(a: CartanSpec) -> int:
    from .linalg import rank as _rank

    return _rank(a.rows())
