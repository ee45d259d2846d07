"""Odd and even reflections on a base tracked in original coordinates.

A :class:`BaseState` stores the current normalized Cartan data together with

* ``R``: row ``i`` holds the coordinates of the current simple root
  ``alpha'_i`` in the original simple roots (integers), and
* ``H``: row ``i`` holds the coordinates of the current coroot ``h'_i`` in
  the original coroots (Scalars).

``H`` is kept scaled so that ``H . A0 . R^T`` equals ``spec`` exactly.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field, replace
from typing import NamedTuple

from .cartan import CartanSpec, connected, is_regular, normalize_row, vertex_type, VertexType
from .errors import InvariantViolation, IsotropicVertex, NotIntegral, NotIsotropic
from .linalg import integer_det
from .scalar import Scalar

# When set, every reflection re-checks H . A0 . R^T against the new matrix.
CHECK_CONSISTENCY = os.environ.get("SUPERCARTAN_DEBUG", "") not in ("", "0")


def set_debug(flag: bool) -> None:
    global CHECK_CONSISTENCY
    CHECK_CONSISTENCY = flag


class Step(NamedTuple):
    kind: str  # "odd" or "even"
    vertex: int
    singular: bool = False


class PositiveRootDelta(NamedTuple):
    removed: tuple[int, ...]
    added: tuple[int, ...]


@dataclass(frozen=True)
class BaseState:
    spec: CartanSpec
    R: tuple[tuple[int, ...], ...]
    H: tuple[tuple[Scalar, ...], ...]
    origin: CartanSpec
    log: tuple[Step, ...] = ()
    singular_step: bool = field(default=False)

    @classmethod
    def initial(cls, a0: CartanSpec) -> BaseState:
        n = a0.n
        rows, scales = [], []
        for i, old in enumerate(a0.entries):
            new, c = _rescaled(old, i)
            rows.append(new)
            scales.append(c)
        spec = CartanSpec(tuple(rows), a0.parity)
        R = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
        H = tuple(tuple(scales[i] if i == j else Scalar(0) for j in range(n)) for i in range(n))
        return cls(spec, R, H, a0)

    @property
    def n(self) -> int:
        return self.spec.n

    @property
    def any_singular(self) -> bool:
        return any(step.singular for step in self.log)

    def root(self, i: int) -> tuple[int, ...]:
        return self.R[i]

    def roots_key(self) -> frozenset[tuple[int, ...]]:
        return frozenset(self.R)


def _rescaled(row, i: int) -> tuple[tuple[Scalar, ...], Scalar]:
    """Normalized row and the factor applied; a zero row (the 1x1 ``(0)``) is kept."""
    lead = next((j for j, x in enumerate(row) if x), None)
    if lead is None:
        return tuple(row), Scalar(1)
    new = normalize_row(row, i)
    return new, new[lead] / row[lead]


def _combine(u, v, a, b):
    return tuple(a * x + b * y for x, y in zip(u, v))


def pairing_matrix(s: BaseState) -> list[list[Scalar]]:
    """``H . A0 . R^T``: entry ``(i, j)`` is ``alpha'_j(h'_i)``."""
    a0 = s.origin.entries
    n = s.n
    ha = [[sum((s.H[i][l] * a0[l][m] for l in range(n)), Scalar(0)) for m in range(n)] for i in range(n)]
    return [[sum((ha[i][m] * s.R[j][m] for m in range(n)), Scalar(0)) for j in range(n)] for i in range(n)]


def verify_consistency(s: BaseState, a0: CartanSpec | None = None) -> bool:
    """True iff ``H . A0 . R^T`` equals ``s.spec`` up to an invertible diagonal rescaling."""
    if a0 is not None and a0 is not s.origin:
        s = replace(s, origin=a0)
    m = pairing_matrix(s)
    for row_spec, row_m in zip(s.spec.entries, m):
        k = next((j for j, x in enumerate(row_spec) if x), None)
        if k is None:
            if any(row_m):
                return False
            continue
        c = row_m[k] / row_spec[k]
        if not c or any(x * c != y for x, y in zip(row_spec, row_m)):
            return False
    return True


def parity_consistent(s: BaseState) -> bool:
    p0 = s.origin.parity
    return all(s.spec.parity[i] == sum(r * p for r, p in zip(s.R[i], p0)) % 2 for i in range(s.n))


def _check(s: BaseState) -> None:
    if not CHECK_CONSISTENCY:
        return
    if pairing_matrix(s) != [list(r) for r in s.spec.entries]:
        raise InvariantViolation(f"H A0 R^T no longer matches {s.spec}")
    if not parity_consistent(s):
        raise InvariantViolation("parity is not additive along R")
    if abs(integer_det(s.R)) != 1:
        raise InvariantViolation("root change of basis is not unimodular")


def reflected_matrix(a: CartanSpec, k: int) -> list[list[Scalar]]:
    """Odd-reflection update of the entries at isotropic ``k``, before normalization."""
    e = a.entries
    n = a.n
    conn = [i != k and connected(a, i, k) for i in range(n)]
    out = []
    for i in range(n):
        if i == k:
            out.append(list(e[k]))
            continue
        row = []
        for j in range(n):
            if j == k:
                row.append(-e[k][i] * e[i][k])
            elif not conn[i]:
                row.append(e[i][j])
            elif not conn[j]:
                row.append(e[k][i] * e[i][j])
            else:
                row.append(e[k][i] * e[i][j] + e[i][k] * e[k][j] + e[k][i] * e[i][k])
        out.append(row)
    return out


def odd_reflect(s: BaseState, k: int) -> tuple[BaseState, PositiveRootDelta]:
    a = s.spec
    if vertex_type(a, k) is not VertexType.SL11:
        raise NotIsotropic(f"vertex {k + 1} is not isotropic (a_kk={a.entries[k][k]}, p={a.parity[k]})")
    e = a.entries
    n = a.n
    conn = [i != k and connected(a, i, k) for i in range(n)]
    singular = not is_regular(a, k)

    rows = reflected_matrix(a, k)
    R, H, parity, entries = [], [], [], []
    for i in range(n):
        if i == k:
            r, h, p = tuple(-x for x in s.R[k]), s.H[k], a.parity[k]
        elif conn[i]:
            sign = -1 if a.parity[i] else 1
            r = _combine(s.R[i], s.R[k], 1, 1)
            # literal coroot is sign * (a_ik h_k + a_ki h_i) = sign * (formula row)
            h = _combine(s.H[k], s.H[i], e[i][k] * sign, e[k][i] * sign)
            rows[i] = [x * sign for x in rows[i]]
            p = 1 - a.parity[i]
        else:
            r, h, p = s.R[i], s.H[i], a.parity[i]
        new_row, c = _rescaled(rows[i], i)
        R.append(r)
        H.append(tuple(x * c for x in h))
        parity.append(p)
        entries.append(new_row)

    spec = CartanSpec(tuple(entries), tuple(parity))
    out = BaseState(spec, tuple(R), tuple(H), s.origin, s.log + (Step("odd", k, singular),), singular)
    _check(out)
    return out, PositiveRootDelta(s.R[k], tuple(-x for x in s.R[k]))


def even_reflect(s: BaseState, k: int) -> BaseState:
    a = s.spec
    e = a.entries
    n = a.n
    if not e[k][k]:
        raise IsotropicVertex(f"vertex {k + 1} has a_kk = 0")
    step = 2 if a.parity[k] else 1
    coeffs = []
    for i in range(n):
        x = e[k][i]
        if not x.is_integer() or int(x.rat) % step:
            raise NotIntegral(f"a_{k + 1},{i + 1} = {x} is not in {step}Z")
        coeffs.append(int(x.rat))
    R = tuple(_combine(s.R[i], s.R[k], 1, -coeffs[i]) for i in range(n))
    H = tuple(_combine(s.H[i], s.H[k], Scalar(1), -e[i][k]) for i in range(n))
    out = BaseState(a, R, H, s.origin, s.log + (Step("even", k),), False)
    _check(out)
    return out


def odd_reflect_spec(a: CartanSpec, k: int) -> CartanSpec:
    """Matrix-only odd reflection at isotropic ``k``; same result as ``odd_reflect(...).spec``."""
    if vertex_type(a, k) is not VertexType.SL11:
        raise NotIsotropic(f"vertex {k + 1} is not isotropic")
    rows = reflected_matrix(a, k)
    parity = tuple(1 - p if i != k and connected(a, i, k) else p for i, p in enumerate(a.parity))
    return CartanSpec(tuple(_rescaled(r, i)[0] for i, r in enumerate(rows)), parity)
