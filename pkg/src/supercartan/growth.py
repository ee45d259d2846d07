"""Principal roots, the principal matrix B, and growth diagnostics."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .cartan import CartanSpec, VertexType, has_zero_row, is_indecomposable, vertex_type
from .errors import Decomposable, NotGCM, TooFewDegrees, ZeroRow
from .freelie import GradedDims, graded_dims
from .linalg import det, principal_minors
from .reflection import BaseState, odd_reflect
from .scalar import Scalar

# superpolynomial when the polynomial fit's residual exceeds this multiple of the exponential one
EXPONENTIAL_DOMINANCE = Fraction(4)
MIN_DEGREES = 8


class RootOrigin(enum.Enum):
    EVEN_SIMPLE = "even simple"
    DOUBLED_ODD = "double of odd simple"


@dataclass(frozen=True)
class PrincipalRoot:
    root: tuple[int, ...]
    coroot: tuple[Scalar, ...]
    origin: RootOrigin

    def __str__(self):
        terms = []
        for i, c in enumerate(self.root):
            if c:
                terms.append(f"a{i + 1}" if c == 1 else f"{c}a{i + 1}")
        return "+".join(terms)


def pair(coroot: Sequence, a0: CartanSpec, root: Sequence[int]) -> Scalar:
    """``root(coroot)`` with both given in original coordinates."""
    e = a0.entries
    n = a0.n
    total = Scalar(0)
    for l in range(n):
        if coroot[l]:
            total += coroot[l] * sum((e[l][m] * root[m] for m in range(n) if root[m]), Scalar(0))
    return total


@dataclass
class PrincipalRootSet:
    roots: list[PrincipalRoot]
    bases: int
    complete: bool

    def __len__(self):
        return len(self.roots)

    def root_vectors(self) -> set[tuple[int, ...]]:
        return {r.root for r in self.roots}


def _root_order(r: PrincipalRoot):
    return (sum(r.root), tuple(-x for x in r.root))


def principal_roots(a: CartanSpec, max_depth: int = 16, max_bases: int = 5000) -> PrincipalRootSet:
    """Even simple roots and doubled odd simple roots over all bases reached by regular odd reflections."""
    if has_zero_row(a):
        raise ZeroRow("matrix has a zero row")
    if not is_indecomposable(a):
        raise Decomposable("matrix is decomposable")
    start = BaseState.initial(a)
    seen = {start.roots_key()}
    frontier = [start]
    found: dict[tuple[int, ...], PrincipalRoot] = {}
    complete = True
    depth = 0
    while frontier:
        nxt = []
        for s in frontier:
            for i in range(s.n):
                t = vertex_type(s.spec, i)
                if t is VertexType.SL2:
                    found.setdefault(s.R[i], PrincipalRoot(s.R[i], s.H[i], RootOrigin.EVEN_SIMPLE))
                elif t is VertexType.OSP12:
                    r = tuple(2 * x for x in s.R[i])
                    found.setdefault(r, PrincipalRoot(r, tuple(x / 2 for x in s.H[i]), RootOrigin.DOUBLED_ODD))
            for k in range(s.n):
                if vertex_type(s.spec, k) is not VertexType.SL11:
                    continue
                if any(not s.spec.entries[k][j] and s.spec.entries[j][k] for j in range(s.n)):
                    continue  # singular
                b, _ = odd_reflect(s, k)
                key = b.roots_key()
                if key in seen:
                    continue
                if depth >= max_depth or len(seen) >= max_bases:
                    complete = False
                    continue
                seen.add(key)
                nxt.append(b)
        frontier = nxt
        depth += 1
    return PrincipalRootSet(sorted(found.values(), key=_root_order), len(seen), complete)


@dataclass
class PrincipalMatrix:
    roots: list[PrincipalRoot]
    B: list[list[Scalar]]

    def __str__(self):
        return "[" + "; ".join(" ".join(str(x) for x in row) for row in self.B) + "]"


def principal_matrix(S: Sequence[PrincipalRoot], a0: CartanSpec) -> PrincipalMatrix:
    """``b_ij = alpha_j(h_i)`` over the ordered principal roots ``S``."""
    S = list(S)
    B = [[pair(ri.coroot, a0, rj.root) for rj in S] for ri in S]
    return PrincipalMatrix(S, B)


class GCMType(enum.Enum):
    FINITE = "finite"
    AFFINE = "affine"
    INDEFINITE = "indefinite"


def is_even_gcm(B) -> bool:
    n = len(B)
    for i in range(n):
        if B[i][i] != 2:
            return False
        for j in range(n):
            if i == j:
                continue
            x = Scalar.coerce(B[i][j])
            if not x.is_integer() or x > 0:
                return False
            if (x == 0) != (B[j][i] == 0):
                return False
    return True


def _blocks(B) -> list[list[int]]:
    n = len(B)
    seen = set()
    out = []
    for s in range(n):
        if s in seen:
            continue
        comp, stack = [], [s]
        seen.add(s)
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if j not in seen and (B[i][j] or B[j][i]):
                    seen.add(j)
                    stack.append(j)
        out.append(sorted(comp))
    return out


def even_gcm_type(B) -> GCMType:
    """Finite, affine or indefinite type of an indecomposable even GCM."""
    if isinstance(B, PrincipalMatrix):
        B = B.B
    if isinstance(B, CartanSpec):
        B = [list(r) for r in B.entries]
    if not is_even_gcm(B):
        raise NotGCM("not an even generalized Cartan matrix")
    if len(_blocks(B)) > 1:
        raise Decomposable("type is defined for indecomposable matrices")
    proper = [m for _, m in principal_minors(B, proper=True)]
    if all(m > 0 for m in proper):
        d = det(B)
        if d > 0:
            return GCMType.FINITE
        if d == 0:
            return GCMType.AFFINE
    return GCMType.INDEFINITE


class GrowthVerdict(enum.Enum):
    FAILS = "fails_finite_growth"
    CONSISTENT = "consistent_with_finite_growth"


@dataclass
class GrowthEvidence:
    principal: PrincipalRootSet
    matrix: PrincipalMatrix
    bound: int
    blocks: list[tuple[list[int], GCMType | None]] = field(default_factory=list)
    verdict: GrowthVerdict = GrowthVerdict.CONSISTENT
    reasons: list[str] = field(default_factory=list)

    @property
    def within_bound(self) -> bool:
        return len(self.principal) <= self.bound


def finite_growth_evidence(a: CartanSpec, max_depth: int = 16) -> GrowthEvidence:
    """Necessary conditions for finite growth read off the principal roots.

    Finite growth forces B to be an even GCM whose blocks are of finite or
    affine type, and at most 2n principal roots.  Passing these checks is
    only evidence, never a proof.
    """
    pr = principal_roots(a, max_depth)
    pm = principal_matrix(pr.roots, a)
    ev = GrowthEvidence(pr, pm, 2 * a.n)
    if not ev.within_bound:
        ev.reasons.append(f"{len(pr)} principal roots exceed 2n = {2 * a.n}")
    B = pm.B
    for block in _blocks(B):
        sub = [[B[i][j] for j in block] for i in block]
        if not is_even_gcm(sub):
            ev.blocks.append((block, None))
            ev.reasons.append(f"block {[i + 1 for i in block]} is not an even GCM")
            continue
        t = even_gcm_type(sub)
        ev.blocks.append((block, t))
        if t is GCMType.INDEFINITE:
            ev.reasons.append(f"block {[i + 1 for i in block]} is indefinite")
    if ev.reasons:
        ev.verdict = GrowthVerdict.FAILS
    return ev


# -- growth of graded dimensions ----------------------------------------------------

class GrowthKind(enum.Enum):
    FINITE_DIMENSIONAL = "finite_dimensional"
    BOUNDED = "bounded_affine_like"
    POLYNOMIAL = "polynomial"
    SUPERPOLYNOMIAL = "superpolynomial"


GROWTH_ORDER = {k: i for i, k in enumerate(GrowthKind)}


@dataclass(frozen=True)
class GrowthClass:
    kind: GrowthKind
    degree: float | None = None

    def __str__(self):
        if self.kind is GrowthKind.POLYNOMIAL:
            return f"polynomial(degree ~ {self.degree:.2f})"
        return self.kind.value


def _least_squares(xs, ys) -> tuple[float, float]:
    """Slope and residual sum of squares of the best line."""
    n = len(xs)
    mx, my = sum(xs) / n, sum(ys) / n
    sxx = sum((x - mx) ** 2 for x in xs)
    sxy = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
    slope = sxy / sxx
    rss = sum((y - my - slope * (x - mx)) ** 2 for x, y in zip(xs, ys))
    return slope, rss


def growth_classify(dims: GradedDims | Sequence[int]) -> GrowthClass:
    """Growth class of the principal-grading dimensions ``dim g_1, ..., dim g_N``.

    Finite when the last third of the degrees vanish, bounded when the second
    half never exceeds the first, otherwise the cumulative dimensions are
    fitted against ``m`` on log-log and log-linear scales.
    """
    positive = list(dims.positive if isinstance(dims, GradedDims) else dims)
    N = len(positive)
    if N < MIN_DEGREES:
        raise TooFewDegrees(f"need at least {MIN_DEGREES} degrees, got {N}")
    window = -(-N // 3)
    if not any(positive[-window:]):
        return GrowthClass(GrowthKind.FINITE_DIMENSIONAL)
    half = N // 2
    if max(positive[half:]) <= max(positive[:half]):
        return GrowthClass(GrowthKind.BOUNDED)
    cumulative = []
    total = 0
    for d in positive:
        total += d
        cumulative.append(total)
    ms = list(range(half + 1, N + 1))
    logs = [math.log(cumulative[m - 1]) for m in ms]
    slope_poly, rss_poly = _least_squares([math.log(m) for m in ms], logs)
    _, rss_exp = _least_squares([float(m) for m in ms], logs)
    if Fraction(rss_poly) > EXPONENTIAL_DOMINANCE * Fraction(rss_exp):
        return GrowthClass(GrowthKind.SUPERPOLYNOMIAL)
    return GrowthClass(GrowthKind.POLYNOMIAL, max(slope_poly - 1, 0.0))


def classify_growth(a: CartanSpec, N: int = 12) -> GrowthClass:
    return growth_classify(graded_dims(a, N))


# -- dimension bound under an odd reflection ----------------------------------------

@dataclass(frozen=True)
class BoundCheck:
    m: int
    reflected: int
    bound: int

    @property
    def holds(self) -> bool:
        return self.reflected <= self.bound


def reflection_bound(before: GradedDims, after: GradedDims, m_max: int) -> list[BoundCheck]:
    """``dim g'_m <= sum_{k=-2m}^{2m} dim g_k`` for ``m = 1..m_max``.

    Negative degrees mirror positive ones.
    """
    d = before.dims
    out = []
    for m in range(1, m_max + 1):
        if 2 * m > before.N:
            raise TooFewDegrees(f"need dims to degree {2 * m} for m = {m}")
        bound = d[0] + 2 * sum(d[1:2 * m + 1])
        out.append(BoundCheck(m, after.dims[m], bound))
    return out
