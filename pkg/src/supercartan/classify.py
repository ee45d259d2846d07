"""Admissibility, regular Kac-Moody verdicts, family identification and the rank-2 scan."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations

from .cartan import (
    CartanSpec,
    VertexType,
    has_zero_row,
    is_indecomposable,
    is_symmetrizable,
    normalize,
    vertex_type,
)
from .conditions import ConditionReport, check_conditions, is_gcm, satisfies_integrability
from .errors import Decomposable, InvalidParameters, ZeroRow
from .families import (
    SYMMETRIZABLE,
    UNKNOWN,
    FamilyTag,
    make_D210,
    make_D210hat,
    make_q2,
    make_S12,
    q2_parity_patterns,
    q_matrix,
    solve_q_system,
)
from .orbit import OrbitGraph, canonical_key, explore
from .reflection import odd_reflect_spec
from .scalar import Scalar

DEFAULT_DEPTH = 16
DEFAULT_MAX_STATES = 5000


class Answer(enum.Enum):
    YES = "yes"
    NO = "no"
    TRUNCATED = "truncated"


@dataclass
class Verdict:
    answer: Answer
    orbit: OrbitGraph
    witness: CartanSpec | None = None
    report: ConditionReport | None = None

    @property
    def depth_verified(self) -> int | None:
        """Depth to which a truncated search found no violation, else ``None``."""
        if self.answer is Answer.TRUNCATED:
            return self.orbit.max_depth_reached
        return None

    def __str__(self):
        if self.answer is Answer.NO:
            return f"no (witness {self.witness})"
        if self.answer is Answer.TRUNCATED:
            return f"truncated after depth {self.depth_verified} ({len(self.orbit)} matrices, none violating)"
        return f"yes ({len(self.orbit)} matrices)"


def _require_classifiable(a: CartanSpec) -> None:
    if has_zero_row(a):
        raise ZeroRow("matrix has a zero row")
    if not is_indecomposable(a):
        raise Decomposable("matrix is decomposable")


def _orbit_verdict(a, depth, max_states, allow_singular, ok) -> Verdict:
    _require_classifiable(a)
    g = explore(a, odd_only=True, allow_singular=allow_singular, max_depth=depth,
                max_states=max_states, stop_on=lambda s: not ok(s))
    if g.status == "stopped":
        w = g.nodes[g.stopped_at]
        return Verdict(Answer.NO, g, w, check_conditions(w))
    return Verdict(Answer.YES if g.complete else Answer.TRUNCATED, g)


def is_admissible(a: CartanSpec, depth: int = DEFAULT_DEPTH, max_states: int = DEFAULT_MAX_STATES) -> Verdict:
    """Every matrix reachable by odd reflections, singular ones included, meets conditions 1-4."""
    return _orbit_verdict(a, depth, max_states, True, satisfies_integrability)


def is_regular_kac_moody(a: CartanSpec, depth: int = DEFAULT_DEPTH,
                         max_states: int = DEFAULT_MAX_STATES) -> Verdict:
    """Every matrix reachable by odd reflections is a generalized Cartan matrix.

    A singular isotropic vertex violates condition 4', so it surfaces as a
    non-GCM witness before any singular reflection would be needed.
    """
    return _orbit_verdict(a, depth, max_states, False, is_gcm)


# -- the rank 2 scan ---------------------------------------------------------

SL12 = FamilyTag("sl(1,2)")
OSP32 = FamilyTag("osp(3,2)")
NOT_REGULAR_KM = "NotRegularKM"


@dataclass
class ScanEntry:
    a: int
    tag: FamilyTag
    verdicts: dict[int, Verdict] = field(default_factory=dict)
    reflected_entry: Scalar | None = None

    @property
    def positive(self) -> bool:
        return self.tag.name != NOT_REGULAR_KM


def two_vertex_matrix(a, parity: int) -> CartanSpec:
    """Isotropic vertex joined to a non-isotropic one, labels 1 (outgoing) and ``a`` (incoming)."""
    return CartanSpec.from_rows([[0, 1], [a, 2]], (1, parity))


def two_vertex_scan(lo: int, hi: int, depth: int = DEFAULT_DEPTH) -> dict[int, ScanEntry]:
    """Regular Kac-Moody test over the rank 2 family for ``a`` in ``[lo, hi]``.

    The non-isotropic vertex is tried with both parities.  For rejected ``a``
    the entry records the label ``-a/(a+1)`` produced by the reflection at the
    isotropic vertex.
    """
    out = {}
    for a in range(lo, hi + 1):
        verdicts = {p: is_regular_kac_moody(two_vertex_matrix(a, p), depth) for p in (0, 1)}
        reflected = None
        if a != -1:
            reflected = odd_reflect_spec(two_vertex_matrix(a, 0), 0).entries[1][0]
        if any(v.answer is Answer.YES for v in verdicts.values()):
            tag = {-1: SL12, -2: OSP32}.get(a, FamilyTag("regular", (a,)))
        else:
            tag = FamilyTag(NOT_REGULAR_KM, (reflected,))
        out[a] = ScanEntry(a, tag, verdicts, reflected)
    return out


# -- identification ------------------------------------------------------------

@lru_cache(maxsize=None)
def _q2_templates(n: int) -> dict[bytes, FamilyTag]:
    out = {}
    for pattern in q2_parity_patterns(n):
        out.setdefault(canonical_key(make_q2(pattern)), FamilyTag("q2", (n, pattern)))
    return out


@lru_cache(maxsize=None)
def _fixed_templates() -> dict[bytes, FamilyTag]:
    return {
        canonical_key(make_D210()): FamilyTag("D210"),
        canonical_key(make_D210hat()): FamilyTag("D210hat"),
    }


def _s12_candidates(a: CartanSpec):
    iso = [i for i in range(3) if vertex_type(a, i) is VertexType.SL11]
    even = [i for i in range(3) if vertex_type(a, i) is VertexType.SL2]
    if len(iso) != 2 or len(even) != 1:
        return
    k = even[0]
    e = a.entries
    for i, j in (iso, iso[::-1]):
        if not e[i][j]:
            yield Scalar(0)
            continue
        rho = e[i][k] / e[i][j]
        if rho + 1:
            alpha = -1 / (rho + 1)
            yield alpha
            yield -alpha


def _match_s12(a: CartanSpec, key: bytes) -> FamilyTag | None:
    for alpha in _s12_candidates(a):
        if canonical_key(make_S12(alpha)) == key:
            if alpha.is_integer():
                return FamilyTag("S120", (int(alpha.rat),))
            return FamilyTag("S12", (alpha,))
    return None


def _integral(x: Scalar) -> int | None:
    return int(x.rat) if x.is_integer() else None


def _match_q(a: CartanSpec, key: bytes) -> FamilyTag | None:
    if any(vertex_type(a, i) is not VertexType.SL11 for i in range(3)):
        return None
    if any(not a.entries[i][j] for i in range(3) for j in range(3) if i != j):
        return None
    for perm in permutations(range(3)):
        e = normalize(a.permuted(perm)).entries
        x = (e[0][2] / e[0][1], e[1][0] / e[1][2], e[2][1] / e[2][0])
        mnt = [_integral(1 + x[0] + 1 / x[1]), _integral(1 + x[1] + 1 / x[2]), _integral(1 + x[2] + 1 / x[0])]
        if None in mnt:
            continue
        try:
            sol = solve_q_system(*mnt)
        except InvalidParameters:
            continue
        for name, branch in (("Qminus", sol.minus), ("Qplus", sol.plus)):
            if tuple(branch) == x and canonical_key(q_matrix(branch)) == key:
                return FamilyTag(name, tuple(mnt))
    return None


def _match_templates(a: CartanSpec) -> FamilyTag | None:
    key = canonical_key(a)
    if a.n >= 3:
        tag = _q2_templates(a.n).get(key)
        if tag:
            return tag
    tag = _fixed_templates().get(key)
    if tag:
        return tag
    if a.n == 3:
        return _match_s12(a, key) or _match_q(a, key)
    return None


def identify_family(a: CartanSpec, depth: int = DEFAULT_DEPTH, orbit_depth: int = 4) -> FamilyTag:
    """Name the family of ``a``.

    The matrix itself is matched first; failing that, the matrices reachable
    within ``orbit_depth`` odd reflections are tried, since a family may be
    presented in any of its bases.
    """
    _require_classifiable(a)
    a = normalize(a)
    tag = _match_templates(a)
    if tag:
        return tag
    g = explore(a, odd_only=True, allow_singular=True, max_depth=orbit_depth)
    for key in sorted(g.nodes, key=lambda k: (g.depth[k], k)):
        if g.depth[key]:
            tag = _match_templates(g.nodes[key])
            if tag:
                return tag
    if is_symmetrizable(a) and is_regular_kac_moody(a, depth).answer is Answer.YES:
        if all(vertex_type(a, i) is VertexType.SL2 for i in range(a.n)):
            from .growth import GCMType, even_gcm_type

            if even_gcm_type(a) is GCMType.INDEFINITE:
                return UNKNOWN
        return SYMMETRIZABLE
    return UNKNOWN
