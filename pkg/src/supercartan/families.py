"""Constructors for the non-symmetrizable and singular families, and the Q-system solver."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .cartan import CartanSpec
from .errors import BranchClassificationFailure, EvenCrossCount, InvalidParameters, TooSmall
from .scalar import Scalar, solve_quadratic


class FamilyTag(NamedTuple):
    name: str
    params: tuple = ()

    def __str__(self):
        if not self.params:
            return self.name
        return f"{self.name}({', '.join(str(p) for p in self.params)})"


UNKNOWN = FamilyTag("Unknown")
SYMMETRIZABLE = FamilyTag("FiniteOrAffineSymmetrizable")


def make_q2(parities: Sequence[int]) -> CartanSpec:
    """Cycle matrix of q(n)^(2); ``parities[i] == 1`` marks an isotropic vertex."""
    n = len(parities)
    if n < 3:
        raise TooSmall("q(n)^(2) needs at least 3 vertices")
    if any(p not in (0, 1) for p in parities):
        raise InvalidParameters("parities must be 0 or 1")
    if sum(parities) % 2 == 0:
        raise EvenCrossCount("an odd number of vertices must be isotropic")
    rows = [[0] * n for _ in range(n)]
    for i, p in enumerate(parities):
        prev, nxt = (i - 1) % n, (i + 1) % n
        if p:
            rows[i][prev], rows[i][nxt] = 1, -1
        else:
            rows[i][i], rows[i][prev], rows[i][nxt] = 2, -1, -1
    return CartanSpec.from_rows(rows, parities)


def make_S12(alpha) -> CartanSpec:
    """S(1,2,alpha) with vertex order (left odd, top odd, even)."""
    a = Scalar.coerce(alpha)
    rows = [
        [0, a, -1 - a],
        [a, 0, 1 - a],
        [-1, -1, 2],
    ]
    return CartanSpec.from_rows(rows, (1, 1, 0))


def make_S120(alpha: int) -> CartanSpec:
    if not isinstance(alpha, int):
        raise InvalidParameters("S(1,2,0) family needs an integer parameter")
    return make_S12(alpha)


def make_D210() -> CartanSpec:
    return CartanSpec.from_rows([[2, -1, 0], [0, 0, 1], [0, -1, 2]], (0, 1, 0))


def make_D210hat() -> CartanSpec:
    return CartanSpec.from_rows(
        [[2, -1, 0, 0], [0, 0, 1, -1], [0, -1, 2, 0], [0, -1, 0, 2]], (0, 1, 0, 0)
    )


# -- the Q system -----------------------------------------------------------

class QTriple(NamedTuple):
    a: Scalar
    b: Scalar
    c: Scalar


@dataclass(frozen=True)
class QSolution:
    m: int
    n: int
    t: int
    minus: QTriple
    plus: QTriple
    quadratic: tuple[Fraction, Fraction, Fraction]
    irrational: bool

    def branch(self, sign: str) -> QTriple:
        return self.minus if _branch_name(sign) == "minus" else self.plus

    def residuals(self, sign: str) -> tuple[Scalar, Scalar, Scalar]:
        return q_residuals(self.branch(sign), self.m, self.n, self.t)


def _branch_name(sign: str) -> str:
    if sign in ("minus", "-", "Qminus"):
        return "minus"
    if sign in ("plus", "+", "Qplus"):
        return "plus"
    raise InvalidParameters(f"unknown branch {sign!r}")


def q_residuals(x: QTriple, m: int, n: int, t: int) -> tuple[Scalar, Scalar, Scalar]:
    a, b, c = x
    return (1 + a + 1 / b - m, 1 + b + 1 / c - n, 1 + c + 1 / a - t)


def check_q_parameters(m: int, n: int, t: int) -> None:
    if not all(isinstance(v, int) and v <= -1 for v in (m, n, t)):
        raise InvalidParameters("m, n, t must be integers <= -1")
    if m == n == t == -1:
        raise InvalidParameters("m, n, t must not all equal -1")


def q_quadratic(m: int, n: int, t: int) -> tuple[Fraction, Fraction, Fraction]:
    """Coefficients of the quadratic satisfied by ``a`` after eliminating ``b`` and ``c``.

    With ``M, N, T = m-1, n-1, t-1``: ``b = 1/(M - a)``, ``c = (T a - 1)/a`` and
    ``(1 - TN) a^2 + (TNM - T + N - M) a + (1 - NM) = 0``.
    """
    M, N, T = m - 1, n - 1, t - 1
    return Fraction(1 - T * N), Fraction(T * N * M - T + N - M), Fraction(1 - N * M)


def solve_q_system(m: int, n: int, t: int) -> QSolution:
    """Both solutions of ``1+a+1/b = m, 1+b+1/c = n, 1+c+1/a = t``."""
    check_q_parameters(m, n, t)
    p, q, r = q_quadratic(m, n, t)
    roots = solve_quadratic(p, q, r)
    T = t - 1
    triples = []
    for a in (roots.low, roots.high):
        b = 1 / (m - 1 - a)
        c = (T * a - 1) / a
        x = QTriple(a, b, c)
        if any(q_residuals(x, m, n, t)):
            raise BranchClassificationFailure(f"nonzero residual for a = {a}")
        triples.append(x)
    minus = [x for x in triples if all(v < -1 for v in x)]
    plus = [x for x in triples if all(-1 < v < 0 for v in x)]
    if len(minus) != 1 or len(plus) != 1:
        raise BranchClassificationFailure(f"branches of Q({m},{n},{t}) violate the expected bounds")
    for x in triples:
        prod = x.a * x.b * x.c
        if prod == 1 or 1 + prod == 0:
            raise BranchClassificationFailure(f"degenerate product abc = {prod}")
    return QSolution(m, n, t, minus[0], plus[0], (p, q, r), roots.irrational)


def q_matrix(x: QTriple) -> CartanSpec:
    a, b, c = x
    return CartanSpec.from_rows([[0, 1, a], [b, 0, 1], [1, c, 0]], (1, 1, 1))


def make_Q(branch: str, m: int, n: int, t: int) -> CartanSpec:
    return q_matrix(solve_q_system(m, n, t).branch(branch))


def q2_parity_patterns(n: int):
    """All legal q(n)^(2) parity vectors of length ``n`` (odd number of ones)."""
    for bits in range(1 << n):
        pattern = tuple((bits >> (n - 1 - i)) & 1 for i in range(n))
        if sum(pattern) % 2:
            yield pattern


solve_Q = solve_q_system
