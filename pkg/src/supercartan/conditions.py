"""Integrability conditions on a Cartan matrix and the generalized-Cartan-matrix test.

Conditions, checked after row normalization:

1. ``a_ii`` is 0 or 2;
2. ``a_ii == 0`` implies the vertex is odd;
3. ``a_ii == 2`` implies ``a_ij`` lies in ``2^p(i) * Z_{<=0}`` for ``j != i``;
4. ``a_ij == 0`` and ``a_ji != 0`` imply ``a_ii == 0``;

4'. ``a_ij == 0`` implies ``a_ji == 0``.

A generalized Cartan matrix satisfies 1-3 and 4'.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cartan import CartanSpec, normalize
from .scalar import Scalar


@dataclass(frozen=True)
class ConditionReport:
    cond1: list[int] = field(default_factory=list)
    cond2: list[int] = field(default_factory=list)
    cond3: list[tuple[int, int]] = field(default_factory=list)
    cond4: list[tuple[int, int]] = field(default_factory=list)
    cond4prime: list[tuple[int, int]] = field(default_factory=list)

    # each list holds the violating vertices / pairs (0-based); empty means the condition holds
    @property
    def lm23(self) -> bool:
        return not (self.cond1 or self.cond2 or self.cond3 or self.cond4)

    @property
    def gcm(self) -> bool:
        return not (self.cond1 or self.cond2 or self.cond3 or self.cond4prime)

    def holds(self) -> dict[str, bool]:
        return {
            "1": not self.cond1,
            "2": not self.cond2,
            "3": not self.cond3,
            "4": not self.cond4,
            "4'": not self.cond4prime,
        }


def _in_scaled_nonpositive_integers(x: Scalar, step: int) -> bool:
    return x.is_integer() and x.rat <= 0 and int(x.rat) % step == 0


def check_conditions(a: CartanSpec) -> ConditionReport:
    a = normalize(a)
    e, p, n = a.entries, a.parity, a.n
    rep = ConditionReport()
    for i in range(n):
        if e[i][i] not in (0, 2):
            rep.cond1.append(i)
        if e[i][i] == 0 and p[i] == 0:
            rep.cond2.append(i)
        for j in range(n):
            if j == i:
                continue
            if e[i][i] == 2 and not _in_scaled_nonpositive_integers(e[i][j], 2 if p[i] else 1):
                rep.cond3.append((i, j))
            if not e[i][j] and e[j][i]:
                rep.cond4prime.append((i, j))
                if e[i][i]:
                    rep.cond4.append((i, j))
    return rep


def satisfies_integrability(a: CartanSpec) -> bool:
    return check_conditions(a).lm23


def is_gcm(a: CartanSpec) -> bool:
    return check_conditions(a).gcm


check_lm23 = check_conditions
