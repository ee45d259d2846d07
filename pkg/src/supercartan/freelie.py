"""Root space dimensions of g(A) from the free Lie superalgebra on the generators.

Two routes are provided.

* :func:`gram` builds the super-Lyndon basis of a positive weight space of the
  free Lie superalgebra, mirrors it on the negative side, and pairs the two
  into the Cartan subalgebra by reducing brackets with the defining relations.
* :func:`graded_dims` uses that an element of positive weight of height at
  least 2 vanishes in g(A) exactly when every ``[Y_j, x]`` vanishes.  Weight
  spaces are built height by height from brackets ``[X_i, b]`` with ``b`` in a
  basis one level down, so only small exact matrices are ever reduced.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import permutations
from typing import Sequence, Union

from .cartan import CartanSpec, rank as cartan_rank
from .errors import BasisTooLarge, InvalidParameters
from .linalg import independent_rows, inverse, row_echelon
from .scalar import Scalar

Tree = Union[int, tuple]
Weight = tuple[int, ...]

DEFAULT_BASIS_CAP = 4000


def _coef(x: Scalar):
    # rational entries run on Fraction, which is much faster than Scalar
    return x.rat if x.d == 0 else x


def _entries(a: CartanSpec):
    return [[_coef(x) for x in row] for row in a.entries]


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


# -- words and the super-Lyndon basis ------------------------------------------

@dataclass(frozen=True)
class SuperWord:
    letters: tuple[int, ...]
    tree: Tree
    parity: int
    weight: Weight

    def __str__(self):
        return _tree_str(self.tree)


def _tree_str(t: Tree) -> str:
    if isinstance(t, int):
        return str(t + 1)
    return f"[{_tree_str(t[0])},{_tree_str(t[1])}]"


def is_lyndon(w: Sequence[int]) -> bool:
    """Strictly smaller than each of its proper suffixes."""
    w = tuple(w)
    return bool(w) and all(w < w[i:] for i in range(1, len(w)))


def standard_bracketing(w: tuple[int, ...]) -> Tree:
    """Split a Lyndon word at its longest proper Lyndon suffix, recursively."""
    if len(w) == 1:
        return w[0]
    for i in range(1, len(w)):
        if is_lyndon(w[i:]):
            return (standard_bracketing(w[:i]), standard_bracketing(w[i:]))
    raise AssertionError("a Lyndon word of length >= 2 has a proper Lyndon suffix")


def _content(weight: Weight) -> list[int]:
    return [i for i, k in enumerate(weight) for _ in range(k)]


def lyndon_words(weight: Weight) -> list[tuple[int, ...]]:
    """Lyndon words with letter multiplicities ``weight``, in lexicographic order."""
    letters = _content(weight)
    if not letters:
        return []
    first = letters[0]
    rest = letters[1:]
    # a Lyndon word starts with its smallest letter
    out = {(first,) + p for p in permutations(rest) if is_lyndon((first,) + p)}
    return sorted(out)


def _weight_parity(weight: Weight, parity: Sequence[int]) -> int:
    return sum(k * p for k, p in zip(weight, parity)) % 2


def weight_basis(a: CartanSpec, weight: Sequence[int]) -> list[SuperWord]:
    """Super-Lyndon basis of the free Lie superalgebra in the given weight.

    Standard bracketings of Lyndon words, together with ``[[w],[w]]`` for odd
    Lyndon ``w`` of half the weight.
    """
    weight = tuple(weight)
    if len(weight) != a.n or any(k < 0 for k in weight) or not any(weight):
        raise InvalidParameters("weight must be a nonzero nonnegative vector of length n")
    p = a.parity
    out = [SuperWord(w, standard_bracketing(w), _weight_parity(weight, p), weight)
           for w in lyndon_words(weight)]
    if all(k % 2 == 0 for k in weight):
        half = tuple(k // 2 for k in weight)
        if _weight_parity(half, p):
            for w in lyndon_words(half):
                t = standard_bracketing(w)
                out.append(SuperWord(w + w, (t, t), 0, weight))
    return out


def free_dimension(parity: Sequence[int], weight: Sequence[int]) -> int:
    """Dimension of a weight space of the free Lie superalgebra, by Moebius inversion.

    Independent of any basis: the PBW identity
    ``prod_even (1-t^b)^(-d_b) prod_odd (1+t^b)^(d_b) = 1/(1 - sum t_i)``
    is solved for ``d_b`` one weight at a time.
    """
    weight = tuple(weight)
    return _free_dims(tuple(parity), weight)[weight]


def _free_dims(parity: tuple[int, ...], top: Weight) -> dict[Weight, int]:
    weights = sorted(_box(top), key=sum)
    dims: dict[Weight, int] = {}
    for b in weights:
        if not any(b):
            continue
        # coefficient of t^b in 1/(1 - sum t_i): the multinomial coefficient
        target = math.factorial(sum(b))
        for k in b:
            target //= math.factorial(k)
        dims[b] = 0
        dims[b] = target - _pbw_coefficient(parity, dims, b)
    return dims


def _box(top: Weight):
    if not top:
        yield ()
        return
    for k in range(top[0] + 1):
        for rest in _box(top[1:]):
            yield (k,) + rest


def _pbw_coefficient(parity, dims, b: Weight) -> int:
    """Coefficient of ``t^b`` in the PBW product over all known ``d_c``."""
    poly = {tuple(0 for _ in b): 1}
    for c, d in dims.items():
        if not d or any(x > y for x, y in zip(c, b)):
            continue
        odd = _weight_parity(c, parity)
        # series of (1-t^c)^(-d) or (1+t^c)^d truncated inside the box below b
        factor = {}
        k = 0
        while all(k * x <= y for x, y in zip(c, b)):
            coeff = math.comb(d, k) if odd else math.comb(d + k - 1, k)
            if coeff:
                factor[tuple(k * x for x in c)] = coeff
            k += 1
        new = {}
        for u, cu in poly.items():
            for v, cv in factor.items():
                w = tuple(x + y for x, y in zip(u, v))
                if all(x <= y for x, y in zip(w, b)):
                    new[w] = new.get(w, 0) + cu * cv
        poly = new
    return poly.get(b, 0)


# -- polynomials in the tensor algebra -----------------------------------------

Poly = dict  # word tuple -> coefficient


def _add_into(acc: Poly, p: Poly, c=1) -> None:
    for w, x in p.items():
        v = acc.get(w, 0) + c * x
        if v:
            acc[w] = v
        else:
            acc.pop(w, None)


def _mul(p: Poly, q: Poly) -> Poly:
    out: Poly = {}
    for u, x in p.items():
        for v, y in q.items():
            w = u + v
            val = out.get(w, 0) + x * y
            if val:
                out[w] = val
            else:
                out.pop(w)
    return out


def super_bracket(p: Poly, q: Poly, pp: int, pq: int) -> Poly:
    """``[p, q] = pq - (-1)^{|p||q|} qp`` for homogeneous ``p`` and ``q``."""
    out = _mul(p, q)
    _add_into(out, _mul(q, p), -_sign(pp * pq))
    return out


def expand(tree: Tree, parity: Sequence[int]) -> tuple[Poly, int]:
    """The element of the tensor algebra given by a bracket tree, and its parity."""
    if isinstance(tree, int):
        return {(tree,): 1}, parity[tree]
    left, pl = expand(tree[0], parity)
    right, pr = expand(tree[1], parity)
    return super_bracket(left, right, pl, pr), (pl + pr) % 2


def lower(a: CartanSpec, i: int, p: Poly, entries=None) -> Poly:
    """``[Y_i, p]`` for ``p`` in the positive part, of weight other than ``alpha_i``.

    Moving ``Y_i`` through a word leaves ``h_i`` where an ``X_i`` stood; pushing
    ``h_i`` to the right end picks up ``sum a_{i j_m}`` over the later letters,
    and the remaining ``h_i`` terms cancel on Lie elements.
    """
    e = entries if entries is not None else _entries(a)
    par = a.parity
    pi = par[i]
    lead = -_sign(pi)
    out: Poly = {}
    for w, c in p.items():
        before = 0
        tail = sum(e[i][j] for j in w)
        for pos, j in enumerate(w):
            tail -= e[i][j]
            if j == i and tail:
                x = c * lead * _sign(pi * before) * tail
                key = w[:pos] + w[pos + 1:]
                v = out.get(key, 0) + x
                if v:
                    out[key] = v
                else:
                    out.pop(key)
            before += par[j]
    return out


# -- the pairing into the Cartan subalgebra --------------------------------------

@dataclass
class GramBlock:
    weight: Weight
    rows: list[SuperWord]
    cols: list[SuperWord]
    entries: list[list[tuple]]  # entries[r][c] is a length-n coordinate vector in h

    def flattened(self) -> list[list]:
        return [[x for e in row for x in e] for row in self.entries]

    def flattened_transpose(self) -> list[list]:
        n = len(self.weight)
        return [[self.entries[r][c][k] for r in range(len(self.rows))]
                for c in range(len(self.cols)) for k in range(n)]

    @property
    def rank(self) -> int:
        """Codimension of the kernel on the positive side."""
        if not self.rows or not self.cols:
            return 0
        return row_echelon(self.flattened())[0]

    @property
    def rank_transposed(self) -> int:
        """Codimension of the kernel on the negative side."""
        if not self.rows or not self.cols:
            return 0
        return row_echelon(self.flattened_transpose())[0]


def _weight_of(word: tuple[int, ...], n: int) -> Weight:
    w = [0] * n
    for j in word:
        w[j] += 1
    return tuple(w)


class _Pairing:
    """Brackets of positive elements with negative bracket trees."""

    def __init__(self, a: CartanSpec):
        self.a = a
        self.n = a.n
        self.e = _entries(a)
        self.p = a.parity

    def tree_info(self, t: Tree) -> tuple[Weight, int]:
        if isinstance(t, int):
            w = [0] * self.n
            w[t] = 1
            return tuple(w), self.p[t]
        w1, p1 = self.tree_info(t[0])
        w2, p2 = self.tree_info(t[1])
        return tuple(x + y for x, y in zip(w1, w2)), (p1 + p2) % 2

    def act(self, x: Poly, wx: Weight, px: int, t: Tree):
        """``[x, y_t]``: a polynomial, or an h-vector when the weights cancel."""
        wt, pt = self.tree_info(t)
        if isinstance(t, int):
            if wx == wt:
                c = x.get((t,), 0)
                return tuple(c if k == t else 0 for k in range(self.n))
            return {w: -_sign(px * pt) * c for w, c in lower(self.a, t, x, self.e).items()}
        y1, y2 = t
        w1, p1 = self.tree_info(y1)
        w2, p2 = self.tree_info(y2)
        rest1 = tuple(u - v for u, v in zip(wx, w1))
        rest2 = tuple(u - v for u, v in zip(wx, w2))
        z1 = self.act(x, wx, px, y1)
        term1 = self.act(z1, rest1, (px + p1) % 2, y2)
        z2 = self.act(x, wx, px, y2)
        pz2 = (px + p2) % 2
        # [y1, z2] = -(-1)^{|y1||z2|} [z2, y1]
        term2 = self.act(z2, rest2, pz2, y1)
        c2 = -_sign(px * p1) * _sign(p1 * pz2)
        if isinstance(term1, tuple):
            return tuple(u + c2 * v for u, v in zip(term1, term2))
        out = dict(term1)
        _add_into(out, term2, c2)
        return out


def gram(a: CartanSpec, weight: Sequence[int]) -> GramBlock:
    """Pairing of the positive and negative super-Lyndon bases of one weight, valued in h."""
    weight = tuple(weight)
    basis = weight_basis(a, weight)
    pairing = _Pairing(a)
    entries = []
    for x in basis:
        poly, px = expand(x.tree, a.parity)
        entries.append([pairing.act(poly, weight, px, y.tree) for y in basis])
    return GramBlock(weight, basis, list(basis), entries)


# -- graded dimensions ------------------------------------------------------------

@dataclass
class _Space:
    """A positive weight space of g(A).

    Elements are represented by images under an injective linear map
    (the ``q`` coordinates).  ``lower[j]`` holds the coordinates of
    ``[Y_j, b]`` in weight ``beta - alpha_j`` for each basis element ``b``.
    """

    weight: Weight
    dim: int
    cand_q: dict[tuple[int, int], list] = field(default_factory=dict)  # (i, m) -> q of [X_i, b_m]
    basis_q: list[list] = field(default_factory=list)
    basis_lower: list[dict[int, list]] = field(default_factory=list)
    inv: list[list] | None = None


@dataclass
class GradedDims:
    n: int
    N: int
    zero: int
    positive: tuple[int, ...]
    by_weight: dict[Weight, int]

    @property
    def dims(self) -> tuple[int, ...]:
        """``(dim g_0, dim g_1, ..., dim g_N)`` for the principal grading."""
        return (self.zero,) + self.positive

    @property
    def vanished(self) -> bool:
        """A zero degree forces every later degree to vanish."""
        return 0 in self.positive

    @property
    def total(self) -> int | None:
        if not self.vanished:
            return None
        return self.zero + 2 * sum(self.positive)

    def height(self, m: int) -> int:
        return self.dims[m]


def _unit(n, i) -> Weight:
    return tuple(int(k == i) for k in range(n))


def _vec_add(u, v, c=1):
    return [x + c * y for x, y in zip(u, v)]


def _vec_mat(v, m):
    if not m:
        return []
    return [sum((v[r] * m[r][c] for r in range(len(v))), 0) for c in range(len(m[0]))]


class _DimsBuilder:
    def __init__(self, a: CartanSpec, cap: int):
        self.a = a
        self.n = a.n
        self.e = _entries(a)
        self.p = a.parity
        self.cap = cap
        self.spaces: dict[Weight, _Space] = {}
        self._raise_cache: dict[tuple[int, Weight], list | None] = {}
        for i in range(self.n):
            w = _unit(self.n, i)
            s = _Space(w, 1, basis_q=[[1]], basis_lower=[{}], inv=[[1]])
            self.spaces[w] = s

    def dim(self, w: Weight) -> int:
        s = self.spaces.get(w)
        return s.dim if s else 0

    def raise_map(self, i: int, w: Weight):
        """Matrix of ``ad X_i`` from weight ``w`` to ``w + alpha_i`` in q coordinates."""
        key = (i, w)
        if key not in self._raise_cache:
            self._raise_cache[key] = self._raise_map(i, w)
        return self._raise_cache[key]

    def _raise_map(self, i: int, w: Weight):
        src = self.spaces[w]
        dst_w = tuple(x + (k == i) for k, x in enumerate(w))
        dst = self.spaces.get(dst_w)
        if dst is None or not dst.dim:
            return None
        rows = [dst.cand_q[(i, m)] for m in range(src.dim)]
        return [_vec_mat(r, rows) for r in src.inv]

    def _apply_raise(self, i: int, w: Weight, q):
        m = self.raise_map(i, w)
        if m is None:
            return None
        return _vec_mat(q, m)

    def candidate_image(self, i: int, gamma: Weight, m: int) -> list:
        """Concatenated ``[Y_j, [X_i, b_m]]`` coordinates over all ``j``."""
        n, e, p = self.n, self.e, self.p
        src = self.spaces[gamma]
        beta = tuple(x + (k == i) for k, x in enumerate(gamma))
        out = []
        for j in range(n):
            target = tuple(x - (k == j) for k, x in enumerate(beta))
            tdim = self.dim(target)
            if not tdim:
                continue
            v = [0] * tdim
            # [[Y_j, X_i], b] = -(-1)^{p_i} delta_ij gamma(h_i) b
            if i == j:
                g = sum(c * e[i][k] for k, c in enumerate(gamma))
                if g:
                    v = _vec_add(v, src.basis_q[m], -_sign(p[i]) * g)
            # (-1)^{p_i p_j} [X_i, [Y_j, b]]
            s = _sign(p[i] * p[j])
            if gamma == _unit(n, j):
                # [Y_j, X_j] = -(-1)^{p_j} h_j and [X_i, h_j] = -a_ji X_i
                if e[j][i]:
                    v = _vec_add(v, [1], s * _sign(p[j]) * e[j][i])
            else:
                low = src.basis_lower[m].get(j)
                if low is not None:
                    below = tuple(x - (k == j) for k, x in enumerate(gamma))
                    up = self._apply_raise(i, below, low)
                    if up is not None:
                        v = _vec_add(v, up, s)
            out.append((j, v))
        return out

    def build(self, beta: Weight) -> _Space:
        cands = []
        for i in range(self.n):
            if not beta[i]:
                continue
            gamma = tuple(x - (k == i) for k, x in enumerate(beta))
            for m in range(self.dim(gamma)):
                cands.append((i, gamma, m))
        if len(cands) > self.cap:
            raise BasisTooLarge(f"{len(cands)} spanning brackets at weight {beta} exceed the cap {self.cap}")
        images = [self.candidate_image(i, g, m) for i, g, m in cands]
        flat = [[x for _, v in img for x in v] for img in images]
        space = _Space(beta, 0)
        if not flat or not flat[0]:
            return space
        r, pivots = row_echelon(flat)
        space.dim = r
        if not r:
            return space
        for (i, g, m), row in zip(cands, flat):
            space.cand_q[(i, m)] = [row[c] for c in pivots]
        chosen = independent_rows(flat)
        for idx in chosen:
            i, g, m = cands[idx]
            space.basis_q.append(space.cand_q[(i, m)])
            space.basis_lower.append({j: v for j, v in images[idx]})
        space.inv = inverse(space.basis_q)
        return space

    def run(self, N: int) -> dict[Weight, int]:
        level = [w for w in self.spaces]
        for _ in range(2, N + 1):
            nxt = sorted({tuple(x + (k == i) for k, x in enumerate(w))
                          for w in level for i in range(self.n)})
            level = []
            for beta in nxt:
                s = self.build(beta)
                if s.dim:
                    self.spaces[beta] = s
                    level.append(beta)
            if not level:
                break
        return {w: s.dim for w, s in self.spaces.items() if sum(w) <= N}


def dims_by_weight(a: CartanSpec, N: int, cap: int = DEFAULT_BASIS_CAP) -> dict[Weight, int]:
    """``dim g_beta`` for every positive weight of height at most ``N`` (zero ones omitted)."""
    if N < 1:
        raise InvalidParameters("N must be at least 1")
    return _DimsBuilder(a, cap).run(N)


def graded_dims(a: CartanSpec, N: int, cap: int = DEFAULT_BASIS_CAP) -> GradedDims:
    """Principal-grading dimensions ``dim g_m`` for ``m = 0..N``."""
    by_weight = dims_by_weight(a, N, cap)
    positive = [0] * N
    for w, d in by_weight.items():
        positive[sum(w) - 1] += d
    zero = 2 * a.n - cartan_rank(a)
    return GradedDims(a.n, N, zero, tuple(positive), by_weight)


def root_dimension(a: CartanSpec, weight: Sequence[int], cap: int = DEFAULT_BASIS_CAP) -> int:
    weight = tuple(weight)
    if any(k < 0 for k in weight) or not any(weight):
        raise InvalidParameters("weight must be a nonzero nonnegative vector")
    return dims_by_weight(a, sum(weight), cap).get(weight, 0)
