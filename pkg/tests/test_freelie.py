from fractions import Fraction as F
from itertools import product
from math import factorial, gcd
from functools import reduce

import pytest
import sympy

from supercartan.cartan import CartanSpec, submatrix
from supercartan.errors import BasisTooLarge, InvalidParameters
from supercartan.families import make_D210, make_q2, make_S12
from supercartan.freelie import (
    dims_by_weight,
    expand,
    free_dimension,
    gram,
    graded_dims,
    is_lyndon,
    lyndon_words,
    root_dimension,
    standard_bracketing,
    weight_basis,
)
from supercartan.linalg import rank
from supercartan.reflection import BaseState, odd_reflect


def C(rows, parity):
    return CartanSpec.from_rows(rows, parity)


SL12 = C([[0, 1], [1, 0]], (1, 1))
OSP32 = C([[0, 1], [-2, 2]], (1, 0))
A1 = C([[2]], (0,))

FINITE = [
    (SL12, 8),
    (OSP32, 12),
    (C([[0, 1], [-2, 2]], (1, 1)), 12),
    (A1, 3),
    (C([[2]], (1,)), 5),
    (C([[2, -1], [-1, 2]], (0, 0)), 8),
    (C([[2, -2], [-1, 2]], (0, 0)), 10),
    (C([[2, -3], [-1, 2]], (0, 0)), 14),
    (C([[2, -1, 0], [-1, 2, -1], [0, -1, 2]], (0, 0, 0)), 15),
    (C([[0, 1, 0], [-1, 2, -1], [0, -1, 2]], (1, 0, 0)), 15),
    (C([[2, -1, 0], [1, 0, -2], [0, -1, 2]], (0, 1, 0)), None),
]


def witt(weight):
    """Free Lie algebra weight-space dimension by the necklace formula."""
    total = sum(weight)
    g = reduce(gcd, weight)
    s = 0
    for d in sympy.divisors(g):
        m = factorial(total // d)
        for k in weight:
            m //= factorial(k // d)
        s += sympy.mobius(d) * m
    return s // total


# -- words -------------------------------------------------------------------

def test_basis_two_letters():
    basis = weight_basis(SL12, (1, 1))
    assert [b.letters for b in basis] == [(0, 1)]
    assert basis[0].tree == (0, 1)


def test_basis_odd_square():
    basis = weight_basis(C([[2]], (1,)), (2,))
    assert len(basis) == 1 and basis[0].tree == (0, 0)


def test_basis_even_square_empty():
    assert weight_basis(A1, (2,)) == []


def test_basis_rejects_bad_weight():
    with pytest.raises(InvalidParameters):
        weight_basis(A1, (0,))
    with pytest.raises(InvalidParameters):
        weight_basis(SL12, (1,))


def test_lyndon_basics():
    assert is_lyndon((0, 0, 1)) and not is_lyndon((0, 1, 0)) and not is_lyndon((0, 0))
    assert lyndon_words((2, 1)) == [(0, 0, 1)]
    assert standard_bracketing((0, 0, 1)) == (0, (0, 1))
    assert standard_bracketing((0, 1, 1)) == ((0, 1), 1)


@pytest.mark.parametrize("weight", [(1, 1), (2, 1), (2, 2), (3, 1), (3, 2), (2, 2, 1), (4, 2), (3, 3)])
def test_lyndon_count_matches_witt(weight):
    assert len(lyndon_words(weight)) == witt(weight)
    assert free_dimension((0,) * len(weight), weight) == witt(weight)


@pytest.mark.parametrize("parity", [(1, 1), (1, 0), (0, 1), (1, 1, 0), (1, 1, 1)])
def test_super_lyndon_count_matches_pbw(parity):
    n = len(parity)
    a = C([[0] * n for _ in range(n)], parity)
    for weight in product(range(4), repeat=n):
        if any(weight) and sum(weight) <= 6:
            assert len(weight_basis(a, weight)) == free_dimension(parity, weight), weight


@pytest.mark.parametrize("parity", [(1, 1), (1, 0), (0, 0)])
def test_basis_expansions_independent(parity):
    """The super-Lyndon brackets are linearly independent in the free associative algebra."""
    n = len(parity)
    a = C([[0] * n for _ in range(n)], parity)
    for weight in [(2, 1), (2, 2), (3, 2), (1, 4)]:
        basis = weight_basis(a, weight)
        polys = [expand(b.tree, parity)[0] for b in basis]
        monomials = sorted({m for p in polys for m in p})
        matrix = [[p.get(m, 0) for m in monomials] for p in polys]
        assert rank(matrix) == len(basis)


# -- Gram blocks ----------------------------------------------------------------

def test_gram_simple_root():
    g = gram(SL12, (1, 0))
    assert g.entries == [[(1, 0)]]
    assert g.rank == 1


def test_gram_sum_of_roots():
    g = gram(SL12, (1, 1))
    assert len(g.rows) == 1 and g.rank == 1


def test_gram_empty():
    g = gram(A1, (2,))
    assert g.rows == [] and g.rank == 0


def test_gram_kills_serre_element():
    # [X1,[X1,X2]] vanishes in A2
    assert gram(C([[2, -1], [-1, 2]], (0, 0)), (2, 1)).rank == 0


@pytest.mark.parametrize("a", [SL12, OSP32, C([[2, -2], [-2, 2]], (0, 0)), make_S12(F(1, 2)), make_D210()])
def test_gram_rank_matches_dims(a):
    dims = dims_by_weight(a, 4)
    for weight in product(range(4), repeat=a.n):
        if any(weight) and sum(weight) <= 4:
            g = gram(a, weight)
            assert g.rank == g.rank_transposed
            assert g.rank == dims.get(weight, 0), weight


# -- graded dimensions ------------------------------------------------------------

def test_sl12_dims():
    d = graded_dims(SL12, 4)
    assert d.positive == (2, 1, 0, 0)
    assert d.zero == 2
    assert d.total == 8


def test_osp32_dims():
    d = graded_dims(OSP32, 6)
    assert d.total == 12


def test_sl2_dims():
    d = graded_dims(A1, 3)
    assert d.dims == (1, 1, 0, 0)
    assert d.total == 3


def test_sl11_dims():
    d = graded_dims(C([[0]], (1,)), 4)
    assert d.dims == (2, 1, 0, 0, 0)
    assert d.total == 4


def test_affine_not_vanishing():
    d = graded_dims(C([[2, -2], [-2, 2]], (0, 0)), 8)
    assert not d.vanished and d.total is None
    assert d.zero == 3


@pytest.mark.parametrize("a, total", FINITE)
def test_finite_type_vanishing(a, total):
    d = graded_dims(a, 12)
    assert d.vanished
    first = d.positive.index(0)
    assert not any(d.positive[first:])
    if total is not None:
        assert d.total == total


def test_basis_cap():
    with pytest.raises(BasisTooLarge):
        graded_dims(C([[2, -5, -5], [-5, 2, -5], [-5, -5, 2]], (0, 0, 0)), 12, cap=20)


def test_root_dimension():
    assert root_dimension(SL12, (1, 1)) == 1
    assert root_dimension(SL12, (2, 1)) == 0
    assert root_dimension(C([[2]], (1,)), (2,)) == 1


@pytest.mark.parametrize("a", [SL12, OSP32, make_S12(F(1, 2)), make_q2((1, 0, 0)),
                               C([[0, 1, 0], [1, 0, -1], [0, -1, 2]], (1, 1, 0))])
def test_regular_reflection_preserves_dims(a):
    big = dims_by_weight(a, 10)
    for k in range(a.n):
        if not a.parity[k] or a.entries[k][k]:
            continue
        if any(not a.entries[k][j] and a.entries[j][k] for j in range(a.n)):
            continue
        s, _ = odd_reflect(BaseState.initial(a), k)
        small = dims_by_weight(s.spec, 4)
        for w, d in small.items():
            v = tuple(sum(w[i] * s.R[i][l] for i in range(a.n)) for l in range(a.n))
            if v == s.R[k]:  # the simple root -alpha_k of the new base
                continue
            assert all(x >= 0 for x in v)
            if sum(v) <= 10:
                assert big.get(v, 0) == d, (w, v)


@pytest.mark.parametrize("a, J", [
    (make_S12(F(1, 2)), [0, 2]),
    (make_S12(F(1, 2)), [1, 2]),
    (make_q2((1, 0, 0, 0, 0)), [1, 2, 3]),
    (make_D210(), [0, 1]),
])
def test_submatrix_weights_agree(a, J):
    full = dims_by_weight(a, 6)
    sub = dims_by_weight(submatrix(a, J), 6)
    for w, d in sub.items():
        v = [0] * a.n
        for idx, j in enumerate(J):
            v[j] = w[idx]
        assert full.get(tuple(v), 0) == d
    for v, d in full.items():
        if all(v[i] == 0 for i in range(a.n) if i not in J):
            assert sub.get(tuple(v[j] for j in J), 0) == d
