from fractions import Fraction as F

import pytest

from supercartan.cartan import (
    CartanSpec,
    VertexType,
    components,
    is_indecomposable,
    is_normalized,
    is_regular,
    is_symmetrizable,
    normalize,
    rank,
    singular_vertices,
    submatrix,
    symmetrizer,
    vertex_type,
)
from supercartan.errors import EmptySubset, IncompatibleFields, InvariantViolation, ZeroRow
from supercartan.families import make_D210, make_Q, make_S12, make_q2
from supercartan.scalar import Scalar


def C(rows, parity):
    return CartanSpec.from_rows(rows, parity)


def test_normalize_even_row():
    assert normalize(C([[1, 2], [3, 6]], (0, 0))) == C([[2, 4], [1, 2]], (0, 0))


def test_normalize_isotropic_row():
    assert normalize(C([[0, 3], [1, 0]], (1, 1))) == C([[0, 1], [1, 0]], (1, 1))


def test_normalize_zero_row():
    with pytest.raises(ZeroRow):
        normalize(C([[0, 0], [1, 2]], (0, 0)))


def test_normalize_negative_leading_entry():
    assert normalize(C([[0, -2, 4], [1, 2, 0], [0, 1, 0]], (1, 0, 1))).entries[0] == (0, 1, -2)


def test_vertex_types():
    assert vertex_type(C([[2]], (0,)), 0) is VertexType.SL2
    assert vertex_type(C([[0]], (0,)), 0) is VertexType.HEISENBERG
    assert vertex_type(C([[2]], (1,)), 0) is VertexType.OSP12
    assert vertex_type(C([[0]], (1,)), 0) is VertexType.SL11


def test_regularity():
    assert not is_regular(make_D210(), 1)
    assert singular_vertices(make_D210()) == [1]
    assert is_regular(C([[0, 1], [1, 0]], (1, 1)), 0)
    d = C([[2, 0, 0], [0, 2, 0], [0, 0, 2]], (0, 0, 0))
    assert all(is_regular(d, i) for i in range(3))


def test_decomposition():
    a = C([[2, -1, 0, 0], [-1, 2, 0, 0], [0, 0, 2, 0], [0, 0, -1, 2]], (0, 0, 0, 0))
    assert not is_indecomposable(a)
    assert components(a) == [[0, 1], [2, 3]]
    assert is_indecomposable(make_D210())


def test_submatrix():
    a = make_q2((1, 0, 0))
    assert submatrix(a, [1, 2]) == C([[2, -1], [-1, 2]], (0, 0))
    with pytest.raises(EmptySubset):
        submatrix(a, [])


def test_symmetrizable_examples():
    assert is_symmetrizable(C([[2, -2], [-1, 2]], (0, 0)))
    assert symmetrizer(C([[2, -2], [-1, 2]], (0, 0))) is not None
    # the cycle product condition fails for the S(1,2,alpha) triangle
    assert not is_symmetrizable(make_S12(F(1, 2)))
    assert not is_symmetrizable(make_Q("minus", -1, -1, -2))
    assert not is_symmetrizable(make_D210())


def test_symmetrizer_makes_symmetric():
    a = C([[2, -1, 0], [-3, 2, -2], [0, -1, 2]], (0, 0, 0))
    d = symmetrizer(a)
    e = a.entries
    assert all(d[i] * e[i][j] == d[j] * e[j][i] for i in range(3) for j in range(3))


def test_validation():
    with pytest.raises(InvariantViolation):
        C([[2, -1], [-1, 2]], (0,))
    with pytest.raises(InvariantViolation):
        C([[2, -1, 0], [-1, 2]], (0, 0))
    with pytest.raises(IncompatibleFields):
        C([[2, Scalar.sqrt(2)], [Scalar.sqrt(3), 2]], (0, 0))


def test_rank_and_normalized_flag():
    assert rank(C([[2, -2], [-2, 2]], (0, 0))) == 1
    assert is_normalized(normalize(make_q2((1, 0, 0))))
    assert not is_normalized(C([[4]], (0,)))
