"""Property tests over randomly generated scalars, matrices and reflection sequences."""

from fractions import Fraction as F

from hypothesis import assume, given, settings, strategies as st

from supercartan.cartan import (
    CartanSpec,
    is_indecomposable,
    is_isotropic,
    is_regular,
    is_symmetrizable,
    normalize,
    submatrix,
)
from supercartan.classify import identify_family
from supercartan.conditions import check_lm23, is_gcm
from supercartan.errors import ZeroRow
from supercartan.families import FamilyTag, make_S12, solve_Q
from supercartan.freelie import gram
from supercartan.linalg import det, integer_det
from supercartan.orbit import canonical_key, find_equivalence
from supercartan.reflection import BaseState, odd_reflect, parity_consistent, verify_consistency
from supercartan.scalar import Scalar, compare, field_arith, format_scalar, parse_scalar, solve_quadratic

small_rationals = st.fractions(min_value=-6, max_value=6, max_denominator=6)
nonzero_rationals = small_rationals.filter(bool)


@st.composite
def scalars(draw, d=5):
    return Scalar(draw(small_rationals), draw(small_rationals), d)


@st.composite
def cartan_matrices(draw, min_n=2, max_n=4, isotropic=True):
    """Indecomposable matrices without zero rows; diagonal 0 rows are odd."""
    n = draw(st.integers(min_n, max_n))
    parity, rows = [], []
    for i in range(n):
        iso = draw(st.booleans()) if isotropic else False
        parity.append(1 if iso else draw(st.integers(0, 1)))
        row = [draw(st.sampled_from([0, 0, -1, -2, F(-1, 2), 1, -3, F(3, 2)])) for _ in range(n)]
        row[i] = 0 if iso else 2
        rows.append(row)
    a = CartanSpec.from_rows(rows, tuple(parity))
    assume(all(any(r) for r in a.entries))
    assume(is_indecomposable(a))
    return a


@st.composite
def permutations_of(draw, n):
    return tuple(draw(st.permutations(list(range(n)))))


# -- field laws ------------------------------------------------------------------

@settings(max_examples=100)
@given(scalars(), scalars(), scalars())
def test_field_laws(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x and x * y == y * x
    assert x - x == 0


@settings(max_examples=100)
@given(scalars(), scalars())
def test_division_round_trip(x, y):
    assume(y)
    assert field_arith(field_arith(x, y, "mul"), y, "div") == x


@settings(max_examples=100)
@given(scalars(), scalars(), scalars())
def test_order_compatible_with_addition(x, y, z):
    c = compare(x, y)
    assert compare(x + z, y + z) == c
    assert compare(y, x) == -c
    assert (c == 0) == (x == y)


@settings(max_examples=100)
@given(scalars(), scalars())
def test_canonical_encoding(x, y):
    assert (format_scalar(x) == format_scalar(y)) == (x == y)
    assert parse_scalar(format_scalar(x)) == x
    if x == y:
        assert hash(x) == hash(y)


@settings(max_examples=100)
@given(nonzero_rationals, small_rationals, small_rationals)
def test_quadratic_roots_exact(p, q, r):
    assume(q * q - 4 * p * r >= 0)
    roots = solve_quadratic(p, q, r)
    for x in (roots.low, roots.high):
        assert p * x * x + q * x + r == 0
    assert roots.low <= roots.high


# -- matrices ---------------------------------------------------------------------

@settings(max_examples=100)
@given(cartan_matrices())
def test_normalize_idempotent(a):
    b = normalize(a)
    assert normalize(b) == b


@settings(max_examples=60)
@given(cartan_matrices(), st.lists(st.sampled_from([F(1, 3), 2, -1, F(-5, 2), 7]), min_size=4, max_size=4))
def test_rescaling_invariants(a, scales):
    b = CartanSpec.from_rows([[x * scales[i] for x in row] for i, row in enumerate(a.entries)], a.parity)
    assert normalize(b) == normalize(a)
    assert is_symmetrizable(b) == is_symmetrizable(a)
    assert canonical_key(b) == canonical_key(a)


@settings(max_examples=60)
@given(cartan_matrices(min_n=3), st.data())
def test_submatrix_commutes_with_normalize(a, data):
    J = sorted(data.draw(st.sets(st.integers(0, a.n - 1), min_size=1, max_size=a.n)))
    sub = submatrix(a, J)
    try:
        left = normalize(sub)
    except ZeroRow:
        return
    right = submatrix(normalize(a), J)
    # rows with nonzero diagonal agree exactly; isotropic rows agree up to the
    # factor that moves their leading entry when columns are dropped
    assert normalize(right) == left
    for i, j in enumerate(J):
        if a.entries[j][j]:
            assert left.entries[i] == right.entries[i]


@settings(max_examples=100)
@given(cartan_matrices(), st.data())
def test_canonical_key_permutation_invariant(a, data):
    perm = data.draw(permutations_of(a.n))
    b = a.permuted(perm)
    assert canonical_key(b) == canonical_key(a)
    assert find_equivalence(a, b) is not None


@settings(max_examples=100)
@given(cartan_matrices())
def test_gcm_implies_lm23(a):
    if is_gcm(a):
        assert check_lm23(a).lm23


# -- reflections ------------------------------------------------------------------

@settings(max_examples=100)
@given(cartan_matrices(), st.lists(st.integers(0, 3), min_size=1, max_size=8))
def test_random_reflection_sequences(a, choices):
    assume(any(is_isotropic(a, i) for i in range(a.n)))
    s = BaseState.initial(a)
    for c in choices:
        iso = [i for i in range(s.n) if is_isotropic(s.spec, i)]
        if not iso:
            break
        s, delta = odd_reflect(s, iso[c % len(iso)])
        assert verify_consistency(s, a)
        assert parity_consistent(s)
        assert abs(integer_det(s.R)) == 1
        assert delta.added == tuple(-x for x in delta.removed)


@settings(max_examples=100)
@given(cartan_matrices(), st.data())
def test_regular_reflection_is_involution(a, data):
    regular = [i for i in range(a.n) if is_isotropic(a, i) and is_regular(a, i)]
    assume(regular)
    k = data.draw(st.sampled_from(regular))
    s0 = BaseState.initial(a)
    s1, _ = odd_reflect(s0, k)
    s2, _ = odd_reflect(s1, k)
    assert normalize(s2.spec) == normalize(s0.spec)
    assert s2.R == s0.R
    for h0, h2 in zip(s0.H, s2.H):
        lead = next(j for j, x in enumerate(h0) if x)
        c = h2[lead] / h0[lead]
        assert c and all(x * c == y for x, y in zip(h0, h2))


# -- Lie superalgebra data -------------------------------------------------------

@settings(max_examples=40)
@given(cartan_matrices(max_n=3), st.data())
def test_gram_rank_symmetry(a, data):
    weight = tuple(data.draw(st.integers(0, 2)) for _ in range(a.n))
    assume(any(weight))
    g = gram(a, weight)
    assert g.rank == g.rank_transposed


@settings(max_examples=30)
@given(st.fractions(min_value=-5, max_value=5, max_denominator=7))
def test_s12_round_trip(alpha):
    assume(alpha.denominator != 1)
    assert identify_family(make_S12(alpha)) == FamilyTag("S12", (Scalar(alpha),))


@settings(max_examples=40)
@given(st.integers(-6, -1), st.integers(-6, -1), st.integers(-6, -1))
def test_q_symmetries(m, n, t):
    assume((m, n, t) != (-1, -1, -1))
    sol = solve_Q(m, n, t)
    swapped = solve_Q(m, t, n)
    shifted = solve_Q(n, t, m)
    for mine, theirs in ((sol.minus, swapped.plus), (sol.plus, swapped.minus)):
        assert (1 / mine.b, 1 / mine.a, 1 / mine.c) == tuple(theirs)
    assert (sol.minus.b, sol.minus.c, sol.minus.a) == tuple(shifted.minus)
    for x in (sol.minus, sol.plus):
        prod = x.a * x.b * x.c
        rows = [[0, 1, x.a], [x.b, 0, 1], [1, x.c, 0]]
        assert det(rows) == 1 + prod != 0
        assert prod != 1
        assert not is_symmetrizable(CartanSpec.from_rows(rows, (1, 1, 1)))
