import random
from fractions import Fraction

import pytest

from commord.errors import DomainError, NotAUnit, RingMismatch, ShapeMismatch
from commord.rings import (
    CyclotomicField,
    DenseMatrix,
    FiniteAlgebra,
    IntegersMod,
    MatrixRing,
    QQ,
    algebra_inverse,
    commutator,
    diagonal,
    identity,
    mat_inverse,
    mat_mul,
    mat_power,
    matrix,
    quantum_plane,
    ring_from_spec,
    ring_of,
    subring_corner,
    trace,
    zeros,
)
from commord.witness import build_DP


def test_identity_is_neutral_for_mat_mul():
    m = matrix(QQ, [[1, 2, 3], [4, 5, 6], [7, 8, 9]])
    assert mat_mul(identity(QQ, 3), m) == m
    assert mat_mul(m, identity(QQ, 3)) == m


def test_cyclic_shift_cubed_is_identity():
    _, p = build_DP(3, QQ)
    assert p * p * p == identity(QQ, 3)


def test_dp_commutator_for_n3_has_entries_1_1_minus2():
    # evaluated by hand: [D,P] carries 1, 1, -2 down the cyclic subdiagonal
    d, p = build_DP(3, QQ)
    expected = matrix(QQ, [[0, 0, -2], [1, 0, 0], [0, 1, 0]])
    assert d * p - p * d == expected


def test_commutator_with_itself_vanishes():
    m = matrix(QQ, [[1, 2], [3, 4]])
    assert commutator(m, m) == zeros(QQ, 2, 2)


def test_commutator_of_projector_and_matrix_unit():
    # [diag(0,1), E_21] = E_21: row scaling keeps E_21, column scaling kills it
    a = diagonal(QQ, [0, 1])
    e21 = matrix(QQ, [[0, 0], [1, 0]])
    assert commutator(a, e21) == e21


def test_dp_commutator_n2_equals_shift_times_sign_flip():
    d, p = build_DP(2, QQ)
    assert commutator(d, p) == p * diagonal(QQ, [1, -1])


def test_power_of_shift_matrix():
    for n in range(2, 7):
        _, p = build_DP(n, QQ)
        assert mat_power(p, n) == identity(QQ, n)


def test_shift_power_entries_follow_the_cyclic_rule():
    for n in (2, 3, 4, 5):
        _, p = build_DP(n, QQ)
        for k in range(1, 2 * n + 1):
            pk = mat_power(p, k)
            for i in range(n):
                for j in range(n):
                    expected = QQ.one if i == (j + k) % n else QQ.zero
                    assert pk.entry(i, j) == expected


def test_zeroth_power_is_identity():
    m = matrix(QQ, [[2, 1], [1, 1]])
    assert mat_power(m, 0) == identity(QQ, 2)


def test_sign_matrix_squares_to_identity():
    c = diagonal(QQ, [1, -1])
    assert mat_power(c, 2) == identity(QQ, 2)


def test_negative_powers_invert_exactly():
    _, p = build_DP(3, QQ)
    assert mat_power(p, -1) == mat_power(p, 2)
    assert mat_power(p, -2) * mat_power(p, 2) == identity(QQ, 3)


def test_non_invertible_matrix_raises():
    with pytest.raises(NotAUnit):
        mat_inverse(matrix(QQ, [[1, 1], [1, 1]]))
    # 2 has no inverse mod 4 and no row operation can produce a unit pivot
    with pytest.raises(NotAUnit):
        mat_inverse(diagonal(IntegersMod(4), [2]))


def test_inverse_is_two_sided():
    m = matrix(QQ, [[2, 1], [1, 1]])
    inv = mat_inverse(m)
    assert m * inv == identity(QQ, 2)
    assert inv * m == identity(QQ, 2)


def test_trace_of_identity_counts_the_size():
    assert trace(identity(QQ, 4)) == Fraction(4)


def test_trace_of_diagonal_roots_vanishes():
    field = CyclotomicField(3)
    c = diagonal(field, [field.root(0), field.root(1), field.root(2)])
    assert trace(c) == field.zero


@pytest.mark.parametrize("ring", [QQ, CyclotomicField(6)])
def test_trace_of_random_commutators_vanishes(ring):
    rng = random.Random(5)
    for _ in range(5):
        a = DenseMatrix(ring, 3, 3, [ring.sample(rng) for _ in range(9)])
        b = DenseMatrix(ring, 3, 3, [ring.sample(rng) for _ in range(9)])
        assert trace(commutator(a, b)) == ring.zero


@pytest.mark.parametrize("ring", [QQ, IntegersMod(6), CyclotomicField(4),
                                  MatrixRing(QQ, 2)])
def test_mat_mul_associates_and_distributes(ring):
    rng = random.Random(9)
    mats = [DenseMatrix(ring, 2, 2, [ring.sample(rng) for _ in range(4)])
            for _ in range(9)]
    for t in range(0, 9, 3):
        a, b, c = mats[t], mats[t + 1], mats[t + 2]
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert (a + b) * c == a * c + b * c


def test_shape_and_ring_mismatches_raise():
    with pytest.raises(ShapeMismatch):
        matrix(QQ, [[1, 2]]) * matrix(QQ, [[1, 2]])
    with pytest.raises(RingMismatch):
        matrix(QQ, [[1]]) + matrix(IntegersMod(5), [[1]])
    with pytest.raises(RingMismatch):
        DenseMatrix(QQ, 1, 1, [ZmodScalarStandIn()])


class ZmodScalarStandIn:
    pass


def test_matrix_ring_characteristic_matches_base():
    assert MatrixRing(IntegersMod(6), 2).characteristic() == 6
    assert MatrixRing(QQ, 3).characteristic() == 0
    assert MatrixRing(CyclotomicField(3), 2).characteristic() == 0
    assert MatrixRing(MatrixRing(IntegersMod(5), 2), 2).characteristic() == 5


def test_matrix_ring_center_is_scalar_matrices():
    ring = MatrixRing(QQ, 2)
    assert ring.is_central(diagonal(QQ, [3, 3]))
    assert not ring.is_central(diagonal(QQ, [1, 2]))
    assert not ring.is_central(matrix(QQ, [[0, 1], [0, 0]]))


def test_ring_of_finds_the_right_handle():
    assert ring_of(Fraction(1, 2)) == QQ
    assert ring_of(CyclotomicField(5).root()) == CyclotomicField(5)
    assert ring_of(identity(QQ, 2)) == MatrixRing(QQ, 2)


def test_ring_from_spec_parses_the_cli_names():
    assert ring_from_spec("Q") == QQ
    assert ring_from_spec("Zmod:7") == IntegersMod(7)
    assert ring_from_spec("Cyclo:5") == CyclotomicField(5)
    with pytest.raises(DomainError):
        ring_from_spec("GF:9")


# -- quantum plane and structure-constant algebras ---------------------------

def test_quantum_plane_identity_element():
    qp = quantum_plane(3, CyclotomicField(3).root(1), 1)
    for i in range(qp.dim):
        b = qp.basis_element(i)
        assert qp.one * b == b
        assert b * qp.one == b


def test_quantum_plane_commutation_rule():
    n = 3
    qp = quantum_plane(n, CyclotomicField(n).root(1), 1)
    x = qp.basis_element(1 * n + 0)
    y = qp.basis_element(0 * n + 1)
    assert y * x == (x * y).scale(qp.field.root(1))


def test_quantum_plane_n2_constraint_value_is_one():
    # omega = -1, so (1-omega)^2 * omega * a * b = 4 * (-1) * (-1/4) * 1 = 1
    field = CyclotomicField(2)
    omega = field.root(1)
    a = field.from_rational(Fraction(-1, 4))
    b = field.one
    value = (field.one - omega) ** 2 * omega * a * b
    assert value == field.one
    qp = quantum_plane(2, a, b)
    x, y = qp.basis_element(2), qp.basis_element(1)
    u = commutator(x, y)
    assert u * u == qp.one


def test_quantum_plane_commutator_power_with_constraint():
    for n in (2, 3):
        field = CyclotomicField(n)
        omega = field.root(1)
        constraint = field.one
        for _ in range(n):
            constraint = constraint * (field.one - omega)
        constraint = constraint * field.root((n * (n - 1) // 2) % n)
        a = field.inverse(constraint)
        qp = quantum_plane(n, a, 1)
        x, y = qp.basis_element(n), qp.basis_element(1)
        u = commutator(x, y)
        acc = qp.one
        for _ in range(n):
            acc = acc * u
        assert acc == qp.one


def test_quantum_plane_rejects_a_equals_zero():
    with pytest.raises(DomainError):
        quantum_plane(2, 0, 1)


def test_algebra_inverse_of_identity():
    qp = quantum_plane(2, Fraction(-1, 4), 1)
    assert algebra_inverse(qp, qp.one) == qp.one


def test_algebra_inverse_of_x_is_scaled_power():
    n = 3
    field = CyclotomicField(n)
    a = field.from_rational(Fraction(2, 5)) + field.root(1)
    qp = quantum_plane(n, a, 1)
    x = qp.basis_element(n)
    inv = algebra_inverse(qp, x)
    x_pow = qp.basis_element(2 * n)  # x^{n-1}
    assert inv == x_pow.scale(field.inverse(a))
    assert x * inv == qp.one


def test_algebra_inverse_rejects_zero():
    qp = quantum_plane(2, Fraction(-1, 4), 1)
    with pytest.raises(NotAUnit):
        algebra_inverse(qp, qp.zero)


def test_algebra_centrality_check():
    n = 3
    qp = quantum_plane(n, CyclotomicField(n).root(1), 1)
    assert qp.is_central(qp.scalar(qp.field.root(1)))
    assert not qp.is_central(qp.basis_element(n))  # x is not central


def test_subring_corner_trivial_idempotents():
    qp = quantum_plane(2, Fraction(-1, 4), 1)
    assert subring_corner(qp, qp.one).dim == qp.dim
    assert subring_corner(qp, qp.zero).dim == 0


def test_subring_corner_rejects_non_idempotents():
    qp = quantum_plane(2, Fraction(-1, 4), 1)
    with pytest.raises(DomainError):
        subring_corner(qp, qp.basis_element(1))


def test_finite_algebra_rejects_non_associative_tables():
    field = QQ
    one, zero = field.one, field.zero
    good = [[[one, zero], [zero, one]], [[zero, one], [one, zero]]]
    FiniteAlgebra(field, ["1", "g"], good, [one, zero])
    # basis 1, a, b with a*a = b, a*b = 1, b*a = b*b = 0:
    # (a*a)*a = b*a = 0 but a*(a*a) = a*b = 1
    e = lambda i: [one if t == i else zero for t in range(3)]
    z3 = [zero, zero, zero]
    bad = [
        [e(0), e(1), e(2)],
        [e(1), e(2), e(0)],
        [e(2), z3, z3],
    ]
    with pytest.raises(DomainError, match="associative"):
        FiniteAlgebra(field, ["1", "a", "b"], bad, e(0))


def test_nested_matrix_rings_multiply_consistently():
    inner = MatrixRing(QQ, 2)
    outer_entries = [identity(QQ, 2), zeros(QQ, 2, 2),
                     diagonal(QQ, [1, 2]), identity(QQ, 2)]
    m = DenseMatrix(inner, 2, 2, outer_entries)
    sq = m * m
    assert sq.entry(0, 0) == identity(QQ, 2)
    assert sq.entry(1, 0) == diagonal(QQ, [1, 2]) + diagonal(QQ, [1, 2]) * identity(QQ, 2)
