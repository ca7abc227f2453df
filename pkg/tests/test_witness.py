from fractions import Fraction

import pytest

from commord.errors import (
    DomainError,
    HypothesisNotSatisfied,
    NotInWeightSet,
)
from commord.rings import (
    CyclotomicField,
    IntegersMod,
    MatrixRing,
    QQ,
    commutator,
    diagonal,
    identity,
    mat_inverse,
    mat_power,
    matrix,
    trace,
    zeros,
)
from commord.witness import (
    CentralUnitDecomposition,
    build_C,
    build_DP,
    build_theorem32,
    commutator_pair,
    corollary_units,
    lemma_pd_check,
    realize_commutator,
    zero_diagonal_similarity,
)


def test_build_C_even_case():
    c = build_C(2, 2)
    field = CyclotomicField(2)
    assert c == diagonal(field, [field.root(0), field.root(1)])


def test_build_C_k_divides_n_case():
    c = build_C(3, 3)
    field = CyclotomicField(3)
    assert c == diagonal(field, [field.root(0), field.root(1), field.root(2)])


def test_build_C_mixed_case():
    c = build_C(6, 5)
    field = CyclotomicField(6)
    assert c.diagonal() == [field.root(0), field.root(3), field.root(0),
                            field.root(2), field.root(4)]
    assert trace(c) == field.zero
    assert mat_power(c, 6) == identity(field, 5)


def test_build_C_rejects_impossible_sizes():
    with pytest.raises(NotInWeightSet):
        build_C(9, 5)


def test_zero_diagonal_similarity_is_identity_on_zero_diagonals():
    m = matrix(QQ, [[0, 5], [7, 0]])
    s, z = zero_diagonal_similarity(m)
    assert s == identity(QQ, 2)
    assert z == m


def test_zero_diagonal_similarity_on_sign_matrix():
    m = diagonal(QQ, [1, -1])
    s, z = zero_diagonal_similarity(m)
    assert all(d == QQ.zero for d in z.diagonal())
    assert mat_inverse(s) * m * s == z


def test_zero_diagonal_similarity_on_cube_roots():
    field = CyclotomicField(3)
    m = diagonal(field, [field.root(0), field.root(1), field.root(2)])
    s, z = zero_diagonal_similarity(m)
    assert all(d == field.zero for d in z.diagonal())
    assert mat_inverse(s) * m * s == z


def test_zero_diagonal_similarity_requires_trace_zero():
    with pytest.raises(DomainError):
        zero_diagonal_similarity(identity(QQ, 2))


def test_zero_diagonal_similarity_requires_char_zero_field():
    with pytest.raises(DomainError):
        zero_diagonal_similarity(zeros(IntegersMod(5), 2, 2))


def test_commutator_pair_of_zero_matrix():
    a, b = commutator_pair(zeros(QQ, 2, 2))
    assert a == diagonal(QQ, [0, 1])
    assert b == zeros(QQ, 2, 2)
    assert commutator(a, b) == zeros(QQ, 2, 2)


def test_realize_commutator_small_witness():
    w = realize_commutator(build_C(2, 2), 2)
    assert w.verify()
    assert w.checks() == {"commutator_ok": True, "power_ok": True,
                          "trace_zero": True}


def test_realize_commutator_mixed_witness():
    w = realize_commutator(build_C(6, 5), 6)
    assert w.verify()


def test_realize_commutator_rejects_wrong_power():
    c = diagonal(CyclotomicField(2), [1, -1])
    with pytest.raises(DomainError):
        realize_commutator(c, 3)  # C^3 = C, not the identity


def test_build_DP_over_rationals():
    d, p = build_DP(2, QQ)
    assert d == diagonal(QQ, [0, 1])
    assert p == matrix(QQ, [[0, 1], [1, 0]])


def test_build_DP_reduces_mod_m():
    ring = IntegersMod(5)
    d, _ = build_DP(7, ring)
    assert d.entry(6, 6).val == 1  # 6 mod 5


def test_build_DP_over_cyclotomic_field():
    field = CyclotomicField(4)
    d, p = build_DP(4, field)
    assert d.entry(3, 3) == field.from_int(3)
    assert mat_power(p, 4) == identity(field, 4)


@pytest.mark.parametrize("n,ring,expected", [
    (2, QQ, Fraction(-1)),
    (3, IntegersMod(2), IntegersMod(2).from_int(-2)),
    (5, CyclotomicField(5), CyclotomicField(5).from_int(-4)),
])
def test_lemma_pd_check_examples(n, ring, expected):
    report = lemma_pd_check(n, ring)
    assert report["ok"]
    assert report["one_minus_n"] == expected


def test_lemma_pd_check_n3_mod2_gives_zero_matrix():
    # 1 - 3 = -2 = 0 mod 2, so both routes must produce the zero matrix
    report = lemma_pd_check(3, IntegersMod(2))
    assert report["one_minus_n"] == IntegersMod(2).zero


def test_theorem32_n2_needs_no_hypothesis():
    for ring in (QQ, IntegersMod(2), IntegersMod(8), CyclotomicField(5),
                 MatrixRing(QQ, 2)):
        dec = corollary_units(2, ring, "n2")
        a, b = build_theorem32(2, dec)
        assert mat_power(commutator(a, b), 2) == identity(ring, 2)


def test_theorem32_n3_rational_halves():
    dec = CentralUnitDecomposition(QQ, (Fraction(1, 2), Fraction(1, 2)))
    a, b = build_theorem32(3, dec)
    assert mat_power(commutator(a, b), 3) == identity(QQ, 3)


def test_theorem32_n5_char3():
    ring = IntegersMod(3)
    dec = corollary_units(5, ring, "char_divides")
    a, b = build_theorem32(5, dec)
    assert mat_power(commutator(a, b), 5) == identity(ring, 5)


def test_commutator_equals_cyclic_shift():
    dec = corollary_units(4, QQ, "inverse_n_minus_1")
    a, b = build_theorem32(4, dec)
    _, p = build_DP(4, QQ)
    assert commutator(a, b) == p


def test_corollary_units_examples():
    assert corollary_units(4, QQ, "inverse_n_minus_1").units == (
        Fraction(1, 3), Fraction(1, 3), Fraction(1, 3))
    z2 = IntegersMod(2)
    assert corollary_units(4, z2, "char_divides").units == (z2.one,) * 3
    z5 = IntegersMod(5)
    dec = corollary_units(3, z5, "n3", u=z5.from_int(2))
    assert [v.val for v in dec.units] == [2, 4]


def test_corollary_units_hypothesis_failures():
    with pytest.raises(HypothesisNotSatisfied, match="n-1"):
        corollary_units(4, IntegersMod(9), "inverse_n_minus_1")
    with pytest.raises(HypothesisNotSatisfied, match="char"):
        corollary_units(4, IntegersMod(5), "char_divides")
    with pytest.raises(HypothesisNotSatisfied):
        corollary_units(3, IntegersMod(4), "n3", u=IntegersMod(4).from_int(2))


def test_decomposition_must_sum_to_one():
    bad = CentralUnitDecomposition(QQ, (Fraction(1, 2), Fraction(1, 3)))
    with pytest.raises(HypothesisNotSatisfied, match="sum|v_1"):
        bad.validate()


def test_decomposition_units_must_be_central():
    ring = MatrixRing(QQ, 2)
    bad = CentralUnitDecomposition(ring, (matrix(QQ, [[1, 1], [0, 1]]),))
    with pytest.raises(HypothesisNotSatisfied, match="Z\\(S\\)"):
        bad.validate()


def test_capability_query_names_an_applicable_strategy():
    from commord.witness import has_central_unit_decomposition
    assert has_central_unit_decomposition(2, IntegersMod(8)) == "n2"
    assert has_central_unit_decomposition(4, QQ) == "inverse_n_minus_1"
    # char 3 divides 5-2, and n-1 = 4 = 1 is then automatically a unit
    assert has_central_unit_decomposition(5, IntegersMod(3)) == "inverse_n_minus_1"
    assert has_central_unit_decomposition(4, IntegersMod(9)) is None


def test_theorem32_wrong_unit_count():
    dec = corollary_units(2, QQ, "n2")
    with pytest.raises(HypothesisNotSatisfied):
        build_theorem32(3, dec)
