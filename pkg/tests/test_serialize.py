import json
from fractions import Fraction

import pytest

from commord import serialize
from commord.errors import DomainError
from commord.exact import CycloScalar, ZmodScalar
from commord.rings import (
    CyclotomicField,
    IntegersMod,
    MatrixRing,
    QQ,
    diagonal,
    identity,
    matrix,
    quantum_plane,
)
from commord.witness import build_C, realize_commutator


def test_rationals_always_carry_the_denominator():
    assert serialize.rational_to_str(Fraction(3)) == "3/1"
    assert serialize.rational_to_str(Fraction(-2, 6)) == "-1/3"
    assert serialize.rational_from_str("7/2") == Fraction(7, 2)
    with pytest.raises(DomainError):
        serialize.rational_from_str("7")


def test_scalar_round_trips():
    cases = [
        (QQ, Fraction(-5, 3)),
        (IntegersMod(8), ZmodScalar(8, 5)),
        (CyclotomicField(6), CycloScalar(6, [Fraction(1, 2), Fraction(-3)])),
    ]
    for ring, value in cases:
        blob = serialize.scalar_to_json(value)
        assert serialize.scalar_from_json(ring, blob) == value


def test_ring_descriptor_round_trips():
    for ring in (QQ, IntegersMod(12), CyclotomicField(5),
                 MatrixRing(CyclotomicField(3), 2)):
        assert serialize.ring_from_json(serialize.ring_to_json(ring)) == ring


def test_matrix_round_trip_over_each_scalar_kind():
    mats = [
        matrix(QQ, [[1, 2], [3, 4]]),
        diagonal(IntegersMod(7), [3, 5]),
        diagonal(CyclotomicField(4), [CyclotomicField(4).root(1),
                                      CyclotomicField(4).root(3)]),
    ]
    for m in mats:
        assert serialize.matrix_from_json(serialize.matrix_to_json(m)) == m


def test_nested_matrix_round_trip():
    inner = MatrixRing(QQ, 2)
    from commord.rings import DenseMatrix
    m = DenseMatrix(inner, 2, 2, [identity(QQ, 2), inner.zero,
                                  diagonal(QQ, [1, 2]), identity(QQ, 2)])
    assert serialize.matrix_from_json(serialize.matrix_to_json(m)) == m


def test_witness_round_trip():
    w = realize_commutator(build_C(6, 5), 6)
    blob = serialize.witness_to_json(w)
    again = serialize.witness_from_json(json.loads(serialize.dumps(blob)))
    assert again.A == w.A and again.B == w.B and again.C == w.C
    assert again.verify()


def test_algebra_round_trip():
    qp = quantum_plane(2, Fraction(-1, 4), 1)
    blob = serialize.algebra_to_json(qp)
    assert set(blob) >= {"dim", "table", "one"}
    again = serialize.algebra_from_json(json.loads(serialize.dumps(blob)))
    assert again.dim == qp.dim
    assert again.table == qp.table
    assert again.one.coords == qp.one.coords


def test_canonical_dumps_is_idempotent_under_reparse():
    payload = serialize.witness_to_json(realize_commutator(build_C(2, 2), 2))
    text = serialize.dumps(payload)
    assert serialize.dumps(json.loads(text)) == text


def test_malformed_inputs_raise_domain_errors():
    with pytest.raises(DomainError):
        serialize.matrix_from_json({"rows": 1})
    with pytest.raises(DomainError):
        serialize.ring_from_json({"kind": "unknown"})
    with pytest.raises(DomainError):
        serialize.witness_from_json({"k": 2})
    with pytest.raises(DomainError):
        serialize.scalar_from_json(IntegersMod(5), {"mod": 7, "val": 1})
