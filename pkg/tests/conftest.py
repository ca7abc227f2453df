from __future__ import annotations

import cmath

import pytest

from commord.errors import NotACyclicConjugator
from commord.rings import CyclotomicField, MatrixRing, diagonal, mat_power, matrix
from commord.structure import conjugator_to_cyclic, make_idempotents


def cyclo_to_complex(c) -> complex:
    """Independent numeric embedding of a cyclotomic element (float oracle)."""
    z = cmath.exp(2j * cmath.pi / c.order)
    return sum(complex(q) * z ** i for i, q in enumerate(c.coeffs))


def approx_equal(a: complex, b: complex, tol: float = 1e-9) -> bool:
    return abs(a - b) <= tol


def cyclic_shift(field, n):
    """The n x n cyclic permutation with ones on the subdiagonal and corner."""
    return matrix(field, [[1 if i == (j + 1) % n else 0 for j in range(n)]
                          for i in range(n)])


@pytest.fixture
def cyclic_model():
    """Builder for the M_n(Q(zeta_n)) model: u = diag of all n-th roots,
    omega the scalar root, v the permutation orientation that conjugates
    u to omega^{-1} u (both orientations are tried empirically)."""

    def build(n):
        field = CyclotomicField(n)
        ring = MatrixRing(field, n)
        u = diagonal(field, [field.root(t) for t in range(n)])
        omega = diagonal(field, [field.root(1)] * n)
        sys = make_idempotents(ring, u, omega, n)
        p = cyclic_shift(field, n)
        for v in (p, mat_power(p, n - 1)):
            try:
                data = conjugator_to_cyclic(sys, v)
                return sys, data, v
            except NotACyclicConjugator:
                continue
        raise AssertionError("neither permutation orientation conjugates u")

    return build
