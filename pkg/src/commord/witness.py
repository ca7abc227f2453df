"""Explicit commutator witnesses.

Two construction families live here: diagonal root-of-unity matrices over
Q(zeta_k) turned into commutators through a zero-diagonal similarity, and
the cyclic-shift pairs over arbitrary unital coefficient rings built from a
decomposition of 1 into central units.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    DomainError,
    HypothesisNotSatisfied,
    InternalCheckFailed,
)
from .rings import (
    CyclotomicField,
    DenseMatrix,
    Ring,
    SpanBasis,
    commutator,
    diagonal,
    from_columns,
    identity,
    mat_inverse,
    mat_power,
    trace,
)
from .weightset import build_root_multiset, decompose


@dataclass(frozen=True)
class CommutatorWitness:
    """Checked certificate: [A, B] = C, C^k = Id, trace(C) = 0, all exact."""

    k: int
    n: int
    A: DenseMatrix
    B: DenseMatrix
    C: DenseMatrix

    def checks(self) -> dict:
        ring = self.C.ring
        return {
            "commutator_ok": commutator(self.A, self.B) == self.C,
            "power_ok": mat_power(self.C, self.k) == identity(ring, self.n),
            "trace_zero": trace(self.C) == ring.zero,
        }

    def verify(self) -> bool:
        return all(self.checks().values())


def build_C(k: int, n: int) -> DenseMatrix:
    """Diagonal matrix of k-th roots of unity with zero trace and C^k = Id."""
    cert = decompose(k, n)
    multiset = build_root_multiset(cert)  # raises NotInWeightSet if impossible
    field = CyclotomicField(k)
    return diagonal(field, multiset.values())


def _first_unparallel_column(m: DenseMatrix):
    # Column j of m is parallel to e_j exactly when its off-diagonal part vanishes.
    zero = m.ring.zero
    for j in range(m.cols):
        if any(m.entry(i, j) != zero for i in range(m.rows) if i != j):
            return j
    return None


def zero_diagonal_similarity(m: DenseMatrix) -> tuple[DenseMatrix, DenseMatrix]:
    """S invertible and Z = S^{-1} m S with every diagonal entry zero.

    Standard recursion: a trace-zero matrix over a characteristic-zero field
    is never a nonzero scalar, so either some basis vector v has m*v not
    parallel to v, or m is diagonal with two distinct entries and v = e_i+e_j
    works. In the basis (v, m*v, completed greedily by standard vectors) the
    (1,1) entry is zero and the trailing block again has trace zero.
    """
    ring = m.ring
    if not (ring.is_field and ring.characteristic() == 0):
        raise DomainError("similarity runs over exact fields of characteristic 0")
    if not m.is_square:
        raise DomainError("similarity needs a square matrix")
    if trace(m) != ring.zero:
        raise DomainError("zero-diagonal similarity needs trace 0")
    n = m.rows
    zero, one = ring.zero, ring.one
    if all(d == zero for d in m.diagonal()):
        return identity(ring, n), m

    j = _first_unparallel_column(m)
    if j is not None:
        v = [one if i == j else zero for i in range(n)]
    else:
        # m is diagonal and nonscalar (trace 0 in char 0 rules out scalars).
        diag = m.diagonal()
        other = next(t for t in range(1, n) if diag[t] != diag[0])
        v = [one if i in (0, other) else zero for i in range(n)]
    mv = [sum_entries(ring, [m.entry(i, t) * v[t] for t in range(n)]) for i in range(n)]

    span = SpanBasis(ring)
    span.try_add(v)
    if not span.try_add(mv):
        raise InternalCheckFailed("m*v unexpectedly parallel to v")
    cols = [v, mv]
    for t in range(n):
        if len(cols) == n:
            break
        e_t = [one if i == t else zero for i in range(n)]
        if span.try_add(e_t):
            cols.append(e_t)
    s1 = from_columns(ring, cols)
    z1 = mat_inverse(s1) * m * s1

    sub = DenseMatrix(ring, n - 1, n - 1,
                      [z1.entry(i, j2) for i in range(1, n) for j2 in range(1, n)])
    t_mat, _ = zero_diagonal_similarity(sub)
    block = _embed_lower_block(ring, n, t_mat)
    s = s1 * block
    z = mat_inverse(block) * z1 * block
    if any(d != zero for d in z.diagonal()):
        raise InternalCheckFailed("similarity left a nonzero diagonal entry")
    return s, z


def sum_entries(ring: Ring, items):
    acc = ring.zero
    for x in items:
        acc = acc + x
    return acc


def _embed_lower_block(ring: Ring, n: int, t_mat: DenseMatrix) -> DenseMatrix:
    entries = []
    for i in range(n):
        for j in range(n):
            if i == 0 or j == 0:
                entries.append(ring.one if i == j else ring.zero)
            else:
                entries.append(t_mat.entry(i - 1, j - 1))
    return DenseMatrix(ring, n, n, entries)


def commutator_pair(c: DenseMatrix) -> tuple[DenseMatrix, DenseMatrix]:
    """Some (A, B) with [A, B] = c, for trace-zero c over a char-0 field.

    After conjugating the diagonal away, A0 = diag(0, ..., n-1) and
    B0[i][j] = Z[i][j] / (i - j) off the diagonal satisfy [A0, B0] = Z;
    conjugating back preserves the commutator. The diagonal of B0 is an
    arbitrary choice and is set to zero.
    """
    ring = c.ring
    s, z = zero_diagonal_similarity(c)
    n = c.rows
    a0 = diagonal(ring, [ring.from_int(i) for i in range(n)])
    b0_entries = []
    for i in range(n):
        for j in range(n):
            if i == j:
                b0_entries.append(ring.zero)
            else:
                b0_entries.append(ring.inverse(ring.from_int(i - j)) * z.entry(i, j))
    b0 = DenseMatrix(ring, n, n, b0_entries)
    s_inv = mat_inverse(s)
    return s * a0 * s_inv, s * b0 * s_inv


def realize_commutator(c: DenseMatrix, k: int) -> CommutatorWitness:
    """Checked witness (A, B) with [A, B] = c and c^k = Id."""
    ring = c.ring
    n = c.rows
    if trace(c) != ring.zero:
        raise DomainError("commutators have trace zero; input does not")
    if mat_power(c, k) != identity(ring, n):
        raise DomainError(f"input matrix does not satisfy C^{k} = Id")
    a, b = commutator_pair(c)
    witness = CommutatorWitness(k, n, a, b, c)
    failed = [name for name, ok in witness.checks().items() if not ok]
    if failed:
        raise InternalCheckFailed(f"witness checks failed: {', '.join(failed)}")
    return witness


# ---------------------------------------------------------------------------
# Cyclic-shift constructions over arbitrary unital coefficient rings
# ---------------------------------------------------------------------------

def _wrap(k: int, n: int) -> int:
    # 1-based cyclic representative in {1, ..., n}: the "nonzero remainder".
    return ((k - 1) % n) + 1


def build_DP(n: int, ring: Ring) -> tuple[DenseMatrix, DenseMatrix]:
    """D = diag(0, 1, ..., n-1) and the cyclic shift P with P[i][j] = 1
    iff i = j+1 (mod n), both over `ring`."""
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    d = diagonal(ring, [ring.from_int(i) for i in range(n)])
    entries = [ring.one if i == (j + 1) % n else ring.zero
               for i in range(n) for j in range(n)]
    return d, DenseMatrix(ring, n, n, entries)


def lemma_pd_check(n: int, ring: Ring) -> dict:
    """[D, P]^n = (1-n) Id by the direct power and by the conjugated-diagonal
    factorization; raises InternalCheckFailed if the routes ever disagree."""
    d, p = build_DP(n, ring)
    u = commutator(d, p)
    direct = mat_power(u, n)

    delta = diagonal(ring, [ring.one] * (n - 1) + [ring.from_int(1 - n)])
    if u != p * delta:
        raise InternalCheckFailed("[D,P] does not factor as P * Delta")
    factored = identity(ring, n)
    for k in range(1, n + 1):
        pk = mat_power(p, k)
        factored = factored * (pk * delta * mat_power(p, -k))
    factored = factored * mat_power(p, n)

    expected = identity(ring, n).scale(ring.from_int(1 - n))
    if direct != factored:
        raise InternalCheckFailed("direct and factored routes disagree")
    if direct != expected:
        raise InternalCheckFailed("[D,P]^n differs from (1-n) Id")
    return {
        "n": n,
        "ring": repr(ring),
        "one_minus_n": ring.from_int(1 - n),
        "routes_agree": True,
        "equals_scalar_identity": True,
        "ok": True,
    }


@dataclass(frozen=True)
class CentralUnitDecomposition:
    """n-1 central units of `ring` summing to 1."""

    ring: Ring
    units: tuple

    def validate(self) -> None:
        ring = self.ring
        for i, v in enumerate(self.units):
            if not ring.contains(v):
                raise HypothesisNotSatisfied(
                    "v_k in S", f"unit {i + 1} is not a ring element")
            if not ring.is_unit(v):
                raise HypothesisNotSatisfied(
                    "v_k in U(Z(S))", f"unit {i + 1} is not invertible")
            if not ring.is_central(v):
                raise HypothesisNotSatisfied(
                    "v_k in Z(S)", f"unit {i + 1} is not central")
        total = ring.zero
        for v in self.units:
            total = total + v
        if total != ring.one:
            raise HypothesisNotSatisfied("1 = v_1 + ... + v_{n-1}",
                                         "units do not sum to 1")


def has_central_unit_decomposition(n: int, ring: Ring):
    """Name of the first packaged strategy applicable in `ring`, or None.

    Only the ready-made strategies are probed (n2, inverse_n_minus_1,
    char_divides); None is not a proof that no decomposition exists.
    """
    if n == 2:
        return "n2"
    if ring.is_unit(ring.from_int(n - 1)):
        return "inverse_n_minus_1"
    char = ring.characteristic()
    if char > 0 and (n - 2) % char == 0:
        return "char_divides"  # pragma: no cover -- implied by n-1 = 1 there
    return None


def corollary_units(n: int, ring: Ring, strategy: str, u=None) -> CentralUnitDecomposition:
    """Ready-made central-unit decompositions for the standard situations.

    n2: the single unit 1 (n = 2 needs no hypothesis); n3: the pair
    (u, 1 - u); inverse_n_minus_1: n-1 copies of (n-1)^{-1}; char_divides:
    n-1 copies of 1, valid when the characteristic divides n - 2.
    """
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    if strategy == "n2":
        if n != 2:
            raise HypothesisNotSatisfied("n = 2", f"strategy n2 with n = {n}")
        dec = CentralUnitDecomposition(ring, (ring.one,))
    elif strategy == "n3":
        if n != 3:
            raise HypothesisNotSatisfied("n = 3", f"strategy n3 with n = {n}")
        if u is None:
            raise DomainError("strategy n3 needs the unit u")
        if not ring.contains(u):
            raise HypothesisNotSatisfied("u in S", "u is not a ring element")
        dec = CentralUnitDecomposition(ring, (u, ring.one - u))
    elif strategy == "inverse_n_minus_1":
        n_minus_1 = ring.from_int(n - 1)
        if not ring.is_unit(n_minus_1):
            raise HypothesisNotSatisfied("n-1 in U(Z(S))",
                                         f"{n - 1} is not invertible in {ring!r}")
        inv = ring.inverse(n_minus_1)
        dec = CentralUnitDecomposition(ring, (inv,) * (n - 1))
    elif strategy == "char_divides":
        char = ring.characteristic()
        if char == 0:
            if n != 2:
                raise HypothesisNotSatisfied("char(S) | (n-2)",
                                             "characteristic 0 divides only n = 2")
        elif (n - 2) % char != 0:
            raise HypothesisNotSatisfied("char(S) | (n-2)",
                                         f"char {char} does not divide {n - 2}")
        dec = CentralUnitDecomposition(ring, (ring.one,) * (n - 1))
    else:
        raise DomainError(f"unknown strategy {strategy!r}")
    dec.validate()
    return dec


def build_theorem32(n: int, dec: CentralUnitDecomposition) -> tuple[DenseMatrix, DenseMatrix]:
    """(A, B) over M_n(S) with [A, B] equal to the cyclic shift P, hence
    [A, B]^n = Id; built from a decomposition of 1 into n-1 central units."""
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    if len(dec.units) != n - 1:
        raise HypothesisNotSatisfied("1 = v_1 + ... + v_{n-1}",
                                     f"need {n - 1} units, got {len(dec.units)}")
    dec.validate()
    ring = dec.ring
    u = [ring.one] + [-v for v in dec.units]
    s = [ring.zero]
    for k in range(1, n):
        s.append(s[-1] + u[k - 1])
    a = diagonal(ring, s)
    entries = []
    for i in range(n):
        for j in range(n):
            entries.append(ring.inverse(u[j]) if i == (j + 1) % n else ring.zero)
    b = DenseMatrix(ring, n, n, entries)

    _, p = build_DP(n, ring)
    c = commutator(a, b)
    if c != p:
        raise InternalCheckFailed("[A,B] is not the cyclic shift")
    if mat_power(c, n) != identity(ring, n):
        raise InternalCheckFailed("[A,B]^n is not the identity")
    return a, b
