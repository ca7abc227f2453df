"""Unital rings, dense matrices over them, and structure-constant algebras.

Every ring object answers the same small contract (zero/one, integer
embedding, unit testing, inversion, centrality) so that matrices can be
built over scalars, over other matrix rings, or over finite-dimensional
algebras interchangeably. All values are immutable and all operations are
pure, so everything here is safe to share across threads.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import (
    DomainError,
    NotAUnit,
    RingMismatch,
    ShapeMismatch,
)
from .exact import (
    CycloScalar,
    ZmodScalar,
    cyclo_from_rational,
    cyclo_one,
    cyclo_root,
    cyclo_zero,
    cyclotomic_polynomial,
    divisors,
    scalar_inverse,
)


class Ring:
    """Abstract unital ring handle; elements live outside and carry the arithmetic."""

    kind = "abstract"
    is_field = False

    # -- identities ---------------------------------------------------------
    zero = None
    one = None

    def from_int(self, k: int):
        """The image of the integer k, i.e. k-fold sum of the identity."""
        raise NotImplementedError

    def characteristic(self) -> int:
        raise NotImplementedError

    def contains(self, v) -> bool:
        raise NotImplementedError

    # -- units and center ----------------------------------------------------
    def is_unit(self, v) -> bool:
        raise NotImplementedError

    def inverse(self, v):
        raise NotImplementedError

    def is_central(self, v) -> bool:
        raise NotImplementedError

    # -- optional finite-dimensional interface -------------------------------
    # Rings that are finite-dimensional modules over an exact field expose
    # coordinates so that exact rank arguments (bijectivity proofs, corner
    # bases) are possible. Others return None from dimension().
    def dimension(self):
        return None

    def coordinate_field(self) -> "Ring":
        raise NotImplementedError(f"{self.kind} has no coordinate field")

    def coordinates(self, v) -> list:
        raise NotImplementedError

    def from_coordinates(self, coords):
        raise NotImplementedError

    def scale(self, c, v):
        """c*v for c in the coordinate field."""
        raise NotImplementedError

    def basis_elements(self) -> list:
        d = self.dimension()
        if d is None:
            raise NotImplementedError(f"{self.kind} is not finite-dimensional")
        field = self.coordinate_field()
        out = []
        for i in range(d):
            coords = [field.one if j == i else field.zero for j in range(d)]
            out.append(self.from_coordinates(coords))
        return out

    def sample(self, rng):
        """Seeded random element with small integer coordinates (|c| <= 3)."""
        d = self.dimension()
        if d is None:
            raise NotImplementedError(f"{self.kind} does not support sampling")
        field = self.coordinate_field()
        return self.from_coordinates(
            [field.from_int(rng.randint(-3, 3)) for _ in range(d)])

    # -- descriptor identity --------------------------------------------------
    def key(self):
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, Ring) and other.key() == self.key()

    def __hash__(self):
        return hash(self.key())


class RationalField(Ring):
    """Q with elements represented by fractions.Fraction."""

    kind = "rational"
    is_field = True

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def from_int(self, k):
        return Fraction(k)

    def characteristic(self):
        return 0

    def contains(self, v):
        return isinstance(v, Fraction)

    def is_unit(self, v):
        return v != 0

    def inverse(self, v):
        if v == 0:
            raise NotAUnit("0 has no inverse", ring="Q")
        return 1 / v

    def is_central(self, v):
        return True

    def dimension(self):
        return 1

    def coordinate_field(self):
        return self

    def coordinates(self, v):
        return [v]

    def from_coordinates(self, coords):
        return coords[0]

    def scale(self, c, v):
        return c * v

    def sample(self, rng):
        return Fraction(rng.randint(-3, 3), rng.randint(1, 3))

    def key(self):
        return ("rational",)

    def __repr__(self):
        return "Q"


class IntegersMod(Ring):
    """Z/mZ with canonical residues."""

    kind = "zmod"

    def __init__(self, mod: int):
        if mod < 2:
            raise DomainError(f"modulus must be >= 2, got {mod}")
        self.mod = mod
        self.zero = ZmodScalar(mod, 0)
        self.one = ZmodScalar(mod, 1)

    @property
    def is_field(self):
        m = self.mod
        if m < 2:
            return False
        p = 2
        while p * p <= m:
            if m % p == 0:
                return False
            p += 1
        return True

    def from_int(self, k):
        return ZmodScalar(self.mod, k)

    def characteristic(self):
        return self.mod

    def contains(self, v):
        return isinstance(v, ZmodScalar) and v.mod == self.mod

    def is_unit(self, v):
        return v.is_unit()

    def inverse(self, v):
        return scalar_inverse(v)

    def is_central(self, v):
        return True

    def dimension(self):
        return 1 if self.is_field else None

    def coordinate_field(self):
        if not self.is_field:
            raise NotImplementedError(f"Z/{self.mod} is not a field")
        return self

    def coordinates(self, v):
        return [v]

    def from_coordinates(self, coords):
        return coords[0]

    def scale(self, c, v):
        return c * v

    def sample(self, rng):
        return ZmodScalar(self.mod, rng.randrange(self.mod))

    def key(self):
        return ("zmod", self.mod)

    def __repr__(self):
        return f"Z/{self.mod}"


class CyclotomicField(Ring):
    """Q(zeta_m) in the reduced power basis."""

    kind = "cyclotomic"
    is_field = True

    def __init__(self, order: int):
        if order < 1:
            raise DomainError(f"order must be >= 1, got {order}")
        self.order = order
        self.degree = len(cyclotomic_polynomial(order)) - 1
        self.zero = cyclo_zero(order)
        self.one = cyclo_one(order)

    def root(self, exponent: int = 1) -> CycloScalar:
        return cyclo_root(self.order, exponent)

    def from_int(self, k):
        return cyclo_from_rational(self.order, k)

    def from_rational(self, q):
        return cyclo_from_rational(self.order, q)

    def characteristic(self):
        return 0

    def contains(self, v):
        return isinstance(v, CycloScalar) and v.order == self.order

    def is_unit(self, v):
        return not v.is_zero()

    def inverse(self, v):
        return scalar_inverse(v)

    def is_central(self, v):
        return True

    def dimension(self):
        return 1

    def coordinate_field(self):
        return self

    def coordinates(self, v):
        return [v]

    def from_coordinates(self, coords):
        return coords[0]

    def scale(self, c, v):
        return c * v

    def sample(self, rng):
        return CycloScalar(
            self.order, [Fraction(rng.randint(-3, 3)) for _ in range(self.degree)])

    def key(self):
        return ("cyclotomic", self.order)

    def __repr__(self):
        return f"Q(zeta_{self.order})"


QQ = RationalField()


# ---------------------------------------------------------------------------
# Dense matrices over an arbitrary registered ring
# ---------------------------------------------------------------------------

class DenseMatrix:
    """Immutable rows x cols matrix with entries in a fixed ring.

    Entry rings may themselves be matrix rings, so multiplication keeps the
    left/right order of every entry product.
    """

    __slots__ = ("ring", "rows", "cols", "entries")

    def __init__(self, ring: Ring, rows: int, cols: int, entries):
        entries = tuple(entries)
        if len(entries) != rows * cols:
            raise ShapeMismatch(
                f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}")
        for e in entries:
            if not ring.contains(e):
                raise RingMismatch(f"entry {e!r} does not belong to {ring!r}")
        self.ring = ring
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def _make(cls, ring: Ring, rows: int, cols: int, entries) -> "DenseMatrix":
        # Internal fast path: entries come from arithmetic on validated
        # matrices, so ring closure already guarantees membership.
        m = object.__new__(cls)
        m.ring = ring
        m.rows = rows
        m.cols = cols
        m.entries = tuple(entries)
        return m

    # -- access ---------------------------------------------------------------
    def entry(self, i: int, j: int):
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def column(self, j: int) -> list:
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def row_lists(self) -> list:
        return [self.row(i) for i in range(self.rows)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def diagonal(self) -> list:
        if not self.is_square:
            raise ShapeMismatch("diagonal of a non-square matrix")
        return [self.entry(i, i) for i in range(self.rows)]

    # -- arithmetic -------------------------------------------------------------
    def _match(self, other, *, same_shape=True):
        if not isinstance(other, DenseMatrix):
            raise RingMismatch(f"cannot combine matrix with {type(other).__name__}")
        if other.ring != self.ring:
            raise RingMismatch(f"entry rings differ: {self.ring!r} vs {other.ring!r}")
        if same_shape and (other.rows != self.rows or other.cols != self.cols):
            raise ShapeMismatch(
                f"shape mismatch: {self.rows}x{self.cols} vs {other.rows}x{other.cols}")

    def __add__(self, other):
        self._match(other)
        return DenseMatrix._make(self.ring, self.rows, self.cols,
                                 [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other):
        self._match(other)
        return DenseMatrix._make(self.ring, self.rows, self.cols,
                                 [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self):
        return DenseMatrix._make(self.ring, self.rows, self.cols,
                                 [-a for a in self.entries])

    def __mul__(self, other):
        self._match(other, same_shape=False)
        if self.cols != other.rows:
            raise ShapeMismatch(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        zero = self.ring.zero
        out = []
        for i in range(self.rows):
            lrow = self.entries[i * self.cols:(i + 1) * self.cols]
            for j in range(other.cols):
                acc = zero
                for k in range(self.cols):
                    a = lrow[k]
                    if a == zero:
                        continue
                    b = other.entries[k * other.cols + j]
                    if b == zero:
                        continue
                    acc = acc + a * b
                out.append(acc)
        return DenseMatrix._make(self.ring, self.rows, other.cols, out)

    def __pow__(self, k: int):
        return mat_power(self, k)

    def scale(self, s):
        """Entrywise left multiplication by a ring element (use central s)."""
        if not self.ring.contains(s):
            raise RingMismatch(f"scalar {s!r} does not belong to {self.ring!r}")
        return DenseMatrix._make(self.ring, self.rows, self.cols,
                                 [s * e for e in self.entries])

    def __eq__(self, other):
        return (isinstance(other, DenseMatrix)
                and other.ring == self.ring
                and other.rows == self.rows and other.cols == self.cols
                and other.entries == self.entries)

    def __hash__(self):
        return hash((self.ring.key(), self.rows, self.cols, self.entries))

    def __repr__(self):
        rows = [", ".join(repr(self.entry(i, j)) for j in range(self.cols))
                for i in range(self.rows)]
        return "DenseMatrix[" + "; ".join(rows) + "]"


def coerce(ring: Ring, x):
    """Lift plain ints (and Fractions, where meaningful) into `ring`."""
    if ring.contains(x):
        return x
    if isinstance(x, bool):
        raise RingMismatch("booleans are not ring elements")
    if isinstance(x, int):
        return ring.from_int(x)
    if isinstance(x, Fraction):
        if isinstance(ring, RationalField):
            return x
        if isinstance(ring, CyclotomicField):
            return ring.from_rational(x)
    raise RingMismatch(f"cannot coerce {x!r} into {ring!r}")


def matrix(ring: Ring, rows) -> DenseMatrix:
    """Build a matrix from nested lists, coercing ints through the ring."""
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    entries = []
    for r in rows:
        if len(r) != ncols:
            raise ShapeMismatch("ragged rows")
        entries.extend(coerce(ring, x) for x in r)
    return DenseMatrix(ring, nrows, ncols, entries)


def from_columns(ring: Ring, cols) -> DenseMatrix:
    n = len(cols[0])
    return DenseMatrix(ring, n, len(cols),
                       [cols[j][i] for i in range(n) for j in range(len(cols))])


def identity(ring: Ring, n: int) -> DenseMatrix:
    return DenseMatrix._make(ring, n, n,
                             [ring.one if i == j else ring.zero
                              for i in range(n) for j in range(n)])


def zeros(ring: Ring, rows: int, cols: int) -> DenseMatrix:
    return DenseMatrix._make(ring, rows, cols, [ring.zero] * (rows * cols))


def diagonal(ring: Ring, values) -> DenseMatrix:
    values = [coerce(ring, v) for v in values]
    n = len(values)
    return DenseMatrix._make(ring, n, n,
                             [values[i] if i == j else ring.zero
                              for i in range(n) for j in range(n)])


def mat_mul(lhs: DenseMatrix, rhs: DenseMatrix) -> DenseMatrix:
    """Exact matrix product; entry multiplication order is preserved."""
    return lhs * rhs


def commutator(a, b):
    """ab - ba, for matrices or for plain ring elements."""
    if isinstance(a, DenseMatrix) or isinstance(b, DenseMatrix):
        if not (isinstance(a, DenseMatrix) and isinstance(b, DenseMatrix)):
            raise RingMismatch("commutator needs two matrices or two ring elements")
        a._match(b)
        if not a.is_square:
            raise ShapeMismatch("commutator needs square matrices")
    return a * b - b * a


def trace(m: DenseMatrix):
    if not m.is_square:
        raise ShapeMismatch("trace of a non-square matrix")
    acc = m.ring.zero
    for d in m.diagonal():
        acc = acc + d
    return acc


def mat_inverse(m: DenseMatrix) -> DenseMatrix:
    """Two-sided inverse by exact elimination with unit pivots.

    Over a field this succeeds exactly for invertible matrices. Over other
    entry rings the elimination only proceeds while some remaining row offers
    a unit pivot, which covers every matrix this package inverts (permutation
    blocks, conjugators, similarity transforms) without a general adjugate.
    """
    if not m.is_square:
        raise ShapeMismatch("only square matrices can be inverted")
    ring, n = m.ring, m.rows
    aug = []
    for i in range(n):
        aug.append(m.row(i) + [ring.one if j == i else ring.zero for j in range(n)])
    for col in range(n):
        pivot = None
        for r in range(col, n):
            cand = aug[r][col]
            if cand != ring.zero and ring.is_unit(cand):
                pivot = r
                break
        if pivot is None:
            raise NotAUnit(f"no unit pivot available in column {col}",
                           ring=f"M_{n}({ring!r})")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = ring.inverse(aug[col][col])
        aug[col] = [inv * x for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != ring.zero:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    result = DenseMatrix._make(ring, n, n,
                               [aug[i][n + j] for i in range(n) for j in range(n)])
    ident = identity(ring, n)
    if result * m != ident or m * result != ident:
        raise NotAUnit("candidate inverse failed the two-sided check",
                       ring=f"M_{n}({ring!r})")
    return result


def mat_power(m: DenseMatrix, k: int) -> DenseMatrix:
    """Exact k-th power; k = 0 gives the identity, negative k inverts first."""
    if not m.is_square:
        raise ShapeMismatch("powers need a square matrix")
    if k < 0:
        return mat_power(mat_inverse(m), -k)
    result = identity(m.ring, m.rows)
    base = m
    while k:
        if k & 1:
            result = result * base
        base = base * base if k > 1 else base
        k >>= 1
    return result


class MatrixRing(Ring):
    """M_n(S) for any registered ring S; registers itself as a ring."""

    kind = "matrix"

    def __init__(self, base: Ring, size: int):
        if size < 1:
            raise DomainError(f"matrix ring size must be >= 1, got {size}")
        self.base = base
        self.size = size
        self.zero = zeros(base, size, size)
        self.one = identity(base, size)

    def from_int(self, k):
        return diagonal(self.base, [self.base.from_int(k)] * self.size)

    def characteristic(self):
        return self.base.characteristic()

    def contains(self, v):
        return (isinstance(v, DenseMatrix) and v.ring == self.base
                and v.rows == self.size and v.cols == self.size)

    def is_unit(self, v):
        try:
            mat_inverse(v)
            return True
        except NotAUnit:
            return False

    def inverse(self, v):
        return mat_inverse(v)

    def is_central(self, v):
        # Center of M_n(S) = scalar matrices with entries in Z(S).
        c = v.entry(0, 0)
        if v != diagonal(self.base, [c] * self.size):
            return False
        return self.base.is_central(c)

    def dimension(self):
        d = self.base.dimension()
        return None if d is None else d * self.size * self.size

    def coordinate_field(self):
        return self.base.coordinate_field()

    def coordinates(self, v):
        out = []
        for e in v.entries:
            out.extend(self.base.coordinates(e))
        return out

    def from_coordinates(self, coords):
        d = self.base.dimension()
        entries = []
        for t in range(self.size * self.size):
            entries.append(self.base.from_coordinates(coords[t * d:(t + 1) * d]))
        return DenseMatrix(self.base, self.size, self.size, entries)

    def scale(self, c, v):
        return DenseMatrix(self.base, v.rows, v.cols,
                           [self.base.scale(c, e) for e in v.entries])

    def sample(self, rng):
        return DenseMatrix(self.base, self.size, self.size,
                           [self.base.sample(rng)
                            for _ in range(self.size * self.size)])

    def key(self):
        return ("matrix", self.size, self.base.key())

    def __repr__(self):
        return f"M_{self.size}({self.base!r})"


# ---------------------------------------------------------------------------
# Exact linear algebra over a field ring (used for corners, ranks, solves)
# ---------------------------------------------------------------------------

class SpanBasis:
    """Incremental row echelon over an exact field; tracks a growing span."""

    def __init__(self, field: Ring):
        self.field = field
        self.rows = []      # reduced, each with leading coefficient 1
        self.pivots = []    # pivot column of each stored row

    def residual(self, vec) -> list:
        vec = list(vec)
        zero = self.field.zero
        for row, p in zip(self.rows, self.pivots):
            c = vec[p]
            if c != zero:
                vec = [x - c * y for x, y in zip(vec, row)]
        return vec

    def try_add(self, vec) -> bool:
        """Add vec to the span; returns False when it was already dependent."""
        res = self.residual(vec)
        zero = self.field.zero
        pivot = next((i for i, x in enumerate(res) if x != zero), None)
        if pivot is None:
            return False
        inv = self.field.inverse(res[pivot])
        res = [inv * x for x in res]
        self.rows.append(res)
        self.pivots.append(pivot)
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)


def field_rank(field: Ring, vectors) -> int:
    span = SpanBasis(field)
    for v in vectors:
        span.try_add(v)
    return span.rank


def express_in_span(field: Ring, basis_vectors, target):
    """Coordinates of target as a combination of basis_vectors, or None.

    basis_vectors must be linearly independent; the answer is then unique.
    """
    k = len(basis_vectors)
    if k == 0:
        zero = field.zero
        return [] if all(x == zero for x in target) else None
    m = len(target)
    aug = [[basis_vectors[j][i] for j in range(k)] + [target[i]] for i in range(m)]
    zero = field.zero
    pivots = {}
    r = 0
    for col in range(k):
        pivot = next((i for i in range(r, m) if aug[i][col] != zero), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = field.inverse(aug[r][col])
        aug[r] = [inv * x for x in aug[r]]
        for i in range(m):
            if i != r and aug[i][col] != zero:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots[col] = r
        r += 1
    for i in range(r, m):
        if aug[i][k] != zero:
            return None
    coords = []
    for col in range(k):
        if col not in pivots:  # dependent basis; caller violated the contract
            return None
        coords.append(aug[pivots[col]][k])
    return coords


def field_solve(field: Ring, rows, rhs):
    """Solve the square system rows * x = rhs over a field; None if singular."""
    cols = [[rows[i][j] for i in range(len(rows))] for j in range(len(rows[0]))]
    return express_in_span(field, cols, list(rhs))


# ---------------------------------------------------------------------------
# Finite-dimensional structure-constant algebras
# ---------------------------------------------------------------------------

class AlgebraElement:
    """Coordinate vector over the base field of a FiniteAlgebra."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: "FiniteAlgebra", coords):
        coords = tuple(coords)
        if len(coords) != algebra.dim:
            raise ShapeMismatch(
                f"element of a {algebra.dim}-dimensional algebra needs "
                f"{algebra.dim} coordinates, got {len(coords)}")
        self.algebra = algebra
        self.coords = coords

    def _match(self, other):
        if not isinstance(other, AlgebraElement) or other.algebra is not self.algebra:
            raise RingMismatch("elements belong to different algebras")

    def __add__(self, other):
        self._match(other)
        return AlgebraElement(self.algebra,
                              [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        self._match(other)
        return AlgebraElement(self.algebra,
                              [a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return AlgebraElement(self.algebra, [-a for a in self.coords])

    def __mul__(self, other):
        self._match(other)
        alg = self.algebra
        zero = alg.field.zero
        out = [zero] * alg.dim
        sparse = alg._sparse
        for i, a in enumerate(self.coords):
            if a == zero:
                continue
            row = sparse[i]
            for j, b in enumerate(other.coords):
                if b == zero:
                    continue
                c = a * b
                for t, s in row[j]:
                    out[t] = out[t] + c * s
        return AlgebraElement(alg, out)

    def __pow__(self, k: int):
        if k < 0:
            return algebra_inverse(self.algebra, self) ** (-k)
        result = self.algebra.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def scale(self, c):
        if not self.algebra.field.contains(c):
            raise RingMismatch("scalar must live in the base field")
        return AlgebraElement(self.algebra, [c * a for a in self.coords])

    def __eq__(self, other):
        return (isinstance(other, AlgebraElement)
                and other.algebra is self.algebra and other.coords == self.coords)

    def __hash__(self):
        return hash((id(self.algebra), self.coords))

    def __repr__(self):
        alg = self.algebra
        terms = [f"{c!r}*{alg.labels[i]}"
                 for i, c in enumerate(self.coords) if c != alg.field.zero]
        return " + ".join(terms) if terms else "0"


class FiniteAlgebra(Ring):
    """Associative unital algebra given by structure constants over a field.

    Associativity and the identity laws are checked on all basis triples at
    construction time; the dimensions in this package stay small enough that
    the eager check is cheap insurance against malformed tables.
    """

    kind = "algebra"

    def __init__(self, field: Ring, labels, table, one_coords, *, check: bool = True):
        if not field.is_field:
            raise DomainError("structure-constant algebras need a field of scalars")
        self.field = field
        self.dim = len(labels)
        self.labels = tuple(labels)
        self.table = tuple(tuple(tuple(cell) for cell in row) for row in table)
        zero = field.zero
        self._sparse = [[[(t, c) for t, c in enumerate(cell) if c != zero]
                         for cell in row]
                        for row in self.table]
        self.zero = AlgebraElement(self, (zero,) * self.dim)
        self.one = AlgebraElement(self, one_coords)
        if check:
            self._validate()

    # -- construction checks ---------------------------------------------------
    def _validate(self):
        zero = self.field.zero
        for row in self.table:
            if len(row) != self.dim:
                raise ShapeMismatch("multiplication table must be dim x dim")
            for cell in row:
                if len(cell) != self.dim:
                    raise ShapeMismatch("structure constants must have dim coordinates")
        for i in range(self.dim):
            b = self.basis_element(i)
            if self.one * b != b or b * self.one != b:
                raise DomainError(f"identity fails on basis element {self.labels[i]}")
        for i in range(self.dim):
            for j in range(self.dim):
                left_ij = self._sparse[i][j]
                for k in range(self.dim):
                    lhs = {}
                    for t, c in left_ij:
                        for u, s in self._sparse[t][k]:
                            lhs[u] = lhs.get(u, zero) + c * s
                    rhs = {}
                    for t, c in self._sparse[j][k]:
                        for u, s in self._sparse[i][t]:
                            rhs[u] = rhs.get(u, zero) + c * s
                    keys = set(lhs) | set(rhs)
                    if any(lhs.get(u, zero) != rhs.get(u, zero) for u in keys):
                        raise DomainError(
                            "structure constants are not associative at basis "
                            f"triple ({self.labels[i]}, {self.labels[j]}, {self.labels[k]})")

    # -- element constructors ----------------------------------------------------
    def element(self, coords) -> AlgebraElement:
        return AlgebraElement(self, coords)

    def basis_element(self, i: int) -> AlgebraElement:
        return AlgebraElement(self, [self.field.one if j == i else self.field.zero
                                     for j in range(self.dim)])

    def scalar(self, c) -> AlgebraElement:
        return self.one.scale(coerce(self.field, c))

    # -- ring contract -------------------------------------------------------------
    def from_int(self, k):
        return self.one.scale(self.field.from_int(k))

    def characteristic(self):
        return self.field.characteristic()

    def contains(self, v):
        return isinstance(v, AlgebraElement) and v.algebra is self

    def is_unit(self, v):
        try:
            algebra_inverse(self, v)
            return True
        except NotAUnit:
            return False

    def inverse(self, v):
        return algebra_inverse(self, v)

    def is_central(self, v):
        return all(v * b == b * v for b in self.basis_elements())

    def dimension(self):
        return self.dim

    def coordinate_field(self):
        return self.field

    def coordinates(self, v):
        return list(v.coords)

    def from_coordinates(self, coords):
        return AlgebraElement(self, coords)

    def scale(self, c, v):
        return v.scale(c)

    def key(self):
        return ("algebra", id(self))

    def __repr__(self):
        return f"FiniteAlgebra(dim={self.dim}, field={self.field!r})"


def algebra_inverse(alg: FiniteAlgebra, v) -> AlgebraElement:
    """Inverse of v, by solving the left-multiplication system and verifying
    the right product too."""
    if not isinstance(v, AlgebraElement):
        v = alg.element(v)
    zero = alg.field.zero
    # Fast path: scalar multiples of the identity.
    one_coords = alg.one.coords
    nz = next((i for i, c in enumerate(one_coords) if c != zero), None)
    if nz is not None and one_coords[nz] != zero:
        c = v.coords[nz] * alg.field.inverse(one_coords[nz])
        if v == alg.one.scale(c):
            if c == zero:
                raise NotAUnit("0 has no inverse", ring=repr(alg))
            return alg.one.scale(alg.field.inverse(c))
    cols = [(v * alg.basis_element(j)).coords for j in range(alg.dim)]
    sol = express_in_span(alg.field, cols, list(one_coords))
    if sol is None:
        raise NotAUnit("left-multiplication operator is singular", ring=repr(alg))
    w = alg.element(sol)
    if w * v != alg.one or v * w != alg.one:
        raise NotAUnit("one-sided inverse only", ring=repr(alg))
    return w


def _monomial_label(i: int, j: int) -> str:
    def power(sym, e):
        return "" if e == 0 else (sym if e == 1 else f"{sym}^{e}")

    text = power("x", i) + power("y", j)
    return text if text else "1"


def quantum_plane(n: int, a, b) -> FiniteAlgebra:
    """The n^2-dimensional quotient with x^n = a, y^n = b, yx = omega*xy.

    Basis monomials x^i y^j (0 <= i, j < n) are laid out at index i*n + j;
    omega is the canonical primitive n-th root of unity in Q(zeta_n).
    """
    if n < 2:
        raise DomainError(f"quantum plane needs n >= 2, got {n}")
    field = CyclotomicField(n)
    a = coerce(field, a)
    b = coerce(field, b)
    if a == field.zero:
        raise DomainError("x^n = a with a = 0 would make x non-invertible")
    omega_powers = [field.root(t) for t in range(n)]
    zero = field.zero
    dim = n * n
    labels = [_monomial_label(i, j) for i in range(n) for j in range(n)]
    table = []
    for i1 in range(n):
        for j1 in range(n):
            row = []
            for i2 in range(n):
                for j2 in range(n):
                    coeff = omega_powers[(j1 * i2) % n]
                    if i1 + i2 >= n:
                        coeff = coeff * a
                    if j1 + j2 >= n:
                        coeff = coeff * b
                    target = ((i1 + i2) % n) * n + ((j1 + j2) % n)
                    cell = [zero] * dim
                    cell[target] = coeff
                    row.append(cell)
            table.append(row)
    one = [field.one if t == 0 else zero for t in range(dim)]
    return FiniteAlgebra(field, labels, table, one)


def subring_corner(alg: FiniteAlgebra, e) -> FiniteAlgebra:
    """The corner e*alg*e as a structure-constant algebra with identity e."""
    if not isinstance(e, AlgebraElement):
        e = alg.element(e)
    if e * e != e:
        raise DomainError("corner subring needs an idempotent")
    span = SpanBasis(alg.field)
    basis = []
    for i in range(alg.dim):
        w = e * alg.basis_element(i) * e
        if span.try_add(w.coords):
            basis.append(w)
    d = len(basis)
    basis_vectors = [list(w.coords) for w in basis]
    if d == 0:
        return FiniteAlgebra(alg.field, (), (), (), check=False)
    table = []
    for s in basis:
        row = []
        for t in basis:
            coords = express_in_span(alg.field, basis_vectors, list((s * t).coords))
            if coords is None:  # corners are closed under products
                raise DomainError("corner product left the corner span")
            row.append(coords)
        table.append(row)
    one_coords = express_in_span(alg.field, basis_vectors, list(e.coords))
    if one_coords is None:
        raise DomainError("idempotent is not in the span of its own corner")
    labels = [f"s{i}" for i in range(d)]
    return FiniteAlgebra(alg.field, labels, table, one_coords)


class CornerRing(Ring):
    """e*R*e for an idempotent e, with identity e and R's arithmetic.

    Elements are plain elements of the parent ring satisfying e*v*e = v.
    When the parent ring is finite-dimensional over an exact field, the
    corner lazily computes a basis so exact ranks and sampling work here too.
    """

    kind = "corner"

    def __init__(self, parent: Ring, e0):
        if not parent.contains(e0):
            raise RingMismatch("idempotent must belong to the parent ring")
        if e0 * e0 != e0:
            raise DomainError("corner ring needs an idempotent")
        self.parent = parent
        self.zero = parent.zero
        self.one = e0
        self._basis = None

    def from_int(self, k):
        return self.parent.from_int(k) * self.one

    def characteristic(self):
        char = self.parent.characteristic()
        if char == 0:
            return 0
        for d in divisors(char):
            if self.parent.from_int(d) * self.one == self.zero:
                return d
        return char  # pragma: no cover

    def contains(self, v):
        return (self.parent.contains(v)
                and self.one * v * self.one == v)

    def _corner_basis(self):
        if self._basis is None:
            d = self.parent.dimension()
            if d is None:
                raise NotImplementedError(
                    "corner of a ring without exact coordinates")
            field = self.parent.coordinate_field()
            span = SpanBasis(field)
            basis = []
            for b in self.parent.basis_elements():
                w = self.one * b * self.one
                if span.try_add(self.parent.coordinates(w)):
                    basis.append(w)
            self._basis = basis
        return self._basis

    def is_unit(self, v):
        try:
            self.inverse(v)
            return True
        except NotAUnit:
            return False

    def inverse(self, v):
        basis = self._corner_basis()
        field = self.parent.coordinate_field()
        cols = [self.parent.coordinates(v * b) for b in basis]
        target = self.parent.coordinates(self.one)
        sol = express_in_span(field, cols, target)
        if sol is None:
            raise NotAUnit("left-multiplication operator is singular in the corner",
                           ring=repr(self))
        w = self.from_coordinates(sol)
        if w * v != self.one or v * w != self.one:
            raise NotAUnit("one-sided inverse only in the corner", ring=repr(self))
        return w

    def is_central(self, v):
        return all(v * b == b * v for b in self._corner_basis())

    def dimension(self):
        try:
            return len(self._corner_basis())
        except NotImplementedError:
            return None

    def coordinate_field(self):
        return self.parent.coordinate_field()

    def coordinates(self, v):
        basis = self._corner_basis()
        field = self.parent.coordinate_field()
        vectors = [self.parent.coordinates(b) for b in basis]
        coords = express_in_span(field, vectors, self.parent.coordinates(v))
        if coords is None:
            raise RingMismatch("element is not in the corner")
        return coords

    def from_coordinates(self, coords):
        basis = self._corner_basis()
        acc = self.zero
        for c, b in zip(coords, basis):
            acc = acc + self.parent.scale(c, b)
        return acc

    def scale(self, c, v):
        return self.parent.scale(c, v)

    def key(self):
        return ("corner", self.parent.key(), self.one)

    def __repr__(self):
        return f"Corner({self.parent!r})"


def ring_of(value) -> Ring:
    """The ring a scalar/matrix/algebra element belongs to."""
    if isinstance(value, Fraction):
        return QQ
    if isinstance(value, ZmodScalar):
        return IntegersMod(value.mod)
    if isinstance(value, CycloScalar):
        return CyclotomicField(value.order)
    if isinstance(value, DenseMatrix):
        if not value.is_square:
            raise DomainError("only square matrices form a ring")
        return MatrixRing(value.ring, value.rows)
    if isinstance(value, AlgebraElement):
        return value.algebra
    raise DomainError(f"no registered ring for {type(value).__name__}")


def ring_from_spec(text: str) -> Ring:
    """Parse 'Q', 'Zmod:m' or 'Cyclo:m' into a ring handle."""
    if text == "Q":
        return QQ
    if text.startswith("Zmod:"):
        return IntegersMod(int(text.split(":", 1)[1]))
    if text.startswith("Cyclo:"):
        return CyclotomicField(int(text.split(":", 1)[1]))
    raise DomainError(f"unknown ring spec {text!r}; use Q, Zmod:m or Cyclo:m")
