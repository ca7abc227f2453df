"""Exact scalar arithmetic: rationals, integers mod m, and cyclotomic field elements.

Rationals are plain ``fractions.Fraction`` values (arbitrary precision,
eagerly normalized, positive denominator), re-exported here as ``Rational``.
Elements of Q(zeta_m) are coefficient vectors in the power basis
1, zeta, ..., zeta^{phi(m)-1} after reduction modulo the m-th cyclotomic
polynomial, so equality is coefficient-wise.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import DomainError, InternalCheckFailed, NotAUnit, RingMismatch

Rational = Fraction


def divisors(m: int) -> list[int]:
    """Positive divisors of m in increasing order."""
    small, large = [], []
    d = 1
    while d * d <= m:
        if m % d == 0:
            small.append(d)
            if d != m // d:
                large.append(m // d)
        d += 1
    return small + large[::-1]


def euler_phi(m: int) -> int:
    """Euler totient, by trial-division factorization (m stays desk-sized here)."""
    if m < 1:
        raise DomainError(f"euler_phi expects m >= 1, got {m}")
    result = m
    n, p = m, 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


def _poly_quotient(num: list[int], den: list[int]) -> list[int]:
    # Exact division of integer polynomials (low-to-high coefficients),
    # divisor monic; remainder must vanish.
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = num[i + len(den) - 1]
        q[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    if any(num):
        raise InternalCheckFailed("non-exact polynomial division")  # pragma: no cover
    return q


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients (low to high) of the m-th cyclotomic polynomial.

    Computed as (x^m - 1) divided by the product of all lower-order
    cyclotomic polynomials at divisors of m; the division is exact over Z
    because every factor is monic with integer coefficients.
    """
    if m < 1:
        raise DomainError(f"cyclotomic polynomial needs m >= 1, got {m}")
    if m == 1:
        return (-1, 1)
    num = [-1] + [0] * (m - 1) + [1]
    for d in divisors(m):
        if d < m:
            num = _poly_quotient(num, list(cyclotomic_polynomial(d)))
    return tuple(num)


@lru_cache(maxsize=None)
def _power_reductions(m: int) -> tuple[tuple[int, ...], ...]:
    # x^t mod Phi_m for 0 <= t < max(m, 2*deg - 1), as integer tuples.
    phi = cyclotomic_polynomial(m)
    deg = len(phi) - 1
    count = max(m, 2 * deg - 1)
    rows = [tuple(1 if i == t else 0 for i in range(deg)) for t in range(deg)]
    for _ in range(deg, count):
        prev = rows[-1]
        shifted = [0] + list(prev)
        top = shifted[deg]
        if top:
            shifted = [shifted[i] - top * phi[i] for i in range(deg)]
        rows.append(tuple(shifted[:deg]))
    return tuple(rows)


class ZmodScalar:
    """Canonical residue in Z/mZ; arithmetic closed in [0, m)."""

    __slots__ = ("mod", "val")

    def __init__(self, mod: int, val: int):
        if mod < 2:
            raise DomainError(f"modulus must be >= 2, got {mod}")
        self.mod = mod
        self.val = val % mod

    def _match(self, other):
        if not isinstance(other, ZmodScalar):
            raise RingMismatch(f"cannot combine Z/{self.mod} with {type(other).__name__}")
        if other.mod != self.mod:
            raise RingMismatch(f"modulus mismatch: {self.mod} vs {other.mod}")

    def __add__(self, other):
        self._match(other)
        return ZmodScalar(self.mod, self.val + other.val)

    def __sub__(self, other):
        self._match(other)
        return ZmodScalar(self.mod, self.val - other.val)

    def __neg__(self):
        return ZmodScalar(self.mod, -self.val)

    def __mul__(self, other):
        self._match(other)
        return ZmodScalar(self.mod, self.val * other.val)

    def __pow__(self, k: int):
        if k < 0:
            return scalar_inverse(self) ** (-k)
        return ZmodScalar(self.mod, pow(self.val, k, self.mod))

    def __eq__(self, other):
        return (isinstance(other, ZmodScalar)
                and other.mod == self.mod and other.val == self.val)

    def __hash__(self):
        return hash(("zmod", self.mod, self.val))

    def __repr__(self):
        return f"ZmodScalar({self.mod}, {self.val})"

    def is_unit(self) -> bool:
        return gcd(self.val, self.mod) == 1


_ZERO = Fraction(0)
_DEGREES: dict[int, int] = {}


def _degree(order: int) -> int:
    deg = _DEGREES.get(order)
    if deg is None:
        deg = len(cyclotomic_polynomial(order)) - 1
        _DEGREES[order] = deg
    return deg


class CycloScalar:
    """Element of Q(zeta_m) in the reduced power basis; canonical form."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs):
        if order < 1:
            raise DomainError(f"order must be >= 1, got {order}")
        deg = _degree(order)
        coeffs = tuple(c if type(c) is Fraction
                       else (_ZERO if c == 0 else Fraction(c))
                       for c in coeffs)
        if len(coeffs) != deg:
            raise DomainError(
                f"Q(zeta_{order}) elements need {deg} coefficients, got {len(coeffs)}")
        self.order = order
        self.coeffs = coeffs

    def _match(self, other):
        if not isinstance(other, CycloScalar):
            raise RingMismatch(
                f"cannot combine Q(zeta_{self.order}) with {type(other).__name__}")
        if other.order != self.order:
            raise RingMismatch(
                f"cyclotomic order mismatch: {self.order} vs {other.order}; "
                "embed into a common order first")

    def __add__(self, other):
        self._match(other)
        return CycloScalar(self.order,
                           [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        self._match(other)
        return CycloScalar(self.order,
                           [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return CycloScalar(self.order, [-a for a in self.coeffs])

    def __mul__(self, other):
        self._match(other)
        deg = len(self.coeffs)
        conv = [0] * (2 * deg - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        conv[i + j] += a * b
        # Powers x^t with t < deg are already basis vectors; only the high
        # half of the convolution needs the reduction table.
        out = conv[:deg]
        table = _power_reductions(self.order)
        for t in range(deg, 2 * deg - 1):
            c = conv[t]
            if c:
                row = table[t]
                for i in range(deg):
                    if row[i]:
                        out[i] += c * row[i]
        return CycloScalar(self.order, out)

    def __pow__(self, k: int):
        if k < 0:
            return scalar_inverse(self) ** (-k)
        result = cyclo_one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        return (isinstance(other, CycloScalar)
                and other.order == self.order and other.coeffs == self.coeffs)

    def __hash__(self):
        return hash(("cyclo", self.order, self.coeffs))

    def __repr__(self):
        return f"CycloScalar({self.order}, {list(self.coeffs)})"

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def scale(self, q) -> "CycloScalar":
        q = Fraction(q)
        return CycloScalar(self.order, [q * c for c in self.coeffs])


def cyclo_zero(order: int) -> CycloScalar:
    deg = len(cyclotomic_polynomial(order)) - 1
    return CycloScalar(order, [0] * deg)


def cyclo_one(order: int) -> CycloScalar:
    deg = len(cyclotomic_polynomial(order)) - 1
    return CycloScalar(order, [1] + [0] * (deg - 1))


def cyclo_from_rational(order: int, q) -> CycloScalar:
    return cyclo_one(order).scale(Fraction(q))


def cyclo_root(order: int, exponent: int) -> CycloScalar:
    """zeta_order^exponent in canonical reduced form; exponent taken mod order."""
    if order < 1:
        raise DomainError(f"root of unity needs order >= 1, got {order}")
    e = exponent % order
    return CycloScalar(order, _power_reductions(order)[e])


def embed_order(s: CycloScalar, factor: int) -> CycloScalar:
    """Image of s under Q(zeta_m) -> Q(zeta_{m*factor}), zeta_m -> zeta_{m*factor}^factor.

    Cross-order arithmetic is intentionally unsupported; callers embed both
    operands into the lcm order through this map and then compute there.
    """
    if factor < 1:
        raise DomainError(f"embedding factor must be >= 1, got {factor}")
    target = s.order * factor
    out = cyclo_zero(target)
    for i, c in enumerate(s.coeffs):
        if c:
            out = out + cyclo_root(target, factor * i).scale(c)
    return out


def _solve_rational(rows: list[list[Fraction]], rhs: list[Fraction]):
    # Gaussian elimination over Q; returns the solution vector or None.
    n = len(rows)
    aug = [list(rows[i]) + [rhs[i]] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [aug[i][n] for i in range(n)]


def _cyclo_inverse(s: CycloScalar) -> CycloScalar:
    if s.is_zero():
        raise NotAUnit("0 has no inverse", ring=f"Q(zeta_{s.order})")
    deg = len(s.coeffs)
    # Columns of the multiplication-by-s operator in the power basis.
    cols = []
    for j in range(deg):
        basis = CycloScalar(s.order, [1 if i == j else 0 for i in range(deg)])
        cols.append((s * basis).coeffs)
    rows = [[cols[j][i] for j in range(deg)] for i in range(deg)]
    rhs = [Fraction(1)] + [Fraction(0)] * (deg - 1)
    sol = _solve_rational(rows, rhs)
    if sol is None:  # cannot happen: Phi_m is irreducible over Q
        raise NotAUnit("multiplication operator is singular",
                       ring=f"Q(zeta_{s.order})")  # pragma: no cover
    return CycloScalar(s.order, sol)


def scalar_is_unit(s) -> bool:
    """True iff s has a two-sided inverse in its scalar ring."""
    if isinstance(s, Fraction):
        return s != 0
    if isinstance(s, ZmodScalar):
        return s.is_unit()
    if isinstance(s, CycloScalar):
        return not s.is_zero()
    raise DomainError(f"not a registered scalar: {type(s).__name__}")


def scalar_inverse(s):
    """Two-sided inverse of a scalar; raises NotAUnit naming the ring."""
    if isinstance(s, Fraction):
        if s == 0:
            raise NotAUnit("0 has no inverse", ring="Q")
        return 1 / s
    if isinstance(s, ZmodScalar):
        if not s.is_unit():
            raise NotAUnit(f"{s.val} is not invertible", ring=f"Z/{s.mod}")
        return ZmodScalar(s.mod, pow(s.val, -1, s.mod))
    if isinstance(s, CycloScalar):
        return _cyclo_inverse(s)
    raise DomainError(f"not a registered scalar: {type(s).__name__}")
