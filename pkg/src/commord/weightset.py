"""Vanishing sums of roots of unity: membership, certificates, and a brute-force oracle.

n many k-th roots of unity can sum to zero exactly when n is a nonnegative
integer combination of the prime divisors of k. Membership runs as a small
dynamic program; certificates pick the lexicographically smallest coefficient
vector; the enumeration oracle cross-checks everything at desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .errors import DomainError, NotInWeightSet, OracleTooLarge
from .exact import CycloScalar, _power_reductions, cyclo_root, cyclo_zero

DEFAULT_ORACLE_BOUND = 2_000_000


def prime_divisors(k: int) -> tuple[int, ...]:
    """Distinct prime divisors of k, ascending."""
    if k < 2:
        raise DomainError(f"need k >= 2, got {k}")
    primes = []
    n, p = k, 2
    while p * p <= n:
        if n % p == 0:
            primes.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        primes.append(n)
    return tuple(primes)


@dataclass(frozen=True)
class WeightCertificate:
    """Witness that n is (or is not) a natural combination of k's prime divisors."""

    k: int
    n: int
    primes: tuple[int, ...]
    coefficients: tuple[int, ...] | None

    def __post_init__(self):
        if self.coefficients is not None:
            total = sum(c * p for c, p in zip(self.coefficients, self.primes))
            if total != self.n:
                raise DomainError(
                    f"certificate coefficients sum to {total}, expected {self.n}")


@dataclass(frozen=True)
class RootMultiset:
    """Exponent multiset e with sum over zeta_k^e equal to zero, exactly."""

    k: int
    exponents: tuple[int, ...]

    def __post_init__(self):
        if any(e < 0 or e >= self.k for e in self.exponents):
            raise DomainError("exponents must lie in [0, k)")
        if not self.sum_is_zero():
            raise DomainError("exponent multiset does not sum to zero")

    def sum_is_zero(self) -> bool:
        total = cyclo_zero(self.k)
        for e in self.exponents:
            total = total + cyclo_root(self.k, e)
        return total.is_zero()

    def values(self) -> list[CycloScalar]:
        return [cyclo_root(self.k, e) for e in self.exponents]


@lru_cache(maxsize=None)
def _reachable(primes: tuple[int, ...], limit: int) -> tuple[bool, ...]:
    # table[m] == True iff m is a nonnegative combination of `primes`
    table = [False] * (limit + 1)
    table[0] = True
    for m in range(1, limit + 1):
        table[m] = any(p <= m and table[m - p] for p in primes)
    return tuple(table)


def decide(k: int, n: int) -> bool:
    """True iff n many k-th roots of unity can sum to zero."""
    if k < 2:
        raise DomainError(f"need k >= 2, got {k}")
    if n < 1:
        raise DomainError(f"need n >= 1, got {n}")
    return _reachable(prime_divisors(k), n)[n]


def decompose(k: int, n: int) -> WeightCertificate:
    """Certificate with the lexicographically smallest coefficient vector.

    Coefficients follow the ascending prime order; each one is chosen as small
    as possible subject to the remainder staying representable by the later
    primes, which is exactly the lexicographic-minimal solution.
    """
    primes = prime_divisors(k)
    if not decide(k, n):
        return WeightCertificate(k, n, primes, None)
    coefficients = []
    remaining = n
    for idx, p in enumerate(primes):
        suffix = primes[idx + 1:]
        if not suffix:
            coefficients.append(remaining // p)
            remaining = 0
            continue
        table = _reachable(suffix, remaining)
        c = 0
        while not table[remaining - c * p]:
            c += 1
        coefficients.append(c)
        remaining -= c * p
    return WeightCertificate(k, n, primes, tuple(coefficients))


def build_root_multiset(cert: WeightCertificate) -> RootMultiset:
    """Exponents realizing the certificate: c_i blocks of all p_i-th roots.

    Each block {(k/p)*j : 0 <= j < p} is the full set of p-th roots of unity
    embedded among the k-th roots, so every block sums to zero on its own.
    """
    if cert.coefficients is None:
        raise NotInWeightSet(
            f"{cert.n} is not a natural combination of the prime divisors of {cert.k}")
    exponents = []
    for p, c in zip(cert.primes, cert.coefficients):
        step = cert.k // p
        for _ in range(c):
            exponents.extend(step * j for j in range(p))
    return RootMultiset(cert.k, tuple(exponents))


def enumerate_zero_sums(k: int, n: int, limit: int,
                        max_multisets: int = DEFAULT_ORACLE_BOUND) -> list[RootMultiset]:
    """All size-n exponent multisets in [0, k) with exact zero sum, up to `limit`.

    Runs over nondecreasing exponent sequences with incremental partial sums
    in the integer coordinates of Q(zeta_k); results come back in
    lexicographic order, independent of any internal scheduling.
    """
    if k < 2 or n < 1:
        raise DomainError("oracle needs k >= 2 and n >= 1")
    if comb(n + k - 1, n) > max_multisets:
        raise OracleTooLarge(
            f"C({n + k - 1},{n}) = {comb(n + k - 1, n)} multisets exceeds the "
            f"bound {max_multisets}")
    table = _power_reductions(k)
    deg = len(table[0])
    roots = [table[e] for e in range(k)]
    found: list[RootMultiset] = []

    def extend(start: int, depth: int, partial: tuple[int, ...], prefix: list[int]):
        if len(found) >= limit:
            return
        if depth == n:
            if not any(partial):
                found.append(RootMultiset(k, tuple(prefix)))
            return
        for e in range(start, k):
            vec = roots[e]
            prefix.append(e)
            extend(e, depth + 1, tuple(partial[i] + vec[i] for i in range(deg)), prefix)
            prefix.pop()
            if len(found) >= limit:
                return

    extend(0, 0, (0,) * deg, [])
    return found
