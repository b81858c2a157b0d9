"""Exact arithmetic on positive integers kept in fully factored form.

Character degrees of symmetric groups outgrow machine words long before the
interesting range starts, and every question asked of them here is about
prime parts.  Values therefore live as maps prime -> exponent; conversion to
decimal happens only at output boundaries.  Division by a non-divisor is a
hard error: every quotient taken in this package is asserted integral, and a
non-integral one means a transcription bug that must surface loudly.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt
from typing import Iterable, Mapping


class NotDivisible(ArithmeticError):
    """Exact division failed for some prime exponent."""


def is_prime(k: int) -> bool:
    """Trial-division primality test; operands here stay at desk scale."""
    if k < 2:
        return False
    if k < 4:
        return True
    if k % 2 == 0:
        return False
    for d in range(3, isqrt(k) + 1, 2):
        if k % d == 0:
            return False
    return True


def primes_up_to(k: int) -> list[int]:
    """All primes <= k, by sieve."""
    if k < 2:
        return []
    sieve = bytearray([1]) * (k + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, isqrt(k) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [i for i, flag in enumerate(sieve) if flag]


def padic_valuation(x: int, p: int) -> int:
    """Exponent of the prime p in the integer x >= 1."""
    if x < 1:
        raise ValueError(f"valuation is defined for positive integers, got {x}")
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def factorial_valuation(k: int, p: int) -> int:
    """Exponent of p in k!, by the floor-sum formula."""
    total = 0
    power = p
    while power <= k:
        total += k // power
        power *= p
    return total


@dataclass(frozen=True)
class FactoredNatural:
    """A positive integer as a sorted tuple of (prime, exponent) pairs.

    The integer 1 is the empty tuple.  Instances are immutable and compare
    equal exactly when their factor maps are equal.
    """

    factors: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "factors", tuple((int(p), int(e)) for p, e in self.factors)
        )
        previous = 1
        for p, e in self.factors:
            if p <= previous:
                raise ValueError(f"factor keys must be strictly increasing, got {p}")
            if e < 1:
                raise ValueError(f"exponent of {p} must be >= 1, got {e}")
            if not is_prime(p):
                raise ValueError(f"factor key {p} is not prime")
            previous = p

    @classmethod
    def from_factors(cls, mapping: Mapping[int, int]) -> "FactoredNatural":
        """Build from a prime -> exponent map; zero exponents are dropped."""
        items = []
        for p, e in sorted(mapping.items()):
            if e < 0:
                raise ValueError(f"negative exponent for {p}")
            if e > 0:
                items.append((p, e))
        return cls(tuple(items))

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)

    def valuation(self, p: int) -> int:
        """Exponent of p, zero when p is absent."""
        for prime, e in self.factors:
            if prime == p:
                return e
            if prime > p:
                break
        return 0

    def __mul__(self, other: "FactoredNatural") -> "FactoredNatural":
        merged = dict(self.factors)
        for p, e in other.factors:
            merged[p] = merged.get(p, 0) + e
        return FactoredNatural(tuple(sorted(merged.items())))

    def div(self, other: "FactoredNatural") -> "FactoredNatural":
        """Exact quotient; raises NotDivisible when any exponent underflows."""
        merged = dict(self.factors)
        for p, e in other.factors:
            remaining = merged.get(p, 0) - e
            if remaining < 0:
                raise NotDivisible(
                    f"prime {p} has exponent {merged.get(p, 0)} < {e} in the dividend"
                )
            if remaining == 0:
                merged.pop(p)
            else:
                merged[p] = remaining
        return FactoredNatural(tuple(sorted(merged.items())))

    def to_int(self) -> int:
        value = 1
        for p, e in self.factors:
            value *= p**e
        return value

    def to_decimal(self) -> str:
        """Exact base-10 rendering of the represented integer."""
        return str(self.to_int())

    def factored_str(self) -> str:
        """Compact rendering such as '2^2*3'; '1' for the empty product."""
        if not self.factors:
            return "1"
        return "*".join(f"{p}^{e}" if e > 1 else f"{p}" for p, e in self.factors)


ONE = FactoredNatural()


@lru_cache(maxsize=None)
def factor(k: int) -> FactoredNatural:
    """Factor a positive integer by trial division."""
    if k < 1:
        raise ValueError(f"cannot factor {k}; argument must be >= 1")
    pairs = []
    remaining = k
    d = 2
    while d * d <= remaining:
        if remaining % d == 0:
            e = 0
            while remaining % d == 0:
                remaining //= d
                e += 1
            pairs.append((d, e))
        d += 1 if d == 2 else 2
    if remaining > 1:
        pairs.append((remaining, 1))
    return FactoredNatural(tuple(pairs))


@lru_cache(maxsize=None)
def factorial_factored(k: int) -> FactoredNatural:
    """Factorization of k!, one floor-sum per prime <= k."""
    if k < 0:
        raise ValueError(f"factorial of negative {k}")
    pairs = tuple((p, factorial_valuation(k, p)) for p in primes_up_to(k))
    return FactoredNatural(tuple((p, e) for p, e in pairs if e > 0))


def product(values: Iterable[FactoredNatural]) -> FactoredNatural:
    """Product of factored values, accumulated in one exponent map."""
    merged: dict[int, int] = {}
    for value in values:
        for p, e in value.factors:
            merged[p] = merged.get(p, 0) + e
    return FactoredNatural(tuple(sorted(merged.items())))
