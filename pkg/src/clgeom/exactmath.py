"""Exact integer arithmetic: q-binomials and the counting formulas used everywhere.

Every function here returns a plain Python int (arbitrary precision) or a
fractions.Fraction.  Divisions are performed only after checking exactness;
a non-integer where an integer is required raises instead of rounding.
"""

from __future__ import annotations

from dataclasses import dataclass


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m < 4:
        return True
    if m % 2 == 0:
        return False
    f = 3
    while f * f <= m:
        if m % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class PrimePower:
    """A prime power q = p^e with p prime and e >= 1."""

    p: int
    e: int
    q: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"p = {self.p} is not prime")
        if self.e < 1:
            raise ValueError(f"exponent e = {self.e} must be >= 1")
        if self.q != self.p**self.e:
            raise ValueError(f"q = {self.q} != {self.p}^{self.e}")

    @classmethod
    def from_value(cls, q: int) -> "PrimePower":
        if q < 2:
            raise ValueError(f"q = {q} is not a prime power (q >= 2 required)")
        for p in range(2, q + 1):
            if q % p == 0:
                # smallest divisor of q is prime
                e = 0
                m = q
                while m % p == 0:
                    m //= p
                    e += 1
                if m != 1:
                    raise ValueError(f"q = {q} is not a prime power")
                return cls(p, e, q)
        raise ValueError(f"q = {q} is not a prime power")

    def __int__(self):
        return self.q


def as_prime_power(q) -> PrimePower:
    """Coerce an int or PrimePower to a validated PrimePower."""
    if isinstance(q, PrimePower):
        return q
    return PrimePower.from_value(int(q))


def _qval(q) -> int:
    return as_prime_power(q).q


def theta(a: int, q) -> int:
    """(q^a - 1)/(q - 1) = 1 + q + ... + q^(a-1); the point count of PG(a-1, q).

    theta(0) = 0 by convention, so counting identities hold at boundaries.
    """
    if a < 0:
        raise ValueError(f"a = {a} must be >= 0")
    qq = _qval(q)
    num = qq**a - 1
    assert num % (qq - 1) == 0
    return num // (qq - 1)


def gaussian_binomial(n: int, k: int, q) -> int:
    """Gaussian binomial [n k]_q: number of k-dim subspaces of GF(q)^n.

    Returns 0 for k < 0 or k > n.  Computed by the product formula, with the
    single division performed after the numerator chain so all intermediate
    values stay integral.
    """
    if n < 0:
        raise ValueError(f"n = {n} must be >= 0")
    qq = _qval(q)
    if k < 0 or k > n:
        return 0
    k = min(k, n - k)
    num = 1
    den = 1
    for i in range(k):
        num *= qq ** (n - i) - 1
        den *= qq ** (i + 1) - 1
    assert num % den == 0, "Gaussian binomial is always an integer"
    return num // den


def segre_disjoint_count(n: int, m: int, j: int, q) -> int:
    """Number of j-spaces disjoint from a fixed m-space in PG(n,q).

    Equals q^((m+1)(j+1)) * [n-m  j+1]_q (Segre).  Requires m + j < n,
    otherwise any two subspaces of these dimensions intersect.
    """
    if m < 0 or j < 0:
        raise ValueError(f"dimensions must be >= 0, got m = {m}, j = {j}")
    if m + j >= n:
        raise ValueError(
            f"m + j = {m + j} >= n = {n}: every {j}-space meets every {m}-space"
        )
    qq = _qval(q)
    return qq ** ((m + 1) * (j + 1)) * gaussian_binomial(n - m, j + 1, qq)


def facts_check(a: int, x: int, q) -> tuple[bool, bool, bool]:
    """Truth of the three elementary modular facts used by the congruence proofs.

    (i)  2*theta(a,q) == 0 mod 2(q+1) whenever a is even,
    (ii) a*q^2 == a mod 2(q+1) whenever a is even,
    (iii) x(x-1) == 0 mod 2.

    The first two are implications: for odd a they hold vacuously.
    """
    if a < 0 or x < 0:
        raise ValueError("a and x must be >= 0")
    qq = _qval(q)
    mod = 2 * (qq + 1)
    even = a % 2 == 0
    b1 = (not even) or (2 * theta(a, qq)) % mod == 0
    b2 = (not even) or (a * qq * qq - a) % mod == 0
    b3 = (x * (x - 1)) % 2 == 0
    return (b1, b2, b3)
