"""Exact arithmetic in the prime field F_q = Z/qZ.

Elements are plain Python ints in canonical form (least non-negative
residue).  A :class:`PrimeField` carries the modulus and a precomputed
inverse table; it is immutable after construction and safe to share
across threads.
"""

from __future__ import annotations

import numpy as np


class NotPrimeError(ValueError):
    """Raised when a field modulus is composite (or < 2)."""


# All searched local dimensions are tiny (q in {2,3,5,7}); 16 bits keeps
# every intermediate product inside a native machine word.
MAX_Q = 1 << 16


def is_prime(n: int) -> bool:
    """Primality by trial division (sufficient for 16-bit moduli)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class PrimeField:
    """The finite field F_q for a prime q.

    Operations take and return canonical residues (ints in [0, q)).
    The inverse table is an array of q entries; entry 0 is unused.
    """

    __slots__ = ("q", "inverse_table")

    def __init__(self, q: int):
        if not isinstance(q, (int, np.integer)):
            raise TypeError(f"q must be an integer, got {type(q).__name__}")
        q = int(q)
        if q >= MAX_Q:
            raise NotPrimeError(f"q={q} exceeds the supported 16-bit range")
        if not is_prime(q):
            raise NotPrimeError(f"q={q} is not prime")
        self.q = q
        # inv(a) = a^(q-2) by Fermat; pow() keeps this O(q log q) overall.
        table = np.zeros(q, dtype=np.int64)
        for a in range(1, q):
            table[a] = pow(a, q - 2, q)
        self.inverse_table = table
        self.inverse_table.setflags(write=False)

    def __repr__(self) -> str:
        return f"PrimeField({self.q})"

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.q == self.q

    def __hash__(self) -> int:
        return hash(("PrimeField", self.q))

    def element(self, value: int) -> int:
        """Canonical residue of an arbitrary integer."""
        return value % self.q

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.q

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.q

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.q

    def neg(self, a: int) -> int:
        return (-a) % self.q

    def inv(self, a: int) -> int:
        """Multiplicative inverse; raises ZeroDivisionError on 0."""
        a %= self.q
        if a == 0:
            raise ZeroDivisionError("0 has no inverse in F_q")
        return int(self.inverse_table[a])

    def div(self, a: int, b: int) -> int:
        return (a * self.inv(b)) % self.q

    def pow(self, a: int, e: int) -> int:
        """a**e with integer exponent e (negative allowed for a != 0)."""
        a %= self.q
        if e < 0:
            a = self.inv(a)
            e = -e
        return pow(a, e, self.q)

    def units(self) -> range:
        """The nonzero elements 1 .. q-1."""
        return range(1, self.q)


def field_new(q: int) -> PrimeField:
    """Construct F_q, rejecting composite q with :class:`NotPrimeError`."""
    return PrimeField(q)
