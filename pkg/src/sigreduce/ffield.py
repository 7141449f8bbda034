"""Prime field arithmetic with multiplication counting."""

from __future__ import annotations

DEFAULT_MODULUS = 32003


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def inverse(a: int, p: int) -> int:
    """Inverse of ``a`` modulo ``p`` by the extended Euclidean algorithm."""
    a %= p
    if a == 0:
        raise ZeroDivisionError("0 has no inverse modulo %d" % p)
    r0, r1 = p, a
    s0, s1 = 0, 1
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    return s0 % p


class Field:
    """GF(p) context.

    Elements are plain ints in ``[0, p)``; the field object owns the
    modulus and an optional counter that tallies multiplications.
    """

    def __init__(self, p: int = DEFAULT_MODULUS, counter=None):
        if not is_prime(p):
            raise ValueError("modulus %d is not prime" % p)
        self.p = p
        self.counter = counter

    def __repr__(self):
        return "Field(%d)" % self.p

    def __eq__(self, other):
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __call__(self, n: int) -> int:
        return n % self.p

    def add(self, a: int, b: int) -> int:
        s = a + b
        return s - self.p if s >= self.p else s

    def sub(self, a: int, b: int) -> int:
        s = a - b
        return s + self.p if s < 0 else s

    def neg(self, a: int) -> int:
        return self.p - a if a else 0

    def mul(self, a: int, b: int) -> int:
        if self.counter is not None:
            self.counter.count_mults(1)
        return a * b % self.p

    def inv(self, a: int) -> int:
        # not counted as a multiplication
        return inverse(a, self.p)
