"""Monomials under grevlex and sparse polynomials over GF(p).

A monomial is a single Python ``int`` that packs two views of its
exponent vector ``(e_1, ..., e_n)`` side by side:

* the high half holds ``deg, e_1+..+e_{n-1}, e_1+..+e_{n-2}, ..., e_1``;
  comparing these fields lexicographically is exactly grevlex, so plain
  integer comparison orders monomials;
* the low half holds the raw exponents, each in a field whose top bit is
  a guard, so ``b - a`` has no guard bit set iff ``a`` divides ``b``.

Both halves are linear in the exponents, hence monomial multiplication
is integer addition and exact division is subtraction. The monomial 1 is
the integer 0.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .ffield import DEFAULT_MODULUS, Field

FIELD_BITS = 16
FIELD_MASK = (1 << FIELD_BITS) - 1
MAX_EXPONENT = (1 << (FIELD_BITS - 1)) - 1


class Ring:
    """Polynomial ring GF(p)[x_1, ..., x_n] with grevlex, x_1 > ... > x_n."""

    def __init__(self, nvars: int, modulus: int = DEFAULT_MODULUS,
                 names: Sequence[str] | None = None):
        if nvars < 1:
            raise ValueError("need at least one variable")
        if names is None:
            names = ["x%d" % (i + 1) for i in range(nvars)]
        names = list(names)
        if len(names) != nvars:
            raise ValueError("expected %d variable names, got %d" % (nvars, len(names)))
        if len(set(names)) != nvars:
            raise ValueError("duplicate variable names")
        self.n = nvars
        self.names = names
        self.field = Field(modulus)
        self.p = modulus
        self._low_bits = FIELD_BITS * nvars
        self._guard = sum(1 << (FIELD_BITS * k + FIELD_BITS - 1) for k in range(nvars))
        self._deg_shift = self._low_bits + FIELD_BITS * (nvars - 1)
        self._low_mask = (1 << self._low_bits) - 1
        # multiplying the exponent half by this sums prefixes into each field
        self._prefix = sum(1 << (FIELD_BITS * k) for k in range(nvars))
        self._vars = [self.monomial([1 if j == i else 0 for j in range(nvars)])
                      for i in range(nvars)]

    def __repr__(self):
        return "Ring(%d, %d, %r)" % (self.n, self.p, self.names)

    def __eq__(self, other):
        return (isinstance(other, Ring) and other.n == self.n
                and other.p == self.p and other.names == self.names)

    def __hash__(self):
        return hash((self.n, self.p, tuple(self.names)))

    # monomials -------------------------------------------------------------

    def monomial(self, exps: Sequence[int]) -> int:
        if len(exps) != self.n:
            raise ValueError("expected %d exponents, got %d" % (self.n, len(exps)))
        low = 0
        high = 0
        prefix = 0
        for k, e in enumerate(exps):
            if e < 0 or e > MAX_EXPONENT:
                raise ValueError("exponent %d out of range" % e)
            low |= e << (FIELD_BITS * k)
            prefix += e
            # prefix sum e_1..e_{k+1} lives in high field k (field n-1 is the degree)
            high |= prefix << (FIELD_BITS * k)
        return (high << self._low_bits) | low

    def exponents(self, m: int) -> tuple[int, ...]:
        return tuple((m >> (FIELD_BITS * k)) & FIELD_MASK for k in range(self.n))

    def degree(self, m: int) -> int:
        return m >> self._deg_shift

    def var(self, i: int) -> int:
        return self._vars[i]

    def divides(self, a: int, b: int) -> bool:
        return not ((b - a) & self._guard)

    def div(self, a: int, b: int) -> int | None:
        """``a / b`` if ``b`` divides ``a``, else None."""
        q = a - b
        if q & self._guard:
            return None
        return q

    def lcm(self, a: int, b: int) -> int:
        mask = self._low_mask
        la, lb = a & mask, b & mask
        # guard bit of each field survives iff a's exponent >= b's
        ge = ((la | self._guard) - lb) & self._guard
        sel = (ge >> (FIELD_BITS - 1)) * FIELD_MASK
        low = (la & sel) | (lb & ~sel & mask)
        return self._from_low(low)

    def _from_low(self, low: int) -> int:
        high = (low * self._prefix) & self._low_mask
        return (high << self._low_bits) | low

    def check_dims(self, *monos: int) -> None:
        bound = 1 << (self._low_bits + FIELD_BITS * self.n)
        for m in monos:
            if m < 0 or m >= bound:
                raise ValueError("monomial does not belong to a %d-variable ring" % self.n)

    @property
    def guard(self) -> int:
        return self._guard

    def mono_str(self, m: int) -> str:
        parts = []
        for name, e in zip(self.names, self.exponents(m)):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append("%s^%d" % (name, e))
        return "*".join(parts) if parts else "1"

    # polynomials -----------------------------------------------------------

    def poly(self, terms: Iterable[tuple[Sequence[int] | int, int]] = ()) -> "Poly":
        """Build a polynomial from ``(exponents or monomial, coefficient)`` pairs."""
        p = self.p
        d: dict[int, int] = {}
        for m, c in terms:
            if not isinstance(m, int):
                m = self.monomial(m)
            d[m] = (d.get(m, 0) + c) % p
        return Poly(self, {m: c for m, c in d.items() if c})

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return Poly(self, {0: 1})

    def gen(self, i: int) -> "Poly":
        return Poly(self, {self._vars[i]: 1})

    def const(self, c: int) -> "Poly":
        c %= self.p
        return Poly(self, {0: c} if c else {})

    def homogenized(self, name: str = "h") -> "Ring":
        while name in self.names:
            name += "_"
        return Ring(self.n + 1, self.p, self.names + [name])


def grevlex_cmp(ring: Ring, a: int, b: int) -> int:
    """-1, 0 or 1 as ``a`` is smaller than, equal to or larger than ``b``."""
    ring.check_dims(a, b)
    return (a > b) - (a < b)


def grevlex_cmp_exps(a: Sequence[int], b: Sequence[int]) -> int:
    """Grevlex comparison on explicit exponent vectors."""
    if len(a) != len(b):
        raise ValueError("monomials have different variable counts")
    da, db = sum(a), sum(b)
    if da != db:
        return 1 if da > db else -1
    for x, y in zip(reversed(a), reversed(b)):
        if x != y:
            # smaller exponent in the last differing variable wins
            return 1 if x < y else -1
    return 0


def mono_mul(a: int, b: int) -> int:
    return a + b


def mono_div(ring: Ring, a: int, b: int) -> int | None:
    return ring.div(a, b)


def mono_lcm(ring: Ring, a: int, b: int) -> int:
    return ring.lcm(a, b)


class Poly:
    """Sparse polynomial: a dict mapping packed monomials to nonzero coefficients."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: dict[int, int] | None = None):
        self.ring = ring
        self.terms = {} if terms is None else terms

    def __repr__(self):
        return "Poly(%s)" % self

    def __str__(self):
        return render_poly(self)

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def lm(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms)

    def lc(self) -> int:
        return self.terms[self.lm()]

    def monomials(self) -> list[int]:
        """Support in strictly descending grevlex order."""
        return sorted(self.terms, reverse=True)

    def items(self) -> list[tuple[int, int]]:
        return [(m, self.terms[m]) for m in self.monomials()]

    def degree(self) -> int:
        deg = self.ring.degree
        return max((deg(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        deg = self.ring.degree
        return len({deg(m) for m in self.terms}) <= 1

    def copy(self) -> "Poly":
        return Poly(self.ring, dict(self.terms))

    def __neg__(self):
        p = self.ring.p
        return Poly(self.ring, {m: p - c for m, c in self.terms.items()})

    def __add__(self, other):
        return poly_add(self, other)

    def __sub__(self, other):
        return poly_add(self, -other)

    def __mul__(self, other):
        if isinstance(other, int):
            c = other % self.ring.p
            if not c:
                return self.ring.zero()
            return Poly(self.ring, {m: v * c % self.ring.p for m, v in self.terms.items()})
        p = self.ring.p
        d: dict[int, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1 + m2
                d[m] = (d.get(m, 0) + c1 * c2) % p
        return Poly(self.ring, {m: c for m, c in d.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = self.ring.one()
        for _ in range(e):
            out = out * self
        return out

    def monic(self, counters=None) -> "Poly":
        if not self.terms:
            return self
        lc = self.lc()
        if lc == 1:
            return self
        inv = self.ring.field.inv(lc)
        p = self.ring.p
        if counters is not None:
            counters.count_mults(len(self.terms), "normalize")
        return Poly(self.ring, {m: c * inv % p for m, c in self.terms.items()})

    def validate(self) -> None:
        """Raise if the representation invariants are broken."""
        p = self.ring.p
        self.ring.check_dims(*self.terms)
        for m, c in self.terms.items():
            if not 0 < c < p:
                raise AssertionError("coefficient %r of %s not canonical nonzero"
                                     % (c, self.ring.mono_str(m)))


def poly_add(f: Poly, g: Poly) -> Poly:
    if f.ring != g.ring:
        raise ValueError("polynomials live in different rings")
    p = f.ring.p
    d = dict(f.terms)
    for m, c in g.terms.items():
        v = d.get(m)
        if v is None:
            d[m] = c
        else:
            v = (v + c) % p
            if v:
                d[m] = v
            else:
                del d[m]
    return Poly(f.ring, d)


def term_mul_poly(c: int, m: int, f: Poly, counters=None, kind: str = "other") -> Poly:
    """``c * m * f``; charges one multiplication per term of ``f``."""
    p = f.ring.p
    c %= p
    if not c:
        raise ValueError("scalar must be nonzero")
    if counters is not None:
        counters.count_mults(len(f.terms), kind)
    return Poly(f.ring, {k + m: v * c % p for k, v in f.terms.items()})


def homogenize(f: Poly, target: Ring | None = None) -> Poly:
    """Pad every term with a power of a new last variable up to ``deg(f)``."""
    ring = f.ring
    if target is None:
        target = ring.homogenized()
    if target.n != ring.n + 1:
        raise ValueError("target ring must have exactly one more variable")
    d = f.degree()
    out = {}
    for m, c in f.terms.items():
        e = ring.exponents(m)
        out[target.monomial(e + (d - ring.degree(m),))] = c
    return Poly(target, out)


def dehomogenize(f: Poly, target: Ring) -> Poly:
    """Set the last variable to 1."""
    ring = f.ring
    if target.n != ring.n - 1:
        raise ValueError("target ring must have exactly one variable fewer")
    return target.poly((ring.exponents(m)[:-1], c) for m, c in f.terms.items())


def render_poly(f: Poly) -> str:
    if not f.terms:
        return "0"
    p = f.ring.p
    half = p // 2
    out = []
    for m, c in f.items():
        neg = c > half
        a = p - c if neg else c
        ms = f.ring.mono_str(m)
        if ms == "1":
            body = str(a)
        elif a == 1:
            body = ms
        else:
            body = "%d*%s" % (a, ms)
        if not out:
            out.append("-" + body if neg else body)
        else:
            out.append(("- " if neg else "+ ") + body)
    return " ".join(out)
