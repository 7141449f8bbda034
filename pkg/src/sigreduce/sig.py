"""Signatures, labeled polynomials and S-pairs.

A module term ``a*e_i`` is the tuple ``(i, a)`` with ``a`` a packed
monomial. Since packed monomials compare in grevlex, tuple comparison is
exactly the position-over-term order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .poly import Poly, Ring

INPUT = "input"
SPAIR = "spair"

ModuleTerm = tuple  # (index, monomial)


def pot_cmp(s: ModuleTerm, t: ModuleTerm) -> int:
    return (s > t) - (s < t)


def sig_mul(b: int, s: ModuleTerm) -> ModuleTerm:
    return (s[0], s[1] + b)


def sig_divides(s: ModuleTerm, t: ModuleTerm, ring: Ring) -> bool:
    return s[0] == t[0] and ring.divides(s[1], t[1])


def sig_str(ring: Ring, s: ModuleTerm) -> str:
    return "%s*e%d" % (ring.mono_str(s[1]), s[0])


class LabeledPoly:
    """A signature together with the image polynomial it labels.

    Only the leading module term is tracked; the cofactor vector is never
    needed by the reductions. ``sf`` records whether the selective-full
    condition held when the element was created (None when not evaluated).
    """

    __slots__ = ("sig", "poly", "id", "origin", "sf")

    def __init__(self, sig: ModuleTerm, poly: Poly, id: int = -1,
                 origin: str = SPAIR, sf: bool | None = None):
        self.sig = sig
        self.poly = poly
        self.id = id
        self.origin = origin
        self.sf = sf

    def __repr__(self):
        return "LabeledPoly(%s, %s, id=%d)" % (sig_str(self.poly.ring, self.sig),
                                             self.poly, self.id)

    @property
    def ring(self) -> Ring:
        return self.poly.ring

    def lm(self) -> int:
        return self.poly.lm()

    def with_poly(self, poly: Poly) -> "LabeledPoly":
        return LabeledPoly(self.sig, poly, self.id, self.origin, self.sf)


@dataclass(slots=True)
class SPair:
    """``u*left - v*right`` where ``u*sig(left)`` is the larger signature."""

    lcm: int
    u: int
    left: LabeledPoly
    v: int
    right: LabeledPoly
    sig: ModuleTerm
    degree: int
    id: int = 0

    def sort_key(self):
        return (self.sig, self.degree, self.id)


def make_spair(a: LabeledPoly, b: LabeledPoly, id: int = 0) -> SPair | None:
    """Build the S-pair of ``a`` and ``b``; None when the pair is singular."""
    if not a.poly or not b.poly:
        raise ValueError("S-pair of a zero image")
    ring = a.ring
    la, lb = a.poly.lm(), b.poly.lm()
    lam = ring.lcm(la, lb)
    ua, ub = lam - la, lam - lb
    sa = (a.sig[0], a.sig[1] + ua)
    sb = (b.sig[0], b.sig[1] + ub)
    if sa == sb:
        return None
    if sa > sb:
        return SPair(lam, ua, a, ub, b, sa, ring.degree(lam), id)
    return SPair(lam, ub, b, ua, a, sb, ring.degree(lam), id)


def evaluate_spair(pair: SPair, counters=None) -> LabeledPoly:
    """Image ``c_r*u*left - c_l*v*right`` with the two lead terms cancelling.

    The scale factors are the leading coefficients of the opposite parent;
    a side whose factor is 1 costs no multiplications.
    """
    f, g = pair.left.poly, pair.right.poly
    ring = f.ring
    p = ring.p
    cf, cg = g.lc(), f.lc()
    u, v = pair.u, pair.v
    mults = 0
    if cf == 1:
        d = {m + u: c for m, c in f.terms.items()}
    else:
        d = {m + u: c * cf % p for m, c in f.terms.items()}
        mults += len(f.terms)
    if cg != 1:
        mults += len(g.terms)
    for m, c in g.terms.items():
        k = m + v
        c = p - (c * cg % p if cg != 1 else c)
        old = d.get(k)
        if old is None:
            d[k] = c
        else:
            old = (old + c) % p
            if old:
                d[k] = old
            else:
                del d[k]
    if counters is not None and mults:
        counters.count_mults(mults, "spair")
    return LabeledPoly(pair.sig, Poly(ring, d), origin=SPAIR)
