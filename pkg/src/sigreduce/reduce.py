"""Regular s-reduction: single top/tail steps and the three strategies.

Every function takes the working basis ``G`` and a labeled polynomial and
returns a labeled polynomial with the same signature. Reducers are always
scanned in insertion order and only regular reductions are performed, i.e.
the multiplied reducer signature must be strictly smaller than the
signature being reduced.
"""

from __future__ import annotations

from .counters import Counters
from .poly import Poly, Ring
from .sig import LabeledPoly

ONLY_TOP = "only-top"
FULL = "full"
SELECTIVE_FULL = "selective-full"
STRATEGIES = (ONLY_TOP, FULL, SELECTIVE_FULL)


class InvariantViolation(AssertionError):
    pass


class Basis:
    """Insertion-ordered working basis with a lazily built divisor index.

    Images are stored monic. ``divisors(t)`` lists the positions of all
    elements whose leading monomial divides ``t``; entries are extended
    incrementally as the basis grows.
    """

    def __init__(self, ring: Ring, elements=(), counters: Counters | None = None):
        self.ring = ring
        self.elements: list[LabeledPoly] = []
        self.leads: list[int] = []
        self.sig_idx: list[int] = []
        self.sig_mono: list[int] = []
        self.terms: list[list[tuple[int, int]]] = []
        self._cache: dict[int, list] = {}
        for e in elements:
            self.append(e, counters)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def append(self, lp: LabeledPoly, counters: Counters | None = None) -> LabeledPoly:
        if not lp.poly:
            raise ValueError("basis elements must have nonzero images")
        if self.elements and lp.id <= self.elements[-1].id:
            raise ValueError("basis ids must increase with insertion")
        if lp.poly.lc() != 1:
            lp = lp.with_poly(lp.poly.monic(counters))
        self.elements.append(lp)
        self.leads.append(lp.poly.lm())
        self.sig_idx.append(lp.sig[0])
        self.sig_mono.append(lp.sig[1])
        self.terms.append(list(lp.poly.terms.items()))
        return lp

    def divisors(self, t: int) -> list[int]:
        entry = self._cache.get(t)
        if entry is None:
            entry = [[], 0]
            self._cache[t] = entry
        found, upto = entry
        n = len(self.leads)
        if upto < n:
            guard = self.ring.guard
            leads = self.leads
            for i in range(upto, n):
                if not (t - leads[i]) & guard:
                    found.append(i)
            entry[1] = n
        return found

    def leading_monomials(self) -> list[int]:
        return list(self.leads)


def _find_reducer(G: Basis, t: int, ai: int, am: int) -> int:
    """Position of the first regular reducer of monomial ``t``, or -1."""
    leads = G.leads
    sidx = G.sig_idx
    smon = G.sig_mono
    for i in G.divisors(t):
        j = sidx[i]
        if j < ai or (j == ai and t - leads[i] + smon[i] < am):
            return i
    return -1


def _apply(G: Basis, i: int, t: int, d: dict, p: int, counters: Counters | None) -> None:
    """d -= d[t] * (t / lm(G[i])) * G[i], in place."""
    m = t - G.leads[i]
    c = p - d[t]
    terms = G.terms[i]
    for k, v in terms:
        k += m
        old = d.get(k)
        if old is None:
            d[k] = c * v % p
        else:
            old = (old + c * v) % p
            if old:
                d[k] = old
            else:
                del d[k]
    if counters is not None:
        counters.s_red_steps += 1
        counters.count_mults(len(terms), "sred")


def _check_regular(G: Basis, i: int, t: int, sig, where: str) -> None:
    e = G.elements[i]
    msig = (e.sig[0], e.sig[1] + (t - G.leads[i]))
    if not msig < sig:
        raise InvariantViolation("%s step is not regular: %r >= %r" % (where, msig, sig))


def _top_loop(G: Basis, sig, d: dict, p: int, counters, validate: bool, once: bool = False) -> int:
    ai, am = sig
    steps = 0
    while d:
        t = max(d)
        i = _find_reducer(G, t, ai, am)
        if i < 0:
            break
        if validate:
            _check_regular(G, i, t, sig, "top")
        _apply(G, i, t, d, p, counters)
        steps += 1
        if validate and d and not max(d) < t:
            raise InvariantViolation("top step did not lower the leading monomial")
        if once:
            break
    return steps


def _tail_loop(G: Basis, sig, d: dict, p: int, counters, validate: bool, once: bool = False) -> int:
    ai, am = sig
    steps = 0
    if not d:
        return 0
    bound = max(d)
    while True:
        fired = False
        for t in sorted([k for k in d if k < bound], reverse=True):
            i = _find_reducer(G, t, ai, am)
            if i < 0:
                continue
            if validate:
                _check_regular(G, i, t, sig, "tail")
                above = {k: v for k, v in d.items() if k > t}
            _apply(G, i, t, d, p, counters)
            steps += 1
            if validate:
                after = {k: v for k, v in d.items() if k > t}
                if after != above:
                    raise InvariantViolation("tail step changed a monomial above the reduced one")
            bound = t
            fired = True
            break
        if not fired or once:
            return steps


def _result(alpha: LabeledPoly, d: dict, steps: int) -> LabeledPoly:
    if not steps:
        return alpha
    return alpha.with_poly(Poly(alpha.ring, d))


def top_reduce_step(G: Basis, alpha: LabeledPoly, counters=None, validate=False) -> LabeledPoly:
    """At most one regular top s-reduction; returns ``alpha`` itself if none applies."""
    if not alpha.poly:
        raise ValueError("cannot reduce a zero image")
    d = dict(alpha.poly.terms)
    steps = _top_loop(G, alpha.sig, d, alpha.ring.p, counters, validate, once=True)
    return _result(alpha, d, steps)


def tail_reduce_step(G: Basis, alpha: LabeledPoly, counters=None, validate=False) -> LabeledPoly:
    """At most one regular tail s-reduction, at the largest reducible tail monomial."""
    if not alpha.poly:
        raise ValueError("cannot reduce a zero image")
    d = dict(alpha.poly.terms)
    steps = _tail_loop(G, alpha.sig, d, alpha.ring.p, counters, validate, once=True)
    return _result(alpha, d, steps)


def only_top_reduce(G: Basis, alpha: LabeledPoly, counters=None, validate=False) -> LabeledPoly:
    d = dict(alpha.poly.terms)
    steps = _top_loop(G, alpha.sig, d, alpha.ring.p, counters, validate)
    return _result(alpha, d, steps)


def full_reduce(G: Basis, alpha: LabeledPoly, counters=None, validate=False) -> LabeledPoly:
    p = alpha.ring.p
    d = dict(alpha.poly.terms)
    steps = _top_loop(G, alpha.sig, d, p, counters, validate)
    steps += _tail_loop(G, alpha.sig, d, p, counters, validate)
    return _result(alpha, d, steps)


def sf_condition(G: Basis, alpha: LabeledPoly) -> bool:
    """True iff no leading monomial of ``G`` divides the leading monomial of ``alpha``."""
    return not G.divisors(alpha.poly.lm())


def selective_full_reduce(G: Basis, alpha: LabeledPoly, counters=None, validate=False) -> LabeledPoly:
    return reduce_by_strategy(SELECTIVE_FULL, G, alpha, counters, validate)[0]


def reduce_by_strategy(strategy: str, G: Basis, alpha: LabeledPoly, counters=None,
                       validate=False) -> tuple[LabeledPoly, bool | None]:
    """Reduce with the named strategy.

    Returns the result and the value of the SF condition right after the
    top phase (None when the image vanished there). The condition is
    evaluated for every strategy but only acted on by selective-full.
    """
    if strategy not in STRATEGIES:
        raise ValueError("unknown strategy %r" % strategy)
    p = alpha.ring.p
    d = dict(alpha.poly.terms)
    steps = _top_loop(G, alpha.sig, d, p, counters, validate)
    if not d:
        return _result(alpha, d, steps), None
    sf = not G.divisors(max(d))
    if strategy == FULL or (strategy == SELECTIVE_FULL and sf):
        steps += _tail_loop(G, alpha.sig, d, p, counters, validate)
    return _result(alpha, d, steps), sf


def is_top_reducible(G: Basis, alpha: LabeledPoly) -> bool:
    if not alpha.poly:
        return False
    return _find_reducer(G, alpha.poly.lm(), *alpha.sig) >= 0


def is_fully_reduced(G: Basis, alpha: LabeledPoly) -> bool:
    """No monomial of the image admits a regular reducer (exhaustive scan)."""
    ai, am = alpha.sig
    ring = G.ring
    for t in alpha.poly.terms:
        for e in G.elements:
            lt = e.poly.lm()
            if ring.divides(lt, t):
                ms = (e.sig[0], e.sig[1] + t - lt)
                if ms < (ai, am):
                    return False
    return True
