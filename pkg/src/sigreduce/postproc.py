"""From a signature basis to the reduced Groebner basis, plus a Buchberger oracle.

``buchberger`` and ``gb_check`` use their own division routine and share
nothing with the signature engine beyond the polynomial layer, so they
can catch reduction bugs there.
"""

from __future__ import annotations

import heapq
from typing import Iterable, Sequence

from .counters import Counters
from .poly import Poly, Ring


def minimal_positions(leads: Sequence[int], ring: Ring) -> list[int]:
    """Positions that survive minimalization; equal leads keep the earliest."""
    keep = []
    for i, a in enumerate(leads):
        for j, b in enumerate(leads):
            if j != i and ring.divides(b, a) and (b != a or j < i):
                break
        else:
            keep.append(i)
    return keep


def minimalize(G: Iterable) -> list[Poly]:
    """Drop elements whose leading monomial is divisible by another's.

    Accepts polynomials or labeled polynomials (anything with ``.poly``).
    """
    polys = [g.poly if hasattr(g, "poly") else g for g in G]
    if not polys:
        return []
    if any(not f for f in polys):
        raise ValueError("cannot minimalize a zero polynomial")
    ring = polys[0].ring
    return [polys[i] for i in minimal_positions([f.lm() for f in polys], ring)]


def usual_reduce(f: Poly, G: Sequence[Poly], counters: Counters | None = None) -> Poly:
    """Full normal form of ``f`` modulo ``G``.

    The largest reducible monomial is eliminated first, using the first
    divisor in sequence order; each elimination is one usual reduction.
    """
    ring = f.ring
    p = ring.p
    guard = ring.guard
    red = []
    for g in G:
        if not g:
            continue
        g = g.monic(counters)
        red.append((g.lm(), list(g.terms.items())))
    d = dict(f.terms)
    if not d or not red:
        return f
    bound = max(d) + 1
    steps = 0
    while True:
        fired = False
        for t in sorted([k for k in d if k < bound], reverse=True):
            for lm, terms in red:
                if not (t - lm) & guard:
                    break
            else:
                continue
            m = t - lm
            c = p - d[t]
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
            steps += 1
            if counters is not None:
                counters.usual_red_steps += 1
                counters.count_mults(len(terms), "usual")
            bound = t
            fired = True
            break
        if not fired:
            break
    return Poly(ring, d) if steps else f


def interreduce(polys: Sequence[Poly], counters: Counters | None = None) -> list[Poly]:
    """Reduced Groebner basis from a minimal one.

    Elements are visited in descending leading-monomial order and each is
    replaced by its monic normal form modulo all the others.
    """
    work = sorted(polys, key=lambda f: f.lm(), reverse=True)
    for i in range(len(work)):
        others = work[:i] + work[i + 1:]
        work[i] = usual_reduce(work[i], others, counters).monic(counters)
    return work


def reduced_basis(G: Iterable, counters: Counters | None = None) -> list[Poly]:
    return interreduce(minimalize(G), counters)


def gb_key(polys: Iterable[Poly]) -> frozenset:
    """Hashable, order-free identity of a polynomial set."""
    return frozenset(frozenset(f.terms.items()) for f in polys)


def same_basis(a: Iterable[Poly], b: Iterable[Poly]) -> bool:
    return gb_key(a) == gb_key(b)


# ---------------------------------------------------------------------------
# Buchberger oracle


def _spoly(f: Poly, g: Poly) -> Poly:
    ring = f.ring
    p = ring.p
    lf, lg = f.lm(), g.lm()
    lam = ring.lcm(lf, lg)
    cf, cg = f.terms[lf], g.terms[lg]
    a = ring.field.inv(cf)
    b = ring.field.inv(cg)
    out: dict[int, int] = {}
    for m, c in f.terms.items():
        out[m + lam - lf] = c * a % p
    for m, c in g.terms.items():
        k = m + lam - lg
        out[k] = (out.get(k, 0) - c * b) % p
    return Poly(ring, {m: c for m, c in out.items() if c})


def _divide(f: Poly, G: Sequence[Poly]) -> Poly:
    """Textbook multivariate division; returns the remainder.

    Pending monomials sit in a max-heap; entries whose term has since
    cancelled are skipped when popped.
    """
    ring = f.ring
    p = ring.p
    guard = ring.guard
    divs = []
    for g in G:
        if g:
            lm = g.lm()
            tail = [(m, c) for m, c in g.terms.items() if m != lm]
            divs.append((lm, ring.field.inv(g.terms[lm]), tail))
    rest = dict(f.terms)
    heap = [-m for m in rest]
    heapq.heapify(heap)
    rem: dict[int, int] = {}
    while heap:
        t = -heapq.heappop(heap)
        c = rest.pop(t, None)
        if c is None:
            continue
        for lm, inv, tail in divs:
            q = t - lm
            if q & guard:
                continue
            s = c * inv % p
            for m, v in tail:
                k = m + q
                old = rest.get(k)
                if old is None:
                    rest[k] = -s * v % p
                    heapq.heappush(heap, -k)
                else:
                    nv = (old - s * v) % p
                    if nv:
                        rest[k] = nv
                    else:
                        del rest[k]
            break
        else:
            rem[t] = c
    return Poly(ring, rem)


def buchberger(F: Sequence[Poly]) -> list[Poly]:
    """Reduced Groebner basis by Buchberger's algorithm.

    Pairs are chosen by smallest lcm (normal strategy) and pruned with the
    coprime-leads and chain criteria.
    """
    G = [f.monic() for f in F if f]
    if not G:
        return []
    ring = G[0].ring
    leads = [g.lm() for g in G]
    pairs: set[tuple[int, int]] = set()
    heap: list = []

    def add_pairs(n):
        for k in range(n):
            pairs.add((k, n))
            heapq.heappush(heap, (ring.lcm(leads[k], leads[n]), k, n))

    for n in range(1, len(G)):
        add_pairs(n)
    while heap:
        lam, i, j = heapq.heappop(heap)
        if (i, j) not in pairs:
            continue
        pairs.discard((i, j))
        if lam == leads[i] + leads[j]:
            continue
        chained = False
        for k in range(len(G)):
            if k == i or k == j or not ring.divides(leads[k], lam):
                continue
            if (min(i, k), max(i, k)) not in pairs and (min(j, k), max(j, k)) not in pairs:
                chained = True
                break
        if chained:
            continue
        r = _divide(_spoly(G[i], G[j]), G)
        if r:
            G.append(r.monic())
            leads.append(G[-1].lm())
            add_pairs(len(G) - 1)
    # minimalize then interreduce, with this module's own division
    leads = [g.lm() for g in G]
    keep = []
    for i, a in enumerate(leads):
        if any(j != i and ring.divides(b, a) and (b != a or j < i) for j, b in enumerate(leads)):
            continue
        keep.append(G[i])
    out = []
    for i, g in enumerate(keep):
        lm = g.lm()
        tail = Poly(ring, {m: c for m, c in g.terms.items() if m != lm})
        r = _divide(tail, keep[:i] + keep[i + 1:])
        r.terms[lm] = g.terms[lm]
        out.append(r.monic())
    return sorted(out, key=lambda f: f.lm(), reverse=True)


def gb_check(G: Sequence[Poly]) -> bool:
    """True iff every S-polynomial of ``G`` divides to zero modulo ``G``.

    Pairs are visited by increasing lcm. A pair is not divided when its
    leads are coprime, or when some third lead divides its lcm and both
    pairs through that element were already verified: in both cases the
    S-polynomial is known to have a standard representation.
    """
    G = [g for g in G if g]
    if not G:
        return True
    ring = G[0].ring
    leads = [g.lm() for g in G]
    order = sorted((ring.lcm(leads[i], leads[j]), i, j)
                   for j in range(len(G)) for i in range(j))
    done: set[tuple[int, int]] = set()
    for lam, i, j in order:
        if lam == leads[i] + leads[j]:
            done.add((i, j))
            continue
        for k in range(len(G)):
            if (k != i and k != j and ring.divides(leads[k], lam)
                    and (min(i, k), max(i, k)) in done and (min(j, k), max(j, k)) in done):
                break
        else:
            if _divide(_spoly(G[i], G[j]), G):
                return False
        done.add((i, j))
    return True
