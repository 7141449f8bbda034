"""Incremental signature Groebner basis driver (F5-style, POT order).

Generators are added one at a time. Each increment starts from the
reduced Groebner basis of the previous generators, renumbered as module
basis vectors ``e_1..e_r``, and a new generator labeled ``e_{r+1}``. Pairs
are processed by increasing signature and filtered by the syzygy
criterion (Koszul seeds plus signatures of zero reductions) and a rewrite
criterion under the ADD or RAT order.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .counters import Counters
from .poly import Poly, Ring
from .postproc import interreduce, minimal_positions
from .reduce import STRATEGIES, Basis, InvariantViolation, reduce_by_strategy
from .sig import INPUT, LabeledPoly, ModuleTerm, SPair, evaluate_spair, make_spair

ADD = "add"
RAT = "rat"
REWRITE_ORDERS = (ADD, RAT)


@dataclass
class EngineConfig:
    strategy: str = "selective-full"
    rewrite: str = ADD
    validate: bool = False

    def __post_init__(self):
        self.strategy = self.strategy.lower()
        self.rewrite = self.rewrite.lower()
        if self.strategy not in STRATEGIES:
            raise ValueError("strategy must be one of %s, got %r" % (", ".join(STRATEGIES), self.strategy))
        if self.rewrite not in REWRITE_ORDERS:
            raise ValueError("rewrite order must be 'add' or 'rat', got %r" % self.rewrite)


class SyzygySet:
    """Known syzygy signatures, grouped by module index."""

    def __init__(self, ring: Ring):
        self.ring = ring
        self._by_index: dict[int, list[int]] = {}

    def __len__(self):
        return sum(len(v) for v in self._by_index.values())

    def __iter__(self):
        for i, monos in sorted(self._by_index.items()):
            for m in monos:
                yield (i, m)

    def add(self, s: ModuleTerm) -> None:
        self._by_index.setdefault(s[0], []).append(s[1])

    def clear(self) -> None:
        self._by_index.clear()


def syzygy_criterion(S: SyzygySet, s: ModuleTerm) -> bool:
    guard = S.ring.guard
    m = s[1]
    for a in S._by_index.get(s[0], ()):
        if not (m - a) & guard:
            return True
    return False


def rewritable(pair: SPair, G: Basis, order: str = ADD) -> bool:
    """True when the signature-maximal half of ``pair`` has a preferred rewriter.

    The rewriter candidates are the elements of ``G`` whose signature
    divides the pair signature. ADD prefers the newest; RAT prefers the
    largest signature/lead ratio, newest on ties.
    """
    alpha = pair.left
    ai, T = pair.sig
    guard = G.ring.guard
    a_id = alpha.id
    if order == ADD:
        for k in range(len(G) - 1, -1, -1):
            e = G.elements[k]
            if e.id <= a_id:
                return False
            if G.sig_idx[k] == ai and not (T - G.sig_mono[k]) & guard:
                return True
        return False
    a_lm = alpha.poly.lm()
    for k in range(len(G)):
        if G.sig_idx[k] != ai or (T - G.sig_mono[k]) & guard:
            continue
        e = G.elements[k]
        if e.id == a_id:
            continue
        # ratio of e beats ratio of alpha: sig(e)*lm(alpha) > sig(alpha)*lm(e)
        lhs = G.sig_mono[k] + a_lm
        rhs = alpha.sig[1] + G.leads[k]
        if lhs > rhs or (lhs == rhs and e.id > a_id):
            return True
    return False


@dataclass
class SFStats:
    sf: int = 0
    not_sf: int = 0


@dataclass
class RunResult:
    basis: Basis
    syzygies: SyzygySet
    counters: Counters
    sf_stats: SFStats
    sgb_counters: Counters
    reduced: list[Poly]
    minimal: list[LabeledPoly]
    pairs_processed: int = 0
    pairs_discarded: int = 0
    increments: int = 0
    sgb_size: int = 0


@dataclass
class _State:
    cfg: EngineConfig
    counters: Counters
    sf: SFStats
    next_id: int = 0
    next_pair: int = 0
    processed: int = 0
    discarded: int = 0
    observer: Callable | None = None
    extra: dict = field(default_factory=dict)


def _insert(state: _State, G: Basis, lp: LabeledPoly, queue: list) -> LabeledPoly:
    lp.id = state.next_id
    state.next_id += 1
    lp = G.append(lp, state.counters)
    for other in G.elements[:-1]:
        pair = make_spair(lp, other, state.next_pair)
        state.next_pair += 1
        if pair is not None:
            heapq.heappush(queue, (pair.sig, pair.degree, pair.id, pair))
    return lp


def _reduce(cfg: EngineConfig, G: Basis, alpha: LabeledPoly, counters: Counters):
    out, sf = reduce_by_strategy(cfg.strategy, G, alpha, counters, cfg.validate)
    if cfg.validate and out.sig != alpha.sig:
        raise InvariantViolation("reduction changed the signature %r to %r" % (alpha.sig, out.sig))
    return out, sf


def _increment(state: _State, prev: Sequence[Poly], f: Poly) -> tuple[Basis, SyzygySet]:
    """One incremental step: signature basis of ``prev`` plus ``f``."""
    ring = f.ring
    cfg = state.cfg
    counters = state.counters
    G = Basis(ring)
    S = SyzygySet(ring)
    queue: list = []
    r = len(prev)
    new_index = r + 1
    for j, g in enumerate(prev):
        lp = LabeledPoly((j + 1, 0), g, origin=INPUT)
        lp.id = state.next_id
        state.next_id += 1
        G.append(lp, counters)
        # Koszul syzygy f*e_j - g_j*e_{r+1}
        S.add((new_index, g.lm()))
    # the new generator is reduced like any other element of this index
    alpha = LabeledPoly((new_index, 0), f, origin=INPUT)
    if state.observer is not None:
        state.observer(G, alpha, None)
    alpha, sf = _reduce(cfg, G, alpha, counters)
    alpha.sf = sf
    if not alpha.poly:
        S.add(alpha.sig)
        return G, S
    _insert(state, G, alpha, queue)
    while queue:
        _, _, _, pair = heapq.heappop(queue)
        if syzygy_criterion(S, pair.sig) or rewritable(pair, G, cfg.rewrite):
            state.discarded += 1
            continue
        state.processed += 1
        alpha = evaluate_spair(pair, counters)
        if not alpha.poly:
            S.add(alpha.sig)
            continue
        if state.observer is not None:
            state.observer(G, alpha, pair)
        alpha, sf = _reduce(cfg, G, alpha, counters)
        if sf is not None:
            if sf:
                state.sf.sf += 1
            else:
                state.sf.not_sf += 1
        if not alpha.poly:
            S.add(alpha.sig)
            continue
        alpha.sf = sf
        _insert(state, G, alpha, queue)
    return G, S


def incremental_sig_gb(F: Sequence[Poly], cfg: EngineConfig | None = None,
                       observer: Callable | None = None) -> RunResult:
    """Run the incremental signature algorithm and reduce the final basis.

    ``observer(G, alpha, pair)`` is called just before each reduction with
    the current basis and the unreduced element (``pair`` is None for a
    generator); it must not mutate its arguments.
    """
    if cfg is None:
        cfg = EngineConfig()
    F = list(F)
    if not F:
        raise ValueError("need at least one generator")
    for f in F:
        if not isinstance(f, Poly):
            raise TypeError("generators must be Poly instances")
        if not f:
            raise ValueError("zero polynomial among the generators")
    ring = F[0].ring
    if any(f.ring != ring for f in F):
        raise ValueError("generators live in different rings")
    counters = Counters()
    state = _State(cfg, counters, SFStats(), observer=observer)
    prev: list[Poly] = []
    G = S = None
    for i, f in enumerate(F):
        G, S = _increment(state, prev, f)
        if i < len(F) - 1:
            prev = _reseed(G, counters)
    sgb_counters = counters.snapshot()
    keep = minimal_positions(G.leads, ring)
    minimal = [G.elements[k] for k in keep]
    reduced = interreduce([e.poly for e in minimal], counters)
    return RunResult(
        basis=G, syzygies=S, counters=counters, sf_stats=state.sf,
        sgb_counters=sgb_counters, reduced=reduced, minimal=minimal,
        pairs_processed=state.processed, pairs_discarded=state.discarded,
        increments=len(F), sgb_size=len(G),
    )


def _reseed(G: Basis, counters: Counters) -> list[Poly]:
    """Reduced GB of the current basis, ascending by leading monomial."""
    keep = minimal_positions(G.leads, G.ring)
    red = interreduce([G.elements[k].poly for k in keep], counters)
    return sorted(red, key=lambda f: f.lm())


def sf_stats(result: RunResult) -> tuple[int, int]:
    return result.sf_stats.sf, result.sf_stats.not_sf
