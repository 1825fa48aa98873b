# -*- coding: utf-8 -*-
import logging
from heapq import heapify, heappop, heappush

from numpy import arange, asarray, bincount, flatnonzero, full, int64, ones

from geocomm._typing import Dict, Int, List, NamedTuple, Optional, Tuple
from geocomm.errors import InputError, LedgerError
from geocomm.graph import Network
from geocomm.maps import DEFAULTS
from geocomm.modularity import Partition, WeightContext, modularity
from geocomm.utils import nb_cross_null_mass, v_bool, v_int

__all__ = [
    "DeltaQLedger",
    "MergeRecord",
    "cross_penalty",
    "init_ledger",
    "merge_step",
]

logger = logging.getLogger(__name__)



class MergeRecord(NamedTuple):
    """One agglomeration step: ```j``` was absorbed into ```i```."""
    step: int
    i: int
    j: int
    delta_q: float
    q: float


def _key(a: int, b: int) -> Tuple[int, int]:
    return (a, b) if a < b else (b, a)


class DeltaQLedger:
    """Modularity gains of merging adjacent community pairs.

    Community ids are node indices: community ```v``` starts as ```{v}```
    and keeps its id while it absorbs others. For every live pair joined
    by at least one edge, ```delta(a, b)``` is the exact change of the
    variant's Q if the two were merged.

    A heap of ```(-dq, a, b, stamp)``` with ```a < b``` yields the largest
    gain; ties go to the smallest ```(a, b)```. Entries whose stamp no
    longer matches ```stamps[(a, b)]``` are stale and skipped on pop. A
    gain may also drop below its heap key without a new entry; such a key
    is an upper bound and is re-pushed with the current gain when popped.

    Null-model cross masses ```X(a, l) = sum L_vw h_v h_w``` (v in a, w in
    l) are computed for all neighbours of a merge in one kernel pass over
    the nodes, keyed on ```labels```.
    """

    def __init__(
        self, net: Network, ctx: WeightContext,
        debug: bool = None, resync_every: Int = None
    ):
        if ctx.n != net.n or ctx.m != net.m:
            raise InputError("weight context was built for a different network")
        n = net.n
        self.net, self.ctx = net, ctx
        self.debug = v_bool(debug, False)
        self.resync_every = max(v_int(resync_every, DEFAULTS["resync_every"]), 0)
        self.scale = 2.0 / ctx.norm

        self.dq: List[Dict[int, float]] = [{} for _ in range(n)]
        self.alive = ones(n, dtype=bool)
        self.labels = arange(n, dtype=int64)
        self.sizes = ones(n, dtype=int64)
        self.h_sum = ctx.h.copy()
        self._slot = full(n, -1, dtype=int64)
        self.stamps: Dict[Tuple[int, int], int] = {}
        self.heap: List[Tuple[float, int, int, int]] = []
        self.live = n
        self.step = 0
        self._version = 0

        self.q = -float((ctx.h * ctx.h).sum()) / ctx.norm
        self.q_initial = self.q
        self.drift = 0.0

        for e, (a, b) in enumerate(zip(ctx.src.tolist(), ctx.dst.tolist())):
            value = self.scale * (
                ctx.edge_weight[e] - ctx.locality[e] * ctx.h[a] * ctx.h[b]
            )
            self._set(a, b, float(value))
        logger.debug("ledger: %d communities, %d adjacent pairs, Q0=%.6g",
            n, len(self.stamps), self.q)


    def _set(self, a: int, b: int, value: float) -> None:
        self.dq[a][b] = value
        self.dq[b][a] = value
        self._version += 1
        key = _key(a, b)
        self.stamps[key] = self._version
        heappush(self.heap, (-value, key[0], key[1], self._version))

    def _drop(self, a: int, b: int) -> None:
        self.dq[a].pop(b, None)
        self.dq[b].pop(a, None)
        self.stamps.pop(_key(a, b), None)


    @property
    def pair_count(self) -> int:
        return len(self.stamps)

    def delta(self, a: int, b: int) -> float:
        """Stored gain of an adjacent live pair."""
        try:
            return self.dq[a][b]
        except KeyError:
            raise InputError(f"communities {a} and {b} are not adjacent") from None

    def partition(self) -> Partition:
        return Partition.from_labels(self.labels)


    def _cross_mass(self, a: int, others: List[int]) -> List[float]:
        """X(a, l) for each l of ```others```."""
        if self.ctx.constant_locality:
            ha = self.h_sum[a]
            return [ha * self.h_sum[l] for l in others]

        slot = self._slot
        ids = asarray(others, dtype=int64)
        slot[ids] = arange(ids.size, dtype=int64)
        node_slot = slot[self.labels]
        slot[ids] = -1
        nodes = flatnonzero(node_slot >= 0)
        per_node = nb_cross_null_mass(
            self.net.xy, self.ctx.h, flatnonzero(self.labels == a), nodes,
            self.ctx.inv_sigma, self.ctx.geodesic
        )
        masses = bincount(node_slot[nodes], weights=per_node, minlength=ids.size)
        return masses.tolist()

    def cross_penalty(self, a: int, b: int) -> float:
        """Gain of merging two live communities with no edge between them.

        Pure null-model loss, never positive.

        Raises:
            InputError: Dead or adjacent communities.
        """
        if a == b or not (self.alive[a] and self.alive[b]):
            raise InputError(f"cross penalty needs two live communities, got {a}, {b}")
        if b in self.dq[a]:
            raise InputError(f"communities {a} and {b} are adjacent; use delta()")
        lo, hi = _key(a, b)
        return -self.scale * self._cross_mass(lo, [hi])[0]


    def pop_max(self) -> Optional[Tuple[float, int, int]]:
        """Removes and returns the live ```(dq, a, b)``` with the largest
        gain, or None when no adjacent pair is left."""
        while self.heap:
            neg, a, b, version = heappop(self.heap)
            if self.stamps.get((a, b)) != version:
                continue
            current = self.dq[a][b]
            if current != -neg:
                heappush(self.heap, (-current, a, b, version))
                continue
            return current, a, b
        return None

    def _push_back(self, dq: float, a: int, b: int) -> None:
        heappush(self.heap, (-dq, a, b, self.stamps[(a, b)]))

    def merge_step(self, force: bool = False) -> Optional[MergeRecord]:
        """Merge Step

        Pops the largest gain and merges the pair, unless that gain is not
        positive (then None is returned and the ledger is unchanged).
        With ```force``` the pair is merged regardless of sign.

        The larger community survives (the smaller id on equal size).
        Every neighbour ```l``` of the merged pair gets
        ```dq(i, l) + dq(j, l)``` when adjacent to both, otherwise its one
        stored gain plus the cross penalty with the other side.
        """
        top = self.pop_max()
        if top is None:
            return None
        dq, a, b = top
        if dq <= 0.0 and not force:
            self._push_back(dq, a, b)
            return None

        size_a, size_b = self.sizes[a], self.sizes[b]
        i, j = (a, b) if size_a > size_b or (size_a == size_b and a < b) else (b, a)
        self._drop(i, j)
        di, dj = self.dq[i], self.dq[j]

        # Neighbours of i alone only lose gain, so their heap keys stay
        # upper bounds and are refreshed lazily in pop_max.
        only_i = [l for l in di if l not in dj]
        if only_i:
            for l, x in zip(only_i, self._cross_mass(j, only_i)):
                value = di[l] - self.scale * x
                di[l] = value
                self.dq[l][i] = value

        only_j = [l for l in dj if l not in di]
        pen_i = dict(zip(only_j, self._cross_mass(i, only_j))) if only_j else {}
        updates: Dict[int, float] = {
            l: di[l] + g if l in di else g - self.scale * pen_i[l]
            for l, g in dj.items()
        }

        for l in list(dj):
            self._drop(j, l)
        for l, value in updates.items():
            self._set(i, l, value)

        self.labels[self.labels == j] = i
        self.sizes[i] += self.sizes[j]
        self.sizes[j] = 0
        self.h_sum[i] += self.h_sum[j]
        self.h_sum[j] = 0.0
        self.alive[j] = False
        self.live -= 1

        self.step += 1
        self.q += dq
        if self.resync_every and self.step % self.resync_every == 0:
            self.resync()
        if self.debug:
            self.check_symmetry(i)
        if len(self.heap) > 4 * len(self.stamps) + 1024:
            self._compact()
        return MergeRecord(self.step, i, j, dq, self.q)

    def _compact(self) -> None:
        self.heap = [e for e in self.heap if self.stamps.get((e[1], e[2])) == e[3]]
        heapify(self.heap)


    def resync(self) -> float:
        """Replaces the running Q with a from-scratch evaluation.

        Raises:
            LedgerError: In debug mode, when the two differ by more than
                the drift tolerance.
        """
        exact = modularity(self.net, self.ctx, self.partition())
        self.drift = exact - self.q
        if abs(self.drift) > DEFAULTS["drift_tolerance"]:
            message = f"Q drifted by {self.drift:.3g} after {self.step} merges"
            if self.debug:
                raise LedgerError(message)
            logger.warning("[!] %s; resynchronised", message)
        else:
            logger.debug("resync at step %d: drift %.3g", self.step, self.drift)
        self.q = exact
        return exact

    def check_symmetry(self, c: int = None) -> None:
        """Raises LedgerError when ```dq(a, b) != dq(b, a)``` for a live pair
        (only pairs touching ```c``` when given)."""
        rows = [c] if c is not None else [a for a in range(self.net.n) if self.alive[a]]
        for a in rows:
            for b, value in self.dq[a].items():
                if not self.alive[b]:
                    raise LedgerError(f"entry ({a}, {b}) refers to a dead community")
                if self.dq[b].get(a) != value:
                    raise LedgerError(
                        f"asymmetric gain: dq({a},{b})={value!r}, "
                        f"dq({b},{a})={self.dq[b].get(a)!r}"
                    )


def init_ledger(
    net: Network, ctx: WeightContext, debug: bool = None, resync_every: Int = None
) -> DeltaQLedger:
    """Every node its own community, one gain per edge."""
    return DeltaQLedger(net, ctx, debug=debug, resync_every=resync_every)


def cross_penalty(ledger: DeltaQLedger, j: int, k: int) -> float:
    return ledger.cross_penalty(j, k)


def merge_step(ledger: DeltaQLedger, force: bool = False) -> Optional[MergeRecord]:
    return ledger.merge_step(force=force)
