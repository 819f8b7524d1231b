"""Exact solvers: the p-strong Roman domination number, plus the classical
domination and Roman domination numbers used by the sandwich bounds.

The exact engine enumerates candidate zero-sets B0 (every member must have a
neighbor outside B0, i.e. the complement dominates the graph). For a fixed
B0 the cheapest completion labels a minimum-cost set of defenders exactly at
their thresholds and every other non-zero vertex at 1, which reduces the
inner problem to weighted set cover with cost ceil(|N(v) & B0| / p).

Determinism contract: enumeration is split into fixed-size chunks processed
in a fixed order; chunk results merge under the total order
(weight, zero-set, cover). Pruning discards only strictly-worse candidates,
so the merged result is identical for any worker count.
"""

from __future__ import annotations

import itertools
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence

from .graphs import Graph, ceil_div, is_connected
from .labelings import LabelFunction, max_label

_CHUNK = 2048


@dataclass(frozen=True)
class SolverConfig:
    worker_count: int = 1
    time_limit: Optional[float] = None
    algorithm: str = "b0_enumeration"

    def __post_init__(self):
        if self.worker_count < 1:
            raise ValueError("worker_count must be >= 1")
        if self.algorithm not in ("b0_enumeration", "naive"):
            raise ValueError(f"unknown algorithm: {self.algorithm!r}")


@dataclass(frozen=True)
class SolveStats:
    subsets_examined: int
    pruned: int
    elapsed: float

    def to_dict(self, stable: bool = False) -> dict:
        return {
            "subsets_examined": self.subsets_examined,
            "pruned": self.pruned,
            "elapsed_ms": 0 if stable else round(self.elapsed * 1000.0, 3),
        }


@dataclass(frozen=True)
class SolveResult:
    value: int
    witness: LabelFunction
    optimal: bool
    stats: SolveStats


@dataclass(frozen=True)
class CoverInstance:
    """Weighted set cover: defend every element with at least one candidate.

    Candidates are (vertex, covered elements, cost) triples; cost is the
    defender's threshold minus the 1 every non-zero vertex pays anyway.
    """

    elements: frozenset[int]
    candidates: tuple[tuple[int, frozenset[int], int], ...]


def _min_cover(elements: int, cands: Sequence[tuple[int, int, int]],
               max_cost: int, p: Optional[int]) -> Optional[tuple[int, tuple[int, ...]]]:
    """Minimum-cost cover of an element bitmask, restricted to cost <= max_cost.

    Branches on the uncovered element with fewest coverers (lowest element id
    on ties), trying candidates in ascending vertex id. Returns (cost, chosen
    vertices) or None. The bound ceil(|uncovered| / p) is admissible because a
    candidate covering c elements costs ceil(c / p) >= c / p; pass p=None for
    instances without that cost guarantee.
    """
    best_cost: Optional[int] = None
    best_set: Optional[tuple[int, ...]] = None

    def dfs(remaining: int, cost: int, chosen: list[int]) -> None:
        nonlocal best_cost, best_set
        if remaining == 0:
            if cost <= max_cost and (best_cost is None or cost < best_cost):
                best_cost = cost
                best_set = tuple(chosen)
            return
        limit = max_cost if best_cost is None else min(max_cost, best_cost - 1)
        floor = ceil_div(remaining.bit_count(), p) if p is not None else 0
        if cost + floor > limit:
            return
        branch: Optional[list[tuple[int, int, int]]] = None
        r = remaining
        while r:
            bit = r & -r
            covering = [c for c in cands if c[1] & bit]
            if not covering:
                return
            if branch is None or len(covering) < len(branch):
                branch = covering
                if len(branch) == 1:
                    break
            r ^= bit
        for v, cm, c in branch:
            chosen.append(v)
            dfs(remaining & ~cm, cost + c, chosen)
            chosen.pop()

    dfs(elements, 0, [])
    if best_cost is None:
        return None
    return best_cost, best_set


def min_weight_cover(inst: CoverInstance, budget: Optional[int] = None
                     ) -> Optional[tuple[frozenset[int], int]]:
    """Minimum-cost candidate subset covering all elements, or None.

    When a budget is given, only covers of total cost strictly below it
    count; infeasible instances (an uncoverable element) return None.
    """
    order = sorted(inst.elements)
    position = {e: i for i, e in enumerate(order)}
    elements_mask = (1 << len(order)) - 1
    cands = []
    for v, covered, cost in sorted(inst.candidates):
        cm = 0
        for e in covered:
            if e in position:
                cm |= 1 << position[e]
        cands.append((v, cm, cost))
    if budget is None:
        max_cost = sum(c for _, _, c in cands)
    else:
        max_cost = budget - 1
    if max_cost < 0:
        return None
    # The admissible bound inside _min_cover assumes cost >= covered/p for
    # some p; derive the weakest valid one from the instance itself. A
    # zero-cost candidate breaks any such ratio, so it disables the bound.
    p_eff: Optional[int] = 1
    for _, cm, cost in cands:
        if cost > 0:
            p_eff = max(p_eff, ceil_div(cm.bit_count(), cost))
        elif cm:
            p_eff = None
            break
    res = _min_cover(elements_mask, cands, max_cost, p_eff)
    if res is None:
        return None
    cost, chosen = res
    return frozenset(chosen), cost


def cover_instance(g: Graph, zero_set: frozenset[int], p: int) -> CoverInstance:
    """The completion subproblem for a fixed zero-set."""
    cands = []
    for v in range(g.n):
        if v in zero_set:
            continue
        covered = g.neighbors(v) & zero_set
        if covered:
            cands.append((v, covered, ceil_div(len(covered), p)))
    return CoverInstance(frozenset(zero_set), tuple(cands))


# ---------------------------------------------------------------------------
# Exact solver
# ---------------------------------------------------------------------------

@dataclass
class _Candidate:
    weight: int
    b0: tuple[int, ...]
    cover: tuple[int, ...]
    labels: tuple[int, ...]

    def key(self) -> tuple:
        return (self.weight, self.b0, self.cover)


@dataclass
class _ChunkOutcome:
    best: Optional[_Candidate]
    examined: int
    pruned: int
    timed_out: bool = False


def _labels_for(n: int, b0_mask: int, chosen: Sequence[int],
                nbr: Sequence[int], p: int) -> tuple[int, ...]:
    labels = [0 if b0_mask >> v & 1 else 1 for v in range(n)]
    for v in chosen:
        labels[v] = 1 + ceil_div((nbr[v] & b0_mask).bit_count(), p)
    return tuple(labels)


def _process_chunk(chunk: Sequence[tuple[int, ...]], n: int, s: int, p: int,
                   closed: Sequence[int], nbr: Sequence[int], full: int,
                   start_weight: int, deadline: Optional[float]) -> _ChunkOutcome:
    """Evaluate one deterministic slice of the size-s complement enumeration.

    Pruning uses only the class-start incumbent and the chunk-local best, so
    the outcome depends on nothing but the chunk contents.
    """
    best: Optional[_Candidate] = None
    best_weight = start_weight
    examined = 0
    pruned = 0
    min_k_cost = ceil_div(n - s, p)
    for S in chunk:
        if deadline is not None and time.monotonic() > deadline:
            return _ChunkOutcome(best, examined, pruned, timed_out=True)
        examined += 1
        dominated = 0
        for v in S:
            dominated |= closed[v]
        if dominated != full:
            pruned += 1
            continue
        max_cost = best_weight - s
        if max_cost < min_k_cost:
            pruned += 1
            continue
        smask = 0
        for v in S:
            smask |= 1 << v
        b0_mask = full ^ smask
        cands = []
        for v in S:
            cm = nbr[v] & b0_mask
            if cm:
                cands.append((v, cm, ceil_div(cm.bit_count(), p)))
        res = _min_cover(b0_mask, cands, max_cost, p)
        if res is None:
            continue
        cost, chosen = res
        weight = s + cost
        if weight > best_weight:
            continue
        b0 = tuple(v for v in range(n) if b0_mask >> v & 1)
        cand = _Candidate(weight, b0, chosen,
                          _labels_for(n, b0_mask, chosen, nbr, p))
        if best is None or cand.key() < best.key():
            best = cand
            best_weight = min(best_weight, weight)
    return _ChunkOutcome(best, examined, pruned)


def _chunks(iterable, size):
    it = iter(iterable)
    while True:
        block = list(itertools.islice(it, size))
        if not block:
            return
        yield block


def solve_exact(g: Graph, p: int, cfg: Optional[SolverConfig] = None) -> SolveResult:
    """Minimum weight of a valid labeling at strength p, with an optimal witness.

    Zero-sets are enumerated by descending cardinality (complements of
    dominating sets, small complements first). A cardinality class is cut off
    once n - |B0| + ceil(|B0| / p) exceeds the incumbent, and the whole search
    stops early when a connected graph's incumbent hits the global floor
    ceil((n + p - 1) / p). On timeout the best incumbent is returned with
    optimal=False.
    """
    cfg = cfg or SolverConfig()
    if p < 1:
        raise ValueError("p must be a positive integer")
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    if cfg.algorithm == "naive":
        return solve_naive(g, p)

    start = time.perf_counter()
    deadline = time.monotonic() + cfg.time_limit if cfg.time_limit is not None else None
    n = g.n
    best = _Candidate(n, (), (), (1,) * n)
    examined = 1
    pruned = 0
    timed_out = False

    if p == 1:
        # Covering a zero vertex costs at least 1 per vertex covered, so no
        # completion beats all-ones; B0 = {} is the canonical optimum.
        pruned = (1 << n) - 1
        stats = SolveStats(examined, pruned, time.perf_counter() - start)
        return SolveResult(n, LabelFunction(best.labels), True, stats)

    full = (1 << n) - 1
    closed = [g.closed_mask(v) for v in range(n)]
    nbr = [g.neighbor_mask(v) for v in range(n)]
    global_floor = ceil_div(n + p - 1, p) if is_connected(g) else None

    executor = (ThreadPoolExecutor(max_workers=cfg.worker_count)
                if cfg.worker_count > 1 else None)
    try:
        for s in range(1, n):
            if s + ceil_div(n - s, p) > best.weight or (
                    global_floor is not None and best.weight == global_floor):
                pruned += sum(math.comb(n, t) for t in range(s, n))
                break
            chunks = _chunks(itertools.combinations(range(n), s), _CHUNK)
            args = (n, s, p, closed, nbr, full, best.weight, deadline)
            if executor is None:
                outcomes = [_process_chunk(c, *args) for c in chunks]
            else:
                futures = [executor.submit(_process_chunk, c, *args) for c in chunks]
                outcomes = [f.result() for f in futures]
            for out in outcomes:
                examined += out.examined
                pruned += out.pruned
                if out.best is not None and out.best.key() < best.key():
                    best = out.best
                if out.timed_out:
                    timed_out = True
            if timed_out:
                break
    finally:
        if executor is not None:
            executor.shutdown()

    stats = SolveStats(examined, pruned, time.perf_counter() - start)
    return SolveResult(best.weight, LabelFunction(best.labels), not timed_out, stats)


# ---------------------------------------------------------------------------
# Naive oracle
# ---------------------------------------------------------------------------

def _valid_fast(labels: Sequence[int], nbr: Sequence[int], adj: Sequence[Sequence[int]],
                p: int) -> bool:
    """Direct defense-condition check of a complete labeling."""
    zero_mask = 0
    for v, x in enumerate(labels):
        if x == 0:
            zero_mask |= 1 << v
    for v, x in enumerate(labels):
        if x != 0:
            continue
        for w in adj[v]:
            lw = labels[w]
            if lw >= 1 + ceil_div((nbr[w] & zero_mask).bit_count(), p):
                break
        else:
            return False
    return True


def solve_naive(g: Graph, p: int) -> SolveResult:
    """Exhaustive reference solver for n <= 12.

    Enumerates every labeling over {0..ceil(max_degree/p)+1} depth-first,
    pruning prefixes that cannot beat the incumbent, and checks each complete
    labeling directly against the defense condition. Entirely independent of
    the zero-set decomposition used by solve_exact.
    """
    if p < 1:
        raise ValueError("p must be a positive integer")
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    if g.n > 12:
        raise ValueError("naive enumeration is limited to n <= 12")
    start = time.perf_counter()
    n = g.n
    top = max_label(g, p)
    nbr = [g.neighbor_mask(v) for v in range(n)]
    adj = [sorted(g.neighbors(v)) for v in range(n)]

    best_weight = n
    best_labels = (1,) * n
    labels = [0] * n
    leaves = 0

    def dfs(i: int, weight: int) -> None:
        nonlocal best_weight, best_labels, leaves
        if weight >= best_weight:
            return
        if i == n:
            leaves += 1
            if _valid_fast(labels, nbr, adj, p):
                best_weight = weight
                best_labels = tuple(labels)
            return
        for x in range(top + 1):
            labels[i] = x
            dfs(i + 1, weight + x)
        labels[i] = 0

    dfs(0, 0)
    stats = SolveStats(leaves, 0, time.perf_counter() - start)
    return SolveResult(best_weight, LabelFunction(best_labels), True, stats)


# ---------------------------------------------------------------------------
# Classical numbers
# ---------------------------------------------------------------------------

def domination_number(g: Graph) -> SolveResult:
    """Exact minimum dominating set size by branch and bound.

    The witness is the indicator labeling of a minimum dominating set.
    Isolated vertices are forced into the set by the branching rule.
    """
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    start = time.perf_counter()
    n = g.n
    full = (1 << n) - 1
    closed = [g.closed_mask(v) for v in range(n)]
    per_pick = g.max_degree + 1
    best_size = n
    best_set: tuple[int, ...] = tuple(range(n))
    nodes = 0

    def dfs(dominated: int, chosen: list[int]) -> None:
        nonlocal best_size, best_set, nodes
        nodes += 1
        if dominated == full:
            if len(chosen) < best_size:
                best_size = len(chosen)
                best_set = tuple(chosen)
            return
        undominated = (full ^ dominated).bit_count()
        if len(chosen) + ceil_div(undominated, per_pick) >= best_size:
            return
        v = ((full ^ dominated) & -(full ^ dominated)).bit_length() - 1
        for w in sorted(g.neighbors(v) | {v}):
            chosen.append(w)
            dfs(dominated | closed[w], chosen)
            chosen.pop()

    dfs(0, [])
    labels = tuple(1 if v in set(best_set) else 0 for v in range(n))
    stats = SolveStats(nodes, 0, time.perf_counter() - start)
    return SolveResult(best_size, LabelFunction(labels), True, stats)


def roman_domination_number(g: Graph, cfg: Optional[SolverConfig] = None) -> SolveResult:
    """Exact Roman domination number.

    Solved as the strength-max_degree instance: at p >= max_degree every
    defender threshold collapses to 2 and the codomain bound to 2, which is
    exactly the classical Roman condition.
    """
    return solve_exact(g, max(g.max_degree, 1), cfg)
