"""Randomized labeling construction and a deterministic tightening pass.

Each trial draws a vertex set A by independent coin flips, labels A at the
codomain maximum, the rest of N[A] at zero and everything else at one. That
labeling is valid for any inclusion probability because the codomain maximum
dominates every possible threshold.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .bounds import upper_bound_probabilistic
from .graphs import Graph, ceil_div
from .labelings import LabelFunction, defense_threshold, validate_labeling

_TRIAL_STRIDE = 1_000_003  # distinct stream per (seed, trial), schedule-free


@dataclass(frozen=True)
class TrialStats:
    xi: float
    trials: int
    weights: tuple[int, ...]
    best: LabelFunction
    mean_weight: Fraction
    seed: int

    def to_dict(self) -> dict:
        return {
            "xi": self.xi,
            "trials": self.trials,
            "weights": list(self.weights),
            "best_weight": self.best.weight,
            "best_labels": list(self.best.labels),
            "mean_weight": float(self.mean_weight),
            "seed": self.seed,
        }


def _one_trial(g: Graph, top: int, xi: float, seed: int, trial: int) -> tuple[int, ...]:
    rng = random.Random(seed * _TRIAL_STRIDE + trial)
    n = g.n
    in_a = [rng.random() < xi for _ in range(n)]
    labels = [0] * n
    for v in range(n):
        if in_a[v]:
            labels[v] = top
        elif any(in_a[w] for w in g.neighbors(v)):
            labels[v] = 0
        else:
            labels[v] = 1
    return tuple(labels)


def randomized_construction(g: Graph, p: int, trials: int, seed: int,
                            xi: Optional[float] = None) -> TrialStats:
    """Run seeded random-set trials and keep the best labeling found.

    Without an explicit xi the optimal inclusion probability from the
    probabilistic upper bound is used, which requires
    ceil(max_degree/p) < min_degree. Trial t of a given seed is reproducible
    in isolation, so execution order and parallel scheduling cannot change
    the outcome.
    """
    if trials < 1:
        raise ValueError("need at least one trial")
    if xi is None:
        _, xi_star, reason = upper_bound_probabilistic(g, p)
        if xi_star is None:
            raise ValueError(f"no default inclusion probability: {reason}; pass xi explicitly")
        xi = xi_star
    if not 0.0 <= xi <= 1.0:
        raise ValueError("xi must lie in [0, 1]")
    top = ceil_div(g.max_degree, p) + 1
    weights = []
    best_labels: Optional[tuple[int, ...]] = None
    for t in range(trials):
        labels = _one_trial(g, top, xi, seed, t)
        w = sum(labels)
        weights.append(w)
        if best_labels is None or w < sum(best_labels):
            best_labels = labels
    return TrialStats(
        xi=xi,
        trials=trials,
        weights=tuple(weights),
        best=LabelFunction(best_labels),
        mean_weight=Fraction(sum(weights), trials),
        seed=seed,
    )


def tighten(g: Graph, p: int, f: LabelFunction) -> LabelFunction:
    """Lower strong labels to the least value that still defends their zeros.

    Each zero vertex is assigned its lowest-id adequate neighbor; assigned
    defenders drop to their exact threshold, every other non-zero vertex
    drops to 1. The zero set is unchanged, the result is valid, never
    heavier, and tightening twice changes nothing.
    """
    report = validate_labeling(g, p, f)
    if not report.valid:
        raise ValueError("tighten requires a valid labeling")
    zeros = f.zero_set()
    needed: set[int] = set()
    for u in sorted(zeros):
        defender = None
        for w in sorted(g.neighbors(u)):
            if w in zeros:
                continue
            if f.labels[w] >= defense_threshold(g, zeros, w, p):
                defender = w
                break
        needed.add(defender)
    labels = []
    for v in range(g.n):
        if v in zeros:
            labels.append(0)
        elif v in needed:
            labels.append(max(1, defense_threshold(g, zeros, v, p)))
        else:
            labels.append(1)
    return LabelFunction(tuple(labels))
