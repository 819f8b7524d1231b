"""Defensive vertex labelings and their validation.

A labeling f assigns each vertex a nonnegative integer. Writing B0 for the
zero-labeled vertices, f defends the graph at strength p when every u in B0
has a neighbor v with f(v) >= 1 + ceil(|N(v) & B0| / p), and every label
stays within the codomain bound ceil(max_degree / p) + 1.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graphs import Graph, ceil_div


@dataclass(frozen=True)
class LabelFunction:
    """An immutable vertex labeling with its induced zero/one/strong partition."""

    labels: tuple[int, ...]

    def __post_init__(self):
        if any(x < 0 for x in self.labels):
            raise ValueError("labels must be nonnegative")

    @staticmethod
    def of(values: Iterable[int]) -> "LabelFunction":
        return LabelFunction(tuple(int(x) for x in values))

    @staticmethod
    def all_ones(n: int) -> "LabelFunction":
        return LabelFunction((1,) * n)

    @property
    def weight(self) -> int:
        return sum(self.labels)

    def zero_set(self) -> frozenset[int]:
        return frozenset(v for v, x in enumerate(self.labels) if x == 0)

    def one_set(self) -> frozenset[int]:
        return frozenset(v for v, x in enumerate(self.labels) if x == 1)

    def strong_set(self) -> frozenset[int]:
        """Vertices labeled 2 or more."""
        return frozenset(v for v, x in enumerate(self.labels) if x >= 2)

    def __len__(self) -> int:
        return len(self.labels)


def parse_labels(text: str) -> LabelFunction:
    """Parse a labels file: whitespace-separated nonnegative integers."""
    return LabelFunction.of(int(tok) for tok in text.split())


def format_labels(f: LabelFunction) -> str:
    return " ".join(str(x) for x in f.labels) + "\n"


def max_label(g: Graph, p: int) -> int:
    """Codomain bound ceil(max_degree/p) + 1 (= ceil((max_degree+p)/p))."""
    if p < 1:
        raise ValueError("p must be a positive integer")
    return ceil_div(g.max_degree, p) + 1


def defense_threshold(g: Graph, zero_set: frozenset[int] | set[int], v: int, p: int) -> int:
    """Minimum label letting v defend its zero neighbors: 1 + ceil(|N(v) & B0| / p)."""
    if p < 1:
        raise ValueError("p must be a positive integer")
    if v in zero_set:
        raise ValueError(f"vertex {v} is in the zero set and cannot defend")
    return 1 + ceil_div(len(g.neighbors(v) & frozenset(zero_set)), p)


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    weight: int
    violations: tuple[tuple[int, str], ...]
    max_label: int

    def to_dict(self) -> dict:
        return {
            "valid": self.valid,
            "weight": self.weight,
            "violations": [[v, reason] for v, reason in self.violations],
            "max_label": self.max_label,
        }


def validate_labeling(g: Graph, p: int, f: LabelFunction | Sequence[int]) -> ValidationReport:
    """Check the defense condition and codomain bound for every vertex.

    A zero-labeled vertex with no adequate neighbor is reported as
    "undefended_zero" (an isolated zero vertex is always undefended); a label
    above the codomain bound as "label_exceeds_max". The weight is reported
    either way.
    """
    if p < 1:
        raise ValueError("p must be a positive integer")
    labels = f.labels if isinstance(f, LabelFunction) else tuple(int(x) for x in f)
    if len(labels) != g.n:
        raise ValueError(f"labeling has {len(labels)} entries for a graph on {g.n} vertices")
    bound = max_label(g, p)
    zero_mask = 0
    for v, x in enumerate(labels):
        if x == 0:
            zero_mask |= 1 << v

    violations: list[tuple[int, str]] = []
    for v, x in enumerate(labels):
        if x > bound:
            violations.append((v, "label_exceeds_max"))
    for v, x in enumerate(labels):
        if x != 0:
            continue
        defended = False
        for w in g.neighbors(v):
            if labels[w] == 0:
                continue
            need = 1 + ceil_div((g.neighbor_mask(w) & zero_mask).bit_count(), p)
            if labels[w] >= need:
                defended = True
                break
        if not defended:
            violations.append((v, "undefended_zero"))
    violations.sort()
    return ValidationReport(
        valid=not violations,
        weight=sum(labels),
        violations=tuple(violations),
        max_label=bound,
    )


class Regime(enum.Enum):
    """How the defense model behaves for a given (max_degree, p) pair."""

    TRIVIAL = "trivial"            # p = 1: all-ones is optimal
    STRONG_ROMAN = "strong_roman"  # p = 2
    P_STRONG = "p_strong"          # 3 <= p <= max_degree - 1
    ROMAN = "roman"                # p >= max_degree: classical Roman domination


def classify_regime(g: Graph, p: int) -> Regime:
    if p < 1:
        raise ValueError("p must be a positive integer")
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    if p == 1:
        return Regime.TRIVIAL
    if p == 2:
        return Regime.STRONG_ROMAN
    if p >= g.max_degree:
        return Regime.ROMAN
    return Regime.P_STRONG
