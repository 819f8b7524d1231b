"""Closed-form exact values for special graph families, plus the
characterization of graphs whose optimum is 3 or 4."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .graphs import Graph, ceil_div


@dataclass(frozen=True)
class FamilyValue:
    family: str
    parameters: tuple[int, ...]
    p: int
    value: Optional[int]
    applicable: bool
    reason: str

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "parameters": list(self.parameters),
            "p": self.p,
            "value": self.value,
            "applicable": self.applicable,
            "reason": self.reason,
        }


def complete_bipartite_value(r: int, s: int, p: int) -> FamilyValue:
    """Exact optimum on K_{r,s} for 2 <= r <= s, s >= 4, 3 <= p <= s - 1.

    2 + ceil(s/p) when r = 2 (one defender per class plus a spare unit);
    ceil((r+p-1)/p) + ceil((s+p-1)/p) when r >= 3 (one defender per class).
    """
    def out(reason: str) -> FamilyValue:
        return FamilyValue("complete_bipartite", (r, s), p, None, False, reason)

    if not 2 <= r <= s:
        return out(f"requires 2 <= r <= s, got r={r}, s={s}")
    if s < 4:
        return out(f"requires s >= 4, got s={s}")
    if not 3 <= p <= s - 1:
        return out(f"requires 3 <= p <= s - 1 = {s - 1}, got p={p}")
    if r == 2:
        value = 2 + ceil_div(s, p)
    else:
        value = ceil_div(r + p - 1, p) + ceil_div(s + p - 1, p)
    return FamilyValue("complete_bipartite", (r, s), p, value, True, "applicable")


def double_star_value(r: int, s: int, p: int) -> FamilyValue:
    """Exact optimum 2 + ceil(r/p) + ceil(s/p) on the double star with r and s
    leaves, for 1 <= r <= s, s >= 3 and 3 <= p <= s."""
    def out(reason: str) -> FamilyValue:
        return FamilyValue("double_star", (r, s), p, None, False, reason)

    if not 1 <= r <= s:
        return out(f"requires 1 <= r <= s, got r={r}, s={s}")
    delta = s + 1
    if delta < 4:
        return out(f"requires max degree s + 1 >= 4, got {delta}")
    if not 3 <= p <= s:
        return out(f"requires 3 <= p <= s = {s}, got p={p}")
    return FamilyValue("double_star", (r, s), p,
                       2 + ceil_div(r, p) + ceil_div(s, p), True, "applicable")


def universal_vertex_value(n: int, p: int) -> FamilyValue:
    """Exact optimum ceil((n + p - 1)/p) for any graph with a universal vertex,
    for 3 <= p <= n - 2. Also computed as n - floor((p-1)(n-1)/p); the two
    expressions agree identically."""
    def out(reason: str) -> FamilyValue:
        return FamilyValue("universal", (n,), p, None, False, reason)

    if n < 2:
        return out(f"requires n >= 2, got n={n}")
    if not 3 <= p <= n - 2:
        return out(f"requires 3 <= p <= n - 2 = {n - 2}, got p={p}")
    value = ceil_div(n + p - 1, p)
    alternate = n - ((p - 1) * (n - 1)) // p
    assert value == alternate, (value, alternate)
    return FamilyValue("universal", (n,), p, value, True, "applicable")


class SmallValue(enum.Enum):
    THREE = "three"
    FOUR_CASE1 = "four_case1"  # universal vertex, order in [2p+2, 3p+1]
    FOUR_CASE2 = "four_case2"  # two nonadjacent vertices adjacent to all others
    FOUR_CASE3 = "four_case3"  # a vertex adjacent to all but one, order in [p+3, 2p+2]
    OTHER = "other"


def classify_small_value(g: Graph, p: int) -> SmallValue:
    """Decide structurally whether the optimum is 3, 4, or something else.

    Requires max_degree >= 4 and 3 <= p <= max_degree - 1. The optimum is 3
    exactly for universal-vertex graphs with p + 2 <= n <= 2p + 1, and 4 in
    three situations: a universal vertex with 2p + 2 <= n <= 3p + 1; two
    nonadjacent vertices each adjacent to all remaining n - 2 vertices, with
    4 <= n <= 2p + 2; or max_degree = n - 2 with p + 3 <= n <= 2p + 2.

    THREE and the FOUR cases are always sound, and the trichotomy is complete
    when max_degree >= n - 2. Sparser graphs can still have optimum 4 by
    splitting the zero set between two strong vertices (the double star with
    three leaves a side is the smallest example), so for them OTHER only
    certifies that the optimum is not 3.
    """
    n = g.n
    delta = g.max_degree
    if delta < 4 or not 3 <= p <= delta - 1:
        raise ValueError(
            f"requires max_degree >= 4 and 3 <= p <= max_degree - 1 "
            f"(max_degree={delta}, p={p})")
    if delta == n - 1 and p + 2 <= n <= 2 * p + 1:
        return SmallValue.THREE
    if delta == n - 1 and 2 * p + 2 <= n <= 3 * p + 1:
        return SmallValue.FOUR_CASE1
    if delta == n - 2 and 4 <= n <= 2 * p + 2:
        hubs = [v for v in range(n) if g.degree(v) == n - 2]
        for i, u in enumerate(hubs):
            for v in hubs[i + 1:]:
                if not g.has_edge(u, v):
                    return SmallValue.FOUR_CASE2
    if delta == n - 2 and p + 3 <= n <= 2 * p + 2:
        return SmallValue.FOUR_CASE3
    return SmallValue.OTHER
