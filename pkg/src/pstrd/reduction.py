"""Exact-cover-by-3-sets instances and their translation into hard labeling
instances.

An instance over 3q elements and t triples becomes a graph on 3q + t(2p+1)
vertices: element vertices, one clause vertex per triple (adjacent to its
three elements), and per clause a star gadget whose center hangs the clause
vertex plus 2p-1 extra leaves. The instance has an exact cover iff the graph
admits a valid labeling of weight at most 2q + 3t. The chordal variant adds
all edges between clause vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graphs import Graph
from .labelings import LabelFunction, validate_labeling
from .solver import SolverConfig, solve_exact


class X3CFormatError(ValueError):
    """Raised for malformed exact-cover instance input."""


@dataclass(frozen=True)
class X3CInstance:
    """|X| = 3q elements named 1..3q; clauses are triples of distinct elements."""

    q: int
    clauses: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        if self.q < 1:
            raise X3CFormatError("q must be >= 1")
        if len(self.clauses) < 1:
            raise X3CFormatError("need at least one clause")
        top = 3 * self.q
        for idx, clause in enumerate(self.clauses):
            if len(clause) != 3 or len(set(clause)) != 3:
                raise X3CFormatError(f"clause {idx} must hold 3 distinct elements: {clause}")
            for e in clause:
                if not 1 <= e <= top:
                    raise X3CFormatError(f"clause {idx} element {e} outside 1..{top}")

    @property
    def t(self) -> int:
        return len(self.clauses)


def parse_x3c(text: str) -> X3CInstance:
    """Parse "q t" then t lines of 3 integers; '#' starts a comment."""
    lines = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        lines.append(line)
    if not lines:
        raise X3CFormatError("empty instance")
    header = lines[0].split()
    if len(header) != 2:
        raise X3CFormatError(f"malformed header: {lines[0]!r}")
    q, t = int(header[0]), int(header[1])
    if len(lines) - 1 != t:
        raise X3CFormatError(f"header declares {t} clauses, found {len(lines) - 1}")
    clauses = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 3:
            raise X3CFormatError(f"malformed clause line: {line!r}")
        clauses.append(tuple(int(x) for x in parts))
    return X3CInstance(q, tuple(clauses))


def format_x3c(inst: X3CInstance) -> str:
    lines = [f"{inst.q} {inst.t}"]
    lines.extend(" ".join(str(e) for e in clause) for clause in inst.clauses)
    return "\n".join(lines) + "\n"


def x3c_has_exact_cover(inst: X3CInstance) -> Optional[list[int]]:
    """Backtracking search for q disjoint clauses covering every element.

    Branches on the lowest uncovered element, trying clauses in index order;
    returns the canonical first cover as 0-based clause indices, or None.
    """
    if inst.t > 25:
        raise ValueError("exact-cover search limited to t <= 25 clauses")
    universe = frozenset(range(1, 3 * inst.q + 1))
    by_element: dict[int, list[int]] = {e: [] for e in universe}
    for j, clause in enumerate(inst.clauses):
        for e in clause:
            by_element[e].append(j)

    chosen: list[int] = []

    def dfs(covered: frozenset[int]) -> bool:
        if covered == universe:
            return True
        e = min(universe - covered)
        for j in by_element[e]:
            clause = set(inst.clauses[j])
            if clause & covered:
                continue
            chosen.append(j)
            if dfs(covered | clause):
                return True
            chosen.pop()
        return False

    if dfs(frozenset()):
        return chosen
    return None


@dataclass(frozen=True)
class ReductionResult:
    graph: Graph
    roles: tuple[str, ...]
    r_threshold: int
    variant: str
    q: int
    t: int
    p: int

    def clause_vertex(self, j: int) -> int:
        return 3 * self.q + j * (2 * self.p + 1)

    def center_vertex(self, j: int) -> int:
        return self.clause_vertex(j) + 1

    def leaf_vertex(self, j: int, l: int) -> int:
        if not 1 <= l <= 2 * self.p - 1:
            raise ValueError(f"leaf index {l} outside 1..{2 * self.p - 1}")
        return self.center_vertex(j) + l


def build_reduction(inst: X3CInstance, p: int, variant: str = "bipartite") -> ReductionResult:
    """Construct the gadget graph for an instance at strength p >= 3.

    Vertex layout (documented so serialized fixtures are reproducible):
    elements x_1..x_3q occupy ids 0..3q-1, then each clause j contributes the
    block [clause, center, leaf_1..leaf_{2p-1}] in clause order.
    """
    if p < 3:
        raise ValueError("the reduction requires p >= 3")
    if variant not in ("bipartite", "chordal"):
        raise ValueError(f"unknown variant: {variant!r}")
    q, t = inst.q, inst.t
    n = 3 * q + t * (2 * p + 1)
    roles = [f"x({i})" for i in range(1, 3 * q + 1)]
    edges: list[tuple[int, int]] = []
    clause_ids = []
    for j, clause in enumerate(inst.clauses):
        base = 3 * q + j * (2 * p + 1)
        clause_v, center_v = base, base + 1
        clause_ids.append(clause_v)
        roles.append(f"clause({j + 1})")
        roles.append(f"z({j + 1})")
        roles.extend(f"h({j + 1},{l})" for l in range(1, 2 * p))
        for e in clause:
            edges.append((e - 1, clause_v))
        edges.append((clause_v, center_v))
        edges.extend((center_v, center_v + l) for l in range(1, 2 * p))
    if variant == "chordal":
        edges.extend((clause_ids[a], clause_ids[b])
                     for a in range(t) for b in range(a + 1, t))
    return ReductionResult(
        graph=Graph(n, edges),
        roles=tuple(roles),
        r_threshold=2 * q + 3 * t,
        variant=variant,
        q=q,
        t=t,
        p=p,
    )


def labeling_from_cover(res: ReductionResult, cover: list[int]) -> LabelFunction:
    """The canonical weight-(2q+3t) labeling induced by an exact cover:
    cover clauses get 2, every gadget center gets 3, everything else 0."""
    for j in cover:
        if not 0 <= j < res.t:
            raise ValueError(f"clause index {j} out of range")
    covered: set[int] = set()
    for j in cover:
        clause_v = res.clause_vertex(j)
        members = {e for e in range(1, 3 * res.q + 1)
                   if res.graph.has_edge(e - 1, clause_v)}
        if covered & members:
            raise ValueError("cover clauses are not disjoint")
        covered |= members
    if covered != set(range(1, 3 * res.q + 1)):
        raise ValueError("cover does not span every element")
    labels = [0] * res.graph.n
    for j in cover:
        labels[res.clause_vertex(j)] = 2
    for j in range(res.t):
        labels[res.center_vertex(j)] = 3
    return LabelFunction(tuple(labels))


@dataclass(frozen=True)
class EquivalenceReport:
    holds: bool
    cover_exists: bool
    cover: Optional[tuple[int, ...]]
    value: int
    r_threshold: int
    variant: str
    p: int

    def to_dict(self) -> dict:
        return {
            "holds": self.holds,
            "cover_exists": self.cover_exists,
            "cover": list(self.cover) if self.cover is not None else None,
            "value": self.value,
            "r_threshold": self.r_threshold,
            "variant": self.variant,
            "p": self.p,
        }


def verify_reduction_equivalence(inst: X3CInstance, p: int, variant: str = "bipartite",
                                 cfg: Optional[SolverConfig] = None) -> EquivalenceReport:
    """Check both directions of the reduction on a desk-scale instance.

    Reports whether [an exact cover exists] <=> [the gadget graph's optimum
    is at most 2q + 3t], together with both sides' evidence. Instances above
    18 vertices are rejected (the exact solver is the bottleneck).
    """
    res = build_reduction(inst, p, variant)
    if res.graph.n > 18:
        raise ValueError(f"instance too large for exact verification: {res.graph.n} > 18")
    cover = x3c_has_exact_cover(inst)
    solved = solve_exact(res.graph, p, cfg)
    holds = (cover is not None) == (solved.value <= res.r_threshold)
    if cover is not None:
        # Forward certificate: the induced labeling is valid at exactly r.
        f = labeling_from_cover(res, cover)
        report = validate_labeling(res.graph, p, f)
        holds = holds and report.valid and report.weight == res.r_threshold
    return EquivalenceReport(
        holds=holds,
        cover_exists=cover is not None,
        cover=tuple(cover) if cover is not None else None,
        value=solved.value,
        r_threshold=res.r_threshold,
        variant=variant,
        p=p,
    )
