"""Forbidden structure: left forbidden arrows, forbidden cycles, perfect
forbidden cycles, and the perfect index.

A forbidden cycle is an oriented cycle of arrows, on pairwise distinct and
otherwise nonadjacent vertices, whose consecutive products all lie in the
ideal.  It is perfect when no arrow outside the cycle forms a relation with
a cycle arrow at any cycle vertex.  The perfect index is the union of the
arrows of all perfect forbidden cycles.
"""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from .core import BoundQuiver, Path, in_ideal
from .errors import NotForbiddenCycle


@dataclass(frozen=True)
class ForbiddenCycle:
    arrows: tuple[str, ...]

    def __len__(self) -> int:
        return len(self.arrows)


@dataclass(frozen=True)
class PerfectIndex:
    arrows: frozenset[str]
    cycles: tuple[ForbiddenCycle, ...]


def _pair_in_ideal(bq: BoundQuiver, first: str, second: str) -> bool:
    return in_ideal(bq, Path((first, second)))


def left_forbidden_arrows(bq: BoundQuiver) -> set[str]:
    """Arrows that head some relation: alpha with alpha·beta in the ideal."""
    out: set[str] = set()
    for a in bq.arrows:
        if any(_pair_in_ideal(bq, a.id, b.id) for b in bq.out_arrows[a.target]):
            out.add(a.id)
    return out


def _cycle_vertices(bq: BoundQuiver, arrows: tuple[str, ...]) -> list[str]:
    return [bq.arrow_by_id[x].source for x in arrows]


def _cycle_problems(bq: BoundQuiver, arrows: tuple[str, ...]) -> list[str]:
    problems: list[str] = []
    if not arrows:
        return ["empty cycle"]
    for x in arrows:
        if x not in bq.arrow_by_id:
            return [f"unknown arrow {x!r}"]
    n = len(arrows)
    for i in range(n):
        a = bq.arrow_by_id[arrows[i]]
        b = bq.arrow_by_id[arrows[(i + 1) % n]]
        if a.target != b.source:
            problems.append(f"arrows {a.id} and {b.id} do not compose")
        elif not _pair_in_ideal(bq, a.id, b.id):
            problems.append(f"product {a.id}{b.id} is not in the ideal")
    vertices = _cycle_vertices(bq, arrows)
    if len(set(vertices)) != n:
        problems.append("cycle vertices are not pairwise distinct")
        return problems
    # Nonadjacency away from the cycle: no arrow connects two cycle
    # vertices that are not cyclically consecutive.
    index = {v: i for i, v in enumerate(vertices)}
    for a in bq.arrows:
        if a.source in index and a.target in index and a.source != a.target:
            gap = (index[a.target] - index[a.source]) % n
            if gap != 1 and (index[a.source] - index[a.target]) % n != 1:
                problems.append(
                    f"chord {a.id} joins nonconsecutive cycle vertices"
                )
    return problems


def _canonical_rotation(bq: BoundQuiver, arrows: tuple[str, ...]) -> tuple[str, ...]:
    keys = [bq.arrow_index[x] for x in arrows]
    t = keys.index(min(keys))
    return arrows[t:] + arrows[:t]


def forbidden_cycles(bq: BoundQuiver) -> list[ForbiddenCycle]:
    """All forbidden cycles, canonically rotated, in deterministic order."""
    relation_digraph = nx.DiGraph()
    relation_digraph.add_nodes_from(a.id for a in bq.arrows)
    for a in bq.arrows:
        for b in bq.out_arrows[a.target]:
            if _pair_in_ideal(bq, a.id, b.id):
                relation_digraph.add_edge(a.id, b.id)
    out: list[ForbiddenCycle] = []
    seen: set[tuple[str, ...]] = set()
    for cyc in nx.simple_cycles(relation_digraph):
        arrows = _canonical_rotation(bq, tuple(cyc))
        if arrows in seen or _cycle_problems(bq, arrows):
            continue
        seen.add(arrows)
        out.append(ForbiddenCycle(arrows))
    out.sort(key=lambda c: (len(c), tuple(bq.arrow_index[x] for x in c.arrows)))
    return out


def is_perfect(bq: BoundQuiver, cycle: ForbiddenCycle) -> bool:
    """No outside arrow forms a relation with a cycle arrow at a cycle vertex."""
    problems = _cycle_problems(bq, cycle.arrows)
    if problems:
        raise NotForbiddenCycle("; ".join(problems))
    members = set(cycle.arrows)
    n = len(cycle.arrows)
    for i, vertex in enumerate(_cycle_vertices(bq, cycle.arrows)):
        leaving = cycle.arrows[i]
        entering = cycle.arrows[(i - 1) % n]
        for a in bq.in_arrows[vertex]:
            if a.id not in members and _pair_in_ideal(bq, a.id, leaving):
                return False
        for b in bq.out_arrows[vertex]:
            if b.id not in members and _pair_in_ideal(bq, entering, b.id):
                return False
    return True


def perfect_index(bq: BoundQuiver) -> PerfectIndex:
    cycles = tuple(c for c in forbidden_cycles(bq) if is_perfect(bq, c))
    arrows = frozenset(x for c in cycles for x in c.arrows)
    return PerfectIndex(arrows, cycles)
