"""Axiom checks: string pair, almost gentle pair, SAG, and gentle.

Violation witnesses are concrete: a vertex id for the degree bound, an
(arrow, side) pair for continuation uniqueness, a relation word for the
length-two requirement.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import BoundQuiver, Path, in_ideal


@dataclass(frozen=True)
class Classification:
    is_string: bool
    is_almost_gentle: bool
    is_sag: bool
    is_gentle: bool
    violations: tuple[tuple[str, object], ...] = field(default_factory=tuple)


def check_s1(bq: BoundQuiver) -> list[str]:
    """Vertices that are the source of >= 3 arrows or the target of >= 3."""
    return [
        v
        for v in bq.vertices
        if len(bq.out_arrows[v]) >= 3 or len(bq.in_arrows[v]) >= 3
    ]


def _two_path_free(bq: BoundQuiver, first: str, second: str) -> bool:
    return not in_ideal(bq, Path((first, second)))


def check_s2(bq: BoundQuiver) -> list[tuple[str, str]]:
    """Arrows with more than one relation-free continuation on a side.

    For each arrow x the successors y with x·y outside the ideal must number
    at most one (side "R"), and dually for predecessors (side "L").
    """
    bad: list[tuple[str, str]] = []
    for a in bq.arrows:
        succs = [b for b in bq.out_arrows[a.target] if _two_path_free(bq, a.id, b.id)]
        if len(succs) > 1:
            bad.append((a.id, "R"))
        preds = [g for g in bq.in_arrows[a.source] if _two_path_free(bq, g.id, a.id)]
        if len(preds) > 1:
            bad.append((a.id, "L"))
    return bad


def _gentle_violations(bq: BoundQuiver) -> list[tuple[str, str]]:
    bad: list[tuple[str, str]] = []
    for a in bq.arrows:
        blocked_r = [b for b in bq.out_arrows[a.target] if not _two_path_free(bq, a.id, b.id)]
        if len(blocked_r) > 1:
            bad.append((a.id, "R"))
        blocked_l = [g for g in bq.in_arrows[a.source] if not _two_path_free(bq, g.id, a.id)]
        if len(blocked_l) > 1:
            bad.append((a.id, "L"))
    return bad


def classify(bq: BoundQuiver) -> Classification:
    violations: list[tuple[str, object]] = []
    for v in check_s1(bq):
        violations.append(("degree", v))
    s2 = check_s2(bq)
    for arrow, side in s2:
        violations.append(("continuation-" + side, arrow))
    long_rels = [rel for rel in bq.relations if len(rel) != 2]
    for rel in long_rels:
        violations.append(("relation-length", rel))

    is_string = not check_s1(bq) and not s2
    is_almost_gentle = not s2 and not long_rels
    is_sag = is_string and is_almost_gentle

    gentle_bad = _gentle_violations(bq) if is_sag else []
    for arrow, side in gentle_bad:
        violations.append(("gentle-" + side, arrow))
    is_gentle = is_sag and not gentle_bad

    return Classification(is_string, is_almost_gentle, is_sag, is_gentle, tuple(violations))
