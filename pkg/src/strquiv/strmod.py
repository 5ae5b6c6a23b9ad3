"""String-module combinatorics: projective strings, arrow-module strings,
factor/image substrings, and hom-space dimensions.

A factor substring is a positioned subwalk whose boundary letters point out
of it (preceded by an inverse letter or nothing, followed by a forward
letter or nothing); an image substring is the dual.  Pairs of coinciding
factor and image occurrences index a basis of the hom space between the
corresponding string modules.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import BoundQuiver, is_finite_dimensional
from .errors import InfiniteDimensional, InvalidWalk, NotStringPair, UnknownArrow
from .walks import (
    Letter,
    Walk,
    _require_string_pair,
    letter_source,
    letter_target,
    string_problems,
)


def _require_finite(bq: BoundQuiver) -> None:
    if not is_finite_dimensional(bq):
        raise InfiniteDimensional("algebra is infinite-dimensional")


def _maximal_run_from(bq: BoundQuiver, state: int, start_vertex: str) -> list[str]:
    """Greedy relation-free forward extension from an automaton state.

    Under (S2)_R at most one arrow continues the current run outside the
    ideal, so the greedy walk is the unique maximal relation-free path.
    """
    arrows: list[str] = []
    vertex = start_vertex
    while True:
        nxt = None
        for a in bq.out_arrows[vertex]:
            st = bq.automaton.step(state, a.id)
            if st is not None:
                nxt = (a, st)
                break
        if nxt is None:
            return arrows
        a, state = nxt
        arrows.append(a.id)
        vertex = a.target


def projective_string(bq: BoundQuiver, v: str) -> Walk:
    """The string of the indecomposable projective at ``v``.

    The two maximal relation-free paths out of ``v`` (one per out-arrow,
    in declaration order), the second inverted and prepended to the first.
    """
    _require_string_pair(bq)
    _require_finite(bq)
    if v not in bq.vertex_index:
        raise UnknownArrow(f"unknown vertex {v!r}")
    branches: list[list[str]] = []
    for a in bq.out_arrows[v]:
        state = bq.automaton.step(0, a.id)
        assert state is not None, "single arrows are never relations"
        branches.append([a.id] + _maximal_run_from(bq, state, a.target))
    if not branches:
        return Walk((), v)
    forward = branches[0]
    letters = tuple(Letter(x, False) for x in forward)
    if len(branches) > 1:
        inverse_branch = branches[1]
        letters = tuple(Letter(x, True) for x in reversed(inverse_branch)) + letters
    return Walk(letters)


def arrow_module_string(bq: BoundQuiver, alpha: str) -> Walk:
    """The string of the arrow module: the maximal relation-free
    continuation of ``alpha``, without ``alpha`` itself."""
    _require_string_pair(bq)
    _require_finite(bq)
    if alpha not in bq.arrow_by_id:
        raise UnknownArrow(f"unknown arrow {alpha!r}")
    a = bq.arrow_by_id[alpha]
    state = bq.automaton.step(0, alpha)
    assert state is not None
    arrows = _maximal_run_from(bq, state, a.target)
    if not arrows:
        return Walk((), a.target)
    return Walk(tuple(Letter(x, False) for x in arrows))


@dataclass(frozen=True, order=True)
class SubstringOccurrence:
    """Letters ``start..end`` inclusive; ``start == end + 1`` is the trivial
    occurrence anchored at vertex position ``start`` (0..len(walk))."""

    start: int
    end: int
    kind: str  # "factor" | "image"

    @property
    def is_trivial(self) -> bool:
        return self.start == self.end + 1


def _boundary_ok(w: Walk, start: int, end: int, kind: str) -> bool:
    before = w.letters[start - 1] if start >= 1 else None
    after = w.letters[end + 1] if end + 1 < len(w.letters) else None
    if kind == "factor":
        return (before is None or before.inv) and (after is None or not after.inv)
    return (before is None or not before.inv) and (after is None or after.inv)


def _substrings(w: Walk, kind: str) -> list[SubstringOccurrence]:
    occs: list[SubstringOccurrence] = []
    n = len(w.letters)
    for p in range(n + 1):
        if _boundary_ok(w, p, p - 1, kind):
            occs.append(SubstringOccurrence(p, p - 1, kind))
    for start in range(n):
        for end in range(start, n):
            if _boundary_ok(w, start, end, kind):
                occs.append(SubstringOccurrence(start, end, kind))
    occs.sort(key=lambda o: (o.start, o.end))
    return occs


def factor_substrings(w: Walk) -> list[SubstringOccurrence]:
    return _substrings(w, "factor")


def image_substrings(w: Walk) -> list[SubstringOccurrence]:
    return _substrings(w, "image")


def _vertex_at(bq: BoundQuiver, w: Walk, pos: int) -> str:
    if w.is_trivial:
        assert w.anchor is not None
        return w.anchor
    if pos == 0:
        return letter_source(bq, w.letters[0])
    return letter_target(bq, w.letters[pos - 1])


def _occ_letters(w: Walk, occ: SubstringOccurrence) -> tuple[Letter, ...]:
    return w.letters[occ.start : occ.end + 1]


def hom_dim(bq: BoundQuiver, s2: Walk, s1: Walk) -> int:
    """Dimension of Hom(M(s2), M(s1)): admissible (factor of s2, image of
    s1, identification) triples.  Trivial pairs admit one identification;
    nontrivial pairs are counted under both direct and inverse
    identification when both match."""
    _require_string_pair(bq)
    for w in (s2, s1):
        problems = string_problems(bq, w)
        if problems:
            raise InvalidWalk("; ".join(problems))
    total = 0
    images = image_substrings(s1)
    for q in factor_substrings(s2):
        q_letters = _occ_letters(s2, q)
        for p in images:
            p_letters = _occ_letters(s1, p)
            if q.is_trivial and p.is_trivial:
                if _vertex_at(bq, s2, q.start) == _vertex_at(bq, s1, p.start):
                    total += 1
                continue
            if q.is_trivial or p.is_trivial:
                continue
            if q_letters == p_letters:
                total += 1
            if q_letters == tuple(l.inverse() for l in reversed(p_letters)):
                total += 1
    return total
