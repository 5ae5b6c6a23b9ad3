"""Bound-quiver data model: vertices, arrows, monomial relations, path
arithmetic, ideal membership, path enumeration and algebra dimension.

A path is "in the ideal" iff it contains some relation as a contiguous
factor.  Ideal membership, finiteness and path enumeration all run on the
product of the quiver with a forbidden-factor automaton built from the
relation set, so relations of any length >= 2 are handled uniformly.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .errors import (
    DanglingEndpoint,
    DuplicateId,
    InfiniteDimensional,
    InvalidPath,
    NonComposableRelation,
    RelationTooShort,
)

TOKEN_RE = re.compile(r"^[A-Za-z0-9_']+$")


def is_token(s: str) -> bool:
    return bool(TOKEN_RE.match(s))


@dataclass(frozen=True)
class Arrow:
    id: str
    source: str
    target: str


@dataclass(frozen=True)
class Path:
    """A composable sequence of arrow ids; trivial paths carry an anchor vertex."""

    arrows: tuple[str, ...] = ()
    anchor: str | None = None

    def __post_init__(self) -> None:
        if not self.arrows and self.anchor is None:
            raise InvalidPath("trivial path needs an anchor vertex")

    @property
    def is_trivial(self) -> bool:
        return not self.arrows

    def __len__(self) -> int:
        return len(self.arrows)


class FactorAutomaton:
    """Aho-Corasick automaton that recognizes words containing a forbidden factor.

    ``step`` returns the next state, or ``None`` once the word read so far
    contains one of the given words as a contiguous factor.
    """

    def __init__(self, words: Iterable[tuple[str, ...]]):
        self._goto: list[dict[str, int]] = [{}]
        self._fail: list[int] = [0]
        self._accept: list[bool] = [False]
        for word in words:
            state = 0
            for sym in word:
                nxt = self._goto[state].get(sym)
                if nxt is None:
                    nxt = len(self._goto)
                    self._goto[state][sym] = nxt
                    self._goto.append({})
                    self._fail.append(0)
                    self._accept.append(False)
                state = nxt
            self._accept[state] = True
        # breadth-first failure links
        queue: list[int] = []
        for sym, s in self._goto[0].items():
            queue.append(s)
        i = 0
        while i < len(queue):
            state = queue[i]
            i += 1
            for sym, nxt in self._goto[state].items():
                queue.append(nxt)
                f = self._fail[state]
                while f and sym not in self._goto[f]:
                    f = self._fail[f]
                self._fail[nxt] = self._goto[f].get(sym, 0) if self._goto[f].get(sym, 0) != nxt else 0
                if self._accept[self._fail[nxt]]:
                    self._accept[nxt] = True

    def step(self, state: int, sym: str) -> int | None:
        while state and sym not in self._goto[state]:
            state = self._fail[state]
        nxt = self._goto[state].get(sym, 0)
        return None if self._accept[nxt] else nxt


@dataclass(frozen=True)
class BoundQuiver:
    """An immutable pair (quiver, monomial relation set).

    Construct through :meth:`build`, which validates ids and endpoints and
    normalizes the relation set to factor-minimal generators.
    """

    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]
    relations: tuple[tuple[str, ...], ...]

    @classmethod
    def build(
        cls,
        vertices: Iterable[str],
        arrows: Iterable[Arrow | tuple[str, str, str]],
        relations: Iterable[Iterable[str]] = (),
    ) -> "BoundQuiver":
        vs = tuple(vertices)
        ars = tuple(a if isinstance(a, Arrow) else Arrow(*a) for a in arrows)
        seen: set[str] = set()
        for v in vs:
            if v in seen:
                raise DuplicateId(f"duplicate vertex id {v!r}")
            seen.add(v)
        for a in ars:
            if a.id in seen:
                raise DuplicateId(f"duplicate id {a.id!r}")
            seen.add(a.id)
        vset = set(vs)
        for a in ars:
            if a.source not in vset or a.target not in vset:
                raise DanglingEndpoint(f"arrow {a.id!r}: undeclared endpoint")
        by_id = {a.id: a for a in ars}
        rels: list[tuple[str, ...]] = []
        for rel in relations:
            word = tuple(rel)
            if len(word) < 2:
                raise RelationTooShort(f"relation {' '.join(word)!r} has length < 2")
            for x in word:
                if x not in by_id:
                    raise DanglingEndpoint(f"relation uses unknown arrow {x!r}")
            for x, y in zip(word, word[1:]):
                if by_id[x].target != by_id[y].source:
                    raise NonComposableRelation(
                        f"relation {' '.join(word)}: {x} and {y} do not compose"
                    )
            rels.append(word)
        return cls(vs, ars, _factor_minimal(rels))

    # -- derived indices (the instance is immutable, so caching is safe) --

    @cached_property
    def arrow_by_id(self) -> dict[str, Arrow]:
        return {a.id: a for a in self.arrows}

    @cached_property
    def vertex_index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def arrow_index(self) -> dict[str, int]:
        return {a.id: i for i, a in enumerate(self.arrows)}

    @cached_property
    def out_arrows(self) -> dict[str, tuple[Arrow, ...]]:
        out: dict[str, list[Arrow]] = {v: [] for v in self.vertices}
        for a in self.arrows:
            out[a.source].append(a)
        return {v: tuple(lst) for v, lst in out.items()}

    @cached_property
    def in_arrows(self) -> dict[str, tuple[Arrow, ...]]:
        inc: dict[str, list[Arrow]] = {v: [] for v in self.vertices}
        for a in self.arrows:
            inc[a.target].append(a)
        return {v: tuple(lst) for v, lst in inc.items()}

    @cached_property
    def automaton(self) -> FactorAutomaton:
        return FactorAutomaton(self.relations)

    @cached_property
    def reversed_automaton(self) -> FactorAutomaton:
        return FactorAutomaton(tuple(rel[::-1]) for rel in self.relations)

    @cached_property
    def max_relation_length(self) -> int:
        return max((len(r) for r in self.relations), default=0)

    # -- path helpers --

    def trivial_path(self, v: str) -> Path:
        if v not in self.vertex_index:
            raise InvalidPath(f"unknown vertex {v!r}")
        return Path((), v)

    def path(self, arrows: Iterable[str]) -> Path:
        word = tuple(arrows)
        if not word:
            raise InvalidPath("use trivial_path for length-zero paths")
        for x in word:
            if x not in self.arrow_by_id:
                raise InvalidPath(f"unknown arrow {x!r}")
        for x, y in zip(word, word[1:]):
            if self.arrow_by_id[x].target != self.arrow_by_id[y].source:
                raise InvalidPath(f"{x} and {y} do not compose")
        return Path(word)

    def path_source(self, p: Path) -> str:
        return p.anchor if p.is_trivial else self.arrow_by_id[p.arrows[0]].source

    def path_target(self, p: Path) -> str:
        return p.anchor if p.is_trivial else self.arrow_by_id[p.arrows[-1]].target


def _factor_minimal(rels: list[tuple[str, ...]]) -> tuple[tuple[str, ...], ...]:
    """Drop duplicates and any generator containing another as a contiguous factor."""
    unique: list[tuple[str, ...]] = []
    for r in rels:
        if r not in unique:
            unique.append(r)
    kept = [
        r
        for r in unique
        if not any(s != r and _is_factor(s, r) for s in unique)
    ]
    return tuple(kept)


def _is_factor(needle: tuple[str, ...], haystack: tuple[str, ...]) -> bool:
    n, h = len(needle), len(haystack)
    return any(haystack[i : i + n] == needle for i in range(h - n + 1))


def in_ideal(bq: BoundQuiver, p: Path) -> bool:
    """True iff some relation occurs as a contiguous factor of ``p``."""
    if p.is_trivial:
        if p.anchor not in bq.vertex_index:
            raise InvalidPath(f"unknown vertex {p.anchor!r}")
        return False
    for x in p.arrows:
        if x not in bq.arrow_by_id:
            raise InvalidPath(f"unknown arrow {x!r}")
    return word_in_ideal(bq, p.arrows)


def word_in_ideal(bq: BoundQuiver, word: tuple[str, ...]) -> bool:
    state: int | None = 0
    for sym in word:
        state = bq.automaton.step(state, sym)
        if state is None:
            return True
    return False


def _product_edges(bq: BoundQuiver, node: tuple[str, int]) -> Iterator[tuple[Arrow, tuple[str, int]]]:
    v, state = node
    for a in bq.out_arrows[v]:
        nxt = bq.automaton.step(state, a.id)
        if nxt is not None:
            yield a, (a.target, nxt)


def is_finite_dimensional(bq: BoundQuiver) -> bool:
    """True iff every oriented cycle is blocked by the relations, i.e. the
    quiver-automaton product graph is acyclic."""
    WHITE, GRAY, BLACK = 0, 1, 2
    color: dict[tuple[str, int], int] = {}
    for v in bq.vertices:
        start = (v, 0)
        if color.get(start, WHITE) != WHITE:
            continue
        stack: list[tuple[tuple[str, int], Iterator]] = [(start, _product_edges(bq, start))]
        color[start] = GRAY
        while stack:
            node, it = stack[-1]
            advanced = False
            for _, nxt in it:
                c = color.get(nxt, WHITE)
                if c == GRAY:
                    return False
                if c == WHITE:
                    color[nxt] = GRAY
                    stack.append((nxt, _product_edges(bq, nxt)))
                    advanced = True
                    break
            if not advanced:
                color[node] = BLACK
                stack.pop()
    return True


def enumerate_paths(bq: BoundQuiver, frm: str, to: str) -> list[Path]:
    """All relation-free paths from ``frm`` to ``to``, shortest first, ties
    broken by arrow declaration order."""
    if frm not in bq.vertex_index or to not in bq.vertex_index:
        raise InvalidPath(f"unknown vertex in ({frm!r}, {to!r})")
    if not is_finite_dimensional(bq):
        raise InfiniteDimensional("relation-free oriented cycle exists")
    found: list[Path] = []

    def dfs(v: str, state: int, word: list[str]) -> None:
        if v == to:
            found.append(bq.trivial_path(v) if not word else Path(tuple(word)))
        for a in bq.out_arrows[v]:
            nxt = bq.automaton.step(state, a.id)
            if nxt is not None:
                word.append(a.id)
                dfs(a.target, nxt, word)
                word.pop()

    dfs(frm, 0, [])
    idx = bq.arrow_index
    found.sort(key=lambda p: (len(p), tuple(idx[x] for x in p.arrows)))
    return found


def algebra_dim(bq: BoundQuiver) -> int:
    """Number of relation-free paths, trivial paths included."""
    if not is_finite_dimensional(bq):
        raise InfiniteDimensional("relation-free oriented cycle exists")
    memo: dict[tuple[str, int], int] = {}

    def count(node: tuple[str, int]) -> int:
        if node in memo:
            return memo[node]
        total = 1
        for _, nxt in _product_edges(bq, node):
            total += count(nxt)
        memo[node] = total
        return total

    return sum(count((v, 0)) for v in bq.vertices)
