"""Strings and bands as reduced walks over a bound quiver.

A walk is a sequence of letters, each an arrow traversed forward or
backward.  A string is a reduced walk whose maximal same-direction runs
avoid the ideal; a band is a primitive cyclic string all of whose powers
remain strings.  Equivalence is inversion for strings, rotation plus
inversion for bands.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, NamedTuple

from .classify import classify
from .core import BoundQuiver, Path, in_ideal, is_finite_dimensional
from .errors import InfiniteDimensional, NotStringPair, UnknownArrow


class Letter(NamedTuple):
    arrow: str
    inv: bool

    def inverse(self) -> "Letter":
        return Letter(self.arrow, not self.inv)


def letter_source(bq: BoundQuiver, letter: Letter) -> str:
    a = bq.arrow_by_id[letter.arrow]
    return a.target if letter.inv else a.source


def letter_target(bq: BoundQuiver, letter: Letter) -> str:
    a = bq.arrow_by_id[letter.arrow]
    return a.source if letter.inv else a.target


@dataclass(frozen=True)
class Walk:
    letters: tuple[Letter, ...]
    anchor: str | None = None

    def __post_init__(self) -> None:
        if not self.letters and self.anchor is None:
            raise ValueError("trivial walk requires an anchor vertex")

    @property
    def is_trivial(self) -> bool:
        return not self.letters

    def source(self, bq: BoundQuiver) -> str:
        if self.is_trivial:
            assert self.anchor is not None
            return self.anchor
        return letter_source(bq, self.letters[0])

    def target(self, bq: BoundQuiver) -> str:
        if self.is_trivial:
            assert self.anchor is not None
            return self.anchor
        return letter_target(bq, self.letters[-1])

    def inverse(self) -> "Walk":
        if self.is_trivial:
            return self
        return Walk(tuple(l.inverse() for l in reversed(self.letters)))

    def __len__(self) -> int:
        return len(self.letters)


@dataclass(frozen=True)
class CyclicWalk:
    letters: tuple[Letter, ...]

    def __post_init__(self) -> None:
        if not self.letters:
            raise ValueError("cyclic walk must be nonempty")

    def inverse(self) -> "CyclicWalk":
        return CyclicWalk(tuple(l.inverse() for l in reversed(self.letters)))

    def rotate(self, t: int) -> "CyclicWalk":
        t %= len(self.letters)
        return CyclicWalk(self.letters[t:] + self.letters[:t])

    def __len__(self) -> int:
        return len(self.letters)


def _runs(letters: tuple[Letter, ...]) -> list[tuple[int, int, bool]]:
    """Maximal same-direction runs as (start, stop, inv) with stop exclusive."""
    runs: list[tuple[int, int, bool]] = []
    i = 0
    while i < len(letters):
        j = i
        while j < len(letters) and letters[j].inv == letters[i].inv:
            j += 1
        runs.append((i, j, letters[i].inv))
        i = j
    return runs


def _run_path(letters: tuple[Letter, ...], start: int, stop: int, inv: bool) -> Path:
    arrows = tuple(l.arrow for l in letters[start:stop])
    return Path(tuple(reversed(arrows)) if inv else arrows)


def _check_arrows_known(bq: BoundQuiver, letters: tuple[Letter, ...]) -> None:
    for l in letters:
        if l.arrow not in bq.arrow_by_id:
            raise UnknownArrow(f"unknown arrow {l.arrow!r}")


def _require_string_pair(bq: BoundQuiver) -> None:
    if not classify(bq).is_string:
        raise NotStringPair("bound quiver fails the string-pair axioms")


def string_problems(bq: BoundQuiver, w: Walk) -> list[str]:
    """Diagnostics for why ``w`` fails to be a string; empty means valid."""
    _check_arrows_known(bq, w.letters)
    problems: list[str] = []
    if w.is_trivial:
        if w.anchor not in bq.vertex_index:
            problems.append(f"anchor {w.anchor!r} is not a vertex")
        return problems
    letters = w.letters
    for i in range(len(letters) - 1):
        if letter_target(bq, letters[i]) != letter_source(bq, letters[i + 1]):
            problems.append(
                f"letters {i} and {i + 1} do not connect: "
                f"{letter_target(bq, letters[i])} != {letter_source(bq, letters[i + 1])}"
            )
        if letters[i + 1] == letters[i].inverse():
            problems.append(f"backtrack at position {i}: letter followed by its inverse")
    for start, stop, inv in _runs(letters):
        p = _run_path(letters, start, stop, inv)
        if in_ideal(bq, p):
            direction = "inverse" if inv else "forward"
            problems.append(
                f"{direction} run at positions {start}..{stop - 1} lies in the ideal: "
                + "".join(p.arrows)
            )
    return problems


def validate_string(bq: BoundQuiver, w: Walk) -> bool:
    _require_string_pair(bq)
    return not string_problems(bq, w)


def _is_primitive(letters: tuple[Letter, ...]) -> bool:
    n = len(letters)
    for d in range(1, n):
        if n % d == 0 and letters == letters[:d] * (n // d):
            return False
    return True


def band_problems(bq: BoundQuiver, cw: CyclicWalk) -> list[str]:
    """Diagnostics for why ``cw`` fails to be a band; empty means valid."""
    _check_arrows_known(bq, cw.letters)
    problems: list[str] = []
    letters = cw.letters
    n = len(letters)
    for i in range(n):
        j = (i + 1) % n
        if letter_target(bq, letters[i]) != letter_source(bq, letters[j]):
            problems.append(f"letters {i} and {j} do not connect cyclically")
        if letters[j] == letters[i].inverse():
            problems.append(f"backtrack at cyclic position {i}")
    if problems:
        return problems
    if not _is_primitive(letters):
        problems.append("cyclic walk is a proper power of a shorter walk")

    directions = {l.inv for l in letters}
    if len(directions) == 1:
        # A one-direction cyclic walk is a directed cycle; its powers are
        # strings only if arbitrary repetitions of the cycle avoid the ideal.
        inv = letters[0].inv
        arrows = tuple(l.arrow for l in letters)
        if inv:
            arrows = tuple(reversed(arrows))
        reps = bq.max_relation_length // n + 2
        if in_ideal(bq, Path(arrows * reps)):
            problems.append("directed cycle has a power in the ideal")
    else:
        # Rotate so position 0 starts a new run; then runs of any power of
        # the rotated word are exactly the cyclic runs of cw.
        t = next(i for i in range(n) if letters[i].inv != letters[i - 1].inv)
        rotated = cw.rotate(t).letters
        for start, stop, inv in _runs(rotated):
            p = _run_path(rotated, start, stop, inv)
            if in_ideal(bq, p):
                direction = "inverse" if inv else "forward"
                problems.append(
                    f"cyclic {direction} run lies in the ideal: " + "".join(p.arrows)
                )
    return problems


def validate_band(bq: BoundQuiver, cw: CyclicWalk) -> bool:
    _require_string_pair(bq)
    return not band_problems(bq, cw)


# ---------------------------------------------------------------------------
# Canonical forms


def _letter_key(bq: BoundQuiver, letter: Letter) -> tuple[int, int]:
    return (bq.arrow_index[letter.arrow], int(letter.inv))


def _walk_key(bq: BoundQuiver, letters: tuple[Letter, ...]) -> tuple[tuple[int, int], ...]:
    return tuple(_letter_key(bq, l) for l in letters)


def canonical_string(bq: BoundQuiver, w: Walk) -> Walk:
    """Representative of the inversion class: lexicographic minimum of w, w^-1."""
    if w.is_trivial:
        return w
    inv = w.inverse()
    if _walk_key(bq, inv.letters) < _walk_key(bq, w.letters):
        return inv
    return w


def canonical_band(bq: BoundQuiver, cw: CyclicWalk) -> CyclicWalk:
    """Minimum over all rotations of both orientations."""
    candidates = []
    for orient in (cw, cw.inverse()):
        for t in range(len(orient)):
            rot = orient.rotate(t)
            candidates.append((_walk_key(bq, rot.letters), rot))
    return min(candidates, key=lambda kv: kv[0])[1]


# ---------------------------------------------------------------------------
# Enumeration


def _string_extensions(bq: BoundQuiver, w: Walk) -> Iterator[Letter]:
    """Letters that extend a valid string to a valid string (appended)."""
    end = w.target(bq)
    last = w.letters[-1] if w.letters else None
    for a in bq.out_arrows[end]:
        cand = Letter(a.id, False)
        if last is not None and cand == last.inverse():
            continue
        if not _extension_run_ok(bq, w.letters, cand):
            continue
        yield cand
    for a in bq.in_arrows[end]:
        cand = Letter(a.id, True)
        if last is not None and cand == last.inverse():
            continue
        if not _extension_run_ok(bq, w.letters, cand):
            continue
        yield cand


def _extension_run_ok(
    bq: BoundQuiver, letters: tuple[Letter, ...], cand: Letter
) -> bool:
    """Check the final directed run stays relation-free after appending cand."""
    i = len(letters)
    while i > 0 and letters[i - 1].inv == cand.inv:
        i -= 1
    run = letters[i:] + (cand,)
    return not in_ideal(bq, _run_path(run, 0, len(run), cand.inv))


def enumerate_strings(bq: BoundQuiver, max_letters: int) -> list[Walk]:
    """All equivalence classes of strings with at most ``max_letters`` letters.

    Deterministic order: trivial strings in vertex order, then nontrivial
    canonical forms sorted by (length, letter keys).
    """
    _require_string_pair(bq)
    out: list[Walk] = [Walk((), v) for v in bq.vertices]
    seen: set[tuple[tuple[int, int], ...]] = set()
    found: list[Walk] = []

    def extend(w: Walk) -> None:
        if len(w) >= 1:
            cano = canonical_string(bq, w)
            key = _walk_key(bq, cano.letters)
            if key not in seen:
                seen.add(key)
                found.append(cano)
        if len(w) >= max_letters:
            return
        for cand in _string_extensions(bq, w):
            extend(Walk(w.letters + (cand,), None))

    for v in bq.vertices:
        extend(Walk((), v))
    found.sort(key=lambda w: (len(w), _walk_key(bq, w.letters)))
    return out + found


# ---------------------------------------------------------------------------
# Band existence and representation type
#
# Nodes of the search graph are (letter, forward-state, backward-state):
# the two Aho-Corasick states track forbidden factors of the current
# forward run and of the reversed word of the current inverse run.  A plain
# letter-pair digraph would miss relations of length >= 3 (three pairwise
# relation-free arrows can still compose into a forbidden path), so the
# automaton states are carried along the walk.

_Node = tuple[Letter, int, int]


def _letter_order(bq: BoundQuiver) -> list[Letter]:
    letters = [Letter(a.id, False) for a in bq.arrows]
    letters += [Letter(a.id, True) for a in bq.arrows]
    letters.sort(key=lambda l: _letter_key(bq, l))
    return letters


def _node_successors(bq: BoundQuiver, node: _Node) -> Iterator[_Node]:
    letter, fstate, bstate = node
    end = letter_target(bq, letter)
    for a in bq.out_arrows[end]:
        cand = Letter(a.id, False)
        if cand == letter.inverse():
            continue
        prev = fstate if not letter.inv else 0
        nxt = bq.automaton.step(prev, a.id)
        if nxt is None:
            continue
        yield (cand, nxt, 0)
    for a in bq.in_arrows[end]:
        cand = Letter(a.id, True)
        if cand == letter.inverse():
            continue
        prev = bstate if letter.inv else 0
        nxt = bq.reversed_automaton.step(prev, a.id)
        if nxt is None:
            continue
        yield (cand, 0, nxt)


def _initial_node(bq: BoundQuiver, letter: Letter) -> _Node | None:
    if letter.inv:
        st = bq.reversed_automaton.step(0, letter.arrow)
        return None if st is None else (letter, 0, st)
    st = bq.automaton.step(0, letter.arrow)
    return None if st is None else (letter, st, 0)


def _find_product_cycle(bq: BoundQuiver) -> list[Letter] | None:
    """Shortest letter cycle in the run-aware transition graph, or None.

    A cycle must return to the same product node, not merely the same
    letter: state continuity across the wrap is what guarantees that every
    power of the cycle stays relation-free.  Every mixed-direction cycle
    contains a run boundary and hence an initial (fresh-run) node, and
    one-direction cycles are ruled out by the finite-dimensionality
    precondition, so BFS from initial nodes is complete.
    """
    best: list[Letter] | None = None
    for start in _letter_order(bq):
        init = _initial_node(bq, start)
        if init is None:
            continue
        parent: dict[_Node, _Node | None] = {init: None}
        frontier = [init]
        hit: _Node | None = None
        while frontier and hit is None:
            nxt: list[_Node] = []
            for node in frontier:
                for succ in _node_successors(bq, node):
                    if succ == init:
                        hit = node
                        break
                    if succ not in parent:
                        parent[succ] = node
                        nxt.append(succ)
                if hit is not None:
                    break
            frontier = nxt
        if hit is None:
            continue
        cycle: list[Letter] = []
        cur: _Node | None = hit
        while cur is not None:
            cycle.append(cur[0])
            cur = parent[cur]
        cycle.reverse()
        if best is None or len(cycle) < len(best):
            best = cycle
    return best


def _primitive_root(letters: tuple[Letter, ...]) -> tuple[Letter, ...]:
    n = len(letters)
    for d in range(1, n + 1):
        if n % d == 0 and letters == letters[:d] * (n // d):
            return letters[:d]
    return letters


def find_band(bq: BoundQuiver) -> CyclicWalk | None:
    """A shortest-cycle band witness, or None when no band exists."""
    _require_string_pair(bq)
    if not is_finite_dimensional(bq):
        raise InfiniteDimensional("algebra is infinite-dimensional")
    cycle = _find_product_cycle(bq)
    if cycle is None:
        return None
    cw = CyclicWalk(_primitive_root(tuple(cycle)))
    problems = band_problems(bq, cw)
    assert not problems, f"detector produced an invalid band: {problems}"
    return canonical_band(bq, cw)


def band_exists(bq: BoundQuiver) -> bool:
    return find_band(bq) is not None


def representation_type(bq: BoundQuiver) -> str:
    """'infinite' iff a band exists, else 'finite'."""
    return "infinite" if band_exists(bq) else "finite"
