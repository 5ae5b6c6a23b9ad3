"""Arrow-splitting transform: given an index R of left forbidden arrows,
split each member alpha into alpha_L -> new vertex -> alpha_R, rewrite the
relation generators, and (for SAG inputs) verify that the transformed
algebra's dimension matches the endomorphism algebra it presents.

The CM-Auslander construction is the same transform applied to the perfect
index.
"""

from __future__ import annotations

from dataclasses import dataclass

from .classify import classify
from .core import Arrow, BoundQuiver, algebra_dim, is_finite_dimensional
from .errors import InfiniteDimensional, InvalidWalk, NotLeftForbidden, NotSAG
from .forbidden import left_forbidden_arrows, perfect_index
from .strmod import arrow_module_string, hom_dim, projective_string
from .walks import CyclicWalk, Letter, Walk


@dataclass(frozen=True)
class RIndex:
    arrows: tuple[str, ...]  # sorted by declaration order


@dataclass(frozen=True)
class TransformResult:
    quiver: BoundQuiver
    vertex_map: dict[str, str]  # alpha -> new vertex id
    arrow_map: dict[str, tuple[str, str]]  # alpha -> (alpha_L, alpha_R)


@dataclass(frozen=True)
class TransformedAlgebraReport:
    result: TransformResult
    dim_source_endo: int
    dim_transformed: int

    @property
    def dimensions_match(self) -> bool:
        return self.dim_source_endo == self.dim_transformed


def validate_index(bq: BoundQuiver, arrows) -> RIndex:
    allowed = left_forbidden_arrows(bq)
    for x in arrows:
        if x not in allowed:
            raise NotLeftForbidden(x)
    return RIndex(tuple(sorted(set(arrows), key=lambda x: bq.arrow_index[x])))


def _fresh_id(base: str, taken: set[str]) -> str:
    candidate = base
    suffix = 2
    while candidate in taken:
        candidate = f"{base}{suffix}"
        suffix += 1
    taken.add(candidate)
    return candidate


def r_transform(bq: BoundQuiver, index: RIndex) -> TransformResult:
    members = set(index.arrows)
    taken = set(bq.vertices) | {a.id for a in bq.arrows}

    vertex_map = {alpha: _fresh_id(f"v_{alpha}", taken) for alpha in index.arrows}
    arrow_map = {
        alpha: (_fresh_id(f"{alpha}_L", taken), _fresh_id(f"{alpha}_R", taken))
        for alpha in index.arrows
    }

    vertices = tuple(bq.vertices) + tuple(vertex_map[a] for a in index.arrows)
    arrows: list[Arrow] = []
    for a in bq.arrows:
        if a.id in members:
            left, right = arrow_map[a.id]
            arrows.append(Arrow(left, a.source, vertex_map[a.id]))
            arrows.append(Arrow(right, vertex_map[a.id], a.target))
        else:
            arrows.append(a)

    def expand(rel: tuple[str, ...]) -> tuple[str, ...]:
        out: list[str] = []
        last = len(rel) - 1
        for i, x in enumerate(rel):
            if x not in members:
                out.append(x)
                continue
            left, right = arrow_map[x]
            if i == 0:
                out.append(right)
            elif i == last:
                out.append(left)
            else:
                out.extend((left, right))
        return tuple(out)

    relations = tuple(expand(rel) for rel in bq.relations)
    quiver = BoundQuiver.build(vertices, tuple(arrows), relations)
    return TransformResult(quiver, vertex_map, arrow_map)


def lift_walk(tr: TransformResult, w: Walk | CyclicWalk) -> Walk | CyclicWalk:
    """Rewrite a walk over the source quiver onto the transformed quiver:
    each split forward letter becomes alpha_L·alpha_R, each split inverse
    letter alpha_R^-1·alpha_L^-1; other letters pass through."""
    if isinstance(w, Walk) and w.is_trivial:
        if w.anchor not in tr.quiver.vertex_index:
            raise InvalidWalk(f"anchor {w.anchor!r} not in transformed quiver")
        return w
    lifted: list[Letter] = []
    for letter in w.letters:
        if letter.arrow in tr.arrow_map:
            left, right = tr.arrow_map[letter.arrow]
            if letter.inv:
                lifted.extend((Letter(right, True), Letter(left, True)))
            else:
                lifted.extend((Letter(left, False), Letter(right, False)))
        elif letter.arrow in tr.quiver.arrow_by_id:
            lifted.append(letter)
        else:
            raise InvalidWalk(f"letter {letter.arrow!r} unknown to the transform")
    if isinstance(w, CyclicWalk):
        return CyclicWalk(tuple(lifted))
    return Walk(tuple(lifted))


def _require_sag_finite(bq: BoundQuiver) -> None:
    if not classify(bq).is_sag:
        raise NotSAG("bound quiver is not string-almost-gentle")
    if not is_finite_dimensional(bq):
        raise InfiniteDimensional("algebra is infinite-dimensional")


def cma(bq: BoundQuiver) -> TransformResult:
    """Cohen-Macaulay Auslander algebra: the transform at the perfect index."""
    _require_sag_finite(bq)
    return r_transform(bq, validate_index(bq, perfect_index(bq).arrows))


def verify_endo_dimension(bq: BoundQuiver, index: RIndex) -> TransformedAlgebraReport:
    """Compare dim End(A + sum of alpha·A over alpha in R), computed from
    string-module hom dimensions, with the path-count dimension of the
    transformed algebra."""
    _require_sag_finite(bq)
    summands = [projective_string(bq, v) for v in bq.vertices]
    summands += [arrow_module_string(bq, alpha) for alpha in index.arrows]
    dim_source_endo = sum(
        hom_dim(bq, x, y) for x in summands for y in summands
    )
    result = r_transform(bq, index)
    return TransformedAlgebraReport(result, dim_source_endo, algebra_dim(result.quiver))
