"""Rational polyhedral cones in canonical dual form.

A ``Cone`` stores both representations at once: extreme rays plus a
lineality basis (V-side) and facet normals plus equality pairs (H-side).
Both sides are brought to a canonical form that depends only on the
geometric cone, so structural equality of ``Cone`` values coincides with
geometric equality and the double dual reproduces a cone exactly.

Canonical form:
  * the lineality basis is the HNF basis of the lineality lattice;
  * rays are primitive and reduced to the canonical representative modulo
    the lineality lattice (pivot coordinates in ``[0, pivot)``);
  * the normal list holds the facet normals (canonicalised the same way on
    the dual side) together with a +/- pair for every equality constraint;
  * all lists are lex-sorted.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from itertools import combinations

from .errors import DimensionError, DomainError
from .intlinalg import (
    Vec,
    det_and_adjugate,
    dot,
    is_zero,
    kernel_split,
    primitive,
    rational_rank,
    reduce_mod_lattice,
    vadd,
    vneg,
    vscale,
)


def pairing(u, v) -> int:
    """Dual pairing <u, v> = sum of coordinatewise products."""
    return dot(tuple(u), tuple(v))


@dataclass(frozen=True)
class Cone:
    rank: int
    rays: tuple[Vec, ...]
    lineality: tuple[Vec, ...]
    normals: tuple[Vec, ...]

    def contains(self, v) -> bool:
        """Exact membership test against the H-representation."""
        v = tuple(v)
        if len(v) != self.rank:
            raise DimensionError(f"vector of length {len(v)} in rank {self.rank}")
        return all(dot(h, v) >= 0 for h in self.normals)

    @property
    def dim(self) -> int:
        return rational_rank(self.rays + self.lineality)

    @property
    def generators(self) -> tuple[Vec, ...]:
        """Rays plus +/- lineality basis: a generating set over Z>=0."""
        gens = set(self.rays)
        for l in self.lineality:
            gens.add(l)
            gens.add(vneg(l))
        return tuple(sorted(gens))

    def sort_key(self):
        return (self.rays, self.lineality)

    def __repr__(self):
        return f"Cone(rank={self.rank}, rays={list(self.rays)}, lineality={list(self.lineality)})"


def _canon_constraints(vectors, rank: int) -> tuple[Vec, ...]:
    out = set()
    for v in vectors:
        v = tuple(v)
        if len(v) != rank:
            raise DimensionError(f"vector of length {len(v)} in rank {rank}")
        if not is_zero(v):
            out.add(primitive(v))
    return tuple(sorted(out))


@functools.lru_cache(maxsize=None)
def _vrep(constraints: tuple[Vec, ...], rank: int):
    """Extreme rays and lineality basis of ``{x : c . x >= 0 for all c}``.

    The lineality lattice is split off first (it is the saturated kernel of
    the constraint rows), the pointed image in the quotient is enumerated by
    double description, and the quotient rays are lifted back and reduced to
    canonical representatives modulo the lineality lattice.
    """
    kernel, comp = kernel_split(constraints, rank)
    lineality = tuple(kernel)
    d = rank - len(kernel)
    if d == 0:
        return (), lineality
    descended = tuple(sorted({primitive(tuple(dot(u, c) for u in comp))
                              for c in constraints}))
    qrays = _pointed_extreme_rays(descended, d)
    lifts = []
    for q in qrays:
        x = tuple(sum(q[i] * comp[i][j] for i in range(d)) for j in range(rank))
        lifts.append(reduce_mod_lattice(x, kernel))
    return tuple(sorted(lifts)), lineality


def _pointed_extreme_rays(cons: tuple[Vec, ...], d: int) -> tuple[Vec, ...]:
    """Double description for a pointed cone ``{x in R^d : c . x >= 0}``.

    Requires the constraints to have trivial kernel (the cone is pointed).
    Starts from a simplicial subcone cut out by ``d`` independent
    constraints and adds the remaining halfspaces one at a time, keeping
    exactly the extreme rays; adjacency uses the combinatorial zero-set
    test, which is exact for pointed cones.
    """
    base: list[Vec] = []
    rest: list[Vec] = []
    for c in cons:
        if len(base) < d and rational_rank(base + [c]) > len(base):
            base.append(c)
        else:
            rest.append(c)
    if len(base) < d:
        raise DomainError("constraints do not cut out a pointed cone")
    det, adj = det_and_adjugate(base)
    sign = 1 if det > 0 else -1
    rays = sorted(primitive(tuple(sign * adj[i][j] for i in range(d)))
                  for j in range(d))
    active = list(base)
    for c in rest:
        vals = {r: dot(c, r) for r in rays}
        if all(v >= 0 for v in vals.values()):
            active.append(c)
            continue
        zsets = {r: frozenset(i for i, cc in enumerate(active) if dot(cc, r) == 0)
                 for r in rays}
        pos = [r for r in rays if vals[r] > 0]
        zero = [r for r in rays if vals[r] == 0]
        neg = [r for r in rays if vals[r] < 0]
        new = []
        for rp in pos:
            for rn in neg:
                common = zsets[rp] & zsets[rn]
                if any(common <= zsets[r3] for r3 in rays if r3 is not rp and r3 is not rn):
                    continue
                w = vadd(vscale(vals[rp], rn), vscale(-vals[rn], rp))
                new.append(primitive(w))
        rays = sorted(set(pos) | set(zero) | set(new))
        active.append(c)
    return tuple(rays)


def _generator_constraints(rays, lineality) -> tuple[Vec, ...]:
    gens = set(rays)
    for l in lineality:
        gens.add(tuple(l))
        gens.add(vneg(l))
    return tuple(sorted(gens))


def cone_from_halfspaces(normals, rank: int) -> Cone:
    """Canonical cone ``{x : n . x >= 0 for every n}``."""
    ns = _canon_constraints(normals, rank)
    rays, lin = _vrep(ns, rank)
    nrays, nlin = _vrep(_generator_constraints(rays, lin), rank)
    canon_normals = tuple(sorted(set(nrays) | {s for b in nlin for s in (b, vneg(b))}))
    cone = Cone(rank, rays, lin, canon_normals)
    _verify(cone)
    return cone


def cone_from_generators(rays, rank: int, lineality=()) -> Cone:
    """Canonical cone generated by the given rays and lineality vectors.

    Inputs are normalised (made primitive, deduplicated); duplicates and
    non-primitive vectors are accepted, never rejected.
    """
    dual = cone_from_halfspaces(_generator_constraints(
        _canon_constraints(rays, rank), _canon_constraints(lineality, rank)), rank)
    return dual_cone(dual)


def _verify(cone: Cone) -> None:
    for r in cone.rays:
        assert all(dot(h, r) >= 0 for h in cone.normals), "ray violates a normal"
    for l in cone.lineality:
        assert all(dot(h, l) == 0 for h in cone.normals), "lineality not in every hyperplane"


def zero_cone(rank: int) -> Cone:
    return cone_from_generators((), rank)


def full_space(rank: int) -> Cone:
    return cone_from_halfspaces((), rank)


def dual_cone(cone: Cone) -> Cone:
    """The dual cone: all dual vectors nonnegative on ``cone``.

    The halfspace description of the dual is exactly the generator list of
    the input, so the double dual reproduces the input structurally.
    """
    return cone_from_halfspaces(_generator_constraints(cone.rays, cone.lineality),
                                cone.rank)


def extreme_rays_from_halfspaces(normals, rank: int):
    """Primitive extreme rays and lineality basis of an H-described cone."""
    rays, lin = _vrep(_canon_constraints(normals, rank), rank)
    return list(rays), list(lin)


def is_strongly_convex(cone: Cone) -> bool:
    """True when the cone contains no line through the origin."""
    return not cone.lineality


def intersect(a: Cone, b: Cone) -> Cone:
    if a.rank != b.rank:
        raise DimensionError("cones of different rank")
    return cone_from_halfspaces(a.normals + b.normals, a.rank)


def cone_sum(a: Cone, b: Cone) -> Cone:
    """Minkowski sum, generated by the union of the two generator sets."""
    if a.rank != b.rank:
        raise DimensionError("cones of different rank")
    return cone_from_generators(a.rays + b.rays, a.rank,
                                lineality=a.lineality + b.lineality)


def facet_normals(cone: Cone) -> tuple[Vec, ...]:
    """Normals that are not tight on the whole cone (drops equality pairs)."""
    gens = cone.rays + cone.lineality
    return tuple(h for h in cone.normals
                 if any(dot(h, g) != 0 for g in gens))


def is_face(face: Cone, cone: Cone) -> bool:
    """Exact test: is ``face`` equal to ``cone ∩ u⊥`` for some u in the dual?

    Implemented without search: the smallest face of ``cone`` containing
    ``face`` is the intersection with all facet hyperplanes tight on it, and
    ``face`` is a face iff it equals that cone.
    """
    if face.rank != cone.rank:
        raise DimensionError("cones of different rank")
    gens = face.rays + face.lineality
    if not all(cone.contains(g) for g in gens):
        return False
    tight = [h for h in cone.normals if all(dot(h, g) == 0 for g in gens)]
    hull = cone_from_halfspaces(cone.normals + tuple(vneg(h) for h in tight),
                                cone.rank)
    return hull == face


def faces(cone: Cone) -> list[Cone]:
    """All faces of a strongly convex cone, including ``{0}`` and the cone.

    Each face arises as ``cone ∩ u⊥`` where u is the sum of a subset of the
    facet normals; subsets are enumerated exhaustively and the results
    deduplicated by canonical form.
    """
    if not is_strongly_convex(cone):
        raise DomainError("faces are enumerated for strongly convex cones only")
    fns = facet_normals(cone)
    seen: dict[tuple, Cone] = {}
    for k in range(len(fns) + 1):
        for subset in combinations(fns, k):
            u = tuple(sum(col) for col in zip(*subset)) if subset else (0,) * cone.rank
            if is_zero(u):
                f = cone
            else:
                f = cone_from_halfspaces(cone.normals + (u, vneg(u)), cone.rank)
            seen.setdefault(f.sort_key(), f)
    return [seen[k] for k in sorted(seen)]
