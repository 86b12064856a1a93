"""Affine semigroups of lattice points in dual cones.

``semigroup_of_cone`` realises finite generation: the lattice points of the
dual cone form a finitely generated semigroup, and a canonical minimal
generating set is computed by splitting off the lineality lattice and
running a Hilbert-basis enumeration (triangulation plus half-open
fundamental parallelepipeds, then a minimality sweep) on the pointed part.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .cones import (
    Cone,
    cone_from_generators,
    cone_from_halfspaces,
    dual_cone,
    facet_normals,
    intersect,
    is_face,
    is_strongly_convex,
    zero_cone,
)
from .errors import DimensionError, DomainError, InconclusiveSearchError
from .intlinalg import (
    Vec,
    det_and_adjugate,
    dot,
    hnf_solve,
    integer_kernel_basis,
    is_zero,
    kernel_split,
    rational_rank,
    reduce_mod_lattice,
    row_hnf,
    solve_rational_coords,
    vadd,
    vneg,
    vscale,
    vsub,
)


@dataclass(frozen=True)
class AffineSemigroup:
    """Lattice points of a dual cone with a canonical minimal generating set.

    ``cone`` is the cone the lattice points live in (the dual of the fan
    cone), possibly non-pointed.  ``generators`` is minimal: no generator is
    an N-combination of the others.
    """
    rank: int
    cone: Cone
    generators: tuple[Vec, ...]

    def contains(self, u) -> bool:
        return self.cone.contains(u)


@dataclass(frozen=True)
class Decomposition:
    """Certificate that a target equals ``sum multiplicities[i] * generators[i]``."""
    multiplicities: tuple[int, ...]

    def as_map(self) -> dict[int, int]:
        return {i: m for i, m in enumerate(self.multiplicities) if m}


@dataclass(frozen=True)
class CoverCertificate:
    """Certificate ``generator == sigma_part + tau_part`` for a covering check."""
    generator: Vec
    sigma_part: Vec
    tau_part: Vec


def semigroup_of_cone(cone: Cone) -> AffineSemigroup:
    """The semigroup of dual lattice points of a strongly convex cone."""
    if not is_strongly_convex(cone):
        raise DomainError("fan cones must be strongly convex")
    dual = dual_cone(cone)
    return AffineSemigroup(cone.rank, dual, _hilbert_generators(dual))


@functools.lru_cache(maxsize=None)
def torus_semigroup(rank: int) -> AffineSemigroup:
    """The full dual lattice, generated by the +/- standard basis."""
    return semigroup_of_cone(zero_cone(rank))


def contains(semigroup: AffineSemigroup, u) -> bool:
    """Membership of a lattice vector (integrality is inherent in the type)."""
    return semigroup.contains(u)


@functools.lru_cache(maxsize=None)
def _hilbert_generators(cone: Cone) -> tuple[Vec, ...]:
    """Canonical minimal generating set of ``cone ∩ Z^rank``.

    The lineality lattice contributes its basis with both signs; the pointed
    quotient contributes its lifted Hilbert basis (canonical representatives
    modulo the lineality lattice).
    """
    kernel, comp = kernel_split(cone.normals, cone.rank)
    gens: set[Vec] = set()
    for l in kernel:
        gens.add(l)
        gens.add(vneg(l))
    d = cone.rank - len(kernel)
    if d > 0:
        descended = sorted({tuple(dot(u, h) for u in comp) for h in cone.normals})
        quotient = cone_from_halfspaces(descended, d)
        for h in _pointed_hilbert(quotient):
            x = tuple(sum(h[i] * comp[i][j] for i in range(d)) for j in range(cone.rank))
            gens.add(reduce_mod_lattice(x, kernel))
    return tuple(sorted(gens))


def _pointed_hilbert(cone: Cone) -> tuple[Vec, ...]:
    """Hilbert basis of a pointed cone's lattice points.

    Lower-dimensional cones are first conjugated into their saturated span,
    which reduces to the full-dimensional case.  There the cone is
    triangulated by pulling with the lex-smallest ray, the lattice points of
    each half-open fundamental parallelepiped are enumerated coset by coset,
    and a grading-ordered sweep strips every N-decomposable candidate.
    """
    rays = cone.rays
    if not rays:
        return ()
    d = cone.rank
    k = rational_rank(rays)
    if k < d:
        span = integer_kernel_basis(integer_kernel_basis(list(rays), d), d)
        coords = []
        for r in rays:
            c = hnf_solve(span, r)
            assert c is not None
            coords.append(c)
        inner = cone_from_generators(coords, k)
        basis = list(span)
        return tuple(sorted(
            tuple(sum(h[i] * basis[i][j] for i in range(k)) for j in range(d))
            for h in _pointed_hilbert(inner)))
    grading = tuple(sum(col) for col in zip(*facet_normals(cone)))
    candidates = set(rays)
    for simplex in _triangulate(rays, cone):
        candidates.update(_parallelepiped_points(simplex))
    candidates.discard((0,) * d)
    kept: list[Vec] = []
    for x in sorted(candidates, key=lambda v: (dot(grading, v), v)):
        reducible = False
        for g in kept:
            w = vsub(x, g)
            if not is_zero(w) and cone.contains(w):
                reducible = True
                break
        if not reducible:
            kept.append(x)
    return tuple(sorted(kept))


def _triangulate(rays: tuple[Vec, ...], cone: Cone) -> list[tuple[Vec, ...]]:
    """Pulling triangulation: join the lex-smallest ray with the facets
    that do not contain it."""
    k = rational_rank(rays)
    if len(rays) == k:
        return [rays]
    r0 = rays[0]
    out = []
    for h in cone.normals:
        if dot(h, r0) > 0:
            sub = tuple(r for r in rays if dot(h, r) == 0)
            subcone = cone_from_generators(sub, cone.rank)
            for s in _triangulate(sub, subcone):
                out.append(s + (r0,))
    return out


def _parallelepiped_points(simplex: tuple[Vec, ...]) -> list[Vec]:
    """Lattice points of the half-open parallelepiped spanned by a simplex.

    Enumerates one representative per coset of the simplex lattice, using a
    triangular basis from the HNF of the generators; the count equals the
    absolute determinant, so this never scans an ambient box.
    """
    d = len(simplex)
    cols = [[simplex[j][i] for j in range(d)] for i in range(d)]  # matrix with columns = rays
    det, adj = det_and_adjugate(cols)
    assert det != 0
    H, _ = row_hnf(list(simplex), d)  # upper triangular; box over its diagonal hits every coset once
    points = []
    for rep in product(*(range(H[i][i]) for i in range(d))):
        t = [Fraction(sum(adj[i][j] * rep[j] for j in range(d)), det) for i in range(d)]
        fl = [x.numerator // x.denominator for x in t]
        points.append(tuple(rep[r] - sum(fl[i] * simplex[i][r] for i in range(d))
                            for r in range(d)))
    return points


class _DecomposeSearch:
    """Depth-first multiplicity search, one generator index at a time.

    Multiplicities are tried from the largest cone-feasible value downwards.
    The search prunes on cone membership of the remainder, which is valid
    because every generator lies in the cone.  Whenever the configured bound
    cuts off feasible multiplicities the truncation is recorded, so "not
    found" can be split into a definite no and an inconclusive answer.
    """

    def __init__(self, cone: Cone, gens: tuple[Vec, ...], bound: int):
        self.cone = cone
        self.gens = gens
        self.bound = bound
        self.truncated = False
        self.failed: dict[tuple[int, Vec], bool] = {}

    def run(self, target: Vec):
        return self._dfs(0, target)

    def _max_feasible(self, rem: Vec, g: Vec):
        cap = None
        for h in self.cone.normals:
            b = dot(h, g)
            if b > 0:
                t = dot(h, rem) // b
                cap = t if cap is None else min(cap, t)
        if cap is None:
            return self.bound, True
        return min(cap, self.bound), cap > self.bound

    def _dfs(self, i: int, rem: Vec):
        if is_zero(rem):
            return (0,) * (len(self.gens) - i)
        if i == len(self.gens):
            return None
        key = (i, rem)
        if key in self.failed:
            if self.failed[key]:
                self.truncated = True
            return None
        cap, cut = self._max_feasible(rem, self.gens[i])
        if cut:
            self.truncated = True
        for t in range(cap, -1, -1):
            tail = self._dfs(i + 1, vsub(rem, vscale(t, self.gens[i])))
            if tail is not None:
                return (t,) + tail
        self.failed[key] = cut
        return None


def decompose(semigroup: AffineSemigroup, u, bound: int = 12,
              generators=None) -> Decomposition | None:
    """First decomposition of ``u`` over the generators, multiplicities <= bound.

    Returns ``None`` only when the bounded search space was exhausted without
    truncation, i.e. nonexistence is proven within the search definition;
    raises ``InconclusiveSearchError`` when the bound actually cut the search
    off.  ``generators`` may restrict the search to a sublist (used by
    minimality checks); every substitute generator must lie in the cone.
    """
    u = tuple(u)
    if len(u) != semigroup.rank:
        raise DimensionError("target has the wrong length")
    gens = semigroup.generators if generators is None else tuple(tuple(g) for g in generators)
    if not semigroup.cone.contains(u):
        return None
    search = _DecomposeSearch(semigroup.cone, gens, bound)
    result = search.run(u)
    if result is not None:
        return Decomposition(result)
    if search.truncated:
        raise InconclusiveSearchError(
            f"no decomposition of {u} with multiplicities <= {bound}; search truncated")
    return None


def face_localization(semigroup: AffineSemigroup, u, bound: int = 12) -> AffineSemigroup:
    """Semigroup of the face cut out by ``u``, verified against the source.

    For u in the semigroup this is the semigroup of ``cone ∩ u⊥`` on the fan
    side; every generator of the result is checked to decompose as
    ``s + k * (-u)`` with s in the source semigroup, which is the lattice
    shadow of localising the chart algebra at the monomial of u.
    """
    u = tuple(u)
    if not semigroup.contains(u):
        raise DomainError(f"{u} is not in the semigroup")
    sigma = dual_cone(semigroup.cone)
    if is_zero(u):
        tau = sigma
    else:
        tau = cone_from_halfspaces(sigma.normals + (u, vneg(u)), sigma.rank)
    localized = semigroup_of_cone(tau)
    for g in localized.generators:
        if not any(semigroup.contains(vadd(g, vscale(k, u))) for k in range(bound + 1)):
            raise InconclusiveSearchError(
                f"could not certify {g} = s + k*(-{u}) with k <= {bound}")
    return localized


def face_witness(face: Cone, cone: Cone) -> Vec | None:
    """A dual vector u with ``cone ∩ u⊥ == face``, or None when not a face.

    The witness is the sum of the canonical semigroup generators of the cone
    that vanish on the whole face; it is zero exactly for the improper face.
    """
    if face.rank != cone.rank:
        raise DimensionError("cones of different rank")
    if not is_face(face, cone):
        return None
    gens = _hilbert_generators(dual_cone(cone))
    fgens = face.rays + face.lineality
    u = (0,) * cone.rank
    for g in gens:
        if all(dot(g, x) == 0 for x in fgens):
            u = vadd(u, g)
    return u


@functools.lru_cache(maxsize=None)
def _sorted_members(cone: Cone, radius: int) -> tuple[Vec, ...]:
    # lattice points of the cone in the centred box, ordered by (L1, lex)
    pts = [p for p in product(range(-radius, radius + 1), repeat=cone.rank)
           if cone.contains(p)]
    pts.sort(key=lambda p: (sum(abs(a) for a in p), p))
    return tuple(pts)


def sum_covers(s_sigma: AffineSemigroup, s_tau: AffineSemigroup,
               s_rho: AffineSemigroup, bound: int | None = None) -> list[CoverCertificate]:
    """Certificates that the two chart semigroups cover the overlap semigroup.

    For every generator w of the overlap semigroup, finds w = s + t with s in
    the first semigroup and t in the second.  Candidates s are tried in a
    fixed order: the trivial split s = w first, then s = 0, then ascending
    (L1 norm, lex) over a box whose radius defaults to the target's max
    coordinate plus the sum of the first semigroup's generator max
    coordinates.  Existence is a theorem for fan cones, so a miss at the
    default radius retries once at twice the radius and then reports an
    inconclusive search, never a refutation.
    """
    sigma = dual_cone(s_sigma.cone)
    tau = dual_cone(s_tau.cone)
    rho = dual_cone(s_rho.cone)
    if intersect(sigma, tau) != rho:
        raise DomainError("third semigroup is not the overlap of the first two")
    gen_span = sum(max(abs(a) for a in g) for g in s_sigma.generators) if s_sigma.generators else 0
    zero = (0,) * s_rho.rank
    certs = []
    for w in s_rho.generators:
        r0 = bound if bound is not None else max(abs(a) for a in w) + gen_span
        r0 = max(r0, 1)
        found = None
        for radius in (r0, 2 * r0):
            head = (w, zero) if radius == r0 else ()
            for s in (*head, *_sorted_members(s_sigma.cone, radius)):
                if not s_sigma.cone.contains(s):
                    continue
                t = vsub(w, s)
                if s_tau.cone.contains(t):
                    found = CoverCertificate(w, s, t)
                    break
            if found:
                break
        if not found:
            raise InconclusiveSearchError(
                f"no covering certificate for {w} within radius {2 * r0}")
        certs.append(found)
    return certs


@functools.lru_cache(maxsize=None)
def order_basis(semigroup: AffineSemigroup) -> tuple[Vec, ...]:
    """Deterministic term-order basis: scan the canonical generator list and
    greedily keep vectors that raise the rational rank, stopping at full rank."""
    basis: list[Vec] = []
    for g in semigroup.generators:
        if rational_rank(basis + [g]) > len(basis):
            basis.append(g)
        if len(basis) == semigroup.rank:
            return tuple(basis)
    raise RuntimeError("semigroup generators do not span; cone was not full-dimensional")


def term_order_key(basis: tuple[Vec, ...], u) -> tuple[Fraction, ...]:
    """Coordinates of u in the basis; lex order on these keys is the term order."""
    if rational_rank(basis) != len(basis):
        raise DomainError("order basis must be linearly independent")
    coords = solve_rational_coords(basis, tuple(u))
    if coords is None:
        raise DomainError("vector is outside the span of the basis")
    return coords


def term_order_compare(basis, u, v) -> int:
    """-1, 0 or 1 comparing u and v in the additive-compatible term order."""
    basis = tuple(tuple(b) for b in basis)
    ku = term_order_key(basis, u)
    kv = term_order_key(basis, v)
    if ku == kv:
        return 0
    return -1 if ku < kv else 1


def binomial_relations(semigroup: AffineSemigroup, degree_bound: int):
    """All pairs of distinct multiplicity vectors with equal weighted sums.

    Both sides have total degree at most ``degree_bound``; pairs are
    deduplicated up to swap and returned in canonical order.  This is a
    degree-truncated presentation aid, with no claim of generating the full
    relation ideal.
    """
    gens = semigroup.generators
    zero = (0,) * semigroup.rank
    by_sum: dict[Vec, list[tuple[int, ...]]] = {}

    def emit(prefix: tuple[int, ...], i: int, remaining: int, total: Vec):
        if i == len(gens):
            by_sum.setdefault(total, []).append(prefix)
            return
        for m in range(remaining + 1):
            emit(prefix + (m,), i + 1, remaining - m,
                 vadd(total, vscale(m, gens[i])) if m else total)

    emit((), 0, degree_bound, zero)
    rels = []
    for group in by_sum.values():
        if len(group) > 1:
            group.sort()
            for i in range(len(group)):
                for j in range(i + 1, len(group)):
                    rels.append((group[i], group[j]))
    return sorted(rels)
