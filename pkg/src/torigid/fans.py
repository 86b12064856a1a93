"""Fans of strongly convex cones: validation, example fans, maps of fans."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from .cones import (
    Cone,
    cone_from_generators,
    dual_cone,
    faces,
    intersect,
    is_face,
    is_strongly_convex,
    zero_cone,
)
from .errors import DimensionError, DomainError
from .intlinalg import Vec, det_and_adjugate, dot, primitive, rational_rank, solve_rational_coords
from .semigroups import face_witness


@dataclass(frozen=True)
class FanViolation:
    """One failed fan axiom, reported as data."""
    kind: str                 # "not_strongly_convex" | "missing_face" |
                              # "intersection_not_face" | "duplicate_cone"
    cone_ids: tuple[str, ...]
    detail: str

    def to_json(self):
        return {"kind": self.kind, "cones": list(self.cone_ids), "detail": self.detail}


class Fan:
    """A validated fan: face-closed, intersection-compatible cone collection.

    ``cones`` maps stable identifiers to canonical cones; ``face_relations``
    maps every pair ``(face_id, cone_id)`` with the first a face of the
    second (including the improper face) to its witness vector.  Instances
    are built by ``validate_fan`` and treated as immutable.
    """

    def __init__(self, rank: int, cones: dict[str, Cone],
                 face_relations: dict[tuple[str, str], Vec]):
        self.rank = rank
        self.cones = dict(cones)
        self.face_relations = dict(face_relations)
        self._id_by_key = {c.sort_key(): i for i, c in cones.items()}

    def id_of(self, cone: Cone) -> str:
        return self._id_by_key[cone.sort_key()]

    def sorted_ids(self) -> list[str]:
        return sorted(self.cones)

    def ids_of_dim(self, dim: int) -> list[str]:
        return [i for i in self.sorted_ids() if self.cones[i].dim == dim]

    def maximal_ids(self) -> list[str]:
        tops = max((c.dim for c in self.cones.values()), default=0)
        return self.ids_of_dim(tops)

    def __repr__(self):
        return f"Fan(rank={self.rank}, cones={len(self.cones)})"


@dataclass(frozen=True)
class FanMap:
    """A lattice map together with a cone assignment source -> target."""
    matrix: tuple[Vec, ...]
    cone_assignment: tuple[tuple[str, str], ...]

    def assignment_map(self) -> dict[str, str]:
        return dict(self.cone_assignment)


@dataclass(frozen=True)
class FanMapViolation:
    source_id: str
    image_rays: tuple[Vec, ...]
    detail: str


def face_id(cone: Cone) -> str:
    """Readable derived identifier for a face cone."""
    if not cone.rays:
        return "face:0"
    return "face:" + "|".join(",".join(str(a) for a in r) for r in cone.rays)


def _named(cones) -> dict[str, Cone]:
    if isinstance(cones, dict):
        return dict(cones)
    named = {}
    for i, c in enumerate(cones):
        named[f"c{i}"] = c
    return named


def complete_faces(cones) -> list[Cone]:
    """Union of all faces of all given cones, deduplicated and canonical."""
    seen: dict[tuple, Cone] = {}
    for c in cones:
        for f in faces(c):
            seen.setdefault(f.sort_key(), f)
    return [seen[k] for k in sorted(seen)]


def extend_with_faces(named: dict[str, Cone]) -> dict[str, Cone]:
    """Add every missing face under a generated ``face:`` identifier."""
    out = dict(named)
    keys = {c.sort_key() for c in named.values()}
    for f in complete_faces(named.values()):
        if f.sort_key() not in keys:
            out[face_id(f)] = f
            keys.add(f.sort_key())
    return out


def validate_fan(cones):
    """Check the fan axioms; return a ``Fan`` or the complete violation list.

    ``cones`` is a mapping id -> Cone (a plain iterable gets ids ``c0, c1,
    ...``).  Violations are returned as data, never raised: face closure and
    the intersection condition are both reported per offending cone pair.
    """
    named = _named(cones)
    ranks = {c.rank for c in named.values()}
    if len(ranks) > 1:
        raise DimensionError("cones of different rank in one fan")
    violations: list[FanViolation] = []
    by_key: dict[tuple, str] = {}
    for i in sorted(named):
        c = named[i]
        if not is_strongly_convex(c):
            violations.append(FanViolation(
                "not_strongly_convex", (i,), f"cone {i} contains a line"))
        k = c.sort_key()
        if k in by_key:
            violations.append(FanViolation(
                "duplicate_cone", (by_key[k], i),
                f"cones {by_key[k]} and {i} are geometrically equal"))
        else:
            by_key[k] = i
    if violations:
        return violations
    for i in sorted(named):
        for f in faces(named[i]):
            if f.sort_key() not in by_key:
                violations.append(FanViolation(
                    "missing_face", (i,),
                    f"face with rays {list(f.rays)} of cone {i} is not in the fan"))
    for i, j in combinations(sorted(named), 2):
        meet = intersect(named[i], named[j])
        bad = [x for x, c in ((i, named[i]), (j, named[j])) if not is_face(meet, c)]
        if bad:
            violations.append(FanViolation(
                "intersection_not_face", (i, j),
                f"intersection with rays {list(meet.rays)} is not a face of {', '.join(bad)}"))
    if violations:
        return violations
    relations: dict[tuple[str, str], Vec] = {}
    ids = sorted(named)
    for ti in ids:
        for si in ids:
            w = face_witness(named[ti], named[si])
            if w is not None:
                relations[(ti, si)] = w
    return Fan(next(iter(ranks)), named, relations)


def _fan_or_bug(named: dict[str, Cone]) -> Fan:
    fan = validate_fan(named)
    if not isinstance(fan, Fan):
        raise RuntimeError(f"internal fan construction is invalid: {fan}")
    return fan


def projective_fan(n: int) -> Fan:
    """Fan of n-dimensional projective space: 2^(n+1) - 1 cones.

    Rays are the standard basis vectors together with their negated sum;
    there is one cone for every proper subset of the n+1 rays, the empty
    subset giving the origin.
    """
    if n < 1:
        raise DomainError("projective fan needs n >= 1")
    vs = [tuple(-1 for _ in range(n))]
    for i in range(n):
        vs.append(tuple(1 if j == i else 0 for j in range(n)))
    named = {}
    for k in range(n + 1):
        for subset in combinations(range(n + 1), k):
            cid = "origin" if not subset else "s" + "".join(str(i) for i in subset)
            named[cid] = cone_from_generators([vs[i] for i in subset], n)
    return _fan_or_bug(named)


def hirzebruch_fan(a: int) -> Fan:
    """The 9-cone rank-2 fan of the degree-``a`` ruled surface.

    Maximal cones s1..s4 are spanned by (u1,u2), (u1,-u2), (-u1+a*u2,-u2)
    and (-u1+a*u2,u2); the four shared rays and the origin complete the fan.
    """
    if a < 0:
        raise DomainError("hirzebruch fan needs a >= 0")
    u1, u2 = (1, 0), (0, 1)
    w = (-1, a)
    named = {
        "s1": cone_from_generators([u1, u2], 2),
        "s2": cone_from_generators([u1, (0, -1)], 2),
        "s3": cone_from_generators([w, (0, -1)], 2),
        "s4": cone_from_generators([w, u2], 2),
        "s12": cone_from_generators([u1], 2),
        "s14": cone_from_generators([u2], 2),
        "s23": cone_from_generators([(0, -1)], 2),
        "s34": cone_from_generators([w], 2),
        "origin": zero_cone(2),
    }
    return _fan_or_bug(named)


def product_p1_p1_fan() -> Fan:
    """Fan of the product of two projective lines: the four quadrants."""
    named = {}
    quads = {"s1": [(1, 0), (0, 1)], "s2": [(1, 0), (0, -1)],
             "s3": [(-1, 0), (0, -1)], "s4": [(-1, 0), (0, 1)]}
    for cid, gens in quads.items():
        named[cid] = cone_from_generators(gens, 2)
    return _fan_or_bug(extend_with_faces(named))


def is_complete(fan: Fan) -> bool:
    """Whether the fan's support is the whole ambient space.

    Exact for rank <= 3 via the face-pairing criterion: at least one
    maximal-dimensional cone, every cone a face of one, and every
    codimension-one cone a face of exactly two (so the union has no
    boundary).  For rank >= 4 the result is a box-sampling heuristic only:
    every primitive vector with coordinates in [-3, 3] must lie in some cone.
    """
    n = fan.rank
    if n <= 3:
        tops = fan.ids_of_dim(n)
        if not tops:
            return False
        top_set = set(tops)
        covered = set()
        ridge_counts = {i: 0 for i in fan.ids_of_dim(n - 1)}
        for (fi, ci) in fan.face_relations:
            if ci in top_set:
                covered.add(fi)
                if fi in ridge_counts and fi != ci:
                    ridge_counts[fi] += 1
        if set(fan.cones) - covered:
            return False
        return all(c == 2 for c in ridge_counts.values())
    return _box_covered(fan, 3)


def _box_covered(fan: Fan, radius: int) -> bool:
    from itertools import product as iproduct
    cones = list(fan.cones.values())
    for p in iproduct(range(-radius, radius + 1), repeat=fan.rank):
        if all(x == 0 for x in p):
            continue
        if not any(c.contains(p) for c in cones):
            return False
    return True


def _apply_matrix(matrix, v: Vec) -> Vec:
    return tuple(dot(row, v) for row in matrix)


def fan_map_check(matrix, src: Fan, dst: Fan):
    """Check that a lattice map carries each source cone into a target cone.

    Returns the ``FanMap`` with the first containing target cone in
    canonical order assigned to every source cone, or a ``FanMapViolation``
    naming the first source cone whose image fits nowhere.
    """
    matrix = tuple(tuple(r) for r in matrix)
    if len(matrix) != dst.rank or any(len(r) != src.rank for r in matrix):
        raise DimensionError("matrix shape does not map the source rank to the target rank")
    targets = sorted(dst.cones, key=lambda i: dst.cones[i].sort_key())
    assignment = []
    for sid in src.sorted_ids():
        gens = src.cones[sid].rays + src.cones[sid].lineality
        image = [_apply_matrix(matrix, g) for g in gens]
        hit = next((tid for tid in targets
                    if all(dst.cones[tid].contains(v) for v in image)), None)
        if hit is None:
            return FanMapViolation(sid, tuple(image),
                                   f"image of cone {sid} is contained in no target cone")
        assignment.append((sid, hit))
    return FanMap(matrix, tuple(assignment))


def _all_rays(fan: Fan) -> list[Vec]:
    out = set()
    for c in fan.cones.values():
        out.update(c.rays)
    return sorted(out)


def _is_fan_isomorphism(matrix, src: Fan, dst: Fan) -> bool:
    det, _ = det_and_adjugate(matrix)
    if det not in (1, -1):
        return False
    src_rays = _all_rays(src)
    dst_rays = set(_all_rays(dst))
    images = {_apply_matrix(matrix, r) for r in src_rays}
    if images != dst_rays:
        return False
    dst_keys = {c.sort_key() for c in dst.cones.values()}
    src_keys = set()
    for c in src.cones.values():
        image = cone_from_generators([_apply_matrix(matrix, r) for r in c.rays], src.rank)
        src_keys.add(image.sort_key())
    return src_keys == dst_keys


def fans_isomorphic(a: Fan, b: Fan, entry_bound: int = 3):
    """Search for a unimodular lattice automorphism identifying two fans.

    Tries the identity first, then every matrix determined by assigning a
    spanning subset of the first fan's rays to rays of the second; matrices
    with an entry outside ``[-entry_bound, entry_bound]`` are skipped.  Ray
    sets that do not span the ambient space are compared through the
    identity only.  Returns a witness matrix or ``None``.
    """
    if a.rank != b.rank:
        raise DimensionError("fans of different rank")
    n = a.rank
    if len(a.cones) != len(b.cones):
        return None
    identity = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
    if _is_fan_isomorphism(identity, a, b):
        return identity
    a_rays = _all_rays(a)
    b_rays = _all_rays(b)
    if len(a_rays) != len(b_rays):
        return None
    basis = []
    for r in a_rays:
        if rational_rank(basis + [r]) > len(basis):
            basis.append(r)
        if len(basis) == n:
            break
    if len(basis) < n:
        return None
    # rows of the unknown matrix solve basis[i] . row == targets[i][coord]
    basis_t = tuple(tuple(basis[i][j] for i in range(n)) for j in range(n))
    for targets in permutations(b_rays, n):
        rows = []
        ok = True
        for coord in range(n):
            sol = solve_rational_coords(basis_t, tuple(t[coord] for t in targets))
            if sol is None or any(x.denominator != 1 for x in sol):
                ok = False
                break
            row = tuple(int(x) for x in sol)
            if any(abs(x) > entry_bound for x in row):
                ok = False
                break
            rows.append(row)
        if not ok:
            continue
        matrix = tuple(rows)
        if _is_fan_isomorphism(matrix, a, b):
            return matrix
    return None
