import random

import pytest

from torigid import (
    Cone,
    cone_from_generators,
    cone_from_halfspaces,
    cone_sum,
    dual_cone,
    extreme_rays_from_halfspaces,
    faces,
    full_space,
    intersect,
    is_face,
    is_strongly_convex,
    pairing,
    zero_cone,
)
from torigid.errors import DimensionError

from oracles import cone_members_box, in_cone_oracle, primitive_box_vectors


def random_strongly_convex(rng, rank, entry=5):
    while True:
        k = rng.randint(1, rank + 2)
        gens = []
        for _ in range(k):
            v = tuple(rng.randint(-entry, entry) for _ in range(rank))
            if any(v):
                gens.append(v)
        if not gens:
            continue
        c = cone_from_generators(gens, rank)
        if is_strongly_convex(c):
            return c


def test_pairing_examples():
    assert pairing((1, 0), (0, 1)) == 0
    assert pairing((-1, 1), (-1, -1)) == 0
    assert pairing((-2, -1), (-1, 2)) == 0
    with pytest.raises(DimensionError):
        pairing((1, 0), (1, 0, 0))


def test_extreme_rays_examples():
    assert extreme_rays_from_halfspaces([(1, 0), (0, 1)], 2) == ([(0, 1), (1, 0)], [])
    assert extreme_rays_from_halfspaces([(-1, -1), (0, 1)], 2) == ([(-1, 0), (-1, 1)], [])
    assert extreme_rays_from_halfspaces([(0, 1)], 2) == ([(0, 1)], [(1, 0)])


def test_dual_cone_examples(quadrant):
    assert dual_cone(quadrant).rays == ((0, 1), (1, 0))
    hz3 = cone_from_generators([(-1, 2), (0, -1)], 2)
    assert dual_cone(hz3).rays == ((-2, -1), (-1, 0))
    d = dual_cone(zero_cone(2))
    assert d.rays == () and d.lineality == ((0, 1), (1, 0))


def test_zero_and_full_space_representations():
    z = zero_cone(2)
    assert z.rays == () and z.lineality == ()
    assert z.normals == ((-1, 0), (0, -1), (0, 1), (1, 0))
    ws = full_space(2)
    assert ws.rays == () and ws.lineality == ((0, 1), (1, 0)) and ws.normals == ()
    assert dual_cone(ws) == z


def test_is_strongly_convex(quadrant):
    assert is_strongly_convex(quadrant)
    assert not is_strongly_convex(cone_from_halfspaces([(0, 1)], 2))
    c = cone_from_generators([(-1, -1), (0, 1)], 2)
    assert is_strongly_convex(c)
    # oracle: nothing nonzero lies in both c and -c
    neg = cone_from_generators([(1, 1), (0, -1)], 2)
    for v in primitive_box_vectors(2, 3):
        assert not (c.contains(v) and neg.contains(v))


def test_intersect_examples(quadrant):
    assert intersect(quadrant, quadrant) == quadrant
    s2 = cone_from_generators([(-1, -1), (0, 1)], 2)
    s3 = cone_from_generators([(-1, -1), (1, 0)], 2)
    m1 = intersect(quadrant, s2)
    assert m1.rays == ((0, 1),) and m1.lineality == ()
    m2 = intersect(s2, s3)
    assert m2.rays == ((-1, -1),)
    # brute-force membership oracle over the box
    for v in primitive_box_vectors(2, 4):
        both = (in_cone_oracle(quadrant.rays, (), v)
                and in_cone_oracle(s2.rays, (), v))
        assert both == m1.contains(v)


def test_cone_sum_examples(quadrant):
    s = cone_sum(quadrant, cone_from_generators([(-1, 0), (-1, 1)], 2))
    assert s.rays == ((0, 1),) and s.lineality == ((1, 0),)
    assert cone_sum(quadrant, zero_cone(2)) == quadrant
    line = cone_sum(cone_from_generators([(1, 0)], 2),
                    cone_from_generators([(-1, 0)], 2))
    assert line.rays == () and line.lineality == ((1, 0),)


def test_lemma_sum_dual_identity_random():
    rng = random.Random(101)
    for _ in range(40):
        rank = rng.randint(1, 3)
        a = random_strongly_convex(rng, rank)
        b = random_strongly_convex(rng, rank)
        assert cone_sum(dual_cone(a), dual_cone(b)) == dual_cone(intersect(a, b))


def test_duality_involution_random():
    rng = random.Random(202)
    for _ in range(40):
        rank = rng.randint(1, 4)
        c = random_strongly_convex(rng, rank)
        assert dual_cone(dual_cone(c)) == c


def test_representation_consistency():
    rng = random.Random(303)
    cones = [random_strongly_convex(rng, rng.randint(1, 3)) for _ in range(20)]
    cones += [zero_cone(2), full_space(2), cone_from_halfspaces([(0, 1)], 2)]
    for c in cones:
        for r in c.rays:
            assert all(pairing(h, r) >= 0 for h in c.normals)
        for l in c.lineality:
            assert all(pairing(h, l) == 0 for h in c.normals)
        rays, lin = extreme_rays_from_halfspaces(c.normals, c.rank)
        assert tuple(rays) == c.rays and tuple(lin) == c.lineality


def test_membership_oracle_agreement(quadrant):
    cones = [
        quadrant,
        cone_from_generators([(-1, -1), (0, 1)], 2),
        cone_from_halfspaces([(0, 1)], 2),
        cone_from_generators([(-1, 2), (0, -1)], 2),
        zero_cone(2),
        full_space(2),
    ]
    for c in cones:
        for v in primitive_box_vectors(2, 4):
            assert c.contains(v) == in_cone_oracle(c.rays, c.lineality, v), (c, v)


def test_faces_examples(quadrant):
    fs = faces(quadrant)
    assert len(fs) == 4
    keys = {f.rays for f in fs}
    assert keys == {(), ((1, 0),), ((0, 1),), ((0, 1), (1, 0))}
    ray = cone_from_generators([(1, 0)], 2)
    assert len(faces(ray)) == 2
    c = cone_from_generators([(1, 0), (1, 2)], 2)
    fs = faces(c)
    assert len(fs) == 4
    assert {f.rays for f in fs if f.dim == 1} == {((1, 0),), ((1, 2),)}


def test_is_face(quadrant):
    ray = cone_from_generators([(0, 1)], 2)
    assert is_face(ray, quadrant)
    assert is_face(quadrant, quadrant)
    assert is_face(zero_cone(2), quadrant)
    assert not is_face(cone_from_generators([(1, 1)], 2), quadrant)
    assert not is_face(cone_from_generators([(-1, 0)], 2), quadrant)


def test_degenerate_inputs_normalised():
    c = cone_from_generators([(2, 0), (1, 0), (0, 3), (0, 1)], 2)
    assert c.rays == ((0, 1), (1, 0))
    c2 = cone_from_halfspaces([(0, 2), (0, 1), (0, 1)], 2)
    assert c2 == cone_from_halfspaces([(0, 1)], 2)
