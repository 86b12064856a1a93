import random
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from torigid import (
    binomial_relations,
    cone_from_generators,
    contains,
    decompose,
    dual_cone,
    face_localization,
    face_witness,
    intersect,
    order_basis,
    semigroup_of_cone,
    sum_covers,
    term_order_compare,
    torus_semigroup,
    zero_cone,
)
from torigid.cones import cone_from_halfspaces, is_strongly_convex
from torigid.errors import DomainError, InconclusiveSearchError
from torigid.intlinalg import vadd, vneg, vscale
from torigid.semigroups import AffineSemigroup

from oracles import brute_decompose, brute_hilbert
from test_cones import random_strongly_convex


@pytest.fixture(scope="module")
def s_quadrant(quadrant):
    return semigroup_of_cone(quadrant)


def test_semigroup_examples(quadrant, s_quadrant):
    assert s_quadrant.generators == ((0, 1), (1, 0))
    c = cone_from_generators([(2, -1), (0, 1)], 2)
    s = semigroup_of_cone(c)
    assert s.cone.rays == ((1, 0), (1, 2))
    assert s.generators == ((1, 0), (1, 1), (1, 2))
    ray = cone_from_generators([(0, 1)], 2)
    sr = semigroup_of_cone(ray)
    assert sr.generators == ((-1, 0), (0, 1), (1, 0))


def test_semigroup_rejects_lines():
    with pytest.raises(DomainError):
        semigroup_of_cone(cone_from_halfspaces([(0, 1)], 2))


def test_hilbert_against_box_oracle():
    for gens in ([(1, 0), (0, 1)], [(2, -1), (0, 1)], [(3, -1), (0, 1)],
                 [(1, 0), (1, 4)], [(2, 1), (1, 2)]):
        c = cone_from_generators(gens, 2)
        s = semigroup_of_cone(c)
        radius = max(abs(a) for g in s.generators for a in g) + 2
        assert list(s.generators) == brute_hilbert(s.cone, radius)


def test_contains_examples(s_quadrant):
    assert contains(s_quadrant, (3, 5))
    assert not contains(s_quadrant, (-1, 0))
    s = semigroup_of_cone(cone_from_generators([(2, -1), (0, 1)], 2))
    assert contains(s, (1, 1))


def test_decompose_examples(s_quadrant):
    d = decompose(s_quadrant, (2, 1), 8)
    assert {s_quadrant.generators[i]: m for i, m in d.as_map().items()} == {
        (1, 0): 2, (0, 1): 1}
    s = semigroup_of_cone(cone_from_generators([(2, -1), (0, 1)], 2))
    assert decompose(s, (1, 1), 8, generators=[(1, 0), (1, 2)]) is None
    d = decompose(s, (2, 2), 8)
    assert d.multiplicities == (1, 0, 1)  # (1,0) + (1,2), first in search order
    assert brute_decompose([(1, 0), (1, 2)], (1, 1), 8) == []
    assert (1, 0, 1) in brute_decompose(s.generators, (2, 2), 8)


def test_decompose_outside_cone_is_definite(s_quadrant):
    assert decompose(s_quadrant, (-1, 0), 8) is None


def test_decompose_truncation_is_reported():
    t = torus_semigroup(1)
    with pytest.raises(InconclusiveSearchError):
        decompose(t, (-1,), 8, generators=[(1,)])


def test_gordan_bounded_generation():
    rng = random.Random(41)
    for _ in range(12):
        c = random_strongly_convex(rng, 2, entry=3)
        s = semigroup_of_cone(c)
        for p in product(range(-6, 7), repeat=2):
            if s.contains(p):
                assert decompose(s, p, 12) is not None


def test_minimality():
    for gens in ([(1, 0), (0, 1)], [(2, -1), (0, 1)], [(1, 0), (1, 3)]):
        s = semigroup_of_cone(cone_from_generators(gens, 2))
        for i, g in enumerate(s.generators):
            others = s.generators[:i] + s.generators[i + 1:]
            assert decompose(s, g, 12, generators=others) is None


def test_face_localization_examples(s_quadrant):
    loc = face_localization(s_quadrant, (1, 0))
    assert loc.generators == ((-1, 0), (0, 1), (1, 0))
    assert face_localization(s_quadrant, (0, 0)) == s_quadrant
    t = torus_semigroup(2)
    assert face_localization(t, t.generators[0]) == t
    with pytest.raises(DomainError):
        face_localization(s_quadrant, (-1, 0))


def test_face_localization_consistency(quadrant, s_quadrant):
    u = (1, 0)
    tau = intersect(quadrant, cone_from_halfspaces([u, vneg(u)], 2))
    assert face_localization(s_quadrant, u) == semigroup_of_cone(tau)
    # each localized generator decomposes as s + k*(-u) with s in the source
    loc = face_localization(s_quadrant, u)
    for g in loc.generators:
        assert any(s_quadrant.contains(vadd(g, vscale(k, u))) for k in range(13))


def test_face_witness_examples(quadrant):
    ray = cone_from_generators([(0, 1)], 2)
    assert face_witness(ray, quadrant) == (1, 0)
    assert face_witness(quadrant, quadrant) == (0, 0)
    assert face_witness(cone_from_generators([(1, 1)], 2), quadrant) is None


def test_face_witness_soundness():
    rng = random.Random(43)
    from torigid import faces
    for _ in range(10):
        c = random_strongly_convex(rng, rng.randint(1, 3))
        dual = dual_cone(c)
        for f in faces(c):
            u = face_witness(f, c)
            assert u is not None
            assert dual.contains(u)
            cut = cone_from_halfspaces(c.normals + (u, vneg(u)), c.rank) \
                if any(u) else c
            assert cut == f


def test_sum_covers_examples(quadrant):
    s2 = cone_from_generators([(-1, -1), (0, 1)], 2)
    s3 = cone_from_generators([(-1, -1), (1, 0)], 2)
    rho = intersect(s2, s3)
    certs = sum_covers(semigroup_of_cone(s2), semigroup_of_cone(s3),
                       semigroup_of_cone(rho))
    by_gen = {c.generator: (c.sigma_part, c.tau_part) for c in certs}
    assert by_gen[(1, -1)] == ((0, 0), (1, -1))
    assert by_gen[(-1, 1)] == ((-1, 1), (0, 0))
    sq = semigroup_of_cone(quadrant)
    for c in sum_covers(sq, sq, sq):
        assert c.sigma_part == c.generator and c.tau_part == (0, 0)
    # re-verification: the certificate really splits the generator
    for c in certs:
        assert vadd(c.sigma_part, c.tau_part) == c.generator
        assert semigroup_of_cone(s2).contains(c.sigma_part)
        assert semigroup_of_cone(s3).contains(c.tau_part)
    with pytest.raises(DomainError):
        sum_covers(sq, sq, semigroup_of_cone(cone_from_generators([(1, 0)], 2)))


def test_term_order_examples():
    assert term_order_compare([(1, 0), (0, 1)], (0, 1), (1, 0)) == -1
    assert term_order_compare([(1, 0), (0, 1)], (1, 0), (1, 0)) == 0
    assert term_order_compare([(1, 1), (1, 2)], (2, 3), (3, 4)) == -1
    with pytest.raises(DomainError):
        term_order_compare([(1, 1), (2, 2)], (1, 0), (0, 1))


@settings(max_examples=60, deadline=None)
@given(st.tuples(st.integers(0, 8), st.integers(0, 8)),
       st.tuples(st.integers(0, 8), st.integers(0, 8)),
       st.tuples(st.integers(0, 8), st.integers(0, 8)))
def test_term_order_total_and_translation_compatible(u, v, w):
    basis = [(1, 0), (0, 1)]
    c = term_order_compare(basis, u, v)
    assert c == -term_order_compare(basis, v, u)
    assert (c == 0) == (u == v)
    assert term_order_compare(basis, vadd(u, w), vadd(v, w)) == c


def test_order_basis_examples(s_quadrant):
    assert order_basis(s_quadrant) == ((0, 1), (1, 0))
    s = semigroup_of_cone(cone_from_generators([(2, -1), (0, 1)], 2))
    assert order_basis(s) == ((1, 0), (1, 1))
    assert order_basis(torus_semigroup(2)) == ((-1, 0), (0, -1))


def test_binomial_relations_examples(s_quadrant):
    s = semigroup_of_cone(cone_from_generators([(2, -1), (0, 1)], 2))
    assert binomial_relations(s, 2) == [((0, 2, 0), (1, 0, 1))]
    assert binomial_relations(s_quadrant, 3) == []
    ray = semigroup_of_cone(cone_from_generators([(0, 1)], 2))
    assert ray.generators == ((-1, 0), (0, 1), (1, 0))
    assert binomial_relations(ray, 2) == [((0, 0, 0), (1, 0, 1))]


def test_binomial_relations_are_relations():
    t = torus_semigroup(2)
    for a, b in binomial_relations(t, 2):
        sa = (0, 0)
        sb = (0, 0)
        for m, g in zip(a, t.generators):
            sa = vadd(sa, vscale(m, g))
        for m, g in zip(b, t.generators):
            sb = vadd(sb, vscale(m, g))
        assert sa == sb and a != b


def test_torus_semigroup():
    t = torus_semigroup(2)
    assert t.generators == ((-1, 0), (0, -1), (0, 1), (1, 0))
    assert t.cone == dual_cone(zero_cone(2))
