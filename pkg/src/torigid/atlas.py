"""The glued chart system of the rigid space attached to a fan.

One chart per cone, one overlap per unordered cone pair.  Overlaps carry
the localisation witnesses and the overlap semigroup, which both charts
localise onto; the pairwise agreement of those localisations is exactly
the gluing consistency this module enforces.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .cones import Cone, intersect
from .errors import DomainError
from .fans import Fan
from .intlinalg import Vec, hnf_solve
from .semigroups import (
    AffineSemigroup,
    CoverCertificate,
    face_localization,
    face_witness,
    semigroup_of_cone,
    sum_covers,
    torus_semigroup,
)


@dataclass(frozen=True)
class Chart:
    """An affinoid chart: a cone id, its semigroup, and named generators."""
    cone_id: str
    semigroup: AffineSemigroup
    generator_labels: tuple[str, ...]


@dataclass(frozen=True)
class Overlap:
    """Gluing data for one unordered pair of charts."""
    pair: tuple[str, str]
    tau_id: str
    witness_sigma: Vec
    witness_sigma1: Vec
    semigroup: AffineSemigroup   # the overlap semigroup, containing both charts'


class Atlas:
    """Charts and overlaps for every cone and cone pair of a fan."""

    def __init__(self, fan: Fan, charts: dict[str, Chart],
                 overlaps: dict[tuple[str, str], Overlap]):
        self.fan = fan
        self.charts = dict(charts)
        self.overlaps = dict(overlaps)

    def overlap(self, a: str, b: str) -> Overlap:
        return self.overlaps[tuple(sorted((a, b)))]

    def __repr__(self):
        return f"Atlas(charts={len(self.charts)}, overlaps={len(self.overlaps)})"


def _chart_for(fan: Fan, cid: str) -> Chart:
    sg = semigroup_of_cone(fan.cones[cid])
    labels = tuple(f"X{i + 1}" for i in range(len(sg.generators)))
    return Chart(cid, sg, labels)


def _overlap_for(fan: Fan, charts: dict[str, Chart], a: str, b: str) -> Overlap:
    tau = intersect(fan.cones[a], fan.cones[b])
    tau_id = fan.id_of(tau)
    wa = face_witness(tau, fan.cones[a])
    wb = face_witness(tau, fan.cones[b])
    if wa is None or wb is None:
        raise RuntimeError(f"validated fan lost a face witness for ({a}, {b})")
    loc_a = face_localization(charts[a].semigroup, wa)
    loc_b = face_localization(charts[b].semigroup, wb)
    s_tau = semigroup_of_cone(tau)
    if loc_a != s_tau or loc_b != s_tau:
        raise RuntimeError(f"chart localisations disagree on the overlap of ({a}, {b})")
    return Overlap((a, b), tau_id, wa, wb, s_tau)


def build_atlas(fan: Fan, jobs: int = 1) -> Atlas:
    """Build all charts and overlaps of a validated fan.

    Both localisations of every overlap are computed and checked to agree
    with the overlap semigroup, which is the pairwise gluing consistency of
    the chart system.  With ``jobs > 1`` the per-cone and per-pair work runs
    on a thread pool; results are merged in canonical order either way, so
    the output is schedule-independent.
    """
    ids = fan.sorted_ids()
    pairs = [(a, b) for i, a in enumerate(ids) for b in ids[i:]]
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            chart_list = list(pool.map(lambda c: _chart_for(fan, c), ids))
            charts = dict(zip(ids, chart_list))
            overlap_list = list(pool.map(
                lambda p: _overlap_for(fan, charts, *p), pairs))
    else:
        charts = {c: _chart_for(fan, c) for c in ids}
        overlap_list = [_overlap_for(fan, charts, a, b) for a, b in pairs]
    overlaps = {o.pair: o for o in overlap_list}
    return Atlas(fan, charts, overlaps)


def transition_expression(atlas: Atlas, from_id: str, to_id: str) -> dict[Vec, tuple[int, ...]]:
    """Each overlap generator as a Laurent monomial in a chart's generators.

    For the overlap of the two charts, writes every generator w of the
    overlap semigroup as an integer combination of the ``from`` chart's
    generators (negative entries allowed, they are the localised inverses).
    Solved by Hermite normal form; the deterministic particular solution
    with vanishing free coefficients is returned.
    """
    overlap = atlas.overlap(from_id, to_id)
    gens = atlas.charts[from_id].semigroup.generators
    out: dict[Vec, tuple[int, ...]] = {}
    for w in overlap.semigroup.generators:
        k = hnf_solve(gens, w)
        if k is None:
            raise RuntimeError(
                f"overlap generator {w} is not a Laurent monomial over chart {from_id}")
        out[w] = k
    return out


def separatedness_check(atlas: Atlas, bound: int | None = None,
                        jobs: int = 1) -> dict[tuple[str, str], list[CoverCertificate]]:
    """Covering certificates for every chart pair.

    For each pair, every generator of the overlap semigroup is certified to
    split as a sum of a member of each chart semigroup; existence is a
    theorem, so the underlying search escalates its box and reports
    inconclusive rather than answering no.
    """
    pairs = sorted(atlas.overlaps)

    def certify(pair):
        a, b = pair
        o = atlas.overlaps[pair]
        try:
            return sum_covers(atlas.charts[a].semigroup, atlas.charts[b].semigroup,
                              o.semigroup, bound=bound)
        except DomainError as exc:  # pragma: no cover - guarded by atlas construction
            raise RuntimeError(f"inconsistent overlap for pair {pair}: {exc}")

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(certify, pairs))
    else:
        results = [certify(p) for p in pairs]
    return dict(zip(pairs, results))


def torus_chart(n: int, p: int | None = None) -> Chart:
    """The chart of the origin cone: all Laurent monomials in n variables.

    The chart data does not depend on the prime; ``p`` is accepted for
    interface compatibility and validated when given.
    """
    if n < 1:
        raise DomainError("torus chart needs n >= 1")
    if p is not None:
        from .elements import PAdicContext
        PAdicContext(p)
    sg = torus_semigroup(n)
    return Chart("torus", sg, tuple(f"X{i + 1}" for i in range(len(sg.generators))))
