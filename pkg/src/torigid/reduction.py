"""Reductions of chart atlases to schemes over the prime field.

Reducing a chart keeps its semigroup and swaps the coefficient field for
the residue field, so the reduced atlas is combinatorially identical to
the source atlas.  An independently built toric-scheme chart system over
the same fan serves as the comparison oracle: the two must agree cone by
cone and immersion by immersion.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .atlas import Atlas, Chart
from .elements import PAdicContext
from .fans import Fan
from .intlinalg import Vec
from .semigroups import (
    AffineSemigroup,
    binomial_relations,
    face_witness,
    semigroup_of_cone,
)


@dataclass(frozen=True)
class ReducedChart:
    """A chart over the residue field: same semigroup, plus bounded relations."""
    prime: int
    cone_id: str
    semigroup: AffineSemigroup
    relations: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]


@dataclass(frozen=True)
class ReducedAtlas:
    """Per-cone reduced charts glued along the face localisation witnesses.

    ``immersions`` maps ``(face_id, cone_id)`` to the witness of the open
    immersion from the face's chart into the cone's chart.
    """
    prime: int
    charts: tuple[tuple[str, ReducedChart], ...]
    immersions: tuple[tuple[tuple[str, str], Vec], ...]

    def chart_map(self) -> dict[str, ReducedChart]:
        return dict(self.charts)

    def immersion_map(self) -> dict[tuple[str, str], Vec]:
        return dict(self.immersions)


@dataclass(frozen=True)
class ToricSchemeChartData:
    """Chart data of the toric scheme over the prime field, built from the fan."""
    prime: int
    semigroups: tuple[tuple[str, AffineSemigroup], ...]
    immersions: tuple[tuple[tuple[str, str], Vec], ...]

    def semigroup_map(self) -> dict[str, AffineSemigroup]:
        return dict(self.semigroups)

    def immersion_map(self) -> dict[tuple[str, str], Vec]:
        return dict(self.immersions)


def reduce_chart(chart: Chart, p: int, relation_bound: int = 2) -> ReducedChart:
    """Reduction of one chart: the residue semigroup algebra on the same data.

    The degree-bounded binomial relations are attached as a presentation
    hint for the reduced coordinate ring.
    """
    PAdicContext(p)
    return ReducedChart(p, chart.cone_id, chart.semigroup,
                        tuple(binomial_relations(chart.semigroup, relation_bound)))


def reduce_atlas(atlas: Atlas, p: int, relation_bound: int = 2,
                 jobs: int = 1) -> ReducedAtlas:
    """Reduce every chart and keep the face-localisation witnesses as gluing.

    Each face relation of the fan contributes the open immersion of the
    face's reduced chart into the cone's reduced chart, witnessed by the
    same vector that localises the chart algebras.
    """
    ids = sorted(atlas.charts)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            reduced = list(pool.map(
                lambda c: reduce_chart(atlas.charts[c], p, relation_bound), ids))
    else:
        reduced = [reduce_chart(atlas.charts[c], p, relation_bound) for c in ids]
    immersions = tuple(sorted(atlas.fan.face_relations.items()))
    return ReducedAtlas(p, tuple(zip(ids, reduced)), immersions)


def toric_scheme_charts(fan: Fan, p: int) -> ToricSchemeChartData:
    """Chart data of the toric scheme over the prime field.

    Built directly from the fan, independently of any atlas: one semigroup
    per cone and one witness per face pair, recomputed from scratch.  This
    is the oracle the reduced atlas is compared against.
    """
    PAdicContext(p)
    ids = sorted(fan.cones)
    semigroups = tuple((i, semigroup_of_cone(fan.cones[i])) for i in ids)
    immersions = []
    for ti in ids:
        for si in ids:
            w = face_witness(fan.cones[ti], fan.cones[si])
            if w is not None:
                immersions.append(((ti, si), w))
    return ToricSchemeChartData(p, semigroups, tuple(sorted(immersions)))


def reduction_equals_toric_scheme(atlas: Atlas, p: int):
    """Structural comparison of the reduced atlas with the toric scheme.

    Returns ``(equal, diffs)`` where ``diffs`` lists every mismatch in cone
    ids, chart semigroups, or immersion witnesses.
    """
    reduced = reduce_atlas(atlas, p)
    scheme = toric_scheme_charts(atlas.fan, p)
    diffs: list[str] = []
    rmap = reduced.chart_map()
    smap = scheme.semigroup_map()
    for cid in sorted(set(rmap) | set(smap)):
        if cid not in rmap:
            diffs.append(f"cone {cid} only in the toric scheme")
        elif cid not in smap:
            diffs.append(f"cone {cid} only in the reduced atlas")
        elif rmap[cid].semigroup != smap[cid]:
            diffs.append(f"chart semigroups differ on cone {cid}")
    ri = reduced.immersion_map()
    si = scheme.immersion_map()
    for key in sorted(set(ri) | set(si)):
        if key not in ri:
            diffs.append(f"immersion {key} only in the toric scheme")
        elif key not in si:
            diffs.append(f"immersion {key} only in the reduced atlas")
        elif ri[key] != si[key]:
            diffs.append(f"immersion witnesses differ on {key}: {ri[key]} vs {si[key]}")
    return (not diffs), diffs
