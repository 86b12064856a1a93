"""JSON schemas for fans, semigroups, elements, atlases and reductions.

Vectors serialize as integer arrays; coefficient numerators and
denominators as decimal strings, so arbitrarily large values survive the
round trip.  All writers emit fields in a fixed order and sort every list
canonically, which makes the serialized bytes deterministic.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .atlas import Atlas
from .cones import Cone, cone_from_generators
from .elements import PAdicContext, ToricElement, toric_element
from .errors import SchemaError
from .fans import Fan
from .reduction import ReducedAtlas
from .semigroups import AffineSemigroup, CoverCertificate


def dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _expect(data, key, kind):
    if not isinstance(data, dict) or key not in data:
        raise SchemaError(f"missing field {key!r}")
    value = data[key]
    if not isinstance(value, kind):
        raise SchemaError(f"field {key!r} has the wrong type")
    return value


def _vec(data) -> tuple[int, ...]:
    if not isinstance(data, list) or not all(isinstance(a, int) for a in data):
        raise SchemaError(f"not an integer vector: {data!r}")
    return tuple(data)


def _vec_list(data) -> list[tuple[int, ...]]:
    if not isinstance(data, list):
        raise SchemaError("expected a list of vectors")
    return [_vec(v) for v in data]


# ---------------------------------------------------------------- fans

def fan_to_json(fan: Fan, valid: bool | None = None) -> dict:
    out = {}
    if valid is not None:
        out["valid"] = valid
    out["rank"] = fan.rank
    out["cones"] = [{"id": i, "rays": [list(r) for r in fan.cones[i].rays]}
                    for i in fan.sorted_ids()]
    out["complete_faces"] = False
    return out


def named_cones_from_json(data) -> tuple[dict[str, Cone], bool]:
    """Read the fan input schema into named cones plus the completion flag."""
    rank = _expect(data, "rank", int)
    if rank < 1:
        raise SchemaError("rank must be positive")
    cones = _expect(data, "cones", list)
    named: dict[str, Cone] = {}
    for entry in cones:
        cid = _expect(entry, "id", str)
        rays = _vec_list(_expect(entry, "rays", list))
        if cid in named:
            raise SchemaError(f"duplicate cone id {cid!r}")
        if any(len(r) != rank for r in rays):
            raise SchemaError(f"cone {cid!r} has rays of the wrong length")
        named[cid] = cone_from_generators(rays, rank)
    complete = bool(data.get("complete_faces", False))
    return named, complete


# ----------------------------------------------------------- semigroups

def semigroup_to_json(sg: AffineSemigroup) -> dict:
    return {
        "rank": sg.rank,
        "cone_rays": [list(r) for r in sg.cone.rays],
        "cone_lineality": [list(l) for l in sg.cone.lineality],
        "generators": [list(g) for g in sg.generators],
    }


def semigroup_from_json(data) -> AffineSemigroup:
    rank = _expect(data, "rank", int)
    rays = _vec_list(_expect(data, "cone_rays", list))
    lineality = _vec_list(_expect(data, "cone_lineality", list))
    generators = _vec_list(_expect(data, "generators", list))
    cone = cone_from_generators(rays, rank, lineality=lineality)
    for g in generators:
        if not cone.contains(g):
            raise SchemaError(f"generator {list(g)} is outside the stored cone")
    return AffineSemigroup(rank, cone, tuple(sorted(generators)))


# ------------------------------------------------------------- elements

def element_to_json(f: ToricElement) -> dict:
    return {
        "prime": f.context.prime,
        "semigroup": semigroup_to_json(f.semigroup),
        "terms": [{"exp": list(e), "num": str(c.numerator), "den": str(c.denominator)}
                  for e, c in f.terms],
    }


def element_from_json(data) -> ToricElement:
    prime = _expect(data, "prime", int)
    sg = semigroup_from_json(_expect(data, "semigroup", dict))
    terms = {}
    for entry in _expect(data, "terms", list):
        e = _vec(_expect(entry, "exp", list))
        num = _expect(entry, "num", str)
        den = _expect(entry, "den", str)
        try:
            c = Fraction(int(num), int(den))
        except ValueError as exc:
            raise SchemaError(f"bad coefficient {num}/{den}") from exc
        terms[e] = terms.get(e, Fraction(0)) + c
    return toric_element(PAdicContext(prime), sg, terms)


# ---------------------------------------------------------------- atlas

def _certificate_json(cert: CoverCertificate) -> dict:
    return {"generator": list(cert.generator),
            "sigma_part": list(cert.sigma_part),
            "tau_part": list(cert.tau_part)}


def atlas_to_json(atlas: Atlas, transitions: dict | None = None,
                  certificates: dict | None = None) -> dict:
    out = {
        "rank": atlas.fan.rank,
        "charts": [{
            "id": cid,
            "generators": [list(g) for g in chart.semigroup.generators],
            "labels": list(chart.generator_labels),
        } for cid, chart in sorted(atlas.charts.items())],
        "overlaps": [{
            "pair": list(o.pair),
            "tau": o.tau_id,
            "witnesses": [list(o.witness_sigma), list(o.witness_sigma1)],
            "generators": [list(g) for g in o.semigroup.generators],
        } for _, o in sorted(atlas.overlaps.items())],
    }
    if transitions is not None:
        out["transitions"] = [{
            "from": a, "to": b,
            "exponents": [{"generator": list(w), "powers": list(k)}
                          for w, k in expr.items()],
        } for (a, b), expr in sorted(transitions.items())]
    if certificates is not None:
        out["certificates"] = [{
            "pair": list(pair),
            "covers": [_certificate_json(c) for c in certs],
        } for pair, certs in sorted(certificates.items())]
    return out


# ------------------------------------------------------------ reduction

def reduction_to_json(reduced: ReducedAtlas, matches: bool) -> dict:
    return {
        "prime": reduced.prime,
        "charts": [{
            "id": cid,
            "generators": [list(g) for g in rc.semigroup.generators],
            "relations": [{"left": list(a), "right": list(b)} for a, b in rc.relations],
        } for cid, rc in reduced.charts],
        "immersions": [{"face": f, "cone": c, "witness": list(w)}
                       for (f, c), w in reduced.immersions],
        "matches_toric_scheme": matches,
    }
