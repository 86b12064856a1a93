"""Independent oracles: deliberately different algorithms from the library.

Cone membership here goes through Fourier-Motzkin feasibility of the
nonnegative-combination system (the library uses facet normals), Hilbert
bases come from box enumeration with a pairwise-sum sweep (the library
triangulates), and decompositions use blunt exhaustive products.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import gcd


def _normalize(ineq):
    coeffs, const = ineq
    values = list(coeffs) + [const]
    denom = 1
    for v in values:
        denom = denom * v.denominator // gcd(denom, v.denominator)
    ints = [int(v * denom) for v in values]
    g = 0
    for a in ints:
        g = gcd(g, abs(a))
    if g > 1:
        ints = [a // g for a in ints]
    return tuple(ints[:-1]), ints[-1]


def fm_feasible(inequalities, num_vars: int) -> bool:
    """Fourier-Motzkin feasibility of ``coeffs . x + const >= 0`` systems."""
    system = {_normalize((tuple(Fraction(c) for c in coeffs), Fraction(const)))
              for coeffs, const in inequalities}
    for var in range(num_vars):
        pos, neg, rest = [], [], []
        for coeffs, const in system:
            c = coeffs[var]
            if c > 0:
                pos.append((coeffs, const))
            elif c < 0:
                neg.append((coeffs, const))
            else:
                rest.append((coeffs, const))
        new = set(rest)
        for (ac, ab) in pos:
            for (bc, bb) in neg:
                coeffs = tuple(Fraction(ac[i]) * (-bc[var]) + Fraction(bc[i]) * ac[var]
                               for i in range(len(ac)))
                const = Fraction(ab) * (-bc[var]) + Fraction(bb) * ac[var]
                new.add(_normalize((coeffs, const)))
        system = new
    return all(const >= 0 for _, const in system)


def in_cone_oracle(rays, lineality, v) -> bool:
    """Is v a nonnegative rational combination of rays plus a lineality span?

    Solved as a pure feasibility problem, independent of any normal vectors.
    """
    rays = [tuple(r) for r in rays]
    lineality = [tuple(l) for l in lineality]
    n = len(v)
    k, h = len(rays), len(lineality)
    if k + h == 0:
        return all(a == 0 for a in v)
    ineqs = []
    for coord in range(n):
        coeffs = tuple([r[coord] for r in rays] + [l[coord] for l in lineality])
        ineqs.append((coeffs, -v[coord]))
        ineqs.append((tuple(-c for c in coeffs), v[coord]))
    for i in range(k):
        coeffs = tuple(1 if j == i else 0 for j in range(k + h))
        ineqs.append((coeffs, 0))
    return fm_feasible(ineqs, k + h)


def cone_members_box(cone, radius: int):
    """Lattice points of a library cone in a centred box, via its normals."""
    out = []
    for p in product(range(-radius, radius + 1), repeat=cone.rank):
        if cone.contains(p):
            out.append(p)
    return out


def brute_hilbert(cone, radius: int):
    """Box-bounded minimal generators: points of the cone in the box that are
    not sums of two nonzero cone lattice points.  Exact whenever summands of
    box points stay inside the box (true for the pinned test cones)."""
    members = [p for p in cone_members_box(cone, radius) if any(p)]
    member_set = set(members)
    gens = []
    for x in members:
        decomposable = False
        for a in members:
            b = tuple(x[i] - a[i] for i in range(len(x)))
            if any(b) and b in member_set:
                decomposable = True
                break
        if not decomposable:
            gens.append(x)
    return sorted(gens)


def brute_decompose(generators, target, bound: int):
    """All decompositions by exhaustive product search, lexicographic order."""
    generators = [tuple(g) for g in generators]
    target = tuple(target)
    hits = []
    for mult in product(range(bound + 1), repeat=len(generators)):
        total = tuple(sum(m * g[i] for m, g in zip(mult, generators))
                      for i in range(len(target)))
        if total == target:
            hits.append(mult)
    return hits


def primitive_box_vectors(rank: int, radius: int):
    out = []
    for p in product(range(-radius, radius + 1), repeat=rank):
        if any(p):
            g = 0
            for a in p:
                g = gcd(g, abs(a))
            if g == 1:
                out.append(p)
    return out
