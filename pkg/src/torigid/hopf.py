"""Group structure of the torus chart, acting on every other chart.

The comultiplication is diagonal on monomials, the counit sends every
monomial to one, and the antipode inverts exponents; together these make
the torus chart a group object, and the diagonal coaction restricts to
each chart because its exponents stay inside the chart semigroup.
All tensor products here have finite support.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .elements import PAdicContext, ToricElement, toric_element
from .errors import DomainError
from .intlinalg import Vec, vneg
from .semigroups import AffineSemigroup, torus_semigroup


@dataclass(frozen=True)
class TensorElement:
    """Finite-support element of the tensor square of chart algebras."""
    context: PAdicContext
    left_semigroup: AffineSemigroup
    right_semigroup: AffineSemigroup
    terms: tuple[tuple[tuple[Vec, Vec], Fraction], ...]

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def term_map(self):
        return dict(self.terms)


def tensor_element(context, left, right, terms) -> TensorElement:
    clean: dict[tuple[Vec, Vec], Fraction] = {}
    items = terms.items() if hasattr(terms, "items") else terms
    for (u, w), c in items:
        u, w = tuple(u), tuple(w)
        if not left.contains(u):
            raise DomainError(f"left exponent {u} outside its semigroup")
        if not right.contains(w):
            raise DomainError(f"right exponent {w} outside its semigroup")
        c = Fraction(c)
        if c != 0:
            clean[(u, w)] = clean.get((u, w), Fraction(0)) + c
    return TensorElement(context, left, right,
                         tuple(sorted((k, c) for k, c in clean.items() if c != 0)))


def comultiply(f: ToricElement) -> TensorElement:
    """Diagonal comultiplication: every monomial maps to itself tensor itself.

    The left factor stays on f's chart; the right factor is housed on the
    torus semigroup, which realises the coaction of the torus on the chart.
    """
    right = torus_semigroup(f.semigroup.rank)
    return tensor_element(f.context, f.semigroup, right,
                          {(e, e): c for e, c in f.terms})


def counit(f: ToricElement) -> Fraction:
    """Evaluation at the identity of the torus: the sum of the coefficients."""
    return sum((c for _, c in f.terms), Fraction(0))


def coinverse(f: ToricElement) -> ToricElement:
    """The antipode: negate every exponent.

    Defined whenever every negated exponent stays in the semigroup, which
    always holds on the torus chart.
    """
    flipped = {}
    for e, c in f.terms:
        ne = vneg(e)
        if not f.semigroup.contains(ne):
            raise DomainError(f"antipode leaves the semigroup at exponent {e}")
        flipped[ne] = c
    return toric_element(f.context, f.semigroup, flipped)


def coaction_support_check(f: ToricElement) -> bool:
    """Re-verify that the coaction lands in chart tensor torus, termwise."""
    t = comultiply(f)
    return all(f.semigroup.contains(u) and t.right_semigroup.contains(w)
               for (u, w), _ in t.terms)
