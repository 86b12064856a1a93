"""Finite-support elements of chart algebras over the p-adic rationals.

Elements live in the dense polynomial subring of the completed chart
algebra: finitely many monomials with exact rational coefficients.  Every
verifiable quantity down here (Gauss norms, leading exponents, products,
reductions) is exact on this subring, so no precision tracking is needed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionError, DomainError
from .semigroups import AffineSemigroup, order_basis, term_order_key
from .intlinalg import Vec, vadd, vneg


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class PAdicContext:
    """The coefficient field: exact rationals valued through a fixed prime."""
    prime: int

    def __post_init__(self):
        if not _is_prime(self.prime):
            raise DomainError(f"{self.prime} is not prime")


def _int_valuation(n: int, p: int) -> int:
    v = 0
    n = abs(n)
    while n % p == 0:
        n //= p
        v += 1
    return v


def p_valuation(x, p: int):
    """p-adic valuation of a rational; ``math.inf`` for zero.

    The absolute value is ``p ** -valuation``.
    """
    x = Fraction(x)
    if x == 0:
        return math.inf
    return _int_valuation(x.numerator, p) - _int_valuation(x.denominator, p)


@dataclass(frozen=True)
class ToricElement:
    """Finite rational combination of monomials with exponents in a semigroup."""
    context: PAdicContext
    semigroup: AffineSemigroup
    terms: tuple[tuple[Vec, Fraction], ...]   # sorted by exponent, no zero coefficients

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exponent) -> Fraction:
        exponent = tuple(exponent)
        for e, c in self.terms:
            if e == exponent:
                return c
        return Fraction(0)

    def term_map(self) -> dict[Vec, Fraction]:
        return dict(self.terms)

    def _check_match(self, other: "ToricElement"):
        if self.context != other.context or self.semigroup != other.semigroup:
            raise DomainError("elements live on different charts")

    def __add__(self, other: "ToricElement") -> "ToricElement":
        self._check_match(other)
        acc = dict(self.terms)
        for e, c in other.terms:
            acc[e] = acc.get(e, Fraction(0)) + c
        return toric_element(self.context, self.semigroup, acc)

    def __neg__(self) -> "ToricElement":
        return ToricElement(self.context, self.semigroup,
                            tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: "ToricElement") -> "ToricElement":
        return self + (-other)

    def scale(self, c) -> "ToricElement":
        c = Fraction(c)
        if c == 0:
            return ToricElement(self.context, self.semigroup, ())
        return ToricElement(self.context, self.semigroup,
                            tuple((e, c * x) for e, x in self.terms))

    def __mul__(self, other: "ToricElement") -> "ToricElement":
        self._check_match(other)
        acc: dict[Vec, Fraction] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = vadd(e1, e2)
                acc[e] = acc.get(e, Fraction(0)) + c1 * c2
        return toric_element(self.context, self.semigroup, acc)

    def __pow__(self, n: int) -> "ToricElement":
        if n < 0:
            raise DomainError("negative powers are not defined here")
        out = monomial(self.context, self.semigroup, (0,) * self.semigroup.rank)
        for _ in range(n):
            out = out * self
        return out


def toric_element(context: PAdicContext, semigroup: AffineSemigroup,
                  terms) -> ToricElement:
    """Build an element from an exponent -> coefficient mapping.

    Exponents must lie in the semigroup; zero coefficients are dropped, so
    the zero element has empty support.
    """
    clean: dict[Vec, Fraction] = {}
    items = terms.items() if hasattr(terms, "items") else terms
    for e, c in items:
        e = tuple(int(a) for a in e)
        if len(e) != semigroup.rank:
            raise DimensionError("exponent has the wrong length")
        if not semigroup.contains(e):
            raise DomainError(f"exponent {e} is outside the chart semigroup")
        c = Fraction(c)
        if c != 0:
            clean[e] = clean.get(e, Fraction(0)) + c
    return ToricElement(context, semigroup,
                        tuple(sorted((e, c) for e, c in clean.items() if c != 0)))


def monomial(context: PAdicContext, semigroup: AffineSemigroup,
             exponent, coefficient=1) -> ToricElement:
    return toric_element(context, semigroup, {tuple(exponent): coefficient})


def gauss_valuation(f: ToricElement):
    """Minimum coefficient valuation; ``math.inf`` for the zero element."""
    if f.is_zero:
        return math.inf
    return min(p_valuation(c, f.context.prime) for _, c in f.terms)


def gauss_norm(f: ToricElement) -> Fraction:
    """The Gauss norm: the maximum coefficient absolute value.

    By the multiplicativity of coefficient norms on these algebras this
    equals the supremum norm over the chart, so no point evaluation is ever
    needed; zero for the zero element.
    """
    v = gauss_valuation(f)
    if v is math.inf:
        return Fraction(0)
    p = f.context.prime
    return Fraction(1, p ** v) if v >= 0 else Fraction(p ** (-v))


def leading_exponent(f: ToricElement) -> Vec:
    """The term-order minimum among exponents of maximal coefficient norm."""
    if f.is_zero:
        raise DomainError("the zero element has no leading exponent")
    v = gauss_valuation(f)
    p = f.context.prime
    basis = order_basis(f.semigroup)
    best = [e for e, c in f.terms if p_valuation(c, p) == v]
    return min(best, key=lambda e: term_order_key(basis, e))


@dataclass(frozen=True)
class ResidueElement:
    """Element of the residue semigroup algebra over the prime field."""
    prime: int
    semigroup: AffineSemigroup
    terms: tuple[tuple[Vec, int], ...]   # coefficients in 1..p-1, sorted

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def term_map(self) -> dict[Vec, int]:
        return dict(self.terms)

    def _check_match(self, other: "ResidueElement"):
        if self.prime != other.prime or self.semigroup != other.semigroup:
            raise DomainError("residue elements live on different charts")

    def __add__(self, other: "ResidueElement") -> "ResidueElement":
        self._check_match(other)
        acc = dict(self.terms)
        for e, c in other.terms:
            acc[e] = (acc.get(e, 0) + c) % self.prime
        return residue_element(self.prime, self.semigroup, acc)

    def __mul__(self, other: "ResidueElement") -> "ResidueElement":
        self._check_match(other)
        acc: dict[Vec, int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = vadd(e1, e2)
                acc[e] = (acc.get(e, 0) + c1 * c2) % self.prime
        return residue_element(self.prime, self.semigroup, acc)


def residue_element(prime: int, semigroup: AffineSemigroup, terms) -> ResidueElement:
    clean = {}
    items = terms.items() if hasattr(terms, "items") else terms
    for e, c in items:
        e = tuple(int(a) for a in e)
        if not semigroup.contains(e):
            raise DomainError(f"exponent {e} is outside the chart semigroup")
        c = int(c) % prime
        if c:
            clean[e] = c
    return ResidueElement(prime, semigroup, tuple(sorted(clean.items())))


def reduce_mod_p(f: ToricElement) -> ResidueElement:
    """Reduction of a unit-ball element to the residue semigroup algebra.

    Termwise: coefficients of positive valuation vanish, coefficients of
    valuation zero map to numerator times inverse denominator mod p.
    Elements of norm above one are rejected.
    """
    p = f.context.prime
    if gauss_norm(f) > 1:
        raise DomainError("not in the unit ball")
    out = {}
    for e, c in f.terms:
        if p_valuation(c, p) == 0:
            out[e] = (c.numerator * pow(c.denominator, -1, p)) % p
    return residue_element(p, f.semigroup, out)


def include_into(f: ToricElement, target: AffineSemigroup) -> ToricElement:
    """Re-house an element along an inclusion of chart semigroups.

    Requires every generator of the source semigroup to lie in the target;
    exponents are unchanged.
    """
    if target.rank != f.semigroup.rank:
        raise DimensionError("semigroups of different rank")
    for g in f.semigroup.generators:
        if not target.contains(g):
            raise DomainError(f"source generator {g} is not in the target semigroup")
    return ToricElement(f.context, target, f.terms)
