"""The spherical Hecke algebra as a Z[v, v^-1]-module.

Elements are stored in the standard basis {H_mu : mu dominant}.  The
Kazhdan-Lusztig basis is taken from the Kostka-Foulkes oracle,
Hbar_lam = sum_mu K_{lam,mu}(v^2) H_mu, and the precanonical bases are
alternating sums of it over subsets of positive roots.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .kostka import dominant_below, kostka_foulkes
from .laurent import Laurent
from .roots import ROOTS, Weight, dot_dominant, rho2

# positive roots by height: a1, a2 have height 1, a21 height 2, a12 height 3
HEIGHT = {"1": 1, "2": 1, "21": 2, "12": 3}
V2 = Laurent.monomial(2)


def roots_of_height_at_least(i):
    return tuple(k for k in ("1", "2", "21", "12") if HEIGHT[k] >= i)


class HeckeElement:
    """A finite Z[v, v^-1]-combination of standard basis elements."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {}
        for mu, c in (coeffs or {}).items():
            if not c.is_zero():
                self.coeffs[Weight(*mu)] = c

    @classmethod
    def standard(cls, mu):
        return cls({Weight(*mu): Laurent.one()})

    def __add__(self, other):
        out = dict(self.coeffs)
        for mu, c in other.coeffs.items():
            out[mu] = out.get(mu, Laurent()) + c
        return HeckeElement(out)

    def __sub__(self, other):
        return self + other.scale(Laurent.monomial(0, -1))

    def __neg__(self):
        return self.scale(Laurent.monomial(0, -1))

    def scale(self, c):
        if isinstance(c, int):
            c = Laurent.monomial(0, c)
        return HeckeElement({mu: c * x for mu, x in self.coeffs.items()})

    def __eq__(self, other):
        return isinstance(other, HeckeElement) and self.coeffs == other.coeffs

    def __repr__(self):
        terms = [f"({c.format()})H{mu}" for mu, c in sorted(self.coeffs.items(), reverse=True)]
        return " + ".join(terms) or "0"

    def coeff(self, mu):
        return self.coeffs.get(Weight(*mu), Laurent())

    def at_one(self):
        """Specialisation v = 1: dominant weight -> integer."""
        return {mu: c.at_one() for mu, c in self.coeffs.items() if c.at_one()}

    def is_positive(self):
        return all(c.is_nonnegative() for c in self.coeffs.values())


ZERO = HeckeElement()


@lru_cache(maxsize=None)
def kl_basis(lam):
    lam = Weight(*lam)
    if not lam.is_dominant():
        raise ValueError(f"{tuple(lam)} is not dominant")
    out = {}
    for mu in dominant_below(lam):
        out[Weight(*mu)] = kostka_foulkes(tuple(lam), tuple(mu)).substitute_power(2)
    return HeckeElement(out)


def kl_extended(lam):
    """Hbar for an arbitrary weight: zero on dot-singular weights, otherwise
    the sign-twisted element of the dominant dot-representative."""
    lam = Weight(*lam)
    if lam.is_dominant():
        return kl_basis(lam)
    found = dot_dominant(lam)
    if found is None:
        return ZERO
    w, nu = found
    return kl_basis(nu).scale(w.sign)


@lru_cache(maxsize=None)
def precanonical(i, lam):
    """N^i_lam = sum over I in Phi^{>=i} of (-v^2)^|I| Hbar_{lam - sum I}."""
    lam = Weight(*lam)
    if not lam.is_dominant():
        raise ValueError(f"{tuple(lam)} is not dominant")
    kinds = roots_of_height_at_least(i)
    total = ZERO
    for r in range(len(kinds) + 1):
        for subset in combinations(kinds, r):
            nu = lam
            for k in subset:
                nu = nu - ROOTS[k]
            coeff = Laurent.monomial(2 * r, (-1) ** r)
            total = total + kl_extended(nu).scale(coeff)
    return total


def n3_tilde(lam):
    lam = Weight(*lam)
    if lam.l1 != 0:
        return precanonical(3, lam)
    return kl_basis(lam)


def atomic_expected(lam):
    """sum over dominant mu <= lam of v^{2<rho^vee, lam - mu>} H_mu."""
    lam = Weight(*lam)
    out = {}
    for mu in dominant_below(lam):
        out[Weight(*mu)] = Laurent.monomial(rho2(lam - Weight(*mu)))
    return HeckeElement(out)


def hbar_from_n3(lam):
    """sum_{i <= lam1/2} v^{2i} Ntilde3_{(lam1 - 2i, lam2)}."""
    l1, l2 = lam
    total = ZERO
    for i in range(l1 // 2 + 1):
        total = total + n3_tilde((l1 - 2 * i, l2)).scale(Laurent.monomial(2 * i))
    return total


def n3_from_n2(lam):
    """sum of v^{2i} N2_{(lam1, lam2 - i)} (lam1 > 0), or of
    v^{4i} N2_{(0, lam2 - 2i)} (lam1 = 0)."""
    l1, l2 = lam
    total = ZERO
    if l1 > 0:
        for i in range(l2 + 1):
            total = total + precanonical(2, (l1, l2 - i)).scale(Laurent.monomial(2 * i))
    else:
        for i in range(l2 // 2 + 1):
            total = total + precanonical(2, (0, l2 - 2 * i)).scale(Laurent.monomial(4 * i))
    return total


def verify_conversions(bound):
    """Check both conversion identities for lam1 + lam2 <= bound.

    Returns a list of (name, lam) for every failure."""
    failures = []
    for n in range(bound + 1):
        for l1 in range(n + 1):
            lam = Weight(l1, n - l1)
            if kl_basis(lam) != hbar_from_n3(lam):
                failures.append(("Hbar = sum v^2i Ntilde3", lam))
            if n3_tilde(lam) != n3_from_n2(lam):
                failures.append(("Ntilde3 = sum N2", lam))
    return failures


def stabilizer_poincare(lam):
    """Poincare polynomial in v^2 of the stabiliser of a dominant weight."""
    l1, l2 = lam
    if l1 == 0 and l2 == 0:
        return Laurent({0: 1, 2: 2, 4: 2, 6: 2, 8: 1})
    if l1 == 0 or l2 == 0:
        return Laurent({0: 1, 2: 1})
    return Laurent.one()
