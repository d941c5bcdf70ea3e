"""Preatomic and atomic decompositions of B(lam).

Every element T of B(lam) is Phi^p of an element of the principal preatom
P(lam - 2p w1), and inside a principal preatom it is Psibar^a of an element
of the atom A(lam - 2p w1 - a w2).  The pair (p, a) = (pat, at) locates T.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import NamedTuple

from . import strings as S
from .roots import W1, W2, Weight, dominance_leq, weights_below


class PreatomId(NamedTuple):
    top: Weight
    pat: int


class AtomId(NamedTuple):
    zeta: Weight
    at: int
    pat: int


class Location(NamedTuple):
    """Where an element of B(lam) sits in the decomposition."""

    pat: int
    at: int
    zeta: Weight  # top weight of its atom
    preatom_top: Weight  # lam - 2 pat w1
    base: S.Element  # Phi^{-pat} of the element, inside P(preatom_top)


# ----------------------------------------------------------------------------
# Phi


def phi_string(t):
    a, b, c, d = t.s
    return S.Element(t.lam + W1.scale(2), (a, b + 1, c + 1, d + 1))


def phi_preimage(t):
    """The element T' with Phi(T') = T, or None."""
    lam = t.lam - W1.scale(2)
    if not lam.is_dominant():
        return None
    a, b, c, d = t.s
    s = (a, b - 1, c - 1, d - 1)
    return S.Element(lam, s) if S.in_cone(s, lam) else None


def pat(t):
    p = 0
    while True:
        u = phi_preimage(t)
        if u is None:
            return p
        t, p = u, p + 1


def in_principal_preatom(t):
    l1 = t.lam.l1
    if l1 <= 1:
        return True
    a, b, c, d = t.s
    return d == 0 or d == l1 or b == l1 - 2 * d + 2 * c


@lru_cache(maxsize=None)
def principal_preatom(lam):
    return tuple(t for t in S.crystal(lam) if in_principal_preatom(t))


# ----------------------------------------------------------------------------
# Psi and Psibar


def psi(t):
    """P(lam) -> P(lam + w2)."""
    if not in_principal_preatom(t):
        raise ValueError(f"{t} is not in the principal preatom")
    a, b, c, d = t.s
    lam = t.lam
    if d == 0 or d == lam.l1:
        s = (a, b + 1, c + 1, d)
    else:
        s = (a, b, c + 1, d + 1)
    return S.Element(lam + W2, s)


def psi_bar(t):
    if S.weight(t).l1 <= 0:
        return psi(t)
    return S.s1(psi(S.s1(t)))


@lru_cache(maxsize=None)
def _psi_bar_inverse(lam):
    """Inverse table of Psibar: P(lam - w2) -> P(lam)."""
    lam = Weight(*lam)
    src = lam - W2
    if not src.is_dominant():
        return {}
    table = {}
    for t in principal_preatom(src):
        u = psi_bar(t)
        if u in table:
            raise AssertionError(f"Psibar is not injective on P{tuple(src)}")
        table[u] = t
    return table


def psi_bar_preimage(t):
    return _psi_bar_inverse(t.lam).get(t)


def psi_depth(t):
    """Number of successive Psibar preimages of an element of P(lam)."""
    k = 0
    while True:
        u = psi_bar_preimage(t)
        if u is None:
            return k
        t, k = u, k + 1


def at_brute(t):
    """Atomic number of an element of a principal preatom, by iterating the
    inverse of Psibar (twice per step when lam1 = 0)."""
    if t.lam.l1 == 0:
        return 2 * (psi_depth(t) // 2)
    return psi_depth(t)


def at_formula(t):
    """Closed form for the atomic number of an element of P(lam)."""
    if S.weight(t).l1 > 0:
        t = S.s1(t)
    l1, l2 = t.lam
    a, b, c, d = t.s
    if d == 0:
        k = min(c, l1 + 2 * c - b)
    else:
        k = l1 + 2 * c - 2 * d - b + min(l2 + d - c, d - 1)
    if l1 == 0:
        return 2 * (k // 2)
    return k


def is_atom_top(t):
    """Membership in A(lam) for an element of P(lam), by the direct criterion."""
    if S.weight(t).l1 > 0:
        t = S.s1(t)
    l1, l2 = t.lam
    a, b, c, d = t.s
    if l1 == 0:
        return at_formula(t) == 0
    return (c == 0 and d == 0) or (b == l1 + 2 * c - 2 * d and (d <= 1 or c == l2 + d))


# ----------------------------------------------------------------------------
# the full decomposition


def locate(t, brute=False):
    p = 0
    base = t
    while True:
        u = phi_preimage(base)
        if u is None:
            break
        base, p = u, p + 1
    a = at_brute(base) if brute else at_formula(base)
    top = t.lam - W1.scale(2 * p)
    return Location(p, a, top - W2.scale(a), top, base)


@lru_cache(maxsize=None)
def decompose(lam, brute=False):
    """Map every element of B(lam) to its Location."""
    return {t: locate(t, brute) for t in S.crystal(Weight(*lam))}


def atoms(lam):
    """Group B(lam) by atom: AtomId -> list of elements."""
    out = {}
    for t, loc in decompose(Weight(*lam)).items():
        out.setdefault(AtomId(loc.zeta, loc.at, loc.pat), []).append(t)
    return out


def preatoms(lam):
    out = {}
    for t, loc in decompose(Weight(*lam)).items():
        out.setdefault(PreatomId(loc.preatom_top, loc.pat), []).append(t)
    return out


def atom_of(t):
    """All elements of B(lam) in the same atom as t."""
    loc = decompose(t.lam)[t]
    return atoms(t.lam)[AtomId(loc.zeta, loc.at, loc.pat)]


def atom_element(lam, pat_value, at_value, mu):
    """The element of weight mu in the atom with the given numbers."""
    for t in atoms(lam).get(_atom_id(lam, pat_value, at_value), []):
        if S.weight(t) == mu:
            return t
    return None


def _atom_id(lam, p, a):
    lam = Weight(*lam)
    top = lam - W1.scale(2 * p)
    return AtomId(top - W2.scale(a), a, p)


def check_atom_property(lam):
    """Return the atoms whose weights are not exactly {mu <= zeta}, once each."""
    bad = []
    for aid, elems in atoms(lam).items():
        got = Counter(S.weight(t) for t in elems)
        want = Counter(weights_below(aid.zeta))
        if got != want:
            bad.append(aid)
    return bad


def atom_size(zeta):
    return len(weights_below(Weight(*zeta)))


# ----------------------------------------------------------------------------
# characters at v = 1


def characters_v1(elements):
    """Dominant weights (with multiplicity) of a W-stable set of elements."""
    return Counter(mu for mu in map(S.weight, elements) if mu.is_dominant())


def eps21_hat(t, zeta):
    """Largest k with wt(t) + k alpha21 <= zeta."""
    mu = S.weight(t)
    k = 0
    while dominance_leq(mu + Weight(0, k + 1), zeta):
        k += 1
    return k
