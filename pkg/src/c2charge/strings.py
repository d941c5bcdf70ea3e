"""The crystal B(lam) on adapted strings.

An element is stored as its string (a, b, c, d) for the reduced word
s2 s1 s2 s1, meaning T = f2^a f1^b f2^c f1^d v_lam.  The string for the
other reduced word s1 s2 s1 s2 (T = f1^a f2^b f1^c f2^d v_lam) is only used
transiently to apply f1 and e1.
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

from .roots import ROOTS, Weight, pairing, s1 as s1_weight, s2 as s2_weight

STR1 = "s1s2s1s2"
STR2 = "s2s1s2s1"


class Element(NamedTuple):
    """A crystal element: highest weight and its s2s1s2s1 string."""

    lam: Weight
    s: tuple

    def __str__(self):
        return f"{tuple(self.s)}@{self.lam}"


def theta12(s):
    """s1s2s1s2 string -> s2s1s2s1 string."""
    a, b, c, d = s
    return (
        max(d, c - b, b - a),
        max(c, a - 2 * b + 2 * c, a + 2 * d),
        min(b, 2 * b - c + d, a + d),
        min(a, 2 * b - c, c - 2 * d),
    )


def theta21(s):
    """s2s1s2s1 string -> s1s2s1s2 string."""
    a, b, c, d = s
    return (
        max(d, 2 * c - b, b - 2 * a),
        max(c, a + d, a + 2 * c - b),
        min(b, 2 * b - 2 * c + d, d + 2 * a),
        min(a, c - d, b - c),
    )


def in_cone(s, lam):
    """Membership of an s2s1s2s1 string in the string polytope of B(lam)."""
    a, b, c, d = s
    l1, l2 = lam
    return (
        min(a, b, c, d) >= 0
        and b >= c >= d
        and d <= l1
        and c <= l2 + d
        and b <= l1 - 2 * d + 2 * c
        and a <= l2 + d - 2 * c + b
    )


def element(lam, s):
    lam = Weight(*lam)
    s = tuple(s)
    if not in_cone(s, lam):
        raise ValueError(f"{s} is not a string of B{tuple(lam)}")
    return Element(lam, s)


def highest(lam):
    return Element(Weight(*lam), (0, 0, 0, 0))


@lru_cache(maxsize=None)
def crystal(lam):
    """All elements of B(lam), sorted lexicographically by string."""
    lam = Weight(*lam)
    if not lam.is_dominant():
        raise ValueError(f"{tuple(lam)} is not dominant")
    l1, l2 = lam
    out = []
    for d in range(l1 + 1):
        for c in range(d, l2 + d + 1):
            for b in range(c, l1 - 2 * d + 2 * c + 1):
                for a in range(l2 + d - 2 * c + b + 1):
                    out.append(Element(lam, (a, b, c, d)))
    out.sort(key=lambda t: t.s)
    return tuple(out)


def weight(t):
    a, b, c, d = t.s
    a1, a2 = ROOTS["1"], ROOTS["2"]
    return Weight(
        t.lam.l1 - (b + d) * a1.l1 - (a + c) * a2.l1,
        t.lam.l2 - (b + d) * a1.l2 - (a + c) * a2.l2,
    )


# ----------------------------------------------------------------------------
# colour 2: first letter of s2s1s2s1


def eps2(t):
    return t.s[0]


def phi2(t):
    a, b, c, d = t.s
    return t.lam.l2 + b + d - 2 * c - a


def f2(t):
    if phi2(t) <= 0:
        return None
    a, b, c, d = t.s
    return Element(t.lam, (a + 1, b, c, d))


def e2(t):
    a, b, c, d = t.s
    if a == 0:
        return None
    return Element(t.lam, (a - 1, b, c, d))


# ----------------------------------------------------------------------------
# colour 1: first letter of s1s2s1s2


def str1(t):
    return theta21(t.s)


def eps1(t):
    return str1(t)[0]


def phi1(t):
    return eps1(t) + weight(t).l1


def f1(t):
    if phi1(t) <= 0:
        return None
    a, b, c, d = str1(t)
    return Element(t.lam, theta12((a + 1, b, c, d)))


def e1(t):
    a, b, c, d = str1(t)
    if a == 0:
        return None
    return Element(t.lam, theta12((a - 1, b, c, d)))


F = {1: f1, 2: f2}
E = {1: e1, 2: e2}
EPS = {1: eps1, 2: eps2}
PHI = {1: phi1, 2: phi2}


def apply_path(t, path):
    """Apply f_{i_1}, f_{i_2}, ... in order; None if some step is undefined."""
    for i in path:
        t = F[i](t)
        if t is None:
            return None
    return t


# ----------------------------------------------------------------------------
# Weyl group action: s_i reverses the i-string


def reflect(i, t):
    k = PHI[i](t) - EPS[i](t)
    op = F[i] if k > 0 else E[i]
    for _ in range(abs(k)):
        t = op(t)
    return t


def s1(t):
    return reflect(1, t)


def s2(t):
    return reflect(2, t)


def weyl_act(word, t):
    """Apply s_{word[-1]} first, as for a composition of reflections."""
    for i in reversed(tuple(word)):
        t = reflect(i, t)
    return t


def weyl_weight(word, mu):
    simple = {1: s1_weight, 2: s2_weight}
    for i in reversed(tuple(word)):
        mu = simple[i](mu)
    return mu


# ----------------------------------------------------------------------------
# modified colour 12 = s1 (colour 2) s1


def phi12(t):
    return phi2(s1(t))


def eps12(t):
    return eps2(s1(t))


def f12(t):
    u = f2(s1(t))
    return None if u is None else s1(u)


def e12(t):
    u = e2(s1(t))
    return None if u is None else s1(u)


def z_function(t):
    return phi1(t) + phi2(t) + phi12(t)


def z_closed_form(t, pat=0, lam=None):
    """lam1 + lam2 + mu1 + mu2 + max(0, (|mu1| - lam1)/2) + pat.

    lam defaults to the highest weight of the crystal holding t."""
    mu = weight(t)
    l1, l2 = t.lam if lam is None else lam
    return l1 + l2 + mu.l1 + mu.l2 + max(0, (abs(mu.l1) - l1) // 2) + pat


# ----------------------------------------------------------------------------
# the alpha_21 lowering/raising tables on the top atom


def e21_string(s):
    """Case table for raising along alpha_21 on the top atom."""
    a, b, c, d = s
    if c == 0 and d == 0:
        return (a - 1, b - 1, c, d)
    if d == 0:
        return (a - 1, b - 2, c, d + 1)
    return (a, b, c - 1, d - 1)


def f21_string(s, lam):
    a, b, c, d = s
    l1, l2 = lam
    if b < l1 - 2 * d + 2 * c:
        return (a + 1, b + 1, c, d)
    if d == 0 or c == l2 + d:
        return (a, b, c + 1, d + 1)
    if d == 1:
        return (a - 1, b + 2, c, d - 1)
    return None


def e21_bar(t):
    s = e21_string(t.s)
    if in_cone(s, t.lam):
        return Element(t.lam, s)
    return None


def f21_bar(t):
    s = f21_string(t.s, t.lam)
    if s is not None and in_cone(s, t.lam):
        return Element(t.lam, s)
    return None


def e21_hat(t):
    """e21 on the top atom of B(lam), symmetrised by s1 when wt1 > 0."""
    if weight(t).l1 <= 0:
        return e21_bar(t)
    u = e21_bar(s1(t))
    return None if u is None else s1(u)


def f21_hat(t):
    if weight(t).l1 <= 0:
        return f21_bar(t)
    u = f21_bar(s1(t))
    return None if u is None else s1(u)


def e21_hat_depth(t):
    k = 0
    while True:
        t = e21_hat(t)
        if t is None:
            return k
        k += 1


def weyl_dimension(lam):
    l1, l2 = lam
    return (l1 + 1) * (l2 + 1) * (l1 + l2 + 2) * (l1 + 2 * l2 + 3) // 6


def check_axioms(lam):
    """Return a list of violated crystal axioms on B(lam) (empty if none)."""
    problems = []
    elems = set(crystal(lam))
    for t in elems:
        mu = weight(t)
        for i in (1, 2):
            kind = str(i)
            if PHI[i](t) - EPS[i](t) != pairing(mu, kind):
                problems.append(("phi-eps", i, t))
            u = F[i](t)
            if u is not None:
                if u not in elems:
                    problems.append(("f leaves crystal", i, t))
                elif E[i](u) != t:
                    problems.append(("e f != id", i, t))
                elif weight(u) != mu - ROOTS[kind]:
                    problems.append(("f weight", i, t))
            u = E[i](t)
            if u is not None and F[i](u) != t:
                problems.append(("f e != id", i, t))
            if (F[i](t) is None) != (PHI[i](t) == 0):
                problems.append(("phi zero", i, t))
            if (E[i](t) is None) != (EPS[i](t) == 0):
                problems.append(("eps zero", i, t))
    return problems
