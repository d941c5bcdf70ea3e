"""Root datum of type C2 in the fundamental-weight basis.

A weight (l1, l2) means l1*w1 + l2*w2.  The simple roots are
a1 = (2, -1) (short) and a2 = (-2, 2) (long); the other positive roots are
a12 = 2*a1 + a2 = (2, 0) (long) and a21 = a1 + a2 = (0, 1) (short).
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple


class Weight(NamedTuple):
    l1: int
    l2: int

    def __add__(self, other):
        return Weight(self.l1 + other[0], self.l2 + other[1])

    def __sub__(self, other):
        return Weight(self.l1 - other[0], self.l2 - other[1])

    def __neg__(self):
        return Weight(-self.l1, -self.l2)

    def scale(self, k):
        return Weight(k * self.l1, k * self.l2)

    def is_dominant(self):
        return self.l1 >= 0 and self.l2 >= 0

    def __str__(self):
        return f"({self.l1},{self.l2})"


ZERO = Weight(0, 0)
W1 = Weight(1, 0)
W2 = Weight(0, 1)
RHO = Weight(1, 1)

ROOT_KINDS = ("1", "2", "12", "21")
ROOTS = {
    "1": Weight(2, -1),
    "2": Weight(-2, 2),
    "12": Weight(2, 0),
    "21": Weight(0, 1),
}
# coroot pairing <mu, beta^vee> as (coefficient of mu1, coefficient of mu2)
COROOTS = {
    "1": (1, 0),
    "2": (0, 1),
    "12": (1, 1),
    "21": (1, 2),
}
LONG_ROOTS = ("2", "12")


def pairing(mu, kind):
    """<mu, beta^vee> for the positive coroot of the given kind."""
    a, b = COROOTS[kind]
    return a * mu[0] + b * mu[1]


def rho2(mu):
    """Twice <mu, rho^vee>; always an integer."""
    return 3 * mu[0] + 4 * mu[1]


def rho_pairing(mu):
    """<mu, rho^vee>, only for mu in the root lattice-compatible cases."""
    twice = rho2(mu)
    if twice % 2:
        raise ValueError(f"<{tuple(mu)}, rho^vee> is not an integer")
    return twice // 2


def in_root_lattice(mu):
    return mu[0] % 2 == 0


# ----------------------------------------------------------------------------
# Weyl group


def s1(mu):
    return Weight(-mu[0], mu[0] + mu[1])


def s2(mu):
    return Weight(mu[0] + 2 * mu[1], -mu[1])


SIMPLE = {1: s1, 2: s2}


class WeylElement(NamedTuple):
    """An element of W as a 2x2 integer matrix on weight coordinates,
    with a reduced word in the generators 1 and 2."""

    matrix: tuple
    word: tuple

    def __call__(self, mu):
        (a, b), (c, d) = self.matrix
        return Weight(a * mu[0] + b * mu[1], c * mu[0] + d * mu[1])

    @property
    def length(self):
        return len(self.word)

    @property
    def sign(self):
        return -1 if len(self.word) % 2 else 1

    def compose(self, other):
        """self after other."""
        (a, b), (c, d) = self.matrix
        (e, f), (g, h) = other.matrix
        m = ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))
        return WeylElement(m, self.word + other.word)


S1 = WeylElement(((-1, 0), (1, 1)), (1,))
S2 = WeylElement(((1, 2), (0, -1)), (2,))
IDENTITY = WeylElement(((1, 0), (0, 1)), ())


@lru_cache(maxsize=None)
def weyl_group():
    """The 8 elements of W, each with a reduced word, shortest first."""
    seen = {IDENTITY.matrix: IDENTITY}
    frontier = [IDENTITY]
    while frontier:
        nxt = []
        for w in frontier:
            for gen in (S1, S2):
                u = gen.compose(w)
                if u.matrix not in seen:
                    seen[u.matrix] = u
                    nxt.append(u)
        frontier = nxt
    return tuple(sorted(seen.values(), key=lambda w: (w.length, w.word)))


def longest_element():
    return weyl_group()[-1]


def orbit(mu):
    return sorted({w(mu) for w in weyl_group()})


def dominant_representative(mu):
    """Return (dominant weight, w) with w(mu) dominant."""
    for w in weyl_group():
        nu = w(mu)
        if nu.is_dominant():
            return nu, w
    raise AssertionError("unreachable")


def dot(w, mu):
    return w(Weight(*mu) + RHO) - RHO


def is_dot_singular(mu):
    """True when mu + rho lies on a reflecting hyperplane."""
    l1, l2 = mu
    return l1 == -1 or l2 == -1 or l1 + l2 == -2 or l1 + 2 * l2 == -3


def dot_dominant(mu):
    """Return (w, w.mu) with w.mu dominant, or None when mu is dot-singular."""
    if is_dot_singular(mu):
        return None
    for w in weyl_group():
        nu = dot(w, mu)
        if nu.is_dominant():
            return w, nu
    raise AssertionError("unreachable")


# ----------------------------------------------------------------------------
# Dominance order on weights


def _check_dominant(lam):
    if not Weight(*lam).is_dominant():
        raise ValueError(f"{tuple(lam)} is not dominant")


def dominance_leq(mu, lam):
    """mu <= lam for dominant lam: same coset of the root lattice and mu in
    the octagon Conv(W lam)."""
    _check_dominant(lam)
    m1, m2 = mu
    l1, l2 = lam
    if (m1 - l1) % 2:
        return False
    a = l1 + 2 * l2
    b = l1 + l2
    return abs(m1) <= a and abs(m1 + m2) <= b and abs(m2) <= b and abs(m1 + 2 * m2) <= a


def _euclid(mu):
    return (mu[0] + mu[1], mu[1])


def hull_leq(mu, lam):
    """Brute-force version of dominance_leq: exact point-in-polygon test of mu
    against the convex hull of the W-orbit of lam, plus the lattice coset."""
    _check_dominant(lam)
    if (mu[0] - lam[0]) % 2:
        return False
    pts = sorted({_euclid(p) for p in orbit(lam)})
    x, y = _euclid(mu)
    if len(pts) == 1:
        return (x, y) == pts[0]
    hull = _convex_hull(pts)
    if len(hull) == 2:
        (ax, ay), (bx, by) = hull
        cross = (bx - ax) * (y - ay) - (by - ay) * (x - ax)
        inside = min(ax, bx) <= x <= max(ax, bx) and min(ay, by) <= y <= max(ay, by)
        return cross == 0 and inside
    for i in range(len(hull)):
        (ax, ay), (bx, by) = hull[i], hull[(i + 1) % len(hull)]
        if (bx - ax) * (y - ay) - (by - ay) * (x - ax) < 0:
            return False
    return True


def _convex_hull(pts):
    """Counter-clockwise hull of integer points (monotone chain)."""

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


@lru_cache(maxsize=None)
def weights_below(lam):
    """All mu <= lam, sorted lexicographically."""
    lam = Weight(*lam)
    _check_dominant(lam)
    a = lam.l1 + 2 * lam.l2
    b = lam.l1 + lam.l2
    return tuple(
        Weight(m1, m2)
        for m1 in range(-a, a + 1)
        for m2 in range(-b, b + 1)
        if dominance_leq((m1, m2), lam)
    )


def dominant_weights_below(lam):
    return tuple(mu for mu in weights_below(lam) if mu.is_dominant())


# ----------------------------------------------------------------------------
# Distances to the walls of the octagon


def phi_hat_formula(kind, mu, lam):
    """Closed form for the largest k with mu - k*alpha <= lam.

    Only meaningful for mu <= lam; callers that need the formula outside the
    octagon use it as an extrapolation on purpose.
    """
    m1, m2 = mu
    l1, l2 = lam
    if kind == "21":
        return l2 + m2 + min(l1, (l1 + m1) // 2, l1 + m1)
    if kind == "12":
        x = l2 + m2
        return (l1 + m1) // 2 + min(x, x // 2, l2)
    if kind == "2":
        x = l2 + m1 + m2
        return (l1 - m1) // 2 + min(x, x // 2, l2)
    raise ValueError(f"no closed form for kind {kind!r}")


def phi_hat(kind, mu, lam):
    if not dominance_leq(mu, lam):
        raise ValueError(f"{tuple(mu)} is not <= {tuple(lam)}")
    return phi_hat_formula(kind, mu, lam)


def phi_hat_scan(kind, mu, lam):
    """Linear scan k = 0, 1, 2, ... using the order test."""
    if not dominance_leq(mu, lam):
        raise ValueError(f"{tuple(mu)} is not <= {tuple(lam)}")
    alpha = ROOTS[kind]
    k = 0
    while dominance_leq(Weight(*mu) - alpha.scale(k + 1), lam):
        k += 1
    return k


def ell_1(mu):
    """Number of Bruhat-smaller weights on the alpha_1 line through mu."""
    return mu[0] if mu[0] >= 0 else -mu[0] - 1


def ell_untwisted(kind, mu):
    """Number of Bruhat-smaller weights on the kind-line through mu."""
    p = pairing(mu, kind)
    return p if p >= 0 else -p - 1


# ----------------------------------------------------------------------------
# Affine reflections


class AffineCoroot(NamedTuple):
    """level * delta + sign * beta^vee."""

    level: int
    kind: str
    sign: int = -1

    def is_positive(self):
        return self.level > 0 or (self.level == 0 and self.sign == 1)

    def __str__(self):
        s = "-" if self.sign < 0 else "+"
        return f"{self.level}δ{s}α{self.kind}∨"


def reflect(mu, level, kind):
    """Action of the reflection attached to the label level*delta - beta^vee.

    The fixed hyperplane is <x, beta^vee> = -level.
    """
    k = pairing(mu, kind) + level
    alpha = ROOTS[kind]
    return Weight(mu[0] - k * alpha[0], mu[1] - k * alpha[1])


LESS, EQUAL, GREATER = -1, 0, 1


def bruhat_compare(mu, level, kind):
    """Compare s(mu) with mu for s the reflection of level*delta - beta^vee.

    Writing the same reflection as beta^vee + h*delta with h = -level, the
    image is smaller exactly when mu lies on the far side of the hyperplane
    <x, beta^vee> = h as seen from the origin side.
    """
    h = -level
    p = pairing(mu, kind)
    if p == h:
        return EQUAL
    if (h >= 0 and p > h) or (h < 0 and p < h):
        return LESS
    return GREATER


def edge_level(x, y, kind):
    """Level m of the label m*delta - beta^vee of the edge joining x and y."""
    total = pairing(x, kind) + pairing(y, kind)
    if total % 2:
        raise ValueError("weights are not joined by a reflection")
    return -total // 2


def ceil_half(x):
    return -((-x) // 2)


def floor_half(x):
    return x // 2


__all__ = [
    "Weight", "ROOTS", "ROOT_KINDS", "COROOTS", "pairing", "rho2", "rho_pairing",
    "s1", "s2", "weyl_group", "WeylElement", "dominance_leq", "hull_leq",
    "weights_below", "phi_hat", "phi_hat_scan", "phi_hat_formula", "reflect",
    "bruhat_compare", "edge_level", "AffineCoroot", "dot", "dot_dominant",
    "is_dot_singular", "dominant_representative", "ell_1", "ell_untwisted",
]
