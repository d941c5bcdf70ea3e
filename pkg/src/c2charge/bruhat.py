"""Bruhat graphs of weights and their twisted orientations.

The graph on {mu <= lam} joins two weights whenever they differ by a
multiple of a root.  The edge between x and y = x + j*beta carries the label
K*delta - beta^vee with K = -(<x, beta^vee> + <y, beta^vee>)/2.  A fixed
infinite sequence of labels t_1, t_2, ... (period four in the level) is used
to twist the graph: at stage m the edges whose label is among t_1..t_m are
reversed.  A stage m = None stands for m = infinity.
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

from .roots import (
    LESS,
    ROOT_KINDS,
    ROOTS,
    W2,
    AffineCoroot,
    Weight,
    bruhat_compare,
    ceil_half,
    dominance_leq,
    pairing,
    phi_hat_formula,
    reflect,
    s1,
    weights_below,
)

# ----------------------------------------------------------------------------
# the reflection order


def label_index(kind, level):
    """Position of level*delta - beta^vee in the order, or None if it never
    occurs (alpha1 labels and non-positive levels)."""
    if level <= 0:
        return None
    if kind == "21":
        return 2 * level - 1
    if kind == "12":
        return 4 * level - 2
    if kind == "2":
        return 4 * level
    return None


def t(k):
    """The k-th label of the order, as an AffineCoroot."""
    if k < 1:
        raise ValueError("indices start at 1")
    M, r = divmod(k + 3, 4)
    if r == 0:
        return AffineCoroot(2 * M - 1, "21")
    if r == 1:
        return AffineCoroot(M, "12")
    if r == 2:
        return AffineCoroot(2 * M, "21")
    return AffineCoroot(M, "2")


def apply_t(k, mu):
    label = t(k)
    return reflect(mu, label.level, label.kind)


def in_twist(kind, level, m):
    """Whether the label lies among the first m labels (m = None: all)."""
    idx = label_index(kind, level)
    if idx is None:
        return False
    return m is None or idx <= m


# ----------------------------------------------------------------------------
# edges


class Edge(NamedTuple):
    """An edge of the untwisted graph, stored with lower end first."""

    lower: Weight
    upper: Weight
    kind: str
    level: int

    @property
    def label(self):
        return AffineCoroot(self.level, self.kind)

    @property
    def index(self):
        return label_index(self.kind, self.level)


def make_edge(x, y, kind):
    level = -(pairing(x, kind) + pairing(y, kind)) // 2
    if bruhat_compare(x, level, kind) == LESS:
        return Edge(Weight(*y), Weight(*x), kind, level)
    return Edge(Weight(*x), Weight(*y), kind, level)


def line_neighbours(mu, kind, lam):
    """Weights nu != mu on the kind-line through mu with nu <= lam."""
    alpha = ROOTS[kind]
    out = []
    for sign in (1, -1):
        j = 1
        while True:
            nu = Weight(mu[0] + sign * j * alpha[0], mu[1] + sign * j * alpha[1])
            if not dominance_leq(nu, lam):
                break
            out.append(nu)
            j += 1
    return out


@lru_cache(maxsize=None)
def edges(lam):
    """All edges of the graph on {mu <= lam}, sorted."""
    lam = Weight(*lam)
    seen = set()
    for mu in weights_below(lam):
        for kind in ROOT_KINDS:
            for nu in line_neighbours(mu, kind, lam):
                seen.add(make_edge(mu, nu, kind))
    return tuple(sorted(seen))


@lru_cache(maxsize=None)
def incident(lam):
    table = {mu: [] for mu in weights_below(Weight(*lam))}
    for e in edges(lam):
        table[e.lower].append(e)
        table[e.upper].append(e)
    return table


def m_star(lam):
    """Index after which the twisted graph no longer changes."""
    return max((e.index for e in edges(lam) if e.index is not None), default=0)


def points_to(e, mu, m):
    """Whether the edge e, twisted at stage m, points into mu."""
    into_upper = not in_twist(e.kind, e.level, m)
    return (e.upper == mu) if into_upper else (e.lower == mu)


def arrows_m(m, mu, lam):
    """Edges pointing into mu in the graph on {nu <= lam} twisted at stage m."""
    mu = Weight(*mu)
    lam = Weight(*lam)
    if not dominance_leq(mu, lam):
        raise ValueError(f"{tuple(mu)} is not <= {tuple(lam)}")
    return [e for e in incident(lam)[mu] if points_to(e, mu, m)]


def ell_split(m, mu, lam):
    out = {kind: 0 for kind in ROOT_KINDS}
    for e in arrows_m(m, mu, lam):
        out[e.kind] += 1
    return out


@lru_cache(maxsize=None)
def ell_m(m, mu, lam):
    return len(arrows_m(m, mu, lam))


def ell_line(m, mu, kind):
    """Arrows into mu along the whole kind-line (no bound), twisted at a
    finite stage m."""
    if m is None:
        raise ValueError("the unbounded line has infinitely many twisted edges")
    p = pairing(mu, kind)
    count = p if p >= 0 else -p - 1
    level = 1
    while True:
        idx = label_index(kind, level)
        if idx is None or idx > m:
            break
        if p != -level:  # otherwise mu is fixed and there is no edge
            if bruhat_compare(mu, level, kind) == LESS:
                count -= 1
            else:
                count += 1
        level += 1
    return count


def ell_hat(m, mu, lam):
    """Arrow count that falls back to the wall distances when mu is outside
    the octagon of lam.  Weights with mu1 < 0 are handled through s1."""
    mu = Weight(*mu)
    if mu.l1 < 0:
        mu = s1(mu)
    total = ell_line(m, mu, "1") + ell_line(m, mu, "2")
    if dominance_leq(mu, lam):
        split = ell_split(m, mu, lam)
        return total + split["21"] + split["12"]
    return total + phi_hat_formula("21", mu, lam) + phi_hat_formula("12", mu, lam)


# ----------------------------------------------------------------------------
# swappable edges


def upward_edge(k, mu, lam):
    """The edge mu -> t_k mu when mu < t_k mu <= lam, else None."""
    label = t(k)
    if bruhat_compare(mu, label.level, label.kind) == LESS:
        return None
    nu = reflect(mu, label.level, label.kind)
    if nu == mu or not dominance_leq(nu, lam):
        return None
    return Edge(Weight(*mu), nu, label.kind, label.level)


def is_swappable_brute(e, lam):
    """e = (mu -> t_{m+1} mu) is swappable when l_m(mu) = l_m(t mu) - 1."""
    m = e.index - 1
    return ell_m(m, e.lower, lam) == ell_m(m, e.upper, lam) - 1


def _alpha2_swappable(mu, M, lam):
    m1, m2 = mu
    l1, l2 = lam
    if m1 <= 0:
        return True
    if m1 >= l1:
        return m2 >= -l2 + 1 and M <= ceil_half(l2 - m2)
    return not (2 * M > (l1 - m1) + 2 * max(-m2, ceil_half(l2 - m2)))


def is_swappable(e, lam):
    """Closed-form classification of an edge with lower end e.lower."""
    if e.kind == "21":
        return True
    if e.kind == "12":
        return _alpha2_swappable(s1(e.lower), e.level, lam)
    if e.kind == "2":
        return _alpha2_swappable(e.lower, e.level, lam)
    raise ValueError("alpha1 edges carry no index")


def indexed_edges(lam):
    return [e for e in edges(lam) if e.index is not None]


# ----------------------------------------------------------------------------
# counting non-swappable edges


def ns_count_brute(m, mu, lam):
    mu = Weight(*mu)
    top = m if m is not None else max(m_star(lam), 1)
    count = 0
    for k in range(1, top + 1):
        e = upward_edge(k, mu, lam)
        if e is not None and not is_swappable_brute(e, lam):
            count += 1
    return count


def ns_count(m, mu, lam):
    """Number of non-swappable edges mu -> t_k mu, k <= m, by closed form."""
    mu = Weight(*mu)
    if m is None:
        return ns_infinity(mu, lam)
    if mu.l1 < 0:
        # the alpha12 labels up to stage m mirror the alpha2 labels up to m + 2
        return _ns_finite(s1(mu), lam, (m + 2) // 4)
    return _ns_finite(mu, lam, m // 4)


def _ns_finite(mu, lam, top_level):
    m1, m2 = mu
    l1, l2 = lam
    tail = min(m2, (m2 - l2) // 2)
    Mt = min(top_level, -m2 + phi_hat_formula("2", mu, lam))
    if m1 >= l1:
        val = Mt + tail
    elif 0 < m1 < l1 and m2 <= l2 and m1 + m2 >= -l2:
        val = Mt + (m1 - l1) // 2 + tail
    else:
        return 0
    # same lower clamp as ns_infinity
    return max(0, val)


def ns_infinity(mu, lam):
    """Number of non-swappable edges out of mu, over all stages."""
    return max(0, ns_infinity_formula(mu, lam))


def ns_infinity_formula(mu, lam):
    """The bare closed-form expression; it dips to -1 on some weights with
    lam1 = 0 or mu1 = 0, where the true count is 0."""
    mu = Weight(*mu)
    if mu.l1 < 0:
        mu = s1(mu)
    m1, m2 = mu
    l1, l2 = lam
    p2 = phi_hat_formula("2", mu, lam)
    if m1 >= l1:
        return p2 - max(0, ceil_half(m2 + l2))
    if 0 < m1 < l1 and m2 <= l2 and m1 + m2 >= -l2:
        return p2 + (m1 - l1) // 2 - max(0, ceil_half(m2 + l2))
    return 0


# ----------------------------------------------------------------------------
# elevation and staircases


def _edge_between(mu, nu):
    """Edge joining mu and nu if they lie on a common root line, else None."""
    for kind in ROOT_KINDS:
        alpha = ROOTS[kind]
        d = (nu[0] - mu[0], nu[1] - mu[1])
        if alpha[0]:
            if d[0] % alpha[0]:
                continue
            j = d[0] // alpha[0]
        else:
            if d[1] % alpha[1]:
                continue
            j = d[1] // alpha[1]
        if j and (j * alpha[0], j * alpha[1]) == d:
            return make_edge(mu, nu, kind)
    return None


def classified(mu, nu, lam):
    """'S', 'N' or None for the pair mu < nu inside the graph of lam."""
    lam = Weight(*lam)
    if not lam.is_dominant() or not dominance_leq(mu, lam) or not dominance_leq(nu, lam):
        return None
    e = _edge_between(mu, nu)
    if e is None or e.lower != Weight(*mu) or e.index is None:
        return None
    return "S" if is_swappable(e, lam) else "N"


def elevation(mu, step, k, lam):
    """Least j with mu -> mu + (k - j) step swappable over lam - j w2.

    step is a root vector (the edge goes from mu in the step direction)."""
    mu = Weight(*mu)
    lam = Weight(*lam)
    for j in range(k + 1):
        if k - j == 0:
            return j
        nu = mu + Weight(step[0] * (k - j), step[1] * (k - j))
        if classified(mu, nu, lam - W2.scale(j)) == "S":
            return j
    raise AssertionError("unreachable")


def edge_elevation(e, lam):
    """Elevation of an edge given with its lower end first."""
    d = (e.upper[0] - e.lower[0], e.upper[1] - e.lower[1])
    alpha = ROOTS[e.kind]
    j = d[0] // alpha[0] if alpha[0] else d[1] // alpha[1]
    step = alpha if j > 0 else Weight(-alpha[0], -alpha[1])
    return elevation(e.lower, step, abs(j), lam)


def _directions():
    for kind in ROOT_KINDS:
        a = ROOTS[kind]
        yield kind, a
        yield kind, Weight(-a[0], -a[1])


def staircase_brute(m, mu, lam):
    """Length of the longest NS staircase over (mu, lam), labels restricted to
    the first m (m = None: no restriction)."""
    mu = Weight(*mu)
    lam = Weight(*lam)
    best = 0
    for kind, step in _directions():
        n = 0
        while True:
            if n > 0:
                cls = classified(mu, mu + step.scale(n), lam)
                if cls is None and not dominance_leq(mu + step.scale(n), lam):
                    break
                if cls != "S":
                    n += 1
                    continue
            a = 0
            while True:
                i = a + 1
                nu = mu + step.scale(n + i)
                big = lam + W2.scale(i)
                if classified(mu, nu, big) != "N":
                    break
                e = _edge_between(mu, nu)
                if m is not None and e.index > m:
                    break
                a = i
            best = max(best, a)
            n += 1
    return best


def staircase_infinity(mu, lam):
    """Closed form for the longest NS staircase, no label restriction."""
    m1, m2 = mu
    l1, l2 = lam
    if m1 < 0:
        m1, m2 = -m1, m1 + m2
    if m1 == 0:
        return 0
    if -l2 <= m2 <= l2 and (m2 - l2) % 2:
        return max(0, min(l1, m1) - 1)
    if m2 < -l2:
        return max(0, min(m1, l1) + l2 + m2)
    return 0


def truncated_staircase(m, mu, lam, k, brute=True):
    """min(k, longest NS staircase over (mu, lam - k w2))."""
    if k == 0:
        return 0
    inner = Weight(*lam) - W2.scale(k)
    if m is None and not brute:
        return min(k, staircase_infinity(mu, inner))
    return min(k, staircase_brute(m, mu, inner))


# ----------------------------------------------------------------------------
# export


def to_dot(lam, m=None):
    """DOT text for the graph of lam twisted at stage m (None: untwisted)."""
    lam = Weight(*lam)
    lines = [f'digraph "G{lam}" {{']
    for mu in sorted(weights_below(lam)):
        lines.append(f'  "{mu}";')
    for e in edges(lam):
        flipped = m is not None and in_twist(e.kind, e.level, m)
        src, dst = (e.upper, e.lower) if flipped else (e.lower, e.upper)
        if e.index is None:
            tag = ""
        else:
            tag = " [S]" if is_swappable(e, lam) else " [N]"
        lines.append(f'  "{src}" -> "{dst}" [label="{e.label}{tag}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
