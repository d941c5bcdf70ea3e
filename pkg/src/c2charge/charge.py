"""Recharge statistics r_m, swapping functions and the charge.

For T in B(lam') write p = pat(T), a = at(T), lam = lam' - 2p w1 for the top
of its preatom and zeta = lam - a w2 for the top of its atom.  With
mu = wt(T),

    sigma_m(T) = l_m(mu, zeta) - N_m(mu, zeta) + D_m(mu, lam, a) + a + 2p
    r_m(T)     = -sigma_m(T) + <lam', rho^vee>.

r_m can be a half-integer, so everything here works with 2 r_m.
m = None stands for m = infinity.
"""

from __future__ import annotations

from functools import lru_cache

from . import bruhat as G
from . import decomposition as D
from . import strings as S
from .laurent import Laurent
from .roots import W2, Weight, dominance_leq, ell_1, phi_hat_formula, rho2


def _stage(m, zeta):
    """Finite stages beyond m*(zeta) give the stable graph."""
    if m is None or m >= G.m_star(zeta):
        return None
    return m


def sigma(t, m, brute_staircase=False):
    loc = D.decompose(t.lam)[t]
    mu = S.weight(t)
    zeta = loc.zeta
    ell = G.ell_m(_stage(m, zeta), mu, zeta)
    ns = G.ns_count(m, mu, zeta)
    stairs = G.truncated_staircase(m, mu, loc.preatom_top, loc.at, brute=brute_staircase or m is not None)
    return ell - ns + stairs + loc.at + 2 * loc.pat


def recharge2(t, m):
    """Twice r_m(t)."""
    return -2 * sigma(t, m) + rho2(t.lam)


def r_parabolic2(t):
    """Twice -<rho^vee, wt> + phi1 - l^1(wt)."""
    mu = S.weight(t)
    return -rho2(mu) + 2 * (S.phi1(t) - ell_1(mu))


def r_mv2(t):
    return -rho2(S.weight(t))


def sigma_infinity_alt(t):
    """l^1(mu) + phi2 + phi12 + phihat21(mu, lam) + 2p, lam the preatom top."""
    loc = D.decompose(t.lam)[t]
    mu = S.weight(t)
    return ell_1(mu) + S.phi2(t) + S.phi12(t) + phi_hat_formula("21", mu, loc.preatom_top) + 2 * loc.pat


# ----------------------------------------------------------------------------
# charge


def _require_dominant(t):
    if not S.weight(t).is_dominant():
        raise ValueError(f"charge is only defined on dominant weights, got {S.weight(t)}")


def charge(t):
    """<lam' - wt, rho^vee> - at - 2 pat."""
    _require_dominant(t)
    loc = D.decompose(t.lam)[t]
    twice = rho2(t.lam - S.weight(t))
    return twice // 2 - loc.at - 2 * loc.pat


def charge_eps(t):
    """eps1 + eps2 + eps12 + epshat21, the last one measured in the atom."""
    _require_dominant(t)
    loc = D.decompose(t.lam)[t]
    return S.eps1(t) + S.eps2(t) + S.eps12(t) + D.eps21_hat(t, loc.zeta)


def charge_from_recharge(t):
    _require_dominant(t)
    twice = recharge2(t, 0) + rho2(S.weight(t))
    return twice // 2


def kostka_from_charge(lam, mu, stat=charge):
    """sum of q^{stat(T)} over T in B(lam) of weight mu."""
    total = Laurent()
    for t in S.crystal(Weight(*lam)):
        if S.weight(t) == Weight(*mu):
            total = total + Laurent.monomial(stat(t))
    return total


# ----------------------------------------------------------------------------
# generating functions and wall crossing


@lru_cache(maxsize=None)
def recharge_table(lam, m):
    lam = Weight(*lam)
    return {t: recharge2(t, m) for t in S.crystal(lam)}


def generating_function(lam, m):
    """weight -> sum over T of v^{2 r_m(T)} (a Laurent polynomial in v)."""
    out = {}
    for t, r2 in recharge_table(Weight(*lam), m).items():
        mu = S.weight(t)
        out[mu] = out.get(mu, Laurent()) + Laurent.monomial(r2)
    return out


def verify_wall_crossing(lam, top=None):
    """Check that crossing the wall of t_{m+1} relates the generating
    functions at m and m+1.  Returns the first failing (lam, m, mu) or None."""
    lam = Weight(*lam)
    top = G.m_star(lam) if top is None else top
    vinv2 = Laurent.monomial(-2)
    one_minus = Laurent.one() - vinv2
    for m in range(top):
        h0 = generating_function(lam, m)
        h1 = generating_function(lam, m + 1)
        expected = dict(h1)
        for nu in list(h1):
            mu = G.apply_t(m + 1, nu)
            label = G.t(m + 1)
            if mu == nu or not dominance_leq(mu, lam):
                continue
            # nu is the upper end: mu < nu
            if G.bruhat_compare(mu, label.level, label.kind) != G.LESS and G.bruhat_compare(nu, label.level, label.kind) == G.LESS:
                expected[nu] = vinv2 * h1[nu]
                expected[mu] = h1.get(mu, Laurent()) + one_minus * h1[nu]
        for mu in set(h0) | set(expected):
            if h0.get(mu, Laurent()) != expected.get(mu, Laurent()):
                return (lam, m, mu)
    return None


# ----------------------------------------------------------------------------
# swapping functions


def swap(t, m):
    """psi: the partner of T across the wall of t_{m+1}.

    T must have weight t_{m+1} mu with mu < t_{m+1} mu <= zeta, zeta the top
    of its atom.  The partner is the element of weight mu in the atom
    Omega(e) steps further down in the same preatom."""
    loc = D.decompose(t.lam)[t]
    nu = S.weight(t)
    mu = G.apply_t(m + 1, nu)
    e = G.upward_edge(m + 1, mu, loc.zeta)
    if e is None or e.upper != nu:
        raise ValueError(f"{nu} is not the upper end of a t_{m + 1} edge in the atom")
    omega = G.edge_elevation(e, loc.zeta)
    target_at = loc.at + omega
    out = D.atom_element(t.lam, loc.pat, target_at, mu)
    if out is None:
        raise LookupError(f"no atom at offset {target_at} holds weight {mu}")
    return out


def swap_pairs(lam, m):
    """Every (T, psi(T)) at stage m for elements of B(lam)."""
    pairs = []
    for t in S.crystal(Weight(*lam)):
        loc = D.decompose(t.lam)[t]
        nu = S.weight(t)
        mu = G.apply_t(m + 1, nu)
        e = G.upward_edge(m + 1, mu, loc.zeta) if dominance_leq(mu, loc.zeta) else None
        if e is None or e.upper != nu:
            continue
        pairs.append((t, swap(t, m)))
    return pairs


# ----------------------------------------------------------------------------
# the four wall contributions


def delta_totals(t):
    loc = D.decompose(t.lam)[t]
    mu = S.weight(t)
    zeta = loc.zeta
    split = G.ell_split(0, mu, zeta)
    return {
        "1": S.phi1(t) - ell_1(mu),
        "2": S.phi2(t) - split["2"],
        "12": S.phi12(t) - split["12"],
        "21": phi_hat_formula("21", mu, zeta) - split["21"],
    }


def phi12_identity_failures(lam):
    """Elements with wt1 <= 0 in B(lam) violating either wall-distance
    identity for phi12 and phi2."""
    bad = []
    for t in S.crystal(Weight(*lam)):
        mu = S.weight(t)
        if mu.l1 > 0:
            continue
        loc = D.decompose(t.lam)[t]
        top, a = loc.preatom_top, loc.at
        zeta = top - W2.scale(a)
        rhs = (
            phi_hat_formula("12", mu, zeta)
            - G.ns_infinity(mu, zeta)
            + G.truncated_staircase(None, mu, top, a, brute=False)
        )
        if S.phi12(t) != rhs or S.phi2(t) != phi_hat_formula("2", mu, zeta):
            bad.append(t)
    return bad
