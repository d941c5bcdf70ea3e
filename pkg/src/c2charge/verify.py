"""Exhaustive checks of the main identities, grouped into ten criteria.

Each criterion runs a list of sub-checks.  A sub-check has a role:

- "both": one statement that must hold however it is read;
- "literal": an identity exactly as commonly stated;
- "corrected": the form that actually holds, where the literal one does not.

A criterion passes (literal reading) when its "both" and "literal" checks
pass.  The property suite run by ``c2charge verify`` instead requires
the "both" and "corrected" checks.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import bruhat as G
from . import charge as C
from . import decomposition as D
from . import hecke as H
from . import strings as S
from . import tableaux as T
from .kostka import dimension_from_multiplicities, dominant_below, kostka_foulkes
from .laurent import Laurent
from .roots import GREATER, W1, W2, Weight, bruhat_compare, dominance_leq, rho2, weights_below


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""
    role: str = "both"


@dataclass
class Result:
    number: int
    title: str
    bound: int
    checks: list = field(default_factory=list)
    seconds: float = 0.0

    def passed(self, mode="literal"):
        keep = ("both", mode)
        return all(c.passed for c in self.checks if c.role in keep)

    def first_failure(self, mode="literal"):
        keep = ("both", mode)
        for c in self.checks:
            if c.role in keep and not c.passed:
                return c
        return None


def dominant_weights(bound):
    """Dominant lam with lam1 + lam2 <= bound, in a fixed order."""
    return [Weight(l1, n - l1) for n in range(bound + 1) for l1 in range(n + 1)]


def _check(name, failures, role="both", total=None):
    """Build a Check from a list of counterexamples."""
    if not failures:
        detail = f"{total} cases" if total is not None else ""
        return Check(name, True, detail, role)
    head = failures[0]
    detail = f"{len(failures)} failures"
    if total is not None:
        detail += f" of {total}"
    detail += f"; first: {head}"
    return Check(name, False, detail, role)


def _value(name, got, want, role="both"):
    ok = got == want
    return Check(name, ok, f"got {got}, expected {want}", role)


# ----------------------------------------------------------------------------
# 1. charge gives the Kostka-Foulkes polynomials


def check_kostka(bound):
    bad, total = [], 0
    for lam in dominant_weights(bound):
        for mu in dominant_below(lam):
            total += 1
            got = C.kostka_from_charge(lam, mu)
            want = kostka_foulkes(tuple(lam), tuple(mu))
            if got != want:
                bad.append((tuple(lam), tuple(mu), got.format("q"), want.format("q")))
    out = [_check("sum q^charge = K_{lam,mu}(q)", bad, total=total)]
    for lam, want in (((0, 1), {2: 1}), ((0, 2), {2: 1, 4: 1})):
        got = C.kostka_from_charge(lam, (0, 0))
        out.append(_value(f"K_{{{lam},(0,0)}}", got.format("q"), Laurent(want).format("q")))
    return out


# ----------------------------------------------------------------------------
# 2. atoms


def check_atoms(bound):
    bad, total = [], 0
    at_bad = []
    for lam in dominant_weights(bound):
        found = D.check_atom_property(lam)
        total += len(D.atoms(lam))
        bad.extend((tuple(lam), tuple(a.zeta), a.at, a.pat) for a in found)
        fast, slow = D.decompose(lam), D.decompose(lam, brute=True)
        at_bad.extend(t for t in fast if fast[t] != slow[t])
    out = [
        _check("every atom has weights {mu <= zeta} once each", bad, total=total),
        _check("closed-form at = depth of the Psibar tower", at_bad),
    ]
    sizes = []
    for k in range(6):
        top = D.atoms((0, k))[D.AtomId(Weight(0, k), 0, 0)]
        if len(top) != (k + 1) ** 2 + k**2:
            sizes.append((k, len(top)))
    out.append(_check("|A(k w2)| = (k+1)^2 + k^2 for k <= 5", sizes))
    return out


# ----------------------------------------------------------------------------
# 3. sizes and the tableau model


def check_sizes(bound):
    bad = []
    for lam in dominant_weights(bound):
        n = len(S.crystal(lam))
        if n != S.weyl_dimension(lam) or n != dimension_from_multiplicities(lam):
            bad.append((tuple(lam), n, S.weyl_dimension(lam)))
    axioms = [(tuple(lam), p) for lam in dominant_weights(bound) for p in S.check_axioms(lam)[:1]]
    iso = []
    for lam in dominant_weights(min(bound, 5)):
        try:
            T.isomorphism(lam)
        except T.IsomorphismError as exc:
            iso.append((tuple(lam), str(exc)))
        if len(T.tableau_crystal(lam)) != S.weyl_dimension(lam):
            iso.append((tuple(lam), "tableau count"))
    return [
        _check("|B(lam)| = Weyl dimension", bad, total=len(dominant_weights(bound))),
        _check("crystal axioms", axioms),
        _check("tableau and string crystals are isomorphic", iso),
    ]


# ----------------------------------------------------------------------------
# 4. the embeddings Phi and Psi


def check_embeddings(bound):
    bound = min(bound, 4)
    comm, shift, clauses = [], [], []
    for lam in dominant_weights(bound):
        for t in S.crystal(lam):
            pt = D.phi_string(t)
            for i in (1, 2):
                for op in (S.F[i], S.E[i]):
                    u = op(t)
                    if u is not None and op(pt) != D.phi_string(u):
                        comm.append((t, op.__name__))
        iso = T.isomorphism(lam)
        big = T.isomorphism(lam + W1.scale(2))
        for tab, u in iso.items():
            if big[T.phi_tableau(tab)] != D.phi_string(u):
                shift.append((tab, u))
        for t in D.principal_preatom(lam):
            p, pb = D.psi(t), D.psi_bar(t)
            mu = S.weight(t)
            if S.weight(p) != mu or S.weight(pb) != mu:
                clauses.append((1, t))
            if S.phi2(p) != S.phi2(t):
                clauses.append((2, t))
            u = S.f2(t)
            if u is not None and S.f2(p) != D.psi(u):
                clauses.append((3, t))
            u = S.e2(t)
            if u is not None and S.e2(p) != D.psi(u):
                clauses.append((4, t))
            if S.s1(pb) != D.psi_bar(S.s1(t)):
                clauses.append((5, t))
    return [
        _check("Phi commutes with e_i, f_i where defined", comm),
        _check("tableau Phi is the string shift (0,+1,+1,+1)", shift),
        _check("Psi preserves weight and phi2, commutes with e2, f2; Psibar commutes with s1", clauses),
    ]


# ----------------------------------------------------------------------------
# 5. the Z function


def check_z(bound):
    bound = min(bound, 5)
    ambient, top, total = [], [], 0
    for lam in dominant_weights(bound):
        for t, loc in D.decompose(lam).items():
            total += 1
            z = S.z_function(t)
            if z != S.z_closed_form(t, loc.pat):
                ambient.append((t, z, S.z_closed_form(t, loc.pat)))
            if z != S.z_closed_form(t, loc.pat, loc.preatom_top):
                top.append(t)
    return [
        _check("Z closed form with lam the crystal's highest weight", ambient, "literal", total),
        _check("Z closed form with lam the preatom top lam - 2 pat w1", top, "corrected", total),
    ]


# ----------------------------------------------------------------------------
# 6. swappable edges


def check_swappable(bound):
    bound = min(bound, 5)
    bad, total = [], 0
    for lam in dominant_weights(bound):
        for e in G.indexed_edges(lam):
            total += 1
            if G.is_swappable(e, lam) != G.is_swappable_brute(e, lam):
                bad.append((tuple(lam), e))
    out = [_check("closed-form classification = brute force", bad, total=total)]
    lam = Weight(2, 2)
    mu = Weight(2, -1)
    out.append(_value("l_7 at (2,-1) and t_8 (2,-1), lam=(2,2)",
                      (G.ell_m(7, mu, lam), G.ell_m(7, G.apply_t(8, mu), lam)), (7, 8)))
    mu = Weight(4, -2)
    nu = G.apply_t(12, mu)
    out.append(_value("l_11 at (4,-2) and t_12 (4,-2), lam=(2,2)",
                      (G.ell_m(11, mu, lam) if dominance_leq(mu, lam) else None,
                       G.ell_m(11, nu, lam) if dominance_leq(nu, lam) else None), (9, 9)))
    lam = Weight(3, 2)
    mu = Weight(1, -1)
    e = G.upward_edge(G.label_index("2", 3), mu, lam)
    got = None if e is None else (G.is_swappable(e, lam), G.is_swappable_brute(e, lam))
    out.append(_value("edge (1,-1) -> v_3 (1,-1) swappable at lam=(3,2)", got, (True, True)))
    return out


# ----------------------------------------------------------------------------
# 7. counting non-swappable edges and staircases


def _ncountgen_cases(lam):
    """(mu, m, lhs, N) for mu <= lam, m = 4M <= max(m*, 4) and mu < t_m mu."""
    top = max(G.m_star(lam), 4)
    for mu in weights_below(lam):
        for M in range(1, top // 4 + 1):
            m = 4 * M
            if bruhat_compare(mu, M, "2") == GREATER:
                nu = G.apply_t(m, mu)
                lhs = G.ell_m(m, mu, lam) - G.ell_hat(m, nu, lam) - 1
                yield mu, m, nu, lhs, G.ns_count_brute(m, mu, lam)


def check_counting(bound):
    bound = min(bound, 4)
    ncount, closed, gen_all, gen_dom, raw, clamp, dcount = [], [], [], [], [], [], []
    n_edges = 0
    for lam in dominant_weights(bound):
        ms = G.m_star(lam)
        for mu in weights_below(lam):
            for m in range(ms + 1):
                if G.ns_count(m, mu, lam) != G.ns_count_brute(m, mu, lam):
                    closed.append((tuple(lam), tuple(mu), m))
                if m == ms:
                    continue
                e = G.upward_edge(m + 1, mu, lam)
                if e is None:
                    continue
                n_edges += 1
                n = G.ns_count_brute(m + 1, mu, lam)
                a = G.ell_m(m + 1, mu, lam) - G.ell_m(m + 1, e.upper, lam) - 1
                b = G.ell_m(m, mu, lam) - G.ell_m(m, e.upper, lam) + 1
                if not a == b == n:
                    ncount.append((tuple(lam), tuple(mu), m + 1, a, b, n))
            n_inf = G.ns_count_brute(None, mu, lam)
            if G.ns_infinity_formula(mu, lam) != n_inf:
                raw.append((tuple(lam), tuple(mu), G.ns_infinity_formula(mu, lam), n_inf))
            if G.ns_infinity(mu, lam) != n_inf:
                clamp.append((tuple(lam), tuple(mu)))
            if G.staircase_infinity(mu, lam) != G.staircase_brute(None, mu, lam):
                dcount.append((tuple(lam), tuple(mu)))
        for mu, m, nu, lhs, n in _ncountgen_cases(lam):
            case = (tuple(lam), tuple(mu), m, lhs, n)
            if lhs != n:
                gen_all.append(case)
                if mu.l1 > 0 and (dominance_leq(nu, lam) or n > 0):
                    gen_dom.append(case)
    out = [
        _check("upward edges: l_{m+1} and l_m differences equal N_{m+1}", ncount, total=n_edges),
        _check("finite-stage N_m closed form = brute force", closed),
        _check("l_m(mu) - lhat_m(t_m mu) - 1 = N_m(mu) for all mu < t_m mu, m = 4M", gen_all, "literal"),
        _check("same identity for mu1 > 0 and (t_m mu <= lam or N_m(mu) > 0)", gen_dom, "corrected"),
        _check("N_inf closed form as written = brute force", raw, "literal"),
        _check("N_inf closed form clamped below at 0 = brute force", clamp, "corrected"),
        _check("Dhat_inf closed form = brute force", dcount),
    ]
    out.append(_value("Dhat_inf((3,0),(3,1))", G.staircase_brute(None, Weight(3, 0), Weight(3, 1)), 2))
    mu, lam = Weight(3, 0), Weight(3, 1)
    down = Weight(2, -2)  # -alpha2
    omegas = [G.elevation(mu, down, k, lam + W2.scale(k - 1)) for k in (1, 2, 3)]
    out.append(_value("elevations of the staircase at (3,0), lam=(3,1)", omegas, [0, 1, 2]))
    return out


# ----------------------------------------------------------------------------
# 8. recharge


def check_recharge(bound):
    bound = min(bound, 4)
    parabolic, alt, swaps, walls, kf = [], [], [], [], []
    n_pairs = 0
    for lam in dominant_weights(bound):
        for t in S.crystal(lam):
            if C.recharge2(t, None) != C.r_parabolic2(t):
                parabolic.append(t)
            if C.sigma(t, None) != C.sigma_infinity_alt(t):
                alt.append(t)
        for m in range(G.m_star(lam)):
            for t, u in C.swap_pairs(lam, m):
                n_pairs += 1
                if C.recharge2(t, m + 1) != C.recharge2(u, m + 1) + 2:
                    swaps.append((tuple(lam), m, t, u))
        fail = C.verify_wall_crossing(lam)
        if fail is not None:
            walls.append(fail)
        for mu in dominant_below(lam):
            if C.kostka_from_charge(lam, mu, C.charge_from_recharge) != kostka_foulkes(tuple(lam), tuple(mu)):
                kf.append((tuple(lam), tuple(mu)))
    return [
        _check("r_inf = r_P", parabolic),
        _check("sigma_inf = l^1 + phi2 + phi12 + phihat21 + 2p", alt),
        _check("r_{m+1}(T) = r_{m+1}(psi T) + 1", swaps, total=n_pairs),
        _check("wall-crossing recursions at every index", walls),
        _check("r_0 reproduces K_{lam,mu}(q)", kf),
    ]


# ----------------------------------------------------------------------------
# 9. the epsilon form of the charge


def check_eps_charge(bound):
    literal, corrected, total = [], [], 0
    for lam in dominant_weights(bound):
        for t, loc in D.decompose(lam).items():
            mu = S.weight(t)
            if not mu.is_dominant():
                continue
            total += 1
            e = C.charge_eps(t)
            single = rho2(lam - mu) // 2 - loc.at - loc.pat
            if e != single:
                literal.append((t, e, single))
            if e != C.charge(t):
                corrected.append(t)
    return [
        _check("eps form = <lam - wt, rho> - at - pat", literal, "literal", total),
        _check("eps form = <lam - wt, rho> - at - 2 pat", corrected, "corrected", total),
    ]


# ----------------------------------------------------------------------------
# 10. Hecke algebra


def check_hecke(bound):
    bound = min(bound, 5)
    conv = H.verify_conversions(bound)
    chars, bases = [], []
    for lam in dominant_weights(bound):
        if dict(D.characters_v1(S.crystal(lam))) != H.kl_basis(lam).at_one():
            chars.append(("B", tuple(lam)))
        if dict(D.characters_v1(D.principal_preatom(lam))) != H.n3_tilde(lam).at_one():
            chars.append(("P", tuple(lam)))
        for aid, elems in D.atoms(lam).items():
            if dict(D.characters_v1(elems)) != H.precanonical(2, aid.zeta).at_one():
                chars.append(("A", tuple(lam), tuple(aid.zeta)))
        if H.precanonical(2, lam) != H.atomic_expected(lam):
            bases.append(("N2", tuple(lam)))
        if H.precanonical(4, lam) != H.kl_basis(lam):
            bases.append(("N4", tuple(lam)))
    return [
        _check("conversion identities", conv),
        _check("v = 1 characters of crystals, preatoms and atoms", chars),
        _check("N^2 is the atomic basis and N^4 = Hbar", bases),
    ]


# ----------------------------------------------------------------------------
# driver

CRITERIA = {
    1: ("Kostka-Foulkes equality", check_kostka, 6),
    2: ("atom property", check_atoms, 6),
    3: ("crystal sizes and tableau model", check_sizes, 6),
    4: ("embedding laws", check_embeddings, 4),
    5: ("Z identity", check_z, 5),
    6: ("swappable classification", check_swappable, 5),
    7: ("counting identities", check_counting, 4),
    8: ("recharge machinery", check_recharge, 4),
    9: ("epsilon form of the charge", check_eps_charge, 6),
    10: ("Hecke identities", check_hecke, 5),
}


def run_criterion(number, bound=None):
    title, fn, default = CRITERIA[number]
    b = default if bound is None else min(bound, default)
    start = time.perf_counter()
    checks = fn(b)
    return Result(number, title, b, checks, time.perf_counter() - start)


def run_all(bound=None, numbers=None, jobs=1):
    numbers = sorted(CRITERIA) if numbers is None else list(numbers)
    if jobs <= 1:
        return [run_criterion(n, bound) for n in numbers]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(run_criterion, n, bound) for n in numbers]
        return [f.result() for f in futures]


def format_result(r, mode="literal"):
    status = "PASS" if r.passed(mode) else "FAIL"
    return f"[{status}] criterion {r.number:2d}: {r.title} (bound {r.bound}, {r.seconds:.1f}s)"


def format_check(c):
    status = "ok " if c.passed else "BAD"
    tag = "" if c.role == "both" else f" ({c.role})"
    return f"    {status} {c.name}{tag}: {c.detail}"
