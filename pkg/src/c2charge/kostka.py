"""Independent ground truth: Lusztig's q-analogue of weight multiplicity.

Works in orthonormal coordinates (x1, x2) where the positive roots are
e1 - e2, 2e2, 2e1, e1 + e2 and the fundamental weights are e1 and e1 + e2.
The Weyl group acts by signed permutations, so this module does not share
any code with the crystal or Bruhat-graph machinery.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product

from .laurent import Laurent

RHO_E = (2, 1)


def to_euclid(mu):
    """(l1, l2) in the fundamental-weight basis -> (x1, x2)."""
    return (mu[0] + mu[1], mu[1])


def from_euclid(x):
    return (x[0] - x[1], x[1])


@lru_cache(maxsize=None)
def _signed_permutations():
    out = []
    for perm in permutations(range(2)):
        for signs in product((1, -1), repeat=2):
            # determinant of the signed permutation matrix
            det = signs[0] * signs[1] * (1 if perm == (0, 1) else -1)
            out.append((perm, signs, det))
    return tuple(out)


def _act(w, x):
    perm, signs, _ = w
    return (signs[0] * x[perm[0]], signs[1] * x[perm[1]])


@lru_cache(maxsize=None)
def q_kostant(nu):
    """Sum over a*(e1-e2) + b*(2e2) + c*(2e1) + d*(e1+e2) = nu of q^(a+b+c+d)."""
    n1, n2 = nu
    terms = {}
    if n1 < 0:
        return Laurent()
    for c in range(n1 // 2 + 1):
        for d in range(n1 - 2 * c + 1):
            a = n1 - 2 * c - d
            twice_b = n2 + a - d
            if twice_b < 0 or twice_b % 2:
                continue
            b = twice_b // 2
            k = a + b + c + d
            terms[k] = terms.get(k, 0) + 1
    return Laurent(terms)


@lru_cache(maxsize=None)
def kostka_foulkes(lam, mu):
    """K_{lam,mu}(q) as a polynomial in q, for dominant lam and mu given in the
    fundamental-weight basis."""
    for w in (lam, mu):
        if w[0] < 0 or w[1] < 0:
            raise ValueError(f"{tuple(w)} is not dominant")
    x = to_euclid(lam)
    y = to_euclid(mu)
    lr = (x[0] + RHO_E[0], x[1] + RHO_E[1])
    mr = (y[0] + RHO_E[0], y[1] + RHO_E[1])
    total = Laurent()
    for w in _signed_permutations():
        wx = _act(w, lr)
        total = total + w[2] * q_kostant((wx[0] - mr[0], wx[1] - mr[1]))
    return total


def weight_multiplicity(lam, mu):
    """dim V(lam)_mu for any weight mu, via its dominant conjugate."""
    x = to_euclid(mu)
    dom = tuple(sorted((abs(x[0]), abs(x[1])), reverse=True))
    return kostka_foulkes(tuple(lam), from_euclid(dom)).at_one()


def weyl_dim(lam):
    l1, l2 = lam
    return (l1 + 1) * (l2 + 1) * (l1 + l2 + 2) * (l1 + 2 * l2 + 3) // 6


def orbit_size(mu):
    x = to_euclid(mu)
    return len({_act(w, x) for w in _signed_permutations()})


def dominant_below(lam):
    """Dominant mu with K_{lam,mu} possibly nonzero (same root-lattice coset and
    lam - mu a nonnegative combination of simple roots)."""
    out = []
    l1, l2 = lam
    for m2 in range(l1 + l2 + 1):
        for m1 in range(l1 + 2 * l2 + 1):
            if (m1 - l1) % 2:
                continue
            x, y = to_euclid(lam), to_euclid((m1, m2))
            n1, n2 = x[0] - y[0], x[1] - y[1]
            # n = s*(e1-e2) + t*(2e2) with s, t >= 0
            if n1 >= 0 and n1 + n2 >= 0 and (n1 + n2) % 2 == 0:
                out.append((m1, m2))
    return sorted(out)


def dimension_from_multiplicities(lam):
    return sum(orbit_size(mu) * kostka_foulkes(tuple(lam), mu).at_one() for mu in dominant_below(lam))
