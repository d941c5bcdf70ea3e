"""Kashiwara-Nakashima tableaux for Sp(4).

Letters are the integers 1, 2, -2, -1 standing for 1 < 2 < 2bar < 1bar.
A tableau of shape lam = (l1, l2) has a first row of length l1 + l2 and a
second row of length l2, so its first l2 columns have height two.
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

from .roots import Weight

ALPHABET = (1, 2, -2, -1)
RANK = {1: 0, 2: 1, -2: 2, -1: 3}
NAMES = {1: "1", 2: "2", -2: "-2", -1: "-1"}

# signature labels: +1 means the letter can be lowered, -1 raised
SIGN = {
    1: {1: 1, -2: 1, 2: -1, -1: -1},
    2: {2: 1, -2: -1},
}
LOWER = {1: {1: 2, -2: -1}, 2: {2: -2}}
RAISE = {i: {v: k for k, v in table.items()} for i, table in LOWER.items()}


class Tableau(NamedTuple):
    row1: tuple
    row2: tuple

    @property
    def shape(self):
        return Weight(len(self.row1) - len(self.row2), len(self.row2))

    def columns(self):
        cols = []
        for j, x in enumerate(self.row1):
            cols.append((x, self.row2[j]) if j < len(self.row2) else (x,))
        return cols

    def render(self):
        """Two text lines, letters 1, 2, -2, -1 separated by spaces."""
        top = " ".join(NAMES[x] for x in self.row1)
        bottom = " ".join(NAMES[x] for x in self.row2)
        return top + "\n" + bottom


def letter_leq(x, y):
    return RANK[x] <= RANK[y]


def bar(x):
    return -x


def highest_tableau(lam):
    l1, l2 = lam
    return Tableau((1,) * (l1 + l2), (2,) * l2)


# ----------------------------------------------------------------------------
# words and signatures


def word_positions(t):
    """Reading positions: columns right to left, each column top to bottom.
    Returns a list of (row, column) pairs."""
    pos = []
    for j in range(len(t.row1) - 1, -1, -1):
        pos.append((0, j))
        if j < len(t.row2):
            pos.append((1, j))
    return pos


def word_of(t):
    rows = (t.row1, t.row2)
    return tuple(rows[r][j] for r, j in word_positions(t))


def signature(i, word):
    """Reduced signature of a word for colour i.

    Returns (r, s, minus_positions, plus_positions) where the reduced pattern
    is (-)^r (+)^s, obtained by cancelling every + with the nearest unmatched
    - to its right.
    """
    stack = []  # unmatched + positions
    minus = []
    for k, x in enumerate(word):
        lab = SIGN[i].get(x, 0)
        if lab == 1:
            stack.append(k)
        elif lab == -1:
            if stack:
                stack.pop()
            else:
                minus.append(k)
    return len(minus), len(stack), minus, stack


def signature_string(i, word):
    r, s, _, _ = signature(i, word)
    return "-" * r + "+" * s


def f_word(i, word):
    _, s, _, plus = signature(i, word)
    if s == 0:
        return None
    k = plus[0]
    w = list(word)
    w[k] = LOWER[i][w[k]]
    return tuple(w)


def e_word(i, word):
    r, _, minus, _ = signature(i, word)
    if r == 0:
        return None
    k = minus[-1]
    w = list(word)
    w[k] = RAISE[i][w[k]]
    return tuple(w)


def _apply(i, t, lower):
    word = word_of(t)
    r, s, minus, plus = signature(i, word)
    if lower:
        if s == 0:
            return None
        k, table = plus[0], LOWER[i]
    else:
        if r == 0:
            return None
        k, table = minus[-1], RAISE[i]
    row, col = word_positions(t)[k]
    rows = [list(t.row1), list(t.row2)]
    rows[row][col] = table[rows[row][col]]
    return Tableau(tuple(rows[0]), tuple(rows[1]))


def f(i, t):
    return _apply(i, t, True)


def e(i, t):
    return _apply(i, t, False)


def eps(i, t):
    return signature(i, word_of(t))[0]


def phi(i, t):
    return signature(i, word_of(t))[1]


def tableau_weight(t):
    """(t1 - t2, t2) with t_i = #i - #ibar."""
    letters = t.row1 + t.row2
    t1 = letters.count(1) - letters.count(-1)
    t2 = letters.count(2) - letters.count(-2)
    return Weight(t1 - t2, t2)


# ----------------------------------------------------------------------------
# admissibility and the KN condition


def is_admissible(col):
    """Height-two columns for n = 2.  The only non-admissible strictly
    increasing column is [1; 1bar]."""
    if len(col) == 1:
        return True
    x, y = col
    if not RANK[x] < RANK[y]:
        return False
    return (x, y) != (1, -1)


def split_column(col):
    """(left column, right column) of the split form."""
    if len(col) == 1:
        return col, col
    if tuple(col) == (2, -2):
        return (1, -2), (2, -1)
    return tuple(col), tuple(col)


def split(t):
    """The split tableau as a list of columns (each column doubled)."""
    out = []
    for col in t.columns():
        lc, rc = split_column(col)
        out.append(lc)
        out.append(rc)
    return out


def _semistandard_columns(cols):
    for col in cols:
        for a, b in zip(col, col[1:]):
            if not RANK[a] < RANK[b]:
                return False
    for left, right in zip(cols, cols[1:]):
        for r in range(len(right)):
            if not letter_leq(left[r], right[r]):
                return False
    return True


def is_semistandard(t):
    return len(t.row2) <= len(t.row1) and _semistandard_columns(t.columns())


def is_kn(t):
    if not is_semistandard(t):
        return False
    if not all(is_admissible(c) for c in t.columns()):
        return False
    return _semistandard_columns(split(t))


@lru_cache(maxsize=None)
def tableau_crystal(lam):
    """Connected component of the highest-weight tableau, by breadth-first
    search along f1 and f2."""
    top = highest_tableau(lam)
    seen = {top}
    frontier = [top]
    while frontier:
        nxt = []
        for t in frontier:
            for i in (1, 2):
                u = f(i, t)
                if u is not None and u not in seen:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    return tuple(sorted(seen, key=lambda t: ([RANK[x] for x in t.row1], [RANK[x] for x in t.row2])))


def all_kn_tableaux(lam):
    """Every KN tableau of the given shape, by exhaustive enumeration."""
    from itertools import combinations_with_replacement

    l1, l2 = lam
    out = []
    for r1 in combinations_with_replacement(ALPHABET, l1 + l2):
        for r2 in combinations_with_replacement(ALPHABET, l2):
            t = Tableau(r1, r2)
            if is_kn(t):
                out.append(t)
    return out


# ----------------------------------------------------------------------------
# embeddings


def phi_tableau(t):
    """The embedding B(lam) -> B(lam + 2 w1): put 1 in front of and 1bar at
    the end of the first row, then repair a [1; 1bar] column if one appears."""
    row1 = [1] + list(t.row1) + [-1]
    row2 = list(t.row2)
    for j in range(len(row2)):
        if row1[j] == 1 and row2[j] == -1:
            row1[j], row2[j] = 2, -2
    return Tableau(tuple(row1), tuple(row2))


def _sorted_row(row):
    return tuple(sorted(row, key=lambda x: RANK[x]))


def in_principal_preatom(t):
    from . import decomposition

    return decomposition.in_principal_preatom(isomorphism(t.shape)[t])


def psi_tableau(t, check=True):
    """The embedding of the principal preatom of B(lam) into the one of
    B(lam + w2), acting directly on tableaux."""
    if check and not in_principal_preatom(t):
        raise ValueError(f"{t} is not in the principal preatom")
    l1 = len(t.row1) - len(t.row2)
    dd = t.row1.count(-1)
    row1 = [1] + list(t.row1)
    row2 = [2] + list(t.row2)
    if dd == 0 or dd == l1:
        cols = [j for j in range(1, len(row2)) if (row1[j], row2[j]) == (2, -2)]
        if cols:
            row2[cols[0]] = -1
        else:
            j = max(k for k, x in enumerate(row1) if x == 1)
            row1[j] = 2
        j = max(k for k, x in enumerate(row2) if x == 2)
        row2[j] = -2
    else:
        twos = [k for k, x in enumerate(row1) if x == 2]
        if twos:
            row1[twos[-1]] = -1
            row1 = list(_sorted_row(row1))
        else:
            j = max(k for k, x in enumerate(row1) if x == -2)
            row1[j] = -1
            row1 = list(_sorted_row(row1))
            j = max(k for k, x in enumerate(row2) if x == 2)
            row2[j] = -2
    return Tableau(tuple(row1), tuple(row2))


# ----------------------------------------------------------------------------
# matching with the string model


class IsomorphismError(AssertionError):
    pass


@lru_cache(maxsize=None)
def isomorphism(lam):
    """The unique crystal isomorphism from tableaux of shape lam onto the
    string crystal B(lam), built by following identical f-paths from the
    highest-weight vertices.  Raises IsomorphismError if the operator tables
    disagree anywhere."""
    from . import strings

    lam = Weight(*lam)
    top_t, top_s = highest_tableau(lam), strings.highest(lam)
    match = {top_t: top_s}
    frontier = [top_t]
    while frontier:
        nxt = []
        for t in frontier:
            u = match[t]
            for i in (1, 2):
                ft, fu = f(i, t), strings.F[i](u)
                if (ft is None) != (fu is None):
                    raise IsomorphismError(f"f{i} defined on one side only at {t}")
                if ft is None:
                    continue
                if ft in match:
                    if match[ft] != fu:
                        raise IsomorphismError(f"f{i} paths disagree at {ft}")
                    continue
                match[ft] = fu
                nxt.append(ft)
        frontier = nxt
    if len(set(match.values())) != len(match) or len(match) != len(strings.crystal(lam)):
        raise IsomorphismError(f"not a bijection for {tuple(lam)}")
    for t, u in match.items():
        if tableau_weight(t) != strings.weight(u):
            raise IsomorphismError(f"weights differ at {t}")
        for i in (1, 2):
            if eps(i, t) != strings.EPS[i](u) or phi(i, t) != strings.PHI[i](u):
                raise IsomorphismError(f"eps/phi differ at {t}")
            et, eu = e(i, t), strings.E[i](u)
            if (et is None) != (eu is None) or (et is not None and match[et] != eu):
                raise IsomorphismError(f"e{i} differs at {t}")
    return match
