"""Sparse Laurent polynomials in one variable with integer coefficients."""

from __future__ import annotations


class Laurent:
    """Finite sum of c * v**e with integer c and integer e.

    Stored as a dict exponent -> coefficient with no zero entries, so two
    polynomials are equal exactly when their dicts are equal.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for e, c in items:
                if c:
                    clean[int(e)] = clean.get(int(e), 0) + int(c)
        self.terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def monomial(cls, exp, coeff=1):
        return cls({exp: coeff})

    @classmethod
    def one(cls):
        return cls({0: 1})

    @classmethod
    def zero(cls):
        return cls()

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = Laurent({0: other})
        if not isinstance(other, Laurent):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def _coerce(self, other):
        if isinstance(other, Laurent):
            return other
        if isinstance(other, int):
            return Laurent({0: other})
        raise TypeError(f"cannot combine Laurent with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Laurent(out)

    __radd__ = __add__

    def __neg__(self):
        return Laurent({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return Laurent(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials can be inverted")
            (e, c), = self.terms.items()
            if c not in (1, -1):
                raise ValueError("only unit monomials can be inverted")
            k = -n
            return Laurent({-e * k: c ** k})
        out = Laurent.one()
        for _ in range(n):
            out = out * self
        return out

    def shift(self, k):
        """Multiply by v**k."""
        return Laurent({e + k: c for e, c in self.terms.items()})

    def substitute_power(self, k):
        """Replace v by v**k."""
        return Laurent({e * k: c for e, c in self.terms.items()})

    def at_one(self):
        return sum(self.terms.values())

    def coeff(self, e):
        return self.terms.get(e, 0)

    def degree(self):
        return max(self.terms) if self.terms else None

    def low_degree(self):
        return min(self.terms) if self.terms else None

    def is_nonnegative(self):
        return all(c > 0 for c in self.terms.values())

    def sorted_terms(self):
        return sorted(self.terms.items())

    def __repr__(self):
        return f"Laurent({dict(self.sorted_terms())})"

    def format(self, var="v"):
        """Human-readable form, highest degree first: 'q^4 + q^2'."""
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            if e == 0:
                mono = str(abs(c))
            else:
                mono = var if e == 1 else f"{var}^{e}"
                if abs(c) != 1:
                    mono = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, mono))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, mono in parts[1:]:
            out += f" {sign} {mono}"
        return out

    def __str__(self):
        return self.format()

    def to_term_list(self, var="v"):
        """Serializable list of 'coeff*var^exp' strings, sorted by exponent."""
        return [f"{c}*{var}^{e}" for e, c in self.sorted_terms()]


V = Laurent.monomial(1)
