"""Exact Laurent polynomials in ``q`` with integer coefficients.

Every scalar in the package lives in ``Z[q, q^-1]``.  Values are immutable
and kept in canonical form (no zero coefficients), so structural equality is
value equality and instances can be used as dictionary keys.

>>> p = (q + 1) * (q - 1)
>>> str(p)
'q^2 - 1'
>>> str(p.bar())
'q^-2 - 1'
"""

import re
from fractions import Fraction

__all__ = [
    "LaurentPoly", "q", "qinv", "ONE", "ZERO", "BETA",
    "add", "mul", "bar", "strictly_negative_part", "constant_term",
    "is_strictly_negative", "eval_at", "parse",
]


class LaurentPoly:
    """A finite sum ``sum c_e q^e`` with ``e`` and ``c_e`` integers."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        if terms is None:
            self._terms = {}
        elif isinstance(terms, int):
            self._terms = {0: terms} if terms else {}
        else:
            self._terms = {int(e): int(c) for e, c in dict(terms).items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        # terms already canonical; skip the copy
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, exponent, coeff=1):
        return cls._raw({exponent: coeff} if coeff else {})

    @classmethod
    def coerce(cls, x):
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return cls(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")

    # -- inspection -------------------------------------------------------

    @property
    def terms(self):
        """Copy of the exponent -> coefficient map."""
        return dict(self._terms)

    def items(self):
        """(exponent, coefficient) pairs by descending exponent."""
        return sorted(self._terms.items(), reverse=True)

    def __getitem__(self, exponent):
        return self._terms.get(exponent, 0)

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def degree(self):
        """Largest exponent; ``None`` for zero."""
        return max(self._terms) if self._terms else None

    def valuation(self):
        """Smallest exponent; ``None`` for zero."""
        return min(self._terms) if self._terms else None

    def is_monomial(self):
        return len(self._terms) == 1

    # -- ring structure ---------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            if not isinstance(other, int):
                return NotImplemented
            other = LaurentPoly(other)
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                del out[e]
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, (LaurentPoly, int)):
            return NotImplemented
        return self + (-LaurentPoly.coerce(other))

    def __rsub__(self, other):
        if not isinstance(other, int):
            return NotImplemented
        return LaurentPoly(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return ZERO
            return LaurentPoly._raw({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return ZERO
        if len(b) == 1:
            (f, d), = b.items()
            return LaurentPoly._raw({e + f: c * d for e, c in a.items()})
        if len(a) == 1:
            (e, c), = a.items()
            return LaurentPoly._raw({e + f: c * d for f, d in b.items()})
        out = {}
        for e, c in a.items():
            for f, d in b.items():
                out[e + f] = out.get(e + f, 0) + c * d
        return LaurentPoly._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if not self.is_monomial() or abs(next(iter(self._terms.values()))) != 1:
                raise ValueError("only units can be raised to negative powers")
            (e, c), = self._terms.items()
            return LaurentPoly._raw({-e * (-k): c ** (-k)})
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- involution and splits --------------------------------------------

    def bar(self):
        """Substitute ``q -> q^-1``."""
        return LaurentPoly._raw({-e: c for e, c in self._terms.items()})

    def strictly_negative_part(self):
        return LaurentPoly._raw({e: c for e, c in self._terms.items() if e < 0})

    def constant_term(self):
        return self._terms.get(0, 0)

    def is_strictly_negative(self):
        """True iff every exponent is ``<= -1`` (zero qualifies)."""
        return all(e < 0 for e in self._terms)

    def eval_at(self, x):
        """Exact value at a nonzero rational ``x``."""
        x = Fraction(x)
        if x == 0:
            raise ZeroDivisionError("Laurent polynomials cannot be evaluated at 0")
        return sum((c * x ** e for e, c in self._terms.items()), Fraction(0))

    # -- serialization ----------------------------------------------------

    def to_json(self):
        return {str(e): c for e, c in self.items()}

    @classmethod
    def from_json(cls, data):
        return cls({int(e): int(c) for e, c in data.items()})

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.items():
            if e == 0:
                body = str(abs(c))
            else:
                mono = "q" if e == 1 else f"q^{e}"
                body = mono if abs(c) == 1 else f"{abs(c)}{mono}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"LaurentPoly({str(self)!r})"


_TERM = re.compile(r"([+-]?)\s*(\d*)\s*\*?\s*(q(?:\^\s*(-?\d+))?)?")


def parse(text):
    """Inverse of ``str``: ``parse("q^2 - 2 + q^-1")``."""
    s = text.replace("−", "-").replace(" ", "")
    if s in ("", "0"):
        return ZERO
    out = {}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or not (m.group(2) or m.group(3)):
            raise ValueError(f"cannot parse Laurent polynomial {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        coeff = int(m.group(2)) if m.group(2) else 1
        if m.group(3):
            exp = int(m.group(4)) if m.group(4) is not None else 1
        else:
            exp = 0
        out[exp] = out.get(exp, 0) + sign * coeff
        pos = m.end()
    return LaurentPoly(out)


ZERO = LaurentPoly()
ONE = LaurentPoly(1)
q = LaurentPoly({1: 1})
qinv = LaurentPoly({-1: 1})
BETA = LaurentPoly({1: -1, -1: -1})


def add(a, b):
    return LaurentPoly.coerce(a) + b


def mul(a, b):
    return LaurentPoly.coerce(a) * b


def bar(p):
    return LaurentPoly.coerce(p).bar()


def strictly_negative_part(p):
    return LaurentPoly.coerce(p).strictly_negative_part()


def constant_term(p):
    return LaurentPoly.coerce(p).constant_term()


def is_strictly_negative(p):
    return LaurentPoly.coerce(p).is_strictly_negative()


def eval_at(p, x):
    return LaurentPoly.coerce(p).eval_at(x)
