"""The Hecke algebra of S_n and its Kazhdan-Lusztig basis.

Relations (standard basis ``H_w``)::

    H_x H_s = H_{xs}                         if len(xs) > len(x)
    H_x H_s = H_{xs} + (q^-1 - q) H_x        if len(xs) < len(x)

so ``(H_s - q^-1)(H_s + q) = 0`` and ``bar(H_s) = H_s^-1 = H_s + q - q^-1``.
The KL basis ``B_w`` is bar-invariant with lower coefficients in
``q^-1 Z[q^-1]``.  Note the sign normalization: ``B_s = H_s - q^-1``, which is
exactly what makes ``phi_q(B_w)`` a diagram (or zero) under
``H_i -> e_i + q^-1``.
"""

from functools import lru_cache

from . import symgroup as sg
from .barsolver import BarModule, canonical_element, dual_module
from .laurent import ONE, ZERO, LaurentPoly, q, qinv
from .tldiagram import TLElement, generator_e

__all__ = [
    "HeckeElement", "H", "generator", "mul", "bar", "bar_H", "kl_basis",
    "kl_polynomial", "phi_q", "flip_H", "dual_basis_D", "dual_canonical_H",
    "pairing_SH", "pairing_HH", "hecke_bar_module", "kl_memo",
]

QDIFF = qinv - q  # q^-1 - q


class HeckeElement:
    """Finitely supported map ``S_n -> Z[q, q^-1]``.

    The same container holds elements of the dual space ``H*`` written in
    the basis ``S_w``; which basis is meant is up to the caller.
    """

    __slots__ = ("n", "coords")

    def __init__(self, n, coords=None):
        self.n = n
        self.coords = {}
        for w, c in (coords or {}).items():
            w = w if isinstance(w, sg.Permutation) else sg.Permutation(w)
            if len(w) != n:
                raise ValueError(f"{list(w)} is not in S_{n}")
            c = LaurentPoly.coerce(c)
            if c:
                self.coords[w] = c

    @classmethod
    def _raw(cls, n, coords):
        h = cls.__new__(cls)
        h.n, h.coords = n, coords
        return h

    def __getitem__(self, w):
        return self.coords.get(w, ZERO)

    def is_zero(self):
        return not self.coords

    def __bool__(self):
        return bool(self.coords)

    def support(self):
        return sorted(self.coords, key=sg.sort_key)

    def items(self):
        return [(w, self.coords[w]) for w in self.support()]

    def __add__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            other = H(sg.identity(self.n)).scale(other)
        if not isinstance(other, HeckeElement):
            return NotImplemented
        _same_rank(self, other)
        out = dict(self.coords)
        _accumulate(out, other.coords, ONE)
        return HeckeElement._raw(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return HeckeElement._raw(self.n, {w: -c for w, c in self.coords.items()})

    def __sub__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            other = H(sg.identity(self.n)).scale(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = LaurentPoly.coerce(c)
        if not c:
            return HeckeElement(self.n)
        return HeckeElement._raw(self.n, {w: x * c for w, x in self.coords.items()})

    def __mul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.n == other.n and self.coords == other.coords

    def __hash__(self):
        return hash((self.n, frozenset(self.coords.items())))

    def __repr__(self):
        body = " + ".join(f"({c})*H{list(w)}" for w, c in self.items()) or "0"
        return f"HeckeElement({self.n}: {body})"

    def to_json(self):
        return [{"w": list(w), "coeff": c.to_json()} for w, c in self.items()]

    @classmethod
    def from_json(cls, n, data):
        return cls(n, {tuple(t["w"]): LaurentPoly.from_json(t["coeff"]) for t in data})


def _same_rank(a, b):
    if a.n != b.n:
        raise ValueError(f"rank mismatch: S_{a.n} vs S_{b.n}")


def _accumulate(acc, coords, scale):
    for w, c in coords.items():
        s = acc.get(w, ZERO) + (c * scale if scale is not ONE else c)
        if s:
            acc[w] = s
        else:
            acc.pop(w, None)


def H(w, coeff=ONE):
    w = w if isinstance(w, sg.Permutation) else sg.Permutation(w)
    return HeckeElement(len(w), {w: coeff})


def generator(i, n):
    return H(sg.simple(i, n))


def _right_mul_gen(coords, i, n):
    out = {}
    s = sg.simple(i, n)
    for x, c in coords.items():
        xs = x * s
        _accumulate(out, {xs: c}, ONE)
        if sg.length(xs) < sg.length(x):
            _accumulate(out, {x: c * QDIFF}, ONE)
    return out


def _left_mul_gen(coords, i, n):
    out = {}
    s = sg.simple(i, n)
    for x, c in coords.items():
        sx = s * x
        _accumulate(out, {sx: c}, ONE)
        if sg.length(sx) < sg.length(x):
            _accumulate(out, {x: c * QDIFF}, ONE)
    return out


def mul(a, b):
    """Product in the Hecke algebra, expanded along reduced words of ``b``'s support."""
    _same_rank(a, b)
    n = a.n
    out = {}
    for w, c in b.coords.items():
        cur = a.coords
        for i in sg.reduced_word(w):
            cur = _right_mul_gen(cur, i, n)
        _accumulate(out, cur, c)
    return HeckeElement._raw(n, out)


@lru_cache(maxsize=None)
def _bar_H_coords(w):
    n = len(w)
    s = sg.left_descent(w)
    if s is None:
        return {w: ONE}
    # bar(H_w) = (H_s + q - q^-1) bar(H_{s w})
    rest = _bar_H_coords(sg.simple(s, n) * w)
    out = _left_mul_gen(rest, s, n)
    _accumulate(out, rest, -QDIFF)
    return out


def bar_H(w):
    """``bar(H_w) = (H_{w^-1})^-1``."""
    w = w if isinstance(w, sg.Permutation) else sg.Permutation(w)
    return HeckeElement._raw(len(w), dict(_bar_H_coords(w)))


def bar(h):
    out = {}
    for w, c in h.coords.items():
        _accumulate(out, _bar_H_coords(w), c.bar())
    return HeckeElement._raw(h.n, out)


@lru_cache(maxsize=None)
def hecke_bar_module(n):
    """The Hecke algebra as a :class:`BarModule` over Bruhat order."""
    return BarModule(sg.all_permutations(n), _bar_H_coords, sg.bruhat_leq)


# (n, w) -> coords; the CLI persists this table between runs
kl_memo = {}


def kl_basis(w):
    """The Kazhdan-Lusztig element ``B_w``."""
    w = w if isinstance(w, sg.Permutation) else sg.Permutation(w)
    key = (len(w), w)
    coords = kl_memo.get(key)
    if coords is None:
        coords = canonical_element(hecke_bar_module(len(w)), w)
        kl_memo[key] = coords
    return HeckeElement._raw(len(w), dict(coords))


def kl_polynomial(y, w):
    """Coefficient ``p_{y,w}`` of ``H_y`` in ``B_w``."""
    y = y if isinstance(y, sg.Permutation) else sg.Permutation(y)
    return kl_basis(w)[y]


@lru_cache(maxsize=None)
def _phi_H(w):
    n = len(w)
    i = sg.right_descent(w)
    if i is None:
        return TLElement.one(n)
    # H_w = H_{w s_i} H_{s_i}
    return _phi_H(w * sg.simple(i, n)) * (TLElement.from_diagram(generator_e(i, n)) + qinv)


def phi_q(h):
    """Image in ``TL_n`` under ``H_i -> e_i + q^-1``."""
    out = TLElement.zero(h.n, h.n)
    for w, c in h.coords.items():
        out = out + _phi_H(w).scale(c)
    return out


def flip_H(h):
    """Reindex ``H_w -> H_{w_0 w}``."""
    w0 = sg.longest(h.n)
    return HeckeElement._raw(h.n, {w0 * w: c for w, c in h.coords.items()})


def pairing_SH(d, h):
    """``<S_w, H_x> = (-1)^len(w) delta_{w,x}``, extended bilinearly."""
    _same_rank(d, h)
    total = ZERO
    for w, c in d.coords.items():
        x = h.coords.get(w)
        if x:
            total = total + (c * x if sg.length(w) % 2 == 0 else -(c * x))
    return total


pairing_HH = pairing_SH


def dual_basis_D(w):
    """``D_w`` in the ``S`` basis of ``H*``: the flip of ``B_{w_0 w}``."""
    w = w if isinstance(w, sg.Permutation) else sg.Permutation(w)
    return flip_H(kl_basis(sg.longest(len(w)) * w))


@lru_cache(maxsize=None)
def _dual_hecke_module(n):
    return dual_module(hecke_bar_module(n), lambda x: -1 if sg.length(x) % 2 else 1)


def dual_canonical_H(w):
    """Canonical basis of ``H*`` solved directly from the dual bar involution.

    Independent of :func:`dual_basis_D`; the two are compared in the tests.
    """
    w = w if isinstance(w, sg.Permutation) else sg.Permutation(w)
    return HeckeElement._raw(len(w), canonical_element(_dual_hecke_module(len(w)), w))
