"""Spherical and aspherical modules of the Hecke algebra and their duals.

For ``J = S minus {s_k}`` the spherical module ``M`` (``H_s -> q^-1`` on
``H_J``) and the aspherical module ``N`` (``H_s -> -q``) have standard bases
``M_v = H_v (x) 1`` and ``N_v = H_v (x) 1`` indexed by ``v`` in ``W^J``.
Since ``w = v u`` with ``u`` in ``W_J``,
``H_w (x) 1 = (q^-1)^len(u) M_v`` resp. ``(-q)^len(u) N_v``.

The dual spaces ``N*`` and ``M*`` use the bases ``Q_v`` and ``R_v`` with
``<N_w, Q_x> = (-1)^len(x) delta`` and ``<M_w, R_x> = (-1)^len(x) delta``.

Flip on labels is ``v -> min_rep(w_0 v)``; on sign strings this reverses the
string, and it is the involution of ``W^J`` that reverses Bruhat order.
"""

from functools import lru_cache

from . import hecke as hk
from . import symgroup as sg
from .barsolver import BarModule, canonical_element, dual_module
from .laurent import ONE, ZERO, LaurentPoly, q, qinv

__all__ = [
    "ParabolicElement", "KINDS", "basis", "project_M", "project_N", "project",
    "lift", "act", "bar_parabolic", "canonical_M", "canonical_N", "iota",
    "flip_label", "flip_M", "flip_N", "flip", "pairing_MN", "canonical_Nstar",
    "canonical_Mstar", "dual_canonical_Nstar", "dual_canonical_Mstar",
    "sigma_star", "parabolic_bar_module",
]

KINDS = ("M", "N", "Nstar", "Mstar")
_SCALAR = {"M": qinv, "N": -q}


class ParabolicElement:
    """Coordinates on ``W^J`` tagged with the module they live in."""

    __slots__ = ("ctx", "kind", "coords")

    def __init__(self, ctx, kind, coords=None):
        if kind not in KINDS:
            raise ValueError(f"unknown module kind {kind!r}")
        self.ctx = ctx
        self.kind = kind
        self.coords = {}
        for w, c in (coords or {}).items():
            w = w if isinstance(w, sg.Permutation) else sg.Permutation(w)
            if not ctx.is_min_rep(w):
                raise ValueError(f"{list(w)} is not in W^J for k={ctx.k}")
            c = LaurentPoly.coerce(c)
            if c:
                self.coords[w] = c

    @classmethod
    def _raw(cls, ctx, kind, coords):
        x = cls.__new__(cls)
        x.ctx, x.kind, x.coords = ctx, kind, coords
        return x

    def __getitem__(self, w):
        return self.coords.get(w, ZERO)

    def is_zero(self):
        return not self.coords

    def items(self):
        return [(w, self.coords[w]) for w in sorted(self.coords, key=sg.sort_key)]

    def _check(self, other):
        if not isinstance(other, ParabolicElement):
            raise TypeError("expected a ParabolicElement")
        if (self.ctx, self.kind) != (other.ctx, other.kind):
            raise ValueError("elements live in different modules")

    def __add__(self, other):
        self._check(other)
        out = dict(self.coords)
        hk._accumulate(out, other.coords, ONE)
        return ParabolicElement._raw(self.ctx, self.kind, out)

    def __neg__(self):
        return ParabolicElement._raw(self.ctx, self.kind, {w: -c for w, c in self.coords.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = LaurentPoly.coerce(c)
        if not c:
            return ParabolicElement(self.ctx, self.kind)
        return ParabolicElement._raw(self.ctx, self.kind,
                                     {w: x * c for w, x in self.coords.items()})

    def __mul__(self, c):
        if isinstance(c, (int, LaurentPoly)):
            return self.scale(c)
        return NotImplemented

    __rmul__ = __mul__

    def relabel(self, kind):
        """Same coordinates, reinterpreted in another module (e.g. ``M_x -> Q_x``)."""
        return ParabolicElement._raw(self.ctx, kind, dict(self.coords))

    def __eq__(self, other):
        if not isinstance(other, ParabolicElement):
            return NotImplemented
        return (self.ctx, self.kind, self.coords) == (other.ctx, other.kind, other.coords)

    def __hash__(self):
        return hash((self.ctx, self.kind, frozenset(self.coords.items())))

    def __repr__(self):
        sym = {"M": "M", "N": "N", "Nstar": "Q", "Mstar": "R"}[self.kind]
        body = " + ".join(f"({c})*{sym}{list(w)}" for w, c in self.items()) or "0"
        return f"ParabolicElement(n={self.ctx.n}, k={self.ctx.k}: {body})"

    def to_json(self):
        return {"n": self.ctx.n, "k": self.ctx.k, "kind": self.kind,
                "terms": [{"w": list(w), "coeff": c.to_json()} for w, c in self.items()]}

    @classmethod
    def from_json(cls, data):
        ctx = sg.ParabolicContext(int(data["n"]), int(data["k"]))
        return cls(ctx, data["kind"],
                   {tuple(t["w"]): LaurentPoly.from_json(t["coeff"]) for t in data["terms"]})


def basis(w, ctx, kind="M"):
    w = w if isinstance(w, sg.Permutation) else sg.Permutation(w)
    return ParabolicElement(ctx, kind, {w: ONE})


def _require_reps(w, ctx):
    w = w if isinstance(w, sg.Permutation) else sg.Permutation(w)
    if len(w) != ctx.n or not ctx.is_min_rep(w):
        raise ValueError(f"{list(w)} is not a minimal coset representative for n={ctx.n}, k={ctx.k}")
    return w


def project(h, ctx, kind):
    """``H_w -> scalar^len(u) X_v`` where ``w = v u``."""
    if kind not in _SCALAR:
        raise ValueError("projection targets M or N")
    if h.n != ctx.n:
        raise ValueError("rank mismatch")
    scalar = _SCALAR[kind]
    out = {}
    for w, c in h.coords.items():
        u, v = ctx.coset_decompose(w)
        lu = sg.length(u)
        hk._accumulate(out, {v: c * scalar ** lu if lu else c}, ONE)
    return ParabolicElement._raw(ctx, kind, out)


def project_M(h, ctx):
    return project(h, ctx, "M")


def project_N(h, ctx):
    return project(h, ctx, "N")


def lift(x):
    """``sum c_v X_v -> sum c_v H_v``; a section of the projection."""
    return hk.HeckeElement._raw(x.ctx.n, dict(x.coords))


def act(h, x):
    """Left action of the Hecke algebra on ``M`` or ``N``."""
    if x.kind not in _SCALAR:
        raise ValueError("the Hecke algebra acts on M and N")
    return project(h * lift(x), x.ctx, x.kind)


@lru_cache(maxsize=None)
def _bar_images(ctx, kind):
    return {v: project(hk.bar_H(v), ctx, kind).coords for v in ctx.minimal_coset_reps()}


def bar_parabolic(x):
    """``bar(h (x) 1) = bar(h) (x) 1``."""
    images = _bar_images(x.ctx, x.kind)
    out = {}
    for v, c in x.coords.items():
        hk._accumulate(out, images[v], c.bar())
    return ParabolicElement._raw(x.ctx, x.kind, out)


@lru_cache(maxsize=None)
def parabolic_bar_module(ctx, kind):
    images = _bar_images(ctx, kind)
    return BarModule(ctx.minimal_coset_reps(), images.__getitem__, sg.bruhat_leq)


def _canonical(w, ctx, kind):
    w = _require_reps(w, ctx)
    return ParabolicElement._raw(ctx, kind,
                                 canonical_element(parabolic_bar_module(ctx, kind), w))


def canonical_M(w, ctx):
    return _canonical(w, ctx, "M")


def canonical_N(w, ctx):
    return _canonical(w, ctx, "N")


def iota(x):
    """Embedding ``N -> H``, ``N_w -> H_w B_{w_{0,J}}`` (a left module map)."""
    if x.kind != "N":
        raise ValueError("iota is defined on the aspherical module")
    b = hk.kl_basis(x.ctx.longest_in_WJ())
    return lift(x) * b


def flip_label(w, ctx):
    """``v -> min_rep(w_0 v)``."""
    return ctx.min_rep(sg.longest(ctx.n) * w)


def flip(x):
    out = {flip_label(w, x.ctx): c for w, c in x.coords.items()}
    return ParabolicElement._raw(x.ctx, x.kind, out)


def flip_M(x):
    if x.kind != "M":
        raise ValueError("flip_M expects an element of M")
    return flip(x)


def flip_N(x):
    if x.kind != "N":
        raise ValueError("flip_N expects an element of N")
    return flip(x)


def _sign(w):
    return -1 if sg.length(w) % 2 else 1


def pairing_MN(x, y):
    """``<M_w, N_x> = (-1)^len(x) delta_{w,x}``, bilinear."""
    if x.kind != "M" or y.kind != "N":
        raise ValueError("pairing_MN takes an element of M and one of N")
    if x.ctx != y.ctx:
        raise ValueError("elements live over different parabolic contexts")
    total = ZERO
    for w, c in x.coords.items():
        d = y.coords.get(w)
        if d:
            total = total + c * d * _sign(w)
    return total


def canonical_Nstar(w, ctx):
    """``Q_w`` canonical: the flip of ``M_{flip(w)}`` canonical, read in ``N*``."""
    w = _require_reps(w, ctx)
    return flip_M(canonical_M(flip_label(w, ctx), ctx)).relabel("Nstar")


def canonical_Mstar(w, ctx):
    """``R_w`` canonical: the flip of ``N_{flip(w)}`` canonical, read in ``M*``."""
    w = _require_reps(w, ctx)
    return flip_N(canonical_N(flip_label(w, ctx), ctx)).relabel("Mstar")


@lru_cache(maxsize=None)
def _dual_module(ctx, kind):
    return dual_module(parabolic_bar_module(ctx, kind), _sign)


def dual_canonical_Nstar(w, ctx):
    """Canonical basis of ``N*`` solved from the dual bar involution directly."""
    w = _require_reps(w, ctx)
    return ParabolicElement._raw(ctx, "Nstar", canonical_element(_dual_module(ctx, "N"), w))


def dual_canonical_Mstar(w, ctx):
    """Canonical basis of ``M*`` solved from the dual bar involution directly."""
    w = _require_reps(w, ctx)
    return ParabolicElement._raw(ctx, "Mstar", canonical_element(_dual_module(ctx, "M"), w))


def sigma_star(d, ctx):
    """``H* -> N*``: ``S_w -> q^(len(w) - len(w')) Q_{w''}``.

    ``w'`` is the longest and ``w''`` the shortest element of the coset of
    ``w``.
    """
    if d.n != ctx.n:
        raise ValueError("rank mismatch")
    w0J = ctx.longest_in_WJ()
    out = {}
    for w, c in d.coords.items():
        _, v = ctx.coset_decompose(w)
        top = v * w0J
        shift = sg.length(w) - sg.length(top)
        hk._accumulate(out, {v: c * LaurentPoly.monomial(shift)}, ONE)
    return ParabolicElement._raw(ctx, "Nstar", out)
