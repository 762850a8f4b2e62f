"""The spin representation ``(C^2)^(x)n`` and its two distinguished bases.

Basis tensors are sign strings printed left to right, so ``"+-"`` is
``v_+ (x) v_-``.  The Temperley-Lieb category acts through

    eps:   v_+ v_- -> -q,   v_- v_+ -> 1,   v_+ v_+, v_- v_- -> 0
    delta: 1 -> v_+ v_- - q^-1 v_- v_+

and ``H_i`` acts as ``e_i + q^-1`` with ``e_i = delta_i eps_i``.

Dual canonical basis vectors are labelled by sign strings.  The label picks
an induced-basis diagram (:func:`label_to_diagram`) and the vector is that
diagram applied to ``v_-^k v_+^(n-k)``; :func:`dcb_inductive` and
:func:`dcb_explicit` compute the same vector without diagrams.
"""

from functools import lru_cache
from itertools import product

from . import symgroup as sg
from . import tldiagram as tl
from .laurent import ONE, ZERO, LaurentPoly, q, qinv

__all__ = [
    "SpinVector", "basis_tensor", "base_label", "epsilon_apply", "delta_apply",
    "e_apply", "hecke_apply", "diagram_apply", "label_to_diagram",
    "diagram_to_label", "dcb_inductive", "dcb_explicit", "dcb_via_diagram",
    "dcb", "spherical_canonical_formula", "canonical_basis", "pairing",
    "zeta_star_apply", "verify_canonical_axiom", "flip_label", "all_labels",
]

EPS = {"+-": -q, "-+": ONE}
DELTA = (("+-", ONE), ("-+", -qinv))


def _label(s):
    return sg.normalize_signs(s)


def _sort_key(s):
    return (s.count("-"), s)


class SpinVector:
    """``{sign string: coefficient}`` with all strings of length ``n``."""

    __slots__ = ("n", "coords")

    def __init__(self, n, coords=None):
        self.n = n
        self.coords = {}
        for s, c in (coords or {}).items():
            s = _label(s)
            if len(s) != n:
                raise ValueError(f"sign string {s!r} does not have length {n}")
            c = LaurentPoly.coerce(c)
            if c:
                self.coords[s] = self.coords.get(s, ZERO) + c
                if not self.coords[s]:
                    del self.coords[s]

    @classmethod
    def _raw(cls, n, coords):
        v = cls.__new__(cls)
        v.n, v.coords = n, coords
        return v

    def __getitem__(self, s):
        return self.coords.get(s, ZERO)

    def is_zero(self):
        return not self.coords

    def __bool__(self):
        return bool(self.coords)

    def items(self):
        return [(s, self.coords[s]) for s in sorted(self.coords, key=_sort_key)]

    def _same(self, other):
        if not isinstance(other, SpinVector):
            raise TypeError("expected a SpinVector")
        if self.n != other.n:
            raise ValueError(f"length mismatch: {self.n} vs {other.n}")

    def __add__(self, other):
        self._same(other)
        out = dict(self.coords)
        _acc(out, other.coords, ONE)
        return SpinVector._raw(self.n, out)

    def __neg__(self):
        return SpinVector._raw(self.n, {s: -c for s, c in self.coords.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = LaurentPoly.coerce(c)
        if not c:
            return SpinVector(self.n)
        return SpinVector._raw(self.n, {s: x * c for s, x in self.coords.items()})

    def __mul__(self, c):
        if isinstance(c, (int, LaurentPoly)):
            return self.scale(c)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, SpinVector):
            return NotImplemented
        return self.n == other.n and self.coords == other.coords

    def __hash__(self):
        return hash((self.n, frozenset(self.coords.items())))

    def __repr__(self):
        body = " + ".join(f"({c})*[{s}]" for s, c in self.items()) or "0"
        return f"SpinVector({self.n}: {body})"

    def __str__(self):
        if not self.coords:
            return "0"
        parts = []
        for s, c in self.items():
            cs = str(c)
            if cs == "1":
                term = f"[{s}]"
            elif cs == "-1":
                term = f"-[{s}]"
            elif len(c.items()) == 1:
                term = f"{cs}[{s}]"
            else:
                term = f"({cs})[{s}]"
            parts.append(term)
        out = parts[0]
        for t in parts[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out

    def to_json(self):
        return {"n": self.n, "coords": {s: c.to_json() for s, c in self.items()}}

    @classmethod
    def from_json(cls, data):
        return cls(int(data["n"]),
                   {s: LaurentPoly.from_json(c) for s, c in data["coords"].items()})


def _acc(out, coords, scale):
    for s, c in coords.items():
        t = out.get(s, ZERO) + (c * scale if scale is not ONE else c)
        if t:
            out[s] = t
        else:
            out.pop(s, None)


def basis_tensor(s):
    s = _label(s)
    return SpinVector._raw(len(s), {s: ONE})


def base_label(n, k):
    return "-" * k + "+" * (n - k)


def all_labels(n, k=None):
    """All sign strings of length ``n`` (optionally with ``k`` minus signs), sorted."""
    out = ("".join(t) for t in product("+-", repeat=n))
    if k is not None:
        out = (s for s in out if s.count("-") == k)
    return sorted(out, key=_sort_key)


def flip_label(lbl):
    """Reverse the sign string."""
    return _label(lbl)[::-1]


# -- local maps ---------------------------------------------------------------

def epsilon_apply(i, v):
    """``eps`` on factors ``i, i+1``; the result has length ``n - 2``."""
    n = v.n
    if not 1 <= i <= n - 1:
        raise ValueError(f"eps_{i} is not defined on length {n}")
    out = {}
    for s, c in v.coords.items():
        f = EPS.get(s[i - 1:i + 1])
        if f is not None:
            _acc(out, {s[:i - 1] + s[i + 1:]: c * f}, ONE)
    return SpinVector._raw(n - 2, out)


def delta_apply(i, v):
    """``delta`` inserted as factors ``i, i+1``; the result has length ``n + 2``."""
    n = v.n + 2
    if not 1 <= i <= n - 1:
        raise ValueError(f"delta_{i} is not defined on length {n}")
    out = {}
    for s, c in v.coords.items():
        for pair, f in DELTA:
            _acc(out, {s[:i - 1] + pair + s[i - 1:]: c * f}, ONE)
    return SpinVector._raw(n, out)


def e_apply(i, v):
    return delta_apply(i, epsilon_apply(i, v))


def hecke_apply(i, v):
    """``H_i`` acting as ``e_i + q^-1``."""
    return e_apply(i, v) + v.scale(qinv)


# -- diagrams -----------------------------------------------------------------

@lru_cache(maxsize=4096)
def _diagram_on_string(d, s):
    """Image of one basis tensor as ``{string: coeff}``."""
    scalar = ONE
    for a, b in d.bottom_arcs():
        f = EPS.get(s[a - 1] + s[b - 1])
        if f is None:
            return {}
        scalar = scalar * f
    top = [None] * d.n
    for i, j in d.through_strands():
        top[j - 1] = s[i - 1]
    terms = {tuple(top): scalar}
    for a, b in d.top_arcs():
        nxt = {}
        for t, c in terms.items():
            for pair, f in DELTA:
                u = list(t)
                u[a - 1], u[b - 1] = pair
                nxt[tuple(u)] = c * f
        terms = nxt
    return {"".join(t): c for t, c in terms.items()}


def diagram_apply(d, v):
    """Evaluate an ``(m, n)``-diagram on a vector of length ``m``.

    Bottom arcs contribute ``eps`` scalars, through-strands carry their sign
    to the top, and each top arc contributes a ``delta``.
    """
    if v.n != d.m:
        raise ValueError(f"diagram expects length {d.m}, got {v.n}")
    out = {}
    for s, c in v.coords.items():
        _acc(out, _diagram_on_string(d, s), c)
    return SpinVector._raw(d.n, out)


def _match(lbl):
    """Top arcs: every ``+`` links to the nearest free ``-`` on its right."""
    arcs, stack = [], []
    for pos, ch in enumerate(lbl, 1):
        if ch == "+":
            stack.append(pos)
        elif stack:
            arcs.append((stack.pop(), pos))
    return sorted(arcs)


def label_to_diagram(lbl):
    """The induced-basis diagram attached to a sign string."""
    lbl = _label(lbl)
    n, k = len(lbl), lbl.count("-")
    top = _match(lbl)
    p = len(top)
    bottom = [(k - i, k + 1 + i) for i in range(p)]
    used_top = {x for arc in top for x in arc}
    used_bottom = {x for arc in bottom for x in arc}
    free_top = [j for j in range(1, n + 1) if j not in used_top]
    free_bottom = [i for i in range(1, n + 1) if i not in used_bottom]
    pairs = [(f"t{a}", f"t{b}") for a, b in top]
    pairs += [(f"b{a}", f"b{b}") for a, b in bottom]
    pairs += [(f"b{i}", f"t{j}") for i, j in zip(free_bottom, free_top)]
    return tl.TLDiagram.from_pairs(n, n, pairs)


def diagram_to_label(d, k):
    """Inverse of :func:`label_to_diagram` on the induced basis for ``k``."""
    if d.m != d.n:
        raise ValueError("expected an (n, n)-diagram")
    if not 0 <= k <= d.n or not tl.is_induced_basis(d, k):
        raise ValueError(f"diagram is not in the induced basis for k={k}")
    out = ["+"] * d.n
    for i, j in d.through_strands():
        out[j - 1] = "-" if i <= k else "+"
    for a, b in d.top_arcs():
        out[a - 1], out[b - 1] = "+", "-"
    lbl = "".join(out)
    if label_to_diagram(lbl) != d:
        raise ValueError("diagram is not in the induced basis image")
    return lbl


# -- dual canonical basis -----------------------------------------------------

@lru_cache(maxsize=None)
def _dcb_inductive(lbl):
    if not lbl:
        return {"": ONE}
    if lbl[0] == "-":
        return {"-" + s: c for s, c in _dcb_inductive(lbl[1:]).items()}
    if lbl[-1] == "+":
        return {s + "+": c for s, c in _dcb_inductive(lbl[:-1]).items()}
    # starts with + and ends with -, so some "+-" is adjacent
    i = lbl.index("+-") + 1
    inner = SpinVector._raw(len(lbl) - 2, dict(_dcb_inductive(lbl[:i - 1] + lbl[i + 1:])))
    return delta_apply(i, inner).coords


def dcb_inductive(lbl):
    """Strip a leading ``-``, strip a trailing ``+``, else insert ``delta`` at a ``+-``."""
    lbl = _label(lbl)
    return SpinVector._raw(len(lbl), dict(_dcb_inductive(lbl)))


def _right_to_left_index(pos, n):
    """Vertices in the explicit formula are numbered from the right."""
    return n + 1 - pos


def dcb_explicit(lbl):
    """Sum over one chosen endpoint per top arc; the chosen endpoint gets ``+``.

    Each arc whose chosen endpoint is its smaller right-to-left index (its
    right end) contributes ``-q^-1``.
    """
    lbl = _label(lbl)
    n, k = len(lbl), lbl.count("-")
    d = label_to_diagram(lbl)
    fixed = {}
    for i, j in d.through_strands():
        fixed[j] = "-" if i <= k else "+"
    idx = _right_to_left_index
    arcs = [tuple(sorted((idx(a, n), idx(b, n)))) for a, b in d.top_arcs()]
    out = {}
    for choice in product((0, 1), repeat=len(arcs)):
        chosen = {arc[c] for arc, c in zip(arcs, choice)}
        c_count = sum(1 for c in choice if c == 0)  # picked min(C)
        s = "".join(fixed[pos] if pos in fixed
                    else ("+" if _right_to_left_index(pos, n) in chosen else "-")
                    for pos in range(1, n + 1))
        _acc(out, {s: (-qinv) ** c_count if c_count else ONE}, ONE)
    return SpinVector._raw(n, out)


def dcb_via_diagram(lbl):
    lbl = _label(lbl)
    base = basis_tensor(base_label(len(lbl), lbl.count("-")))
    return diagram_apply(label_to_diagram(lbl), base)


def dcb(lbl, method="inductive"):
    funcs = {"inductive": dcb_inductive, "explicit": dcb_explicit, "diagram": dcb_via_diagram}
    if method not in funcs:
        raise ValueError(f"unknown method {method!r}")
    return funcs[method](lbl)


def spherical_canonical_formula(w, ctx):
    """``M`` canonical via the explicit formula pulled back along the orbit map."""
    from .parabolic import ParabolicElement

    w = w if isinstance(w, sg.Permutation) else sg.Permutation(w)
    if not ctx.is_min_rep(w):
        raise ValueError(f"{list(w)} is not a minimal coset representative for k={ctx.k}")
    vec = dcb_explicit(ctx.seq_tilde(w))
    out = {ctx.seq_tilde_inverse(s): c for s, c in vec.coords.items()}
    return ParabolicElement._raw(ctx, "M", out)


def canonical_basis(lbl):
    """Canonical basis vector: ``(-1)^len(w) N_w`` canonical, read through the orbit map."""
    from .parabolic import canonical_N

    lbl = _label(lbl)
    n, k = len(lbl), lbl.count("-")
    ctx = sg.ParabolicContext(n, k)
    w = ctx.seq_tilde_inverse(lbl)
    sw = -1 if sg.length(w) % 2 else 1
    out = {}
    for x, c in canonical_N(w, ctx).coords.items():
        sx = -1 if sg.length(x) % 2 else 1
        _acc(out, {ctx.seq_tilde(x): c * (sw * sx)}, ONE)
    return SpinVector._raw(n, out)


# -- pairing and the right action -------------------------------------------

def pairing(a, b):
    """``<s, t> = 1`` iff ``t`` is ``s`` reversed; bilinear."""
    if a.n != b.n:
        raise ValueError(f"length mismatch: {a.n} vs {b.n}")
    total = ZERO
    for s, c in a.coords.items():
        d = b.coords.get(s[::-1])
        if d:
            total = total + c * d
    return total


def zeta_star_apply(d, v):
    """The adjoint of ``diagram_apply(d, .)`` under :func:`pairing`.

    ``<d x, y> = <x, zeta*(d) y>``, so the coefficient of ``t`` in
    ``zeta*(d) y`` is ``<d rev(t), y>``.
    """
    if v.n != d.n:
        raise ValueError(f"diagram expects length {d.n}, got {v.n}")
    out = {}
    for t in all_labels(d.m):
        c = ZERO
        for u, f in _diagram_on_string(d, t[::-1]).items():
            y = v.coords.get(u[::-1])
            if y:
                c = c + f * y
        if c:
            out[t] = c
    return SpinVector._raw(d.m, out)


def verify_canonical_axiom(lbl, vector=None):
    """Check ``<v_-^k' v_+^(n-k'), zeta*(D2) w> = delta_{D2, flip(D1)}``.

    ``D2`` runs over the induced basis for every ``k'``; ``flip(D1)`` is the
    diagram of the reversed label.  ``w`` defaults to the canonical basis
    vector; pass ``vector`` to test some other candidate.
    """
    lbl = _label(lbl)
    n, k = len(lbl), lbl.count("-")
    w = canonical_basis(lbl) if vector is None else vector
    target = label_to_diagram(flip_label(lbl))
    for kk in range(n + 1):
        base = basis_tensor(base_label(n, kk))
        for d2 in tl.enumerate_induced_basis(n, kk):
            val = pairing(base, zeta_star_apply(d2, w))
            want = ONE if (kk == k and d2 == target) else ZERO
            if val != want:
                return False
    return True
