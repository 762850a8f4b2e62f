"""``U_q(sl_2)`` acting on tensor powers of ``C^2``.

On one factor ``E v_- = v_+``, ``F v_+ = v_-`` and ``K v_+- = q^+-1 v_+-``.
The coproduct is ``E -> E (x) 1 + K^-1 (x) E``, ``F -> F (x) K + 1 (x) F``,
which iterates to

    E = sum_i (K^-1)^(i-1) (x) E (x) 1^(n-i)
    F = sum_i 1^(i-1) (x) F (x) K^(n-i)

Ranks are computed exactly over ``QQ`` after specializing ``q`` to a few
rational values.
"""

from fractions import Fraction

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from . import tldiagram as tl
from .laurent import ONE, ZERO, LaurentPoly, q, qinv
from .spin import (SpinVector, _acc, all_labels, base_label, basis_tensor,
                   delta_apply, diagram_apply, epsilon_apply)

__all__ = [
    "GENERATORS", "apply", "is_invariant", "check_module_hom", "embed_TL",
    "stacked_links", "quantum_integer", "rank_at", "generic_rank",
    "invariant_dimension", "DEFAULT_POINTS",
]

GENERATORS = ("E", "F", "K", "Kinv")
DEFAULT_POINTS = (Fraction(2), Fraction(3), Fraction(5))
_WEIGHT = {"+": q, "-": qinv}
_WEIGHT_INV = {"+": qinv, "-": q}


def _prod(factors):
    out = ONE
    for f in factors:
        out = out * f
    return out


def _apply_string(g, s):
    if g == "K":
        return {s: _prod(_WEIGHT[c] for c in s)}
    if g == "Kinv":
        return {s: _prod(_WEIGHT_INV[c] for c in s)}
    out = {}
    for i, c in enumerate(s):
        if g == "E" and c == "-":
            _acc(out, {s[:i] + "+" + s[i + 1:]: _prod(_WEIGHT_INV[x] for x in s[:i])}, ONE)
        elif g == "F" and c == "+":
            _acc(out, {s[:i] + "-" + s[i + 1:]: _prod(_WEIGHT[x] for x in s[i + 1:])}, ONE)
    return out


def apply(g, v):
    """Action of ``E``, ``F``, ``K`` or ``Kinv`` on a spin vector."""
    if g not in GENERATORS:
        raise ValueError(f"unknown generator {g!r}; expected one of {GENERATORS}")
    out = {}
    for s, c in v.coords.items():
        _acc(out, _apply_string(g, s), c)
    return SpinVector._raw(v.n, out)


def is_invariant(v):
    return apply("E", v).is_zero() and apply("F", v).is_zero() and apply("K", v) == v


def quantum_integer(w):
    """``(q^w - q^-w) / (q - q^-1)`` as a Laurent polynomial."""
    if w < 0:
        return -quantum_integer(-w)
    return sum((LaurentPoly.monomial(e) for e in range(w - 1, -w, -2)), ZERO)


_OPS = {
    "epsilon": (epsilon_apply, 0), "eps": (epsilon_apply, 0),
    "delta": (delta_apply, -2), "del": (delta_apply, -2),
}


def check_module_hom(op, i, n):
    """Does ``op`` at slot ``i`` commute with ``E``, ``F`` and ``K``?

    ``op`` is ``"epsilon"`` (length ``n -> n - 2``), ``"delta"``
    (``n - 2 -> n``) or any callable ``(i, v) -> SpinVector``; a callable is
    fed vectors of length ``n``.
    """
    if callable(op):
        func, shift = op, 0
    elif op in _OPS:
        func, shift = _OPS[op]
    else:
        raise ValueError(f"unknown map {op!r}")
    if not 1 <= i <= n - 1:
        raise ValueError(f"slot {i} is out of range for n={n}")
    for s in all_labels(n + shift):
        v = basis_tensor(s)
        for g in ("E", "F", "K"):
            if func(i, apply(g, v)) != apply(g, func(i, v)):
                return False
    return True


def stacked_links(n):
    """The ``(2n, 2n)``-diagram with ``n`` nested links on each line."""
    pairs = [(f"t{i}", f"t{2 * n + 1 - i}") for i in range(1, n + 1)]
    pairs += [(f"b{n - i}", f"b{n + 1 + i}") for i in range(n)]
    return tl.TLDiagram.from_pairs(2 * n, 2 * n, pairs)


def embed_TL(d):
    """``TL_n -> (C^2)^(x)2n``: put ``d`` next to ``n`` strands, stack on the nested links.

    The result is the composite diagram acting on ``v_-^n v_+^n``.
    """
    if d.m != d.n:
        raise ValueError("embed_TL expects an (n, n)-diagram")
    n = d.n
    base = basis_tensor(base_label(2 * n, n))
    upper = tl.tensor(d, tl.identity(n))
    return diagram_apply(upper, diagram_apply(stacked_links(n), base))


def _specialize(vectors, labels, x):
    return [[v[s].eval_at(x) for s in labels] for v in vectors]


def rank_at(rows, x=None):
    """Exact rank of a list of rows (Laurent or rational entries) at ``q = x``."""
    if not rows:
        return 0
    if x is not None:
        rows = [[c.eval_at(x) if isinstance(c, LaurentPoly) else c for c in r] for r in rows]
    mat = DomainMatrix([[QQ(c.numerator, c.denominator) if isinstance(c, Fraction) else QQ(c)
                         for c in r] for r in rows], (len(rows), len(rows[0])), QQ)
    return mat.rank()


def generic_rank(vectors, points=DEFAULT_POINTS):
    """Rank of spin vectors, the maximum over the sample points."""
    if not vectors:
        return 0
    labels = sorted({s for v in vectors for s in v.coords}) or [base_label(vectors[0].n, 0)]
    return max(rank_at(_specialize(vectors, labels, x)) for x in points)


def invariant_dimension(m, x):
    """``dim`` of the invariants in ``(C^2)^(x)m`` at ``q = x``.

    ``K`` fixes exactly the weight-zero strings, so this is the joint kernel
    of ``E`` and ``F`` on that subspace.
    """
    if m % 2:
        return 0
    zero = all_labels(m, m // 2)
    targets = sorted(set(all_labels(m, m // 2 - 1)) | set(all_labels(m, m // 2 + 1)))
    index = {s: j for j, s in enumerate(targets)}
    # columns are the images of the weight-zero basis vectors
    rows = [[Fraction(0)] * len(zero) for _ in targets]
    for col, s in enumerate(zero):
        for g in ("E", "F"):
            for t, c in _apply_string(g, s).items():
                rows[index[t]][col] += c.eval_at(x)
    return len(zero) - rank_at(rows) if targets else len(zero)
