"""Generic canonical-basis solver.

A :class:`BarModule` is a free ``Z[q, q^-1]``-module with a finite standard
basis ``e_x`` indexed by a poset, together with a bar involution that is
unitriangular: ``bar(e_x) = e_x + (terms strictly below x)``.  The canonical
basis element ``b_x`` is the unique bar-invariant vector in
``e_x + sum_{y < x} q^-1 Z[q^-1] e_y``.

The solver walks the labels below ``x`` from the top down.  At label ``y``
every coefficient above ``y`` is already fixed, so the ``e_y``-coefficient of
``bar(b) - b`` is a known antisymmetric Laurent polynomial ``f`` and the only
strictly negative ``pi`` with ``pi - bar(pi) = f`` is the strictly negative
part of ``f``.
"""

from .laurent import ONE, ZERO

__all__ = [
    "BarModule", "SolverError", "canonical_element", "canonical_basis",
    "express_in_canonical", "apply_bar", "dual_module", "check_module",
]


class SolverError(ArithmeticError):
    """Raised when the bar data is not a unitriangular involution."""


class BarModule:
    """Standard basis, order and bar involution of a module.

    Parameters
    ----------
    labels : sequence
        All labels, listed in a linear extension of the partial order
        (smaller labels first).
    bar_of : callable
        ``bar_of(x)`` returns ``bar(e_x)`` as a mapping ``label -> LaurentPoly``.
    leq : callable, optional
        The partial order.  When given, the solver only visits labels below
        ``x``; otherwise every earlier label is visited.
    """

    def __init__(self, labels, bar_of, leq=None):
        self.labels = list(labels)
        self.position = {x: i for i, x in enumerate(self.labels)}
        self._bar_of = bar_of
        self._bar_cache = {}
        self.leq = leq

    def bar_image(self, x):
        img = self._bar_cache.get(x)
        if img is None:
            img = {y: c for y, c in self._bar_of(x).items() if c}
            self._bar_cache[x] = img
        return img

    def below_desc(self, x):
        """Labels strictly below ``x``, processed top-down."""
        i = self.position[x]
        earlier = self.labels[:i]
        if self.leq is not None:
            earlier = [y for y in earlier if self.leq(y, x)]
        return earlier[::-1]


def _add_into(acc, vec, scale):
    for y, c in vec.items():
        s = acc.get(y, ZERO) + c * scale
        if s:
            acc[y] = s
        else:
            acc.pop(y, None)


def apply_bar(module, vec):
    """Apply the (semilinear) bar involution to ``{label: coeff}``."""
    out = {}
    for x, c in vec.items():
        _add_into(out, module.bar_image(x), c.bar())
    return out


def canonical_element(module, x):
    """The canonical basis element ``b_x`` as ``{label: coeff}``."""
    cand = {x: ONE}
    bar_cand = dict(module.bar_image(x))
    for y in module.below_desc(x):
        f = bar_cand.get(y, ZERO) - cand.get(y, ZERO)
        if not f:
            continue
        pi = f.strictly_negative_part()
        if pi - pi.bar() != f:
            raise SolverError(f"residual {f} at {y!r} is not antisymmetric with zero constant term")
        cand[y] = pi
        _add_into(bar_cand, module.bar_image(y), pi.bar())
    leftover = {y: c for y, c in bar_cand.items() if c != cand.get(y, ZERO)}
    if leftover:
        raise SolverError(f"bar data is not unitriangular near {x!r}")
    return cand


def canonical_basis(module):
    """``{x: b_x}`` for every label."""
    return {x: canonical_element(module, x) for x in module.labels}


def express_in_canonical(module, family, vec):
    """Coordinates of ``vec`` in the canonical basis (back substitution)."""
    residual = {y: c for y, c in vec.items() if c}
    out = {}
    for x in reversed(module.labels):
        c = residual.get(x)
        if not c:
            continue
        out[x] = c
        _add_into(residual, family[x], -c)
    if residual:
        raise SolverError("vector is not in the span of the family")
    return out


def dual_module(module, sign):
    """The dual module under ``<f_y, e_x> = sign(y) delta_{x,y}``.

    The dual bar is ``bar(f)(v) = bar(f(bar v))``; in the dual basis it is
    unitriangular for the reversed order, so the result lists labels in
    reverse.
    """
    rows = {}
    for x in module.labels:
        for y, r in module.bar_image(x).items():
            rows.setdefault(y, {})[x] = sign(x) * sign(y) * r.bar()

    def bar_of(y):
        return rows.get(y, {})

    leq = None
    if module.leq is not None:
        leq = lambda a, b: module.leq(b, a)  # noqa: E731
    return BarModule(list(reversed(module.labels)), bar_of, leq)


def check_module(module):
    """Assert unitriangularity and involutivity; returns ``True`` or raises."""
    for x in module.labels:
        img = module.bar_image(x)
        if img.get(x) != ONE:
            raise SolverError(f"bar(e_{x!r}) does not have leading coefficient 1")
        for y in img:
            if y != x and module.position[y] >= module.position[x]:
                raise SolverError(f"bar(e_{x!r}) has a term at {y!r} not below it")
        twice = apply_bar(module, img)
        if twice != {x: ONE}:
            raise SolverError(f"bar is not an involution at {x!r}")
    return True
