"""Planar Temperley-Lieb diagrams and their Laurent-linear combinations.

An ``(m, n)``-diagram has ``m`` points on the bottom line and ``n`` on the top
line, both numbered left to right from 1.  Internally a boundary point is an
integer: bottom point ``i`` is ``i - 1`` and top point ``j`` is ``m + j - 1``.
The diagram is stored as its partner map, which makes equality structural.

Stacking convention: ``compose(lower, upper)`` glues the top of ``lower`` to
the bottom of ``upper``.  Algebra products follow function composition, so
``a * b`` means "apply ``b`` first", i.e. ``b`` is drawn below ``a``.
"""

from functools import lru_cache

from .laurent import BETA, ONE, ZERO, LaurentPoly

__all__ = [
    "TLDiagram", "TLElement", "LinkState", "CupDiagram",
    "compose", "tensor", "identity", "generator_e", "epsilon_diagram",
    "delta_diagram", "enumerate_diagrams", "enumerate_mn",
    "enumerate_induced_basis", "is_induced_basis", "top_link_state",
    "bottom_link_state", "cup_of", "link_state_of_cup", "parenthesis_of",
    "from_parenthesis", "enumerate_link_states", "flip_diagram",
    "element_compose", "catalan", "DiagramError",
]

DEFAULT_CAP = 12


class DiagramError(ValueError):
    pass


class TLDiagram:
    """A noncrossing perfect matching of ``m`` bottom and ``n`` top points."""

    __slots__ = ("m", "n", "partner", "_hash")

    def __init__(self, m, n, partner, check=True):
        self.m = m
        self.n = n
        self.partner = tuple(partner)
        self._hash = None
        if check:
            self._validate()

    def _validate(self):
        m, n, p = self.m, self.n, self.partner
        if len(p) != m + n:
            raise DiagramError("partner map has the wrong size")
        for a, b in enumerate(p):
            if not 0 <= b < m + n or b == a or p[b] != a:
                raise DiagramError("partner map is not a fixed-point-free involution")
        # circular order b_1..b_m, t_n..t_1 must be a balanced parenthesization
        order = list(range(m)) + [m + j for j in range(n - 1, -1, -1)]
        pos = {pt: i for i, pt in enumerate(order)}
        stack = []
        for pt in order:
            other = p[pt]
            if pos[other] > pos[pt]:
                stack.append(pt)
            elif not stack or stack.pop() != other:
                raise DiagramError("diagram has crossing links")

    @classmethod
    def from_pairs(cls, m, n, pairs):
        """Build from pairs of labels like ``("b1", "t2")`` or ``(("b", 1), ("t", 2))``."""
        partner = [None] * (m + n)
        for a, b in pairs:
            x, y = _point_index(a, m, n), _point_index(b, m, n)
            if partner[x] is not None or partner[y] is not None:
                raise DiagramError("a point is used twice")
            partner[x], partner[y] = y, x
        if any(p is None for p in partner):
            raise DiagramError("every point must be matched")
        return cls(m, n, partner)

    # -- views ------------------------------------------------------------

    def label(self, pt):
        return f"b{pt + 1}" if pt < self.m else f"t{pt - self.m + 1}"

    def pairs(self):
        """Sorted pairs of point labels (bottom points first, then top)."""
        out = []
        for a, b in enumerate(self.partner):
            if a < b:
                out.append((self.label(a), self.label(b)))
        return out

    def top_arcs(self):
        m = self.m
        return [(a - m + 1, b - m + 1) for a, b in enumerate(self.partner) if m <= a < b]

    def bottom_arcs(self):
        m = self.m
        return [(a + 1, b + 1) for a, b in enumerate(self.partner) if a < b < m]

    def through_strands(self):
        """``(bottom i, top j)`` pairs, ordered left to right."""
        m = self.m
        return [(a + 1, b - m + 1) for a, b in enumerate(self.partner[:m]) if b >= m]

    def __eq__(self, other):
        if not isinstance(other, TLDiagram):
            return NotImplemented
        return self.m == other.m and self.n == other.n and self.partner == other.partner

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.m, self.n, self.partner))
        return self._hash

    def sort_key(self):
        return (self.m, self.n, self.partner)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __repr__(self):
        return f"TLDiagram({self.m}, {self.n}, {self.pairs()})"

    def to_json(self):
        return {"m": self.m, "n": self.n, "pairs": [list(p) for p in self.pairs()]}

    @classmethod
    def from_json(cls, data):
        return cls.from_pairs(int(data["m"]), int(data["n"]), data["pairs"])

    def __mul__(self, other):
        """Algebra product ``self * other``: ``other`` is applied first."""
        return TLElement.from_diagram(self) * other


def _point_index(label, m, n):
    if isinstance(label, str):
        side, idx = label[0], int(label[1:])
    else:
        side, idx = label[0], int(label[1])
    if side == "b" and 1 <= idx <= m:
        return idx - 1
    if side == "t" and 1 <= idx <= n:
        return m + idx - 1
    raise DiagramError(f"bad boundary point {label!r}")


def _pairs_to_partner(size, pairs):
    partner = [0] * size
    for a, b in pairs:
        partner[a], partner[b] = b, a
    return partner


# -- constructors -------------------------------------------------------------

def identity(n):
    return TLDiagram(n, n, [i + n for i in range(n)] + list(range(n)), check=False)


def generator_e(i, n):
    """``e_i``: simple links joining points ``i, i+1`` on both lines."""
    if not 1 <= i <= n - 1:
        raise DiagramError(f"e_{i} is not defined for n={n}")
    pairs = [(i - 1, i), (n + i - 1, n + i)]
    pairs += [(j, n + j) for j in range(n) if j not in (i - 1, i)]
    return TLDiagram(n, n, _pairs_to_partner(2 * n, pairs), check=False)


def epsilon_diagram(i, n):
    """Cap ``[n] -> [n-2]`` joining bottom points ``i, i+1``."""
    if not 1 <= i <= n - 1:
        raise DiagramError(f"epsilon_{i} is not defined for n={n}")
    m, top = n, n - 2
    pairs = [(i - 1, i)]
    rest = [j for j in range(n) if j not in (i - 1, i)]
    pairs += [(b, m + t) for t, b in enumerate(rest)]
    return TLDiagram(m, top, _pairs_to_partner(m + top, pairs), check=False)


def delta_diagram(i, n):
    """Cup ``[n-2] -> [n]`` joining top points ``i, i+1``."""
    if not 1 <= i <= n - 1:
        raise DiagramError(f"delta_{i} is not defined for n={n}")
    m = n - 2
    pairs = [(m + i - 1, m + i)]
    rest = [j for j in range(n) if j not in (i - 1, i)]
    pairs += [(b, m + t) for b, t in enumerate(rest)]
    return TLDiagram(m, n, _pairs_to_partner(m + n, pairs), check=False)


def compose(lower, upper):
    """Stack ``upper`` on ``lower``; returns ``(diagram, closed_loops)``."""
    if lower.n != upper.m:
        raise DiagramError(f"cannot stack a ({upper.m},{upper.n})-diagram on a "
                           f"({lower.m},{lower.n})-diagram")
    lm, mid, un = lower.m, lower.n, upper.n
    lp, up = lower.partner, upper.partner
    seen_mid = [False] * mid
    # result points: bottom 0..lm-1 from lower, top lm..lm+un-1 from upper
    result = [None] * (lm + un)

    def walk(side, pt):
        # follow a strand from an outer point until it exits on an outer point
        while True:
            if side == "L":
                nxt = lp[pt]
                if nxt < lm:
                    return nxt
                j = nxt - lm
                seen_mid[j] = True
                side, pt = "U", j
            else:
                nxt = up[pt]
                if nxt >= mid:
                    return lm + (nxt - mid)
                seen_mid[nxt] = True
                side, pt = "L", lm + nxt

    for b in range(lm):
        if result[b] is None:
            end = walk("L", b)
            result[b], result[end] = end, b
    for t in range(un):
        pt = lm + t
        if result[pt] is None:
            end = walk("U", mid + t)
            result[pt], result[end] = end, pt

    loops = 0
    for j in range(mid):
        if seen_mid[j]:
            continue
        loops += 1
        # trace the closed loop through middle point j
        cur = j
        while True:
            seen_mid[cur] = True
            a = up[cur] - 0  # partner within upper's bottom row
            seen_mid[a] = True
            b = lp[lm + a] - lm
            if b == j:
                break
            cur = b
    return TLDiagram(lm, un, result, check=False), loops


def tensor(d1, d2):
    """Place ``d2`` to the right of ``d1``."""
    m, n = d1.m + d2.m, d1.n + d2.n
    pairs = []
    for a, b in enumerate(d1.partner):
        if a < b:
            pairs.append((_shift(a, d1.m, 0, m, 0), _shift(b, d1.m, 0, m, 0)))
    for a, b in enumerate(d2.partner):
        if a < b:
            pairs.append((_shift(a, d2.m, d1.m, m, d1.n), _shift(b, d2.m, d1.m, m, d1.n)))
    return TLDiagram(m, n, _pairs_to_partner(m + n, pairs), check=False)


def _shift(pt, m_old, bottom_off, m_new, top_off):
    if pt < m_old:
        return pt + bottom_off
    return m_new + (pt - m_old) + top_off


def flip_diagram(d):
    """Left-right mirror image."""
    m, n = d.m, d.n

    def mirror(pt):
        return m - 1 - pt if pt < m else m + (n - 1 - (pt - m))

    partner = [0] * (m + n)
    for a, b in enumerate(d.partner):
        partner[mirror(a)] = mirror(b)
    return TLDiagram(m, n, partner, check=False)


# -- enumeration --------------------------------------------------------------

def catalan(n):
    from math import comb
    return comb(2 * n, n) // (n + 1)


@lru_cache(maxsize=None)
def _noncrossing(size):
    """All noncrossing perfect matchings of ``0..size-1`` in a line, as pair tuples."""
    if size == 0:
        return ((),)
    out = []
    for j in range(1, size, 2):
        for inner in _noncrossing(j - 1):
            for outer in _noncrossing(size - j - 1):
                pairs = ((0, j),) + tuple((a + 1, b + 1) for a, b in inner) \
                    + tuple((a + j + 1, b + j + 1) for a, b in outer)
                out.append(pairs)
    return tuple(out)


def enumerate_mn(m, n, cap=DEFAULT_CAP):
    """All ``(m, n)``-diagrams in a deterministic order."""
    if (m + n) % 2:
        return []
    if max(m, n) > 2 * cap:
        raise DiagramError(f"refusing to enumerate beyond the cap ({cap})")
    order = list(range(m)) + [m + j for j in range(n - 1, -1, -1)]
    out = []
    for pairs in _noncrossing(m + n):
        out.append(TLDiagram(m, n, _pairs_to_partner(
            m + n, [(order[a], order[b]) for a, b in pairs]), check=False))
    out.sort(key=TLDiagram.sort_key)
    return out


def enumerate_diagrams(n, cap=DEFAULT_CAP):
    """All ``n``-diagrams (basis of ``TL_n``)."""
    if n < 0:
        raise DiagramError("n must be nonnegative")
    if n > cap:
        raise DiagramError(f"n={n} exceeds the enumeration cap {cap}")
    return enumerate_mn(n, n, cap)


def is_induced_basis(d, k):
    """Every bottom arc encloses the gap between bottom points ``k`` and ``k+1``."""
    return all(a <= k < b for a, b in d.bottom_arcs())


def enumerate_induced_basis(n, k, cap=DEFAULT_CAP):
    if not 0 <= k <= n:
        raise DiagramError(f"need 0 <= k <= n, got n={n}, k={k}")
    return [d for d in enumerate_diagrams(n, cap) if is_induced_basis(d, k)]


# -- half diagrams ------------------------------------------------------------

class LinkState:
    """Half of a diagram: noncrossing arcs on ``1..n`` plus defects."""

    __slots__ = ("n", "arcs", "defects")

    def __init__(self, n, arcs):
        self.n = n
        self.arcs = tuple(sorted((min(a, b), max(a, b)) for a, b in arcs))
        used = [x for arc in self.arcs for x in arc]
        if len(set(used)) != len(used) or any(not 1 <= x <= n for x in used):
            raise DiagramError("arcs overlap or leave 1..n")
        self.defects = tuple(x for x in range(1, n + 1) if x not in set(used))
        p = parenthesis_tuple(n, self.arcs)
        check_parenthesis(p)

    @property
    def p(self):
        return len(self.arcs)

    def __eq__(self, other):
        return isinstance(other, LinkState) and (self.n, self.arcs) == (other.n, other.arcs)

    def __hash__(self):
        return hash((self.n, self.arcs))

    def __repr__(self):
        return f"LinkState({self.n}, arcs={list(self.arcs)}, defects={list(self.defects)})"


class CupDiagram:
    """Only the arcs of a link state; the defect lines are forgotten."""

    __slots__ = ("n", "cups")

    def __init__(self, n, cups):
        self.n = n
        self.cups = tuple(sorted(cups))

    def __eq__(self, other):
        return isinstance(other, CupDiagram) and (self.n, self.cups) == (other.n, other.cups)

    def __hash__(self):
        return hash((self.n, self.cups))

    def __repr__(self):
        return f"CupDiagram({self.n}, {list(self.cups)})"


def parenthesis_tuple(n, arcs):
    sigma = list(range(1, n + 1))
    for a, b in arcs:
        sigma[a - 1], sigma[b - 1] = b, a
    return tuple(sigma)


def check_parenthesis(sigma):
    """Validate an involution against the parenthesis-diagram conditions."""
    n = len(sigma)
    for i, s in enumerate(sigma, 1):
        if not 1 <= s <= n or sigma[s - 1] != i:
            raise DiagramError("not an involution of 1..n")
    for i in range(1, n + 1):
        k = sigma[i - 1]
        if k <= i:
            continue
        for j in range(i + 1, k):
            sj = sigma[j - 1]
            if sj == j:
                raise DiagramError(f"fixed point {j} lies under the arc ({i}, {k})")
            if sj > k:
                raise DiagramError(f"arcs ({i}, {k}) and ({j}, {sj}) cross")


def top_link_state(d):
    return LinkState(d.n, d.top_arcs())


def bottom_link_state(d):
    return LinkState(d.m, d.bottom_arcs())


def cup_of(ls):
    return CupDiagram(ls.n, ls.arcs)


def link_state_of_cup(c):
    return LinkState(c.n, c.cups)


def parenthesis_of(ls):
    """The involution fixing defects and swapping arc endpoints (1-indexed one-line)."""
    return parenthesis_tuple(ls.n, ls.arcs)


def from_parenthesis(sigma):
    sigma = tuple(sigma)
    check_parenthesis(sigma)
    arcs = [(i, s) for i, s in enumerate(sigma, 1) if s > i]
    return LinkState(len(sigma), arcs)


def enumerate_link_states(n, p):
    out = set()
    for d in enumerate_mn(n - 2 * p, n):
        if len(d.top_arcs()) == p:
            out.add(top_link_state(d))
    return sorted(out, key=lambda ls: ls.arcs)


# -- linear combinations ------------------------------------------------------

class TLElement:
    """A Laurent-linear combination of ``(m, n)``-diagrams."""

    __slots__ = ("m", "n", "terms")

    def __init__(self, m, n, terms=None):
        self.m = m
        self.n = n
        self.terms = {}
        for d, c in (terms or {}).items():
            if (d.m, d.n) != (m, n):
                raise DiagramError("diagram shape does not match the element")
            c = LaurentPoly.coerce(c)
            if c:
                self.terms[d] = c

    @classmethod
    def from_diagram(cls, d, coeff=ONE):
        return cls(d.m, d.n, {d: coeff})

    @classmethod
    def zero(cls, m, n):
        return cls(m, n)

    @classmethod
    def one(cls, n):
        return cls.from_diagram(identity(n))

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, d):
        return self.terms.get(d, ZERO)

    def __add__(self, other):
        other = _as_element(other, self.n)
        if (self.m, self.n) != (other.m, other.n):
            raise DiagramError("cannot add elements of different shape")
        out = dict(self.terms)
        for d, c in other.terms.items():
            s = out.get(d, ZERO) + c
            if s:
                out[d] = s
            else:
                out.pop(d, None)
        return _raw_element(self.m, self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return _raw_element(self.m, self.n, {d: -c for d, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_as_element(other, self.n))

    def __rsub__(self, other):
        return _as_element(other, self.n) - self

    def scale(self, c):
        c = LaurentPoly.coerce(c)
        if not c:
            return TLElement(self.m, self.n)
        return _raw_element(self.m, self.n, {d: x * c for d, x in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        if isinstance(other, TLDiagram):
            other = TLElement.from_diagram(other)
        if not isinstance(other, TLElement):
            return NotImplemented
        return element_compose(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, TLElement):
            return NotImplemented
        return (self.m, self.n) == (other.m, other.n) and self.terms == other.terms

    def __hash__(self):
        return hash((self.m, self.n, frozenset(self.terms.items())))

    def items(self):
        return sorted(self.terms.items(), key=lambda t: t[0].sort_key())

    def __repr__(self):
        body = " + ".join(f"({c})*{d.pairs()}" for d, c in self.items()) or "0"
        return f"TLElement({self.m}, {self.n}: {body})"

    def to_json(self):
        return {"m": self.m, "n": self.n,
                "terms": [{"diagram": d.to_json(), "coeff": c.to_json()} for d, c in self.items()]}


def _raw_element(m, n, terms):
    el = TLElement.__new__(TLElement)
    el.m, el.n, el.terms = m, n, terms
    return el


def _as_element(x, n):
    if isinstance(x, TLElement):
        return x
    if isinstance(x, TLDiagram):
        return TLElement.from_diagram(x)
    if isinstance(x, (int, LaurentPoly)):
        return TLElement.one(n).scale(x)
    raise TypeError(f"cannot interpret {type(x).__name__} as a TLElement")


def element_compose(a, b):
    """Algebra product ``a * b`` (``b`` below ``a``), a loop contributing ``BETA``.

    Shape-mismatched factors compose to the zero element of shape ``(b.m, a.n)``.
    """
    if b.n != a.m:
        return TLElement(b.m, a.n)
    out = {}
    for db, cb in b.terms.items():
        for da, ca in a.terms.items():
            d, loops = _compose_cached(db, da)
            c = cb * ca
            if loops:
                c = c * BETA ** loops
            s = out.get(d, ZERO) + c
            if s:
                out[d] = s
            else:
                out.pop(d, None)
    return _raw_element(b.m, a.n, out)


@lru_cache(maxsize=1 << 16)
def _compose_cached(lower, upper):
    return compose(lower, upper)
