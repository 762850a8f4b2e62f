"""Slow, independent reference implementations used only by the tests.

Nothing here imports the code it is used to check, except for plain data
types (``Permutation``, ``LaurentPoly``) needed to compare results.
"""

from collections import deque
from functools import lru_cache
from itertools import combinations, permutations

from canontl.laurent import LaurentPoly


# -- permutations ---------------------------------------------------------------

def compose(u, v):
    return tuple(u[j - 1] for j in v)


def simple(i, n):
    t = list(range(1, n + 1))
    t[i - 1], t[i] = t[i], t[i - 1]
    return tuple(t)


def word_product(word, n):
    w = tuple(range(1, n + 1))
    for i in word:
        w = compose(w, simple(i, n))
    return w


@lru_cache(maxsize=None)
def bfs_lengths(n):
    """Distance from the identity in the Cayley graph of simple reflections."""
    start = tuple(range(1, n + 1))
    dist = {start: 0}
    todo = deque([start])
    while todo:
        w = todo.popleft()
        for i in range(1, n):
            x = compose(w, simple(i, n))
            if x not in dist:
                dist[x] = dist[w] + 1
                todo.append(x)
    return dist


def some_reduced_word(w):
    """Any reduced word, found by walking down the BFS distances."""
    n = len(w)
    dist = bfs_lengths(n)
    word = []
    cur = tuple(w)
    while dist[cur] > 0:
        for i in range(1, n):
            x = compose(cur, simple(i, n))
            if dist[x] < dist[cur]:
                word.append(i)
                cur = x
                break
    return word[::-1]


@lru_cache(maxsize=None)
def subword_lower_set(w):
    """All products of subwords of one reduced word for ``w``."""
    word = some_reduced_word(w)
    n = len(w)
    out = set()
    for r in range(len(word) + 1):
        for idx in combinations(range(len(word)), r):
            out.add(word_product([word[i] for i in idx], n))
    return frozenset(out)


def bruhat_leq(y, w):
    return tuple(y) in subword_lower_set(tuple(w))


def min_coset_rep(w, k):
    """Shortest element of ``w W_J`` by brute force over ``W_J``."""
    n = len(w)
    dist = bfs_lengths(n)
    best = None
    for left in permutations(range(1, k + 1)):
        for right in permutations(range(k + 1, n + 1)):
            u = left + right
            x = compose(tuple(w), u)
            if best is None or dist[x] < dist[best]:
                best = x
    return best


# -- Laurent polynomials as plain dicts ----------------------------------------

def pmul(a, b):
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def padd(a, b, scale=1):
    out = dict(a)
    for e, c in b.items():
        out[e] = out.get(e, 0) + scale * c
    return {e: c for e, c in out.items() if c}


# -- classical Kazhdan-Lusztig polynomials -------------------------------------

def kl_classical(n):
    """``P_{y,w}(t)`` from the original recursion, as ``{(y, w): {deg: coeff}}``.

    For ``w = s v > v``:
    ``P_{x,w} = t^(1-c) P_{sx,v} + t^c P_{x,v}
               - sum_{z: sz < z} mu(z, v) t^((l(w)-l(z))/2) P_{x,z}``
    with ``c = 1`` if ``sx < x`` else 0.
    """
    dist = bfs_lengths(n)
    elems = sorted(dist, key=lambda w: (dist[w], w))
    P = {}

    def get(x, w):
        return P.get((x, w), {})

    def left(s, x):
        return compose(simple(s, n), x)

    for w in elems:
        if dist[w] == 0:
            P[(w, w)] = {0: 1}
            continue
        s = next(i for i in range(1, n) if dist[left(i, w)] < dist[w])
        v = left(s, w)
        for x in elems:
            if not bruhat_leq(x, w):
                continue
            sx = left(s, x)
            c = 1 if dist[sx] < dist[x] else 0
            val = padd(pmul({1 - c: 1}, get(sx, v)), pmul({c: 1}, get(x, v)))
            for z in elems:
                if dist[left(s, z)] < dist[z] and bruhat_leq(z, v) and z != v:
                    d = dist[v] - dist[z] - 1
                    if d % 2:
                        continue
                    mu = get(z, v).get(d // 2, 0)
                    if mu:
                        val = padd(val, pmul({(dist[w] - dist[z]) // 2: mu}, get(x, z)), -1)
            if val:
                P[(x, w)] = val
    return P


def kl_coefficient_oracle(P, y, w, n):
    """Coefficient of ``H_y`` in ``B_w`` for ``(H_s - q^-1)(H_s + q) = 0``.

    This is ``(-q^-1)^(l(w) - l(y)) P_{y,w}(q^2)``.
    """
    dist = bfs_lengths(n)
    poly = P.get((tuple(y), tuple(w)), {})
    d = dist[tuple(w)] - dist[tuple(y)]
    out = {}
    for e, c in poly.items():
        out[2 * e - d] = out.get(2 * e - d, 0) + c * (-1) ** d
    return LaurentPoly(out)


# -- matchings -------------------------------------------------------------------

def catalan_recurrence(n):
    c = [1]
    for m in range(n):
        c.append(sum(c[i] * c[m - i] for i in range(m + 1)))
    return c[n]


def all_perfect_matchings(points):
    if not points:
        yield ()
        return
    a = points[0]
    for j in range(1, len(points)):
        rest = points[1:j] + points[j + 1:]
        for m in all_perfect_matchings(rest):
            yield ((a, points[j]),) + m


def crosses(p, r):
    (a, b), (c, d) = sorted(p), sorted(r)
    return a < c < b < d or c < a < d < b


def noncrossing_matchings_bruteforce(size):
    """Noncrossing perfect matchings on points ``0..size-1`` around a circle."""
    out = []
    for m in all_perfect_matchings(list(range(size))):
        if not any(crosses(p, r) for p, r in combinations(m, 2)):
            out.append(frozenset(tuple(sorted(p)) for p in m))
    return out
