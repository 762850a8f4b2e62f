"""The symmetric group S_n with its two-block parabolic structure.

Permutations are one-line tuples ``(w(1), ..., w(n))`` and multiply as
functions: ``(u * v)(i) = u(v(i))``.  The simple reflection ``s_i`` swaps
``i`` and ``i + 1``, so ``w * s_i`` swaps positions and ``s_i * w`` swaps
values.

Coset convention: ``W^J`` is the set of minimal-length representatives of the
cosets ``w W_J`` and every ``w`` factors uniquely as ``w = v * u`` with
``v`` in ``W^J``, ``u`` in ``W_J`` and ``len(w) = len(v) + len(u)``.  With
this orientation ``H_{vu} (x) 1 = H_v H_u (x) 1`` in a module induced from
``H_J``, and the orbit map ``w -> w . (-^k +^(n-k))`` is constant on cosets.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

__all__ = [
    "Permutation", "ParabolicContext", "identity", "simple", "from_word",
    "reduced_word", "length", "inverse", "compose", "bruhat_leq", "longest",
    "all_permutations", "sort_key",
]


class Permutation(tuple):
    """A permutation of ``1..n`` in one-line notation."""

    __slots__ = ()

    def __new__(cls, one_line):
        t = tuple.__new__(cls, (int(i) for i in one_line))
        if sorted(t) != list(range(1, len(t) + 1)):
            raise ValueError(f"not a permutation of 1..{len(t)}: {tuple(t)}")
        return t

    @classmethod
    def _trusted(cls, one_line):
        return tuple.__new__(cls, one_line)

    @property
    def n(self):
        return len(self)

    def __call__(self, i):
        return self[i - 1]

    def __mul__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        if len(self) != len(other):
            raise ValueError("cannot compose permutations of different rank")
        return Permutation._trusted(self[j - 1] for j in other)

    def __rmul__(self, other):
        return NotImplemented

    def inverse(self):
        inv = [0] * len(self)
        for i, wi in enumerate(self, 1):
            inv[wi - 1] = i
        return Permutation._trusted(inv)

    def length(self):
        return length(self)

    def __repr__(self):
        return f"Permutation({list(self)})"


def identity(n):
    return Permutation._trusted(range(1, n + 1))


def simple(i, n):
    """The simple reflection ``s_i`` in ``S_n``."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"s_{i} does not exist in S_{n}")
    t = list(range(1, n + 1))
    t[i - 1], t[i] = t[i], t[i - 1]
    return Permutation._trusted(t)


def from_word(letters, n):
    """Product ``s_{a_1} s_{a_2} ... s_{a_m}``."""
    w = list(range(1, n + 1))
    # right-multiplying by s_a swaps positions a, a+1
    for a in letters:
        if not isinstance(a, int) or not 1 <= a <= n - 1:
            raise ValueError(f"letter {a!r} is not a generator of S_{n}")
        w[a - 1], w[a] = w[a], w[a - 1]
    return Permutation._trusted(w)


@lru_cache(maxsize=None)
def length(w):
    """Number of inversions, which equals the Coxeter length."""
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def inverse(w):
    return w.inverse()


def compose(u, v):
    return u * v


@lru_cache(maxsize=None)
def reduced_word(w):
    """Lexicographically least reduced word, as a tuple of generator indices."""
    word = []
    cur = list(w)
    while True:
        pos = {v: i for i, v in enumerate(cur)}
        # left descents of cur are the values i with i+1 placed before i
        for i in range(1, len(cur)):
            if pos[i] > pos[i + 1]:
                word.append(i)
                a, b = pos[i], pos[i + 1]
                cur[a], cur[b] = cur[b], cur[a]
                break
        else:
            return tuple(word)


def left_descent(w):
    """Smallest ``i`` with ``len(s_i w) < len(w)``, or ``None``."""
    pos = w.inverse()
    for i in range(1, len(w)):
        if pos[i - 1] > pos[i]:
            return i
    return None


def right_descent(w):
    """Smallest ``i`` with ``len(w s_i) < len(w)``, or ``None``."""
    for i in range(1, len(w)):
        if w[i - 1] > w[i]:
            return i
    return None


@lru_cache(maxsize=None)
def bruhat_leq(y, w):
    """Bruhat order via the tableau (dominance) criterion."""
    if len(y) != len(w):
        raise ValueError("Bruhat comparison needs equal rank")
    n = len(w)
    for i in range(1, n):
        a = sorted(y[:i])
        b = sorted(w[:i])
        if any(x > z for x, z in zip(a, b)):
            return False
    return True


def longest(n):
    return Permutation._trusted(range(n, 0, -1))


def sort_key(w):
    return (length(w), tuple(w))


@lru_cache(maxsize=None)
def all_permutations(n):
    """All of ``S_n`` sorted by (length, one-line lex)."""
    return tuple(sorted((Permutation._trusted(p) for p in permutations(range(1, n + 1))),
                        key=sort_key))


@dataclass(frozen=True)
class ParabolicContext:
    """``J = S minus {s_k}``, so ``W_J = S_k x S_(n-k)``."""

    n: int
    k: int

    def __post_init__(self):
        if not (self.n >= 0 and 0 <= self.k <= self.n):
            raise ValueError(f"need 0 <= k <= n, got n={self.n}, k={self.k}")

    @property
    def J(self):
        return tuple(i for i in range(1, self.n) if i != self.k)

    def in_WJ(self, w):
        k = self.k
        return all(x <= k for x in w[:k])

    def is_min_rep(self, w):
        k = self.k
        return (all(w[i] < w[i + 1] for i in range(k - 1))
                and all(w[i] < w[i + 1] for i in range(k, self.n - 1)))

    def min_rep(self, w):
        """Minimal representative of the coset ``w W_J``."""
        k = self.k
        return Permutation._trusted(tuple(sorted(w[:k])) + tuple(sorted(w[k:])))

    def coset_decompose(self, w):
        """Return ``(u, v)`` with ``w = v * u``, ``u`` in W_J, ``v`` in W^J."""
        v = self.min_rep(w)
        u = v.inverse() * w
        return u, v

    def minimal_coset_reps(self):
        return _min_reps(self.n, self.k)

    def longest_in_WJ(self):
        k, n = self.k, self.n
        return Permutation._trusted(tuple(range(k, 0, -1)) + tuple(range(n, k, -1)))

    def longest_in_WJ_reps(self):
        """``w_f``, the longest element of ``W^J``."""
        k, n = self.k, self.n
        return Permutation._trusted(tuple(range(n - k + 1, n + 1)) + tuple(range(1, n - k + 1)))

    def base_string(self):
        return "-" * self.k + "+" * (self.n - self.k)

    def seq_tilde(self, w):
        """Sign string obtained by letting ``w`` permute the factors of the base string."""
        if len(w) != self.n:
            raise ValueError("rank mismatch")
        if not self.is_min_rep(w):
            raise ValueError(f"{list(w)} is not a minimal coset representative for k={self.k}")
        return _orbit_string(w, self.k)

    def seq_tilde_inverse(self, s):
        """The ``W^J`` element whose orbit string is ``s``."""
        s = normalize_signs(s)
        if len(s) != self.n:
            raise ValueError(f"sign string {s!r} does not have length {self.n}")
        minus = [i + 1 for i, c in enumerate(s) if c == "-"]
        if len(minus) != self.k:
            raise ValueError(f"sign string {s!r} has {len(minus)} minus signs, expected {self.k}")
        word = []
        # i-th block (s_{a_i - 1} ... s_i) moves the i-th minus from i to a_i
        for i, a in enumerate(minus, 1):
            word.extend(range(a - 1, i - 1, -1))
        return from_word(word, self.n)


def normalize_signs(s):
    if isinstance(s, (list, tuple)):
        s = "".join(s)
    s = s.replace("−", "-")
    if any(c not in "+-" for c in s):
        raise ValueError(f"invalid sign string {s!r}")
    return s


def _orbit_string(w, k):
    n = len(w)
    out = ["+"] * n
    for j in range(k):
        out[w[j] - 1] = "-"
    return "".join(out)


@lru_cache(maxsize=None)
def _min_reps(n, k):
    ctx = ParabolicContext(n, k)
    return tuple(w for w in all_permutations(n) if ctx.is_min_rep(w))
