from itertools import permutations
from math import comb

import pytest

from canontl import symgroup as sg
from canontl.symgroup import ParabolicContext, Permutation

import oracles


def perms(n):
    return sg.all_permutations(n)


def test_length_examples():
    assert sg.length(sg.identity(3)) == 0
    assert sg.length(sg.simple(1, 3)) == 1
    assert sg.length(sg.longest(4)) == 6


@pytest.mark.parametrize("n", range(1, 6))
def test_length_matches_cayley_distance(n):
    dist = oracles.bfs_lengths(n)
    assert all(sg.length(w) == dist[tuple(w)] for w in perms(n))


def test_bruhat_examples():
    s1, s2 = sg.simple(1, 3), sg.simple(2, 3)
    assert all(sg.bruhat_leq(sg.identity(3), w) for w in perms(3))
    assert sg.bruhat_leq(s1, s1 * s2 * s1)
    assert not sg.bruhat_leq(s1 * s2, s2 * s1)


@pytest.mark.parametrize("n", range(1, 5))
def test_bruhat_matches_subword_oracle(n):
    for y in perms(n):
        for w in perms(n):
            assert sg.bruhat_leq(y, w) == oracles.bruhat_leq(y, w), (y, w)


def test_bruhat_is_partial_order_with_top_w0():
    ps = perms(4)
    w0 = sg.longest(4)
    for x in ps:
        assert sg.bruhat_leq(x, w0)
        for y in ps:
            if x != y and sg.bruhat_leq(x, y):
                assert not sg.bruhat_leq(y, x)
    assert [w for w in ps if all(sg.bruhat_leq(x, w) for x in ps)] == [w0]


def test_group_operations():
    assert sg.from_word([1, 2, 1], 3) == sg.from_word([2, 1, 2], 3)
    assert sg.reduced_word(sg.identity(4)) == ()
    s1, s2 = sg.simple(1, 3), sg.simple(2, 3)
    assert (s1 * s2).inverse() == s2 * s1
    assert sg.compose(s1, s2) == sg.from_word([1, 2], 3)
    # w * s_i swaps positions, s_i * w swaps values
    w = Permutation([3, 1, 2])
    assert w * s1 == Permutation([1, 3, 2])
    assert s1 * w == Permutation([3, 2, 1])
    with pytest.raises(ValueError):
        sg.from_word([3], 3)
    with pytest.raises(ValueError):
        Permutation([1, 1, 2])


@pytest.mark.parametrize("n", range(1, 6))
def test_reduced_words_are_reduced_and_lex_least(n):
    for w in perms(n):
        word = sg.reduced_word(w)
        assert sg.from_word(word, n) == w
        assert len(word) == sg.length(w)
    # lex-least among all reduced words, by brute force at n = 4
    if n == 4:
        for w in perms(4):
            words = [wd for wd in _all_words(sg.length(w), 3) if sg.from_word(wd, 4) == w]
            assert tuple(min(words)) == sg.reduced_word(w)


def _all_words(length, gens):
    if length == 0:
        yield []
        return
    for rest in _all_words(length - 1, gens):
        for a in range(1, gens + 1):
            yield rest + [a]


def test_min_reps_examples():
    assert ParabolicContext(2, 1).minimal_coset_reps() == (sg.identity(2), sg.simple(1, 2))
    reps = ParabolicContext(3, 1).minimal_coset_reps()
    assert set(reps) == {sg.identity(3), sg.simple(1, 3), sg.from_word([2, 1], 3)}


@pytest.mark.parametrize("n", range(0, 6))
def test_min_reps_match_bruteforce(n):
    for k in range(n + 1):
        ctx = ParabolicContext(n, k)
        brute = {oracles.min_coset_rep(w, k) for w in perms(n)}
        reps = ctx.minimal_coset_reps()
        assert {tuple(w) for w in reps} == brute
        assert len(reps) == comb(n, k)
        assert list(reps) == sorted(reps, key=sg.sort_key)


@pytest.mark.parametrize("n", range(1, 6))
def test_coset_decompose_is_length_additive_bijection(n):
    for k in range(n + 1):
        ctx = ParabolicContext(n, k)
        seen = set()
        for w in perms(n):
            u, v = ctx.coset_decompose(w)
            assert v * u == w
            assert ctx.in_WJ(u) and ctx.is_min_rep(v)
            assert sg.length(w) == sg.length(u) + sg.length(v)
            seen.add((u, v))
        assert len(seen) == len(perms(n))


def test_coset_decompose_trivial_cases():
    ctx = ParabolicContext(4, 2)
    for w in ctx.minimal_coset_reps():
        assert ctx.coset_decompose(w) == (sg.identity(4), w)
    u = Permutation([2, 1, 4, 3])
    assert ctx.coset_decompose(u) == (u, sg.identity(4))


@pytest.mark.parametrize("n", range(1, 7))
def test_longest_elements(n):
    for k in range(n + 1):
        ctx = ParabolicContext(n, k)
        w0, w0J, wf = sg.longest(n), ctx.longest_in_WJ(), ctx.longest_in_WJ_reps()
        assert wf == max(ctx.minimal_coset_reps(), key=sg.length)
        assert sg.length(wf) == sg.length(w0) - sg.length(w0J)
        # with w = v u the factorization of w_0 puts w_f on the left
        assert wf * w0J == w0
    assert sg.longest(2) == sg.simple(1, 2)


def test_reversed_order_of_w0_factorization_fails():
    # the order w_{0,J} w_f belongs to the other coset convention
    ctx = ParabolicContext(3, 1)
    assert ctx.longest_in_WJ() * ctx.longest_in_WJ_reps() != sg.longest(3)


def test_seq_tilde_examples():
    assert ParabolicContext(4, 2).seq_tilde(sg.identity(4)) == "--++"
    assert ParabolicContext(2, 1).seq_tilde(sg.simple(1, 2)) == "+-"
    with pytest.raises(ValueError):
        ParabolicContext(3, 1).seq_tilde(Permutation([1, 3, 2]))


@pytest.mark.parametrize("n", range(0, 7))
def test_seq_tilde_bijection_and_inverse(n):
    for k in range(n + 1):
        ctx = ParabolicContext(n, k)
        strings = {"".join(p) for p in permutations("-" * k + "+" * (n - k))}
        images = [ctx.seq_tilde(w) for w in ctx.minimal_coset_reps()]
        assert set(images) == strings and len(images) == len(strings)
        for w in ctx.minimal_coset_reps():
            assert ctx.seq_tilde_inverse(ctx.seq_tilde(w)) == w
        for s in strings:
            assert ctx.is_min_rep(ctx.seq_tilde_inverse(s))
    assert ParabolicContext(n, 0).seq_tilde_inverse("+" * n) == sg.identity(n)


def test_seq_tilde_inverse_errors():
    with pytest.raises(ValueError):
        ParabolicContext(3, 1).seq_tilde_inverse("--+")
    with pytest.raises(ValueError):
        ParabolicContext(3, 1).seq_tilde_inverse("-+")
    with pytest.raises(ValueError):
        ParabolicContext(3, 4)
