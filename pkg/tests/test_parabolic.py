import random

import pytest
import sympy

from canontl import hecke as hk
from canontl import parabolic as pb
from canontl import symgroup as sg
from canontl.laurent import ONE, LaurentPoly, q, qinv
from canontl.parabolic import ParabolicElement
from canontl.symgroup import ParabolicContext


def contexts(max_n):
    for n in range(1, max_n + 1):
        for k in range(n + 1):
            yield ParabolicContext(n, k)


def random_hecke(n, rng, terms=3):
    ps = sg.all_permutations(n)
    out = hk.HeckeElement(n)
    for _ in range(terms):
        out = out + hk.H(rng.choice(ps), q ** rng.randint(-2, 2) * rng.randint(-2, 2))
    return out


def random_parabolic(ctx, kind, rng, terms=3):
    reps = ctx.minimal_coset_reps()
    out = ParabolicElement(ctx, kind, {})
    for _ in range(terms):
        out = out + pb.basis(rng.choice(reps), ctx, kind).scale(q ** rng.randint(-2, 2) * rng.randint(-2, 2))
    return out


# -- projections and the module action -----------------------------------------

def test_projection_examples():
    ctx = ParabolicContext(3, 2)
    e, s1 = sg.identity(3), sg.simple(1, 3)
    assert pb.project_M(hk.H(e), ctx) == pb.basis(e, ctx, "M")
    assert pb.project_M(hk.H(s1), ctx) == pb.basis(e, ctx, "M").scale(qinv)
    assert pb.project_N(hk.H(s1), ctx) == pb.basis(e, ctx, "N").scale(-q)


def test_action_examples():
    for n in range(2, 5):
        for k in range(1, n):
            ctx = ParabolicContext(n, k)
            e = sg.identity(n)
            m_e = pb.basis(e, ctx, "M")
            assert pb.act(hk.H(e), m_e) == m_e
            assert pb.act(hk.generator(k, n), m_e) == pb.basis(sg.simple(k, n), ctx, "M")
            for i in range(1, n):
                if i != k:
                    assert pb.act(hk.generator(i, n), m_e) == m_e.scale(qinv)
                    assert pb.act(hk.generator(i, n), pb.basis(e, ctx, "N")) == pb.basis(e, ctx, "N").scale(-q)


@pytest.mark.parametrize("ctx", list(contexts(4)), ids=str)
def test_action_is_a_module_and_projection_intertwines(ctx):
    rng = random.Random(hash((ctx.n, ctx.k)))
    for kind in ("M", "N"):
        for _ in range(3):
            h1, h2 = random_hecke(ctx.n, rng), random_hecke(ctx.n, rng)
            x = random_parabolic(ctx, kind, rng)
            assert pb.act(h1 * h2, x) == pb.act(h1, pb.act(h2, x))
            assert pb.project(h1 * h2, ctx, kind) == pb.act(h1, pb.project(h2, ctx, kind))


@pytest.mark.parametrize("ctx", list(contexts(4)), ids=str)
def test_action_does_not_depend_on_lift(ctx):
    rng = random.Random(7)
    h = random_hecke(ctx.n, rng)
    u = ctx.longest_in_WJ()
    for v in ctx.minimal_coset_reps():
        # H_{vu} projects to q^-len(u) M_v, so it is another lift of q^-len(u) M_v
        lhs = pb.project_M(h * hk.H(v * u), ctx)
        rhs = pb.act(h, pb.basis(v, ctx, "M")).scale(qinv ** sg.length(u))
        assert lhs == rhs


# -- canonical bases -----------------------------------------------------------

def test_canonical_examples():
    ctx = ParabolicContext(2, 1)
    e, s = sg.identity(2), sg.simple(1, 2)
    assert pb.canonical_M(e, ctx) == pb.basis(e, ctx, "M")
    assert pb.canonical_N(s, ctx) == pb.basis(s, ctx, "N") - pb.basis(e, ctx, "N").scale(qinv)
    with pytest.raises(ValueError):
        pb.canonical_M(sg.simple(1, 3), ParabolicContext(3, 2))


@pytest.mark.parametrize("ctx", list(contexts(5)), ids=str)
def test_canonical_bases_are_bar_fixed_and_triangular(ctx):
    for kind, fn in (("M", pb.canonical_M), ("N", pb.canonical_N)):
        for w in ctx.minimal_coset_reps():
            b = fn(w, ctx)
            assert pb.bar_parabolic(b) == b
            assert b[w] == ONE
            for y, c in b.items():
                if y != w:
                    assert c.is_strictly_negative() and sg.bruhat_leq(y, w)


@pytest.mark.parametrize("ctx", list(contexts(4)), ids=str)
def test_projection_sends_kl_basis_to_canonical_M(ctx):
    for w in ctx.minimal_coset_reps():
        assert pb.project_M(hk.kl_basis(w), ctx) == pb.canonical_M(w, ctx)


# -- the embedding of N ----------------------------------------------------------

@pytest.mark.parametrize("ctx", list(contexts(4)), ids=str)
def test_iota(ctx):
    w0J = ctx.longest_in_WJ()
    assert pb.iota(pb.basis(sg.identity(ctx.n), ctx, "N")) == hk.kl_basis(w0J)
    for w in ctx.minimal_coset_reps():
        # with w = v u the KL element sits at w * w_{0,J}
        assert pb.iota(pb.canonical_N(w, ctx)) == hk.kl_basis(w * w0J)
    rng = random.Random(3)
    for _ in range(3):
        x = random_parabolic(ctx, "N", rng)
        assert hk.bar(pb.iota(x)) == pb.iota(pb.bar_parabolic(x))
        h = random_hecke(ctx.n, rng)
        assert pb.iota(pb.act(h, x)) == h * pb.iota(x)


def test_iota_rejects_M():
    ctx = ParabolicContext(3, 1)
    with pytest.raises(ValueError):
        pb.iota(pb.basis(sg.identity(3), ctx, "M"))


# -- flips and the pairing ---------------------------------------------------------

@pytest.mark.parametrize("ctx", list(contexts(5)), ids=str)
def test_flip_label_is_order_reversing_involution(ctx):
    reps = ctx.minimal_coset_reps()
    wf = ctx.longest_in_WJ_reps()
    assert pb.flip_label(sg.identity(ctx.n), ctx) == wf
    images = [pb.flip_label(w, ctx) for w in reps]
    assert sorted(images) == sorted(reps)
    for w in reps:
        f = pb.flip_label(w, ctx)
        assert pb.flip_label(f, ctx) == w
        assert ctx.seq_tilde(f) == ctx.seq_tilde(w)[::-1]
        assert sg.length(f) == sg.length(wf) - sg.length(w)


def test_left_multiplication_by_wf_is_not_an_involution():
    # reducing w_f * w to its minimal representative does not give a flip
    ctx = ParabolicContext(3, 1)
    wf = ctx.longest_in_WJ_reps()
    naive = {w: ctx.min_rep(wf * w) for w in ctx.minimal_coset_reps()}
    assert any(naive[naive[w]] != w for w in naive)


def test_flip_and_pairing_examples():
    ctx = ParabolicContext(3, 1)
    e, sk = sg.identity(3), sg.simple(1, 3)
    m_e = pb.basis(e, ctx, "M")
    assert pb.flip_M(m_e) == pb.basis(ctx.longest_in_WJ_reps(), ctx, "M")
    assert pb.flip_M(m_e.scale(q + 2)) == pb.flip_M(m_e).scale(q + 2)
    assert pb.pairing_MN(m_e, pb.basis(e, ctx, "N")) == ONE
    assert pb.pairing_MN(pb.basis(sk, ctx, "M"), pb.basis(sk, ctx, "N")) == -ONE
    with pytest.raises(ValueError):
        pb.pairing_MN(m_e, m_e)
    with pytest.raises(ValueError):
        pb.pairing_MN(m_e, pb.basis(e, ParabolicContext(3, 2), "N"))
    with pytest.raises(ValueError):
        pb.flip_N(m_e)


@pytest.mark.parametrize("ctx", list(contexts(4)), ids=str)
def test_pairing_theorem(ctx):
    reps = ctx.minimal_coset_reps()
    for w in reps:
        left = pb.flip_M(pb.canonical_M(pb.flip_label(w, ctx), ctx))
        for x in reps:
            want = (-1) ** sg.length(x) if x == w else 0
            assert pb.pairing_MN(left, pb.canonical_N(x, ctx)) == want


# -- dual canonical bases -----------------------------------------------------------

@pytest.mark.parametrize("ctx", list(contexts(4)), ids=str)
def test_dual_canonical_bases(ctx):
    reps = ctx.minimal_coset_reps()
    for w in reps:
        Q, R = pb.canonical_Nstar(w, ctx), pb.canonical_Mstar(w, ctx)
        assert Q.kind == "Nstar" and R.kind == "Mstar"
        assert Q == pb.dual_canonical_Nstar(w, ctx)
        assert R == pb.dual_canonical_Mstar(w, ctx)
        for y, c in Q.items():
            assert c == ONE if y == w else c.is_strictly_negative()
    # Q at the top label is a single standard vector
    top = ctx.longest_in_WJ_reps()
    assert pb.canonical_Nstar(top, ctx) == pb.basis(top, ctx, "Nstar")


@pytest.mark.parametrize("ctx", list(contexts(4)), ids=str)
def test_sigma_star(ctx):
    w0J = ctx.longest_in_WJ()
    reps = ctx.minimal_coset_reps()
    for v in reps:
        assert pb.sigma_star(hk.H(v * w0J), ctx) == pb.basis(v, ctx, "Nstar")
        assert pb.sigma_star(hk.dual_basis_D(v * w0J), ctx) == pb.canonical_Nstar(v, ctx)
    # surjective onto the Q span: images of the S basis have full rank at q = 2
    rows = []
    for w in sg.all_permutations(ctx.n):
        img = pb.sigma_star(hk.H(w), ctx)
        rows.append([img[v].eval_at(2) for v in reps])
    assert sympy.Matrix(rows).rank() == len(reps)


def test_json_roundtrip_and_errors():
    ctx = ParabolicContext(4, 2)
    x = pb.canonical_M(ctx.longest_in_WJ_reps(), ctx)
    data = x.to_json()
    assert data["kind"] == "M"
    assert ParabolicElement.from_json(data) == x
    with pytest.raises(ValueError):
        ParabolicElement(ctx, "X", {})
    with pytest.raises(ValueError):
        ParabolicElement(ctx, "M", {sg.simple(1, 4): ONE})
    with pytest.raises(ValueError):
        pb.project_M(hk.H(sg.identity(3)), ctx)
    assert pb.canonical_Nstar(sg.identity(4), ctx)[sg.identity(4)] == LaurentPoly(1)
