"""
Kazhdan-Lusztig elements and parabolic modules
==============================================
"""

# %%
from canontl import hecke as hk
from canontl import parabolic as pb
from canontl import symgroup as sg

# B_w for the longest element of S_3.  Lower coefficients are signed powers
# of q^-1 because B_s = H_s - q^-1.
w0 = sg.longest(3)
print(hk.kl_basis(w0))

# %%
# Under H_i -> e_i + q^-1 each B_w goes to a single diagram or to zero.
for w in sg.all_permutations(3):
    print(list(w), hk.phi_q(hk.kl_basis(w)))

# %%
# The spherical module for n = 4, k = 2.  Coset representatives are labelled
# by sign strings.
ctx = sg.ParabolicContext(4, 2)
for w in ctx.minimal_coset_reps():
    print(ctx.seq_tilde(w), pb.canonical_M(w, ctx))

# %%
# Projecting B_w gives the canonical element of M, and the embedding of N
# sends its canonical element to B_{w w_{0,J}}.
w0J = ctx.longest_in_WJ()
print(all(pb.project_M(hk.kl_basis(w), ctx) == pb.canonical_M(w, ctx)
          and pb.iota(pb.canonical_N(w, ctx)) == hk.kl_basis(w * w0J)
          for w in ctx.minimal_coset_reps()))

# %%
# Flipping a label reverses its sign string and pairs M against N.
reps = ctx.minimal_coset_reps()
for w in reps:
    row = [pb.pairing_MN(pb.flip_M(pb.canonical_M(pb.flip_label(w, ctx), ctx)),
                         pb.canonical_N(x, ctx)) for x in reps]
    print(ctx.seq_tilde(w), [str(c) for c in row])
