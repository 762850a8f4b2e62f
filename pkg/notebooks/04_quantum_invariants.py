"""
U_q(sl_2) invariants
====================
"""

# %%
from canontl import quantum as qu
from canontl import spin as sp
from canontl import tldiagram as tl

# The cup vector is killed by E and F and fixed by K.
cup = qu.embed_TL(tl.identity(1))
print(cup, qu.is_invariant(cup))

# %%
# The cap and cup maps commute with the quantum group.
print(all(qu.check_module_hom(op, i, n)
          for op in ("epsilon", "delta") for n in range(2, 5) for i in range(1, n)))

# %%
# Each TL_n diagram gives an invariant vector in (C^2)^(2n), and together
# they span the whole invariant space.
for n in range(1, 4):
    images = [qu.embed_TL(d) for d in tl.enumerate_diagrams(n)]
    print(n, qu.generic_rank(images), qu.invariant_dimension(2 * n, 2))

# %%
# A few weights: EF - FE acts on a basis string by a quantum integer.
v = sp.basis_tensor("++-")
print(qu.apply("E", qu.apply("F", v)) - qu.apply("F", qu.apply("E", v)))
print(qu.quantum_integer(1))
