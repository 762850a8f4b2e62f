"""
Temperley-Lieb diagrams
=======================

Diagrams, composition with loop removal, and the induced basis.
"""

# %%
# A diagram is a noncrossing matching of m bottom points and n top points.
# The generator e_2 of TL_4 caps points 2 and 3 on both lines.
from canontl import render
from canontl import tldiagram as tl

e2 = tl.generator_e(2, 4)
print(render.ascii(e2))

# %%
# Composing e_i with itself closes one loop, which becomes a factor of
# beta = -q - q^-1 in the algebra.
d, loops = tl.compose(e2, e2)
print(d == e2, loops)

E = tl.TLElement.from_diagram
print(E(e2) * E(e2))

# %%
# Counting: TL_n has Catalan(n) diagrams.
print([len(tl.enumerate_diagrams(n)) for n in range(9)])

# %%
# The induced basis for (n, k) has binomial(n, k) elements, one for each
# sign string with k minus signs.
from canontl import spin as sp

for lbl in sp.all_labels(4, 2):
    print(lbl)
    print(render.ascii(sp.label_to_diagram(lbl)))
    print()
