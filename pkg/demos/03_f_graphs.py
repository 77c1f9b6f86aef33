"""
The graphs F_r
==============

Start from K_{r,r}, delete a matching of size r/2, and add one apex joined to
the r endpoints of the deleted edges. The result is r-regular on 2r + 1
vertices, has independence number r, and is equimatchable.
"""

import random

from equimatch import classify_regular, independence_number, is_equimatchable, is_factor_critical
from equimatch.families import f_graph
from equimatch.graph import profile
from equimatch.random_graphs import random_edge_swap, random_relabel

for r in (4, 6, 8):
    g = f_graph(r)
    prof = profile(g)
    a, _ = independence_number(g)
    print(
        f"F{r}: n={g.n} regular={prof.regularity} alpha={a} "
        f"factor-critical={is_factor_critical(g)} equimatchable={is_equimatchable(g).equimatchable}"
    )

# Recognition works through canonical forms, so vertex names do not matter.
rng = random.Random(1)
g = f_graph(6)
shuffled, perm = random_relabel(g, rng)
print("relabelled F6 recognised as", classify_regular(shuffled))

# A degree-preserving edge swap keeps the graph 6-regular but breaks
# equimatchability.
for _ in range(5):
    h = random_edge_swap(g, rng)
    print("after one swap:", classify_regular(h))
