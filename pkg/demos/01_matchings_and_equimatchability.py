"""
Maximal versus maximum matchings
================================

A matching is maximal when no edge can be added to it, and maximum when no
matching is larger. A graph is equimatchable when the two notions coincide:
every maximal matching already has the largest possible size.
"""

from equimatch import Matching, is_equimatchable, is_maximal, maximum_matching
from equimatch.families import complete, complete_bipartite, cycle, f_graph, path, petersen

# The path 0-1-2-3 is the smallest interesting case. The middle edge alone
# blocks both end edges, so it is maximal, yet two edges fit.
p4 = path(4)
middle = Matching([(1, 2)])
print("P4 middle edge maximal:", is_maximal(p4, middle))
print("P4 maximum matching:   ", maximum_matching(p4).edges)

# is_equimatchable returns the verdict together with a witness: a maximal
# matching smaller than the matching number when one exists.
verdict = is_equimatchable(p4)
print("P4 equimatchable:", verdict.equimatchable, "witness:", verdict.witness.edges)

# A few named graphs. Complete and balanced complete bipartite graphs are
# always equimatchable; the Petersen graph and even cycles past C4 are not.
for name, g in [
    ("K4", complete(4)),
    ("K3,3", complete_bipartite(3, 3)),
    ("C5", cycle(5)),
    ("C6", cycle(6)),
    ("Petersen", petersen()),
    ("F6", f_graph(6)),
]:
    v = is_equimatchable(g)
    print(f"{name:9s} n={g.n:2d} nu={v.nu}  equimatchable={v.equimatchable}")
