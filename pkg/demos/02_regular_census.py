"""
Which regular graphs are equimatchable?
=======================================

Generate every connected r-regular graph up to isomorphism and keep the
equimatchable ones. For cubic graphs only K4 and K3,3 survive; for quartic
graphs up to nine vertices there are exactly five.
"""

from equimatch.census import classify_census, generate_connected_regular, verify_characterization

# Class counts for cubic graphs: 1, 2, 5, 19, 85 on 4..12 vertices.
for n in range(4, 13, 2):
    print(f"cubic, n={n:2d}: {generate_connected_regular(n, 3, None)} classes")

# Each census record carries the graph6 text and its classification.
for rec in classify_census(6, 3):
    print(rec.g6, rec.family, "equimatchable" if rec.equimatchable else "")

# verify_characterization scans every order up to n_max and compares the
# equimatchable survivors with the known list.
for r, n_max in [(3, 12), (4, 9)]:
    rep = verify_characterization(r, n_max)
    names = [rec.family for rec in rep.found]
    print(f"r={r}, n<={n_max}: match={rep.match}  found={names}")
