"""Detecting forbidden structures and deciding class membership.

Walks through the named witness graphs: the three-path configurations
(theta, pyramid, prism), the wheel taxonomy, and the recognition verdicts
with their re-verifiable obstruction witnesses.
"""

from starsep import (class_membership, classify_wheels, detect_prism,
                     detect_pyramid, detect_theta, hub_set, make,
                     verify_obstruction)
from starsep.graph_core import bit_list

print("=== three-path configurations ===")
theta = make("THETA(2,3,3)")
wit = detect_theta(theta)
print(f"THETA(2,3,3): branch vertices {wit.a}, {wit.b}; paths {wit.paths}")

pyramid = make("PYRAMID(2,2,2)")
pw = detect_pyramid(pyramid)
print(f"PYRAMID(2,2,2): apex {pw.apex}, base {pw.base}")

prism = make("PRISM(1,1,1)")
rw = detect_prism(prism)
print(f"PRISM(1,1,1): triangles {rw.tri_a} and {rw.tri_b}")

# a prism contains no pyramid and a theta contains no triangle
print("pyramid inside the prism?", detect_pyramid(prism) is not None)
print("prism inside the theta?", detect_prism(theta) is not None)

print()
print("=== wheels ===")
w93 = make("W93")  # nine-cycle 0..8 with hub 9 on spokes 0, 3, 6
for w in classify_wheels(w93):
    print(f"hole {w.hole} center {w.center}: kinds {w.kinds()}, "
          f"long sectors {w.long_sectors()}")
print("hub set of W93:", bit_list(hub_set(w93, w93.verts)))

even = make("WHEEL(8,{1,3,5,7})")  # four spokes: an even wheel
kinds = {k for w in classify_wheels(even) for k in w.kinds()}
print("WHEEL(8,{1,3,5,7}) kinds:", sorted(kinds))

print()
print("=== recognition ===")
for name in ("C6", "W93", "WHEEL(5,{1,2,3,4,5})", "PYRAMID(2,2,2)", "K4"):
    g = make(name)
    rep = class_membership(g, t=4)
    if rep.member:
        print(f"{name}: member")
    else:
        ok = verify_obstruction(g, rep.kind, rep.embedding)
        print(f"{name}: contains {rep.kind} on {list(rep.embedding)} "
              f"(re-verified: {ok})")

# the star variant keeps pyramids
rep = class_membership(make("PYRAMID(2,2,2)"), t=4, variant="C_t_star")
print("PYRAMID(2,2,2) under the pyramid-permitting variant:", rep.member)
