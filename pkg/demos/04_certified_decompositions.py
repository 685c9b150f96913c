"""End-to-end certification: separators, decompositions, and the ledger.

Runs the full pipeline on fixtures and on seeded random members, prints
the per-instance certificates, and re-validates every decomposition
independently.
"""

from starsep import (WeightFn, certify, exact_treewidth, main_separator,
                     make, sample_class, validate_td, verify_certificate)
from starsep.graph_core import bit_list

print("=== pipeline separators with verified ledgers ===")
for name in ("P9", "C6", "W93"):
    g = make(name)
    w = WeightFn.uniform(g)
    cert = main_separator(g, w, t=4)
    print(f"{name}: separator {bit_list(cert.separator)} "
          f"(branch: {cert.provenance['branch']}, "
          f"re-verified: {verify_certificate(g, w, cert)})")

print()
print("=== certified tree decompositions ===")
for name in ("P9", "C6", "W93"):
    g = make(name)
    res = certify(g, t=4)
    r = res.report
    print(f"{name}: width {r['width']} (exact {r['exact_treewidth']}), "
          f"{r['atoms']} atoms, max separator {r['max_separator_size']}, "
          f"width within twice the separator bound: "
          f"{r['width_le_2x_max_separator']}")
    assert validate_td(g, res.td).passed

print()
print("=== seeded random members ===")
for seed in range(5):
    g = sample_class(13, t=4, seed=seed).graph
    res = certify(g, t=4)
    r = res.report
    print(f"seed {seed}: n={r['n']} width={r['width']} "
          f"exact={r['exact_treewidth']} "
          f"separators={sorted(c.size for c in res.certificates)} "
          f"bound={r['measured_bound']}")

print()
print("=== the measured bounds are honest but loose ===")
g = make("W93")
res = certify(g, t=4)
print(f"W93 achieved width {res.report['width']}, measured instance bound "
      f"{res.report['measured_bound']}, composed-shape bound "
      f"{res.report['composed_shape_bound']}")
print("exact treewidth for reference:", exact_treewidth(g))
