"""The bijection between combies on the n-zonogon and pairs
(combi on the (n-1)-zonogon, legal path).

Run:  python demos/contraction_expansion.py
"""

from zonotile import (
    enumerate_legal_paths,
    enumerate_maximal,
    extract_n_strip,
    format_subset,
    from_w_collection,
    hypercube_domain,
    n_contract,
    n_expand,
)

# Pick a combi with a lens so the contraction has something interesting to do.
lensy = next(
    from_w_collection(f)
    for f in enumerate_maximal(hypercube_domain(5), "weak").maximal_collections
    if any(l.upper_types[-1] == 5 for l in from_w_collection(f).lenses)
)

strip = extract_n_strip(lensy)
print(f"the 5-strip crosses {len(strip.tiles)} tiles:")
print("  left boundary: ", " -> ".join(format_subset(v) for v in strip.left_path))
print("  right boundary:", " -> ".join(format_subset(v) for v in strip.right_path))

smaller, path = n_contract(lensy)
print("\ncontracting the strip leaves a combi on the 4-zonogon.")
print("the strip's left boundary deforms into the legal path")
print("  ", " -> ".join(format_subset(v) for v in path))
print("whose backward step remembers the dissolved lens.")

assert n_expand(smaller, path) == lensy
print("expanding along that path rebuilds the original combi exactly.")

# Counting pairs proves the bijection at desk scale: the number of
# (combi, legal path) pairs at n-1 equals the number of combies at n.
total = 0
for fam in enumerate_maximal(hypercube_domain(4), "weak").maximal_collections:
    combi = from_w_collection(fam)
    total += len(enumerate_legal_paths(combi))
count5 = len(enumerate_maximal(hypercube_domain(5), "weak").maximal_collections)
print(f"\npairs at n=4: {total};  combies at n=5: {count5};  equal: {total == count5}")
