"""Walk through the separation relations and the purity of small domains.

Run:  python demos/purity_of_domains.py
"""

from zonotile import (
    Permutation,
    base_relation,
    chamber_domain,
    enumerate_maximal,
    format_subset,
    hypercube_domain,
    hypersimplex_domain,
    inversions,
    mask_of,
    strongly_separated,
    weakly_separated,
)

# The four base relations on a pair of subsets of {1..4}.
a, b = mask_of([1, 4]), mask_of([2, 3])
print(f"A = {format_subset(a)},  B = {format_subset(b)}")
for kind in ("termwise", "global", "cancel", "split"):
    print(f"  {kind:9s}: {base_relation(kind, a, b, 4)}")
print(f"  strongly separated: {strongly_separated(a, b)}")
print(f"  weakly separated:   {weakly_separated(a, b)}   (the split goes the other way)")
print()

# Purity of the hypercube: every maximal weakly separated collection in
# 2^{1..n} has the same size n(n+1)/2 + 1.
for n in (3, 4, 5):
    report = enumerate_maximal(hypercube_domain(n), "weak")
    print(
        f"2^[{n}]: {len(report.maximal_collections):4d} maximal w-collections, "
        f"all of size {report.ranks[0]} (pure: {report.pure})"
    )
print()

# Chamber domains: the rank grows with the number of inversions.
for images in ((1, 2, 3, 4), (2, 1, 4, 3), (4, 3, 2, 1)):
    w = Permutation(images)
    report = enumerate_maximal(chamber_domain(w), "weak")
    print(
        f"chamber domain of {images}: |Inv| = {len(inversions(w))}, "
        f"rank = {report.ranks[0]} = |Inv| + n + 1"
    )
print()

# The discrete Grassmannian (all m-element subsets) is pure of rank m(n-m)+1.
for n, m in ((4, 2), (5, 2), (6, 3)):
    report = enumerate_maximal(hypersimplex_domain(n, m, m), "weak")
    print(f"subsets of size {m} in [{n}]: rank {report.ranks[0]} = {m}*({n}-{m})+1")
