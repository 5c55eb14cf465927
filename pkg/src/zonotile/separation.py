"""Separation relations on subsets of {1..n} and brute-force purity reports.

Subsets are bitmasks (see :mod:`zonotile.bitsets`).  The four base relations
on distinct sets A, B:

  termwise  A precedes B elementwise (|A| <= |B|, sorted terms dominate),
  global    max(A) < min(B), with min/max of the empty set taken as 0,
  cancel    (A - B) globally below (B - A),
  split     A - B nonempty and B - A covered by a low part below min(A - B)
            and a high part above max(A - B), both nonempty.

Strong separation is `cancel` in one of the two directions (or equality);
weak separation additionally admits the split relation from the larger set.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations

from .bitsets import (
    check_ground,
    check_subset,
    elements_of,
    full_mask,
    max_element,
    min_element,
    size,
)

RELATION_KINDS = ("termwise", "global", "cancel", "split")


class ResourceGuardError(RuntimeError):
    """Raised when an enumeration would exceed the configured desk-scale bounds."""


def _max_enum_n() -> int:
    raw = os.environ.get("ZONOTILE_MAX_N")
    if raw is None:
        return 8
    try:
        return max(1, min(16, int(raw)))
    except ValueError:
        return 8


def termwise_below(a: int, b: int) -> bool:
    ea, eb = elements_of(a), elements_of(b)
    return len(ea) <= len(eb) and all(x <= y for x, y in zip(ea, eb))


def globally_below(a: int, b: int) -> bool:
    return max_element(a) < min_element(b)


def cancel_below(a: int, b: int) -> bool:
    return globally_below(a & ~b, b & ~a)


def splits_around(a: int, b: int) -> bool:
    """A splits B: B - A falls apart around A - B (both flanks nonempty)."""
    diff = a & ~b
    if diff == 0:
        return False
    rest = b & ~a
    low = rest & ((1 << (min_element(diff) - 1)) - 1)
    high = rest & ~((1 << max_element(diff)) - 1)
    return low != 0 and high != 0 and (low | high) == rest


def base_relation(kind: str, a: int, b: int, n: int) -> bool:
    check_ground(n)
    check_subset(a, n)
    check_subset(b, n)
    if kind not in RELATION_KINDS:
        raise ValueError(f"unknown relation kind {kind!r}")
    if kind != "global" and a == b:
        raise ValueError(f"relation {kind!r} is defined for distinct sets only")
    if kind == "termwise":
        return termwise_below(a, b)
    if kind == "global":
        return globally_below(a, b)
    if kind == "cancel":
        return cancel_below(a, b)
    return splits_around(a, b)


def strongly_separated(a: int, b: int) -> bool:
    return a == b or cancel_below(a, b) or cancel_below(b, a)


def weakly_separated(a: int, b: int) -> bool:
    if strongly_separated(a, b):
        return True
    if size(a) >= size(b) and splits_around(a, b):
        return True
    return size(b) >= size(a) and splits_around(b, a)


_RELATION_FUNC = {"weak": weakly_separated, "strong": strongly_separated}


def separated(a: int, b: int, relation: str) -> bool:
    try:
        return _RELATION_FUNC[relation](a, b)
    except KeyError:
        raise ValueError(f"relation must be 'weak' or 'strong', got {relation!r}") from None


@dataclass(frozen=True)
class SetFamily:
    """A duplicate-free collection of subsets of {1..n}, stored sorted."""

    n: int
    members: tuple[int, ...]

    def __init__(self, n: int, members) -> None:
        check_ground(n)
        mem = tuple(sorted(members))
        for m in mem:
            check_subset(m, n)
        if len(set(mem)) != len(mem):
            raise ValueError("SetFamily members must be duplicate-free")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "members", mem)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, mask: int) -> bool:
        return mask in set(self.members)

    def as_set(self) -> frozenset[int]:
        return frozenset(self.members)


def is_separated_family(family: SetFamily, relation: str) -> bool:
    rel = _RELATION_FUNC[relation]
    mem = family.members
    return all(rel(a, b) for a, b in combinations(mem, 2))


def is_maximal_separated(family: SetFamily, relation: str, within: SetFamily | None = None) -> bool:
    """Separated and not extendable by any set of the ambient domain."""
    if not is_separated_family(family, relation):
        return False
    rel = _RELATION_FUNC[relation]
    mem = family.as_set()
    ambient = within.members if within is not None else range(1 << family.n)
    for cand in ambient:
        if cand in mem:
            continue
        if all(rel(cand, m) for m in mem):
            return False
    return True


@dataclass(frozen=True)
class DomainReport:
    domain: SetFamily
    relation: str
    maximal_collections: tuple[SetFamily, ...]
    pure: bool
    ranks: tuple[int, ...]

    @property
    def rank(self) -> int:
        if not self.pure:
            raise ValueError("domain is not pure; inspect .ranks")
        return self.ranks[0]


def _bron_kerbosch_pivot(adj: list[int], r: int, p: int, x: int, out: list[int]) -> None:
    if p == 0 and x == 0:
        out.append(r)
        return
    pool = p | x
    pivot, best = -1, -1
    m = pool
    while m:
        low = m & -m
        v = low.bit_length() - 1
        deg = (p & adj[v]).bit_count()
        if deg > best:
            pivot, best = v, deg
        m ^= low
    cand = p & ~adj[pivot]
    while cand:
        low = cand & -cand
        v = low.bit_length() - 1
        _bron_kerbosch_pivot(adj, r | low, p & adj[v], x & adj[v], out)
        p &= ~low
        x |= low
        cand ^= low


def maximal_cliques(adjacency: list[int], count: int) -> list[int]:
    """All maximal cliques of a graph given as per-vertex neighbour bitmasks."""
    out: list[int] = []
    _bron_kerbosch_pivot(adjacency, 0, (1 << count) - 1, 0, out)
    return out


def enumerate_maximal(domain: SetFamily, relation: str) -> DomainReport:
    """Every inclusion-wise maximal separated collection inside the domain.

    Computed as the maximal cliques of the pairwise-compatibility graph over
    the domain members, which is exhaustive by construction.
    """
    guard = 1 << min(_max_enum_n(), 16)
    if len(domain) > guard:
        raise ResourceGuardError(
            f"domain has {len(domain)} members, enumeration guard is {guard}"
        )
    rel = _RELATION_FUNC[relation]
    mem = domain.members
    k = len(mem)
    adj = [0] * k
    for i in range(k):
        for j in range(i + 1, k):
            if rel(mem[i], mem[j]):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    collections = []
    for clique in maximal_cliques(adj, k):
        masks = [mem[v] for v in range(k) if clique >> v & 1]
        collections.append(SetFamily(domain.n, masks))
    collections.sort(key=lambda f: f.members)
    ranks = tuple(sorted({len(c) for c in collections}))
    return DomainReport(
        domain=domain,
        relation=relation,
        maximal_collections=tuple(collections),
        pure=len(ranks) == 1,
        ranks=ranks,
    )


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __init__(self, images) -> None:
        imgs = tuple(images)
        n = len(imgs)
        check_ground(n)
        if sorted(imgs) != list(range(1, n + 1)):
            raise ValueError(f"{imgs!r} is not a permutation of 1..{n}")
        object.__setattr__(self, "images", imgs)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(range(1, n + 1))

    @staticmethod
    def longest(n: int) -> "Permutation":
        return Permutation(range(n, 0, -1))


def inversions(perm: Permutation) -> frozenset[tuple[int, int]]:
    n = perm.n
    return frozenset(
        (i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if perm(i) > perm(j)
    )


def chamber_domain(perm: Permutation) -> SetFamily:
    """Sets X with: i < j, perm(i) < perm(j), j in X imply i in X."""
    n = perm.n
    pairs = [
        (i, j)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
        if perm(i) < perm(j)
    ]
    members = [
        x
        for x in range(1 << n)
        if all(not (x >> (j - 1) & 1) or (x >> (i - 1) & 1) for i, j in pairs)
    ]
    return SetFamily(n, members)


def chamber_pair_domain(lower: Permutation, upper: Permutation) -> SetFamily:
    """Chamber sets of `upper` that also respect the inversions of `lower`.

    Requires Inv(lower) to be contained in Inv(upper).
    """
    if lower.n != upper.n:
        raise ValueError("permutations must act on the same ground set")
    if not inversions(lower) <= inversions(upper):
        raise ValueError("Inv(lower) must be a subset of Inv(upper)")
    n = upper.n
    inv_pairs = [(i, j) for (i, j) in inversions(lower)]
    members = [
        x
        for x in chamber_domain(upper).members
        if all(not (x >> (i - 1) & 1) or (x >> (j - 1) & 1) for i, j in inv_pairs)
    ]
    return SetFamily(n, members)


def hypersimplex_domain(n: int, m_low: int, m_high: int) -> SetFamily:
    check_ground(n)
    if not 0 <= m_low <= m_high <= n:
        raise ValueError(f"need 0 <= m' <= m <= n, got {m_low}, {m_high}, {n}")
    members = [x for x in range(1 << n) if m_low <= x.bit_count() <= m_high]
    return SetFamily(n, members)


def hypercube_domain(n: int) -> SetFamily:
    check_ground(n)
    return SetFamily(n, range(1 << n))


def interval_collection(n: int) -> SetFamily:
    """All intervals [p..q] of {1..n} plus the empty set."""
    members = {0}
    for p in range(1, n + 1):
        for q in range(p, n + 1):
            members.add(((1 << q) - 1) ^ ((1 << (p - 1)) - 1))
    return SetFamily(n, members)


def cointerval_collection(n: int) -> SetFamily:
    full = full_mask(n)
    return SetFamily(n, {full ^ m for m in interval_collection(n).members})
