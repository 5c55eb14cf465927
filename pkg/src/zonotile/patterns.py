"""Cyclic and graph patterns, their regions, domains, and purity machinery.

A cyclic pattern is a closed sequence of pairwise weakly separated subsets
whose steps either add/remove one element (1-distance, a vertical segment)
or trade one element for another at equal size (2-distance).  Drawn on the
zonogon it bounds an inside and an outside region; the sets weakly
separated from the pattern split accordingly into two domains which form a
complementary pair, hence are both pure.  The proof-carrying operations
here are the quasi-combi splitting of a combi along the pattern curve and
the merge-repair that recombines inside and outside halves from different
combies into a new valid combi.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import bitsets as bs
from ._planar import TilingError
from .combi import Combi, Delta, Lens, Nabla, validate_combi
from .geometry import (
    Generators,
    Point,
    angle_sort_key,
    boundary_vertices,
    collinear_overlap,
    default_generators,
    embed,
    on_segment,
    point_in_closed_polyline,
    polygon_area2,
    segments_properly_cross,
    sub,
    winding_number,
)
from .separation import (
    ResourceGuardError,
    SetFamily,
    _max_enum_n,
    enumerate_maximal,
    separated,
    weakly_separated,
)

PATTERN_CLASSES = ("simple", "semi_simple", "generalized_ok", "self_crossing")


@dataclass(frozen=True)
class CyclicPattern:
    """Cyclic sequence of subsets with 1- or 2-distance steps."""

    n: int
    cycle: tuple[int, ...]

    def __init__(self, n: int, cycle) -> None:
        bs.check_ground(n)
        cyc = tuple(cycle)
        if len(cyc) >= 2 and cyc[0] == cyc[-1]:
            cyc = cyc[:-1]
        if len(cyc) < 3:
            raise ValueError("a cyclic pattern needs at least three sets")
        for m in cyc:
            bs.check_subset(m, n)
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            d = bs.size(a ^ b)
            if not (d == 1 or (d == 2 and bs.size(a) == bs.size(b))):
                raise ValueError(
                    f"illegal step {bs.format_subset(a)} -> {bs.format_subset(b)}: "
                    "steps must be 1-distance or equal-size 2-distance"
                )
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "cycle", cyc)

    def steps(self) -> list[tuple[int, int]]:
        c = self.cycle
        return list(zip(c, c[1:] + c[:1]))

    def two_distance_steps(self) -> list[tuple[int, int]]:
        return [(a, b) for a, b in self.steps() if bs.size(a ^ b) == 2]

    def canonical(self) -> tuple[int, ...]:
        c = self.cycle
        best = None
        for seq in (c, tuple(reversed(c))):
            for r in range(len(seq)):
                cand = seq[r:] + seq[:r]
                if best is None or cand < best:
                    best = cand
        return best


def boundary_pattern(n: int) -> CyclicPattern:
    left, right = boundary_vertices(default_generators(n))
    return CyclicPattern(n, tuple(right[:-1]) + tuple(reversed(left))[:-1])


def _pairwise_weakly_separated(members) -> bool:
    return all(weakly_separated(a, b) for a, b in combinations(set(members), 2))


def _violates_c3(p: tuple[int, int], q: tuple[int, int]) -> bool:
    """Interleaved 2-distance pairs around a common intersection or union."""
    (a1, b1), (a2, b2) = p, q
    if a1 & b1 == a2 & b2:
        x = a1 & b1
        t = sorted((bs.min_element(a1 & ~x), bs.min_element(b1 & ~x)))
        s = sorted((bs.min_element(a2 & ~x), bs.min_element(b2 & ~x)))
        if len({*t, *s}) == 4 and (t[0] < s[0] < t[1] < s[1] or s[0] < t[0] < s[1] < t[1]):
            return True
    if a1 | b1 == a2 | b2:
        y = a1 | b1
        t = sorted((bs.min_element(y & ~a1), bs.min_element(y & ~b1)))
        s = sorted((bs.min_element(y & ~a2), bs.min_element(y & ~b2)))
        if len({*t, *s}) == 4 and (t[0] < s[0] < t[1] < s[1] or s[0] < t[0] < s[1] < t[1]):
            return True
    return False


def _violates_c4(two: tuple[int, int], one: tuple[int, int]) -> bool:
    """A 1-distance step climbing through the span of a 2-distance step."""
    a, b = two
    c, d = one if bs.size(one[0]) < bs.size(one[1]) else (one[1], one[0])
    x = a & b
    if c == x:
        i, k = sorted((bs.min_element(a & ~x), bs.min_element(b & ~x)))
        j = bs.min_element(d & ~c)
        if i < j < k:
            return True
    y = a | b
    if d == y:
        i, k = sorted((bs.min_element(y & ~a), bs.min_element(y & ~b)))
        j = bs.min_element(y & ~c)
        if i < j < k:
            return True
    return False


def curve_points(pattern: CyclicPattern, gens: Generators | None = None) -> list[Point]:
    if gens is None:
        gens = default_generators(pattern.n)
    return [embed(v, gens) for v in pattern.cycle]


def _segment_contact(a: Point, b: Point, c: Point, d: Point) -> str:
    """'none', 'cross' (interior contact or overlap), or 'endpoint'."""
    if segments_properly_cross(a, b, c, d):
        return "cross"
    if collinear_overlap(a, b, c, d):
        return "cross"
    touching = [
        p
        for p in set((a, b, c, d))
        if (p in (a, b) and on_segment(p, c, d)) or (p in (c, d) and on_segment(p, a, b))
    ]
    if not touching:
        return "none"
    if all(p in (a, b) and p in (c, d) for p in touching):
        return "endpoint"
    return "cross"


def _chords_laminar(pairs: list[tuple[int, int]], m: int) -> bool:
    """Pairs over cyclic positions 0..m-1 must not interleave."""
    for (a, b), (c, d) in combinations(pairs, 2):
        inside = lambda x, lo, hi: (lo < x < hi) if lo < hi else (x > lo or x < hi)
        if inside(c, a, b) != inside(d, a, b):
            return False
    return True


def curve_kind(pattern: CyclicPattern, gens: Generators | None = None) -> str:
    """Geometric verdict on the closed curve: 'simple', 'touching', 'crossing'."""
    pts = curve_points(pattern, gens)
    r = len(pts)
    for i in range(r):
        a, b = pts[i], pts[(i + 1) % r]
        for j in range(i + 1, r):
            c, d = pts[j], pts[(j + 1) % r]
            adjacent = j == i + 1 or (i == 0 and j == r - 1)
            if adjacent:
                # sharing an endpoint is fine; folding back onto itself is not
                if collinear_overlap(a, b, c, d):
                    return "crossing"
                continue
            if _segment_contact(a, b, c, d) == "cross":
                return "crossing"
    multiplicity: dict[Point, list[int]] = {}
    for idx, p in enumerate(pts):
        multiplicity.setdefault(p, []).append(idx)
    repeated = {p: occ for p, occ in multiplicity.items() if len(occ) > 1}
    if not repeated:
        return "simple"
    for p, occurrences in repeated.items():
        dirs: list[tuple[Point, int]] = []
        for occ_idx, idx in enumerate(occurrences):
            before = pts[(idx - 1) % r]
            after = pts[(idx + 1) % r]
            dirs.append((sub(before, p), occ_idx))
            dirs.append((sub(after, p), occ_idx))
        keyed = sorted(dirs, key=lambda t: angle_sort_key(t[0]))
        for (v1, _), (v2, _) in zip(keyed, keyed[1:]):
            if angle_sort_key(v1) == angle_sort_key(v2):
                return "crossing"
        order = [occ for _, occ in keyed]
        pairs = []
        for occ_idx in range(len(occurrences)):
            pos = [k for k, o in enumerate(order) if o == occ_idx]
            pairs.append((pos[0], pos[1]))
        if not _chords_laminar(pairs, len(order)):
            return "crossing"
    return "touching"


def classify_pattern(pattern: CyclicPattern, gens: Generators | None = None) -> str:
    """Combinatorial pattern class, cross-validated against the exact curve.

    Requires pairwise weak separation of the members; with distinct members
    the quadruple conditions decide self-crossing and must agree with the
    geometric test, otherwise the touch-only test decides semi-simplicity.
    """
    cyc = pattern.cycle
    if not _pairwise_weakly_separated(cyc):
        raise ValueError("pattern members must be pairwise weakly separated")
    geo = curve_kind(pattern, gens)
    distinct = len(set(cyc)) == len(cyc)
    if not distinct:
        return "semi_simple" if geo == "touching" else "self_crossing"
    twos = pattern.two_distance_steps()
    combinatorial_ok = True
    for p, q in combinations(twos, 2):
        if _violates_c3(p, q):
            combinatorial_ok = False
    ones = [(a, b) for a, b in pattern.steps() if bs.size(a ^ b) == 1]
    for two in twos:
        for one in ones:
            if _violates_c4(two, one):
                combinatorial_ok = False
    if combinatorial_ok != (geo != "crossing"):
        raise TilingError(
            "pattern",
            "quadruple conditions disagree with the exact curve test; "
            f"combinatorial={combinatorial_ok}, curve={geo}",
        )
    if not combinatorial_ok:
        return "self_crossing"
    return "simple" if not twos else "generalized_ok"


@dataclass(frozen=True)
class PatternRegions:
    pattern: CyclicPattern
    gens: Generators
    points: tuple[Point, ...]

    def locate(self, mask: int) -> str:
        return point_in_closed_polyline(embed(mask, self.gens), list(self.points))

    def locate_point(self, point: Point, scale: int = 1) -> str:
        pts = [(x * scale, y * scale) for x, y in self.points]
        return point_in_closed_polyline(point, pts)


def regions(pattern: CyclicPattern, gens: Generators | None = None) -> PatternRegions:
    kind = classify_pattern(pattern, gens)
    if kind == "self_crossing":
        raise ValueError("a self-crossing pattern does not bound regions")
    if gens is None:
        gens = default_generators(pattern.n)
    return PatternRegions(pattern, gens, tuple(curve_points(pattern, gens)))


def pattern_compatible_sets(pattern: CyclicPattern) -> SetFamily:
    """All subsets weakly separated from every member of the pattern."""
    n = pattern.n
    if n > _max_enum_n():
        raise ResourceGuardError(f"domain scan guard: n={n}")
    mem = set(pattern.cycle)
    hits = [x for x in range(1 << n) if all(weakly_separated(x, s) for s in mem)]
    return SetFamily(n, hits)


def domains(pattern: CyclicPattern) -> tuple[SetFamily, SetFamily]:
    """Split the compatible sets into the closed inside and outside domains."""
    reg = regions(pattern)
    compatible = pattern_compatible_sets(pattern)
    inner, outer = [], []
    for x in compatible.members:
        where = reg.locate(x)
        if where in ("inside", "on"):
            inner.append(x)
        if where in ("outside", "on"):
            outer.append(x)
    return SetFamily(pattern.n, inner), SetFamily(pattern.n, outer)


def strong_domains(pattern: CyclicPattern) -> tuple[SetFamily, SetFamily]:
    """Inside/outside domains under strong separation."""
    reg = regions(pattern)
    n = pattern.n
    mem = set(pattern.cycle)
    compatible = [x for x in range(1 << n) if all(separated(x, s, "strong") for s in mem)]
    inner, outer = [], []
    for x in compatible:
        where = reg.locate(x)
        if where in ("inside", "on"):
            inner.append(x)
        if where in ("outside", "on"):
            outer.append(x)
    return SetFamily(n, inner), SetFamily(n, outer)


def verify_complementary(dom: SetFamily, dom2: SetFamily, relation: str = "weak") -> bool:
    return all(separated(a, b, relation) for a in dom.members for b in dom2.members)


def verify_purity(dom: SetFamily, relation: str = "weak"):
    return enumerate_maximal(dom, relation)


# --------------------------------------------------------------------------
# quasi-combies: splitting a combi along a pattern curve and merging halves


@dataclass(frozen=True, order=True)
class UpperSemiLens:
    """Piece with all vertices on one upper arc, chord below, path above."""

    chord: tuple[int, int]
    upper: tuple[int, ...]

    def cycle(self) -> list[int]:
        return [self.upper[0]] + list(reversed(self.upper))[:-1]

    def edges(self) -> list[tuple[int, int]]:
        return list(zip(self.upper, self.upper[1:]))


@dataclass(frozen=True, order=True)
class LowerSemiLens:
    """Piece with all vertices on one lower arc, chord above, path below."""

    chord: tuple[int, int]
    lower: tuple[int, ...]

    def cycle(self) -> list[int]:
        return list(self.lower)

    def edges(self) -> list[tuple[int, int]]:
        return list(zip(self.lower, self.lower[1:]))


@dataclass(frozen=True)
class QuasiCombi:
    n: int
    region: str
    pattern: tuple[int, ...]
    deltas: frozenset[Delta]
    nablas: frozenset[Nabla]
    lenses: frozenset[Lens]
    upper_semis: frozenset[UpperSemiLens]
    lower_semis: frozenset[LowerSemiLens]

    def vertex_masks(self) -> frozenset[int]:
        verts: set[int] = set()
        for d in self.deltas:
            verts.update(d.cycle())
        for v in self.nablas:
            verts.update(v.cycle())
        for l in self.lenses:
            verts.update(l.upper)
            verts.update(l.lower)
        for u in self.upper_semis:
            verts.update(u.upper)
        for w in self.lower_semis:
            verts.update(w.lower)
        return frozenset(verts)

    def semi_count(self) -> int:
        return len(self.upper_semis) + len(self.lower_semis)


def _chord_spans(positions: list[tuple[int, int]]) -> dict[tuple[int, int], list[tuple[int, int]]]:
    """Nesting forest of index spans; maps each span to its direct children."""
    spans = sorted(set(positions), key=lambda s: (s[0], -s[1]))
    children: dict[tuple[int, int], list[tuple[int, int]]] = {s: [] for s in spans}
    root: list[tuple[int, int]] = []
    stack: list[tuple[int, int]] = []
    for s in spans:
        while stack and not (stack[-1][0] <= s[0] and s[1] <= stack[-1][1]):
            stack.pop()
        if stack:
            children[stack[-1]].append(s)
        else:
            root.append(s)
        stack.append(s)
    children[(-1, -1)] = root
    return children


def _shortcut_path(path: tuple[int, ...], span: tuple[int, int], kids: list[tuple[int, int]]) -> tuple[int, ...]:
    """Vertices of `path` across `span`, skipping over the listed sub-spans."""
    lo, hi = span
    out = [path[lo]]
    k = lo
    kid_at = {s[0]: s for s in kids}
    while k < hi:
        if k in kid_at and kid_at[k][1] <= hi:
            k = kid_at[k][1]
        else:
            k += 1
        out.append(path[k])
    return tuple(out)


def _fan_targets(combi: Combi, bottom: int) -> tuple[int, ...]:
    """Left-to-right base path of the nabla fan at a vertex."""
    fan = [v for v in combi.nablas if v.bottom == bottom]
    by_left = {v.left: v for v in fan}
    rights = {v.right for v in fan}
    starts = [v.left for v in fan if v.left not in rights]
    if len(starts) != 1:
        raise TilingError("sector", "upper fan does not form a single chain")
    path = [starts[0]]
    while path[-1] in by_left:
        path.append(by_left[path[-1]].right)
    return tuple(path)


def _fan_sources(combi: Combi, apex: int) -> tuple[int, ...]:
    fan = [d for d in combi.deltas if d.apex == apex]
    by_left = {d.left: d for d in fan}
    rights = {d.right for d in fan}
    starts = [d.left for d in fan if d.left not in rights]
    if len(starts) != 1:
        raise TilingError("sector", "lower fan does not form a single chain")
    path = [starts[0]]
    while path[-1] in by_left:
        path.append(by_left[path[-1]].right)
    return tuple(path)


def split_quasi(combi: Combi, pattern: CyclicPattern) -> tuple[QuasiCombi, QuasiCombi]:
    """Cut the combi along the pattern curve into inside/outside quasi-combies.

    2-distance segments that are not edges of the combi cut either a lens
    (into semi-lenses and at most one secondary lens) or a triangle fan
    (into semi-lenses plus a refilled secondary fan); every resulting piece
    is assigned to the closed inside or outside region.
    """
    n = combi.n
    if classify_pattern(pattern) == "self_crossing":
        raise ValueError("cannot split along a self-crossing pattern")
    verts = combi.vertex_masks()
    if not set(pattern.cycle) <= verts:
        raise ValueError("pattern members must be vertices of the combi")
    gens = default_generators(n)
    reg = PatternRegions(pattern, gens, tuple(curve_points(pattern, gens)))
    h_edges = combi.horizontal_edges()

    lens_cuts: dict[Lens, list[tuple[int, int]]] = {}
    upper_sector_cuts: dict[int, list[tuple[int, int]]] = {}
    lower_sector_cuts: dict[int, list[tuple[int, int]]] = {}
    for a, b in pattern.two_distance_steps():
        left, right = (a, b) if embed(a, gens) < embed(b, gens) else (b, a)
        if (left, right) in h_edges:
            continue
        probe = tuple(map(sum, zip(embed(left, gens), embed(right, gens))))
        host = None
        for lens in combi.lenses:
            if {left, right} <= set(lens.upper) | set(lens.lower):
                pts = [(x * 2, y * 2) for x, y in (embed(v, gens) for v in lens.cycle())]
                if winding_number(probe, pts) != 0:
                    host = lens
                    break
        if host is not None:
            lens_cuts.setdefault(host, []).append((left, right))
            continue
        meet, join = a & b, a | b
        if meet in verts:
            targets = _fan_targets(combi, meet)
            if left in targets and right in targets:
                sector = [meet] + list(targets)
                pts = [(x * 2, y * 2) for x, y in (embed(v, gens) for v in sector)]
                if winding_number(probe, pts) != 0:
                    upper_sector_cuts.setdefault(meet, []).append((left, right))
                    continue
        if join in verts:
            sources = _fan_sources(combi, join)
            if left in sources and right in sources:
                sector = list(sources) + [join]
                pts = [(x * 2, y * 2) for x, y in (embed(v, gens) for v in sector)]
                if winding_number(probe, pts) != 0:
                    lower_sector_cuts.setdefault(join, []).append((left, right))
                    continue
        raise TilingError(
            "split",
            f"segment {bs.format_subset(a)}-{bs.format_subset(b)} cuts no tile",
        )

    deltas = set(combi.deltas)
    nablas = set(combi.nablas)
    lenses = set(combi.lenses)
    upper_semis: set[UpperSemiLens] = set()
    lower_semis: set[LowerSemiLens] = set()

    for lens, chords in lens_cuts.items():
        lenses.discard(lens)
        upos = {v: k for k, v in enumerate(lens.upper)}
        lpos = {v: k for k, v in enumerate(lens.lower)}
        upper_spans: list[tuple[int, int]] = []
        lower_spans: list[tuple[int, int]] = []
        central = False
        for left, right in chords:
            if (left, right) == (lens.left, lens.right):
                central = True
            elif left in upos and right in upos:
                upper_spans.append((upos[left], upos[right]))
            elif left in lpos and right in lpos:
                lower_spans.append((lpos[left], lpos[right]))
            else:
                raise TilingError("split", "chord endpoints straddle the lens boundary")
        uforest = _chord_spans(upper_spans)
        for span in uforest:
            if span == (-1, -1):
                continue
            path = _shortcut_path(lens.upper, span, uforest[span])
            upper_semis.add(
                UpperSemiLens((lens.upper[span[0]], lens.upper[span[1]]), path)
            )
        lforest = _chord_spans(lower_spans)
        for span in lforest:
            if span == (-1, -1):
                continue
            path = _shortcut_path(lens.lower, span, lforest[span])
            lower_semis.add(
                LowerSemiLens((lens.lower[span[0]], lens.lower[span[1]]), path)
            )
        top_u = _shortcut_path(lens.upper, (0, len(lens.upper) - 1), uforest[(-1, -1)])
        top_l = _shortcut_path(lens.lower, (0, len(lens.lower) - 1), lforest[(-1, -1)])
        if central:
            upper_semis.add(UpperSemiLens((lens.left, lens.right), top_u))
            lower_semis.add(LowerSemiLens((lens.left, lens.right), top_l))
        else:
            lenses.add(Lens(top_u, top_l))

    for bottom, chords in upper_sector_cuts.items():
        targets = _fan_targets(combi, bottom)
        tpos = {v: k for k, v in enumerate(targets)}
        for a, b in zip(targets, targets[1:]):
            nablas.discard(Nabla(bottom, bs.min_element(a & ~bottom), bs.min_element(b & ~bottom)))
        spans = [(tpos[l], tpos[r]) for l, r in chords]
        forest = _chord_spans(spans)
        for span in forest:
            if span == (-1, -1):
                continue
            path = _shortcut_path(targets, span, forest[span])
            upper_semis.add(UpperSemiLens((targets[span[0]], targets[span[1]]), path))
        top = _shortcut_path(targets, (0, len(targets) - 1), forest[(-1, -1)])
        for a, b in zip(top, top[1:]):
            nablas.add(Nabla(bottom, bs.min_element(a & ~bottom), bs.min_element(b & ~bottom)))

    for apex, chords in lower_sector_cuts.items():
        sources = _fan_sources(combi, apex)
        spos = {v: k for k, v in enumerate(sources)}
        for a, b in zip(sources, sources[1:]):
            deltas.discard(Delta(apex, bs.min_element(apex & ~b), bs.min_element(apex & ~a)))
        spans = [(spos[l], spos[r]) for l, r in chords]
        forest = _chord_spans(spans)
        for span in forest:
            if span == (-1, -1):
                continue
            path = _shortcut_path(sources, span, forest[span])
            lower_semis.add(LowerSemiLens((sources[span[0]], sources[span[1]]), path))
        top = _shortcut_path(sources, (0, len(sources) - 1), forest[(-1, -1)])
        for a, b in zip(top, top[1:]):
            deltas.add(Delta(apex, bs.min_element(apex & ~b), bs.min_element(apex & ~a)))

    def side(cycle_masks: list[int]) -> str:
        pts = [embed(v, gens) for v in cycle_masks]
        m = len(pts)
        probe = (sum(p[0] for p in pts), sum(p[1] for p in pts))
        where = reg.locate_point(probe, scale=m)
        if where == "on":
            raise TilingError("split", "piece centroid landed on the curve")
        return "in" if where == "inside" else "out"

    halves = {
        "in": ([], [], [], [], []),
        "out": ([], [], [], [], []),
    }
    for d in deltas:
        halves[side(d.cycle())][0].append(d)
    for v in nablas:
        halves[side(v.cycle())][1].append(v)
    for l in lenses:
        halves[side(l.cycle())][2].append(l)
    for u in upper_semis:
        halves[side(u.cycle())][3].append(u)
    for w in lower_semis:
        halves[side(w.cycle())][4].append(w)
    out = tuple(
        QuasiCombi(
            n,
            tag,
            pattern.cycle,
            frozenset(halves[tag][0]),
            frozenset(halves[tag][1]),
            frozenset(halves[tag][2]),
            frozenset(halves[tag][3]),
            frozenset(halves[tag][4]),
        )
        for tag in ("in", "out")
    )
    _check_quasi(out[0], combi, reg)
    _check_quasi(out[1], combi, reg)
    return out


def _check_quasi(quasi: QuasiCombi, source: Combi, reg: PatternRegions) -> None:
    """Area accounting: the half must cover its closed region exactly."""
    gens = reg.gens
    total = 0
    for d in quasi.deltas:
        total += polygon_area2([embed(v, gens) for v in d.cycle()])
    for v in quasi.nablas:
        total += polygon_area2([embed(v, gens) for v in v.cycle()])
    for l in quasi.lenses:
        total += polygon_area2([embed(v, gens) for v in l.cycle()])
    for u in quasi.upper_semis:
        total += polygon_area2([embed(v, gens) for v in u.cycle()])
    for w in quasi.lower_semis:
        total += polygon_area2([embed(v, gens) for v in w.cycle()])
    curve_area = abs(polygon_area2(list(reg.points)))
    want = curve_area if quasi.region == "in" else gens.zonogon_area2() - curve_area
    if total != want:
        raise TilingError(
            "split",
            f"{quasi.region} half covers {total}/2, expected {want}/2",
        )


def merge_repair(inside: QuasiCombi, outside: QuasiCombi) -> Combi:
    """Union two quasi-combi halves sharing a pattern and repair the seam.

    Each semi-lens is eliminated by removing its chord edge and merging with
    the tile on the other side: a triangle turns the union into a refilled
    fan, a lens or same-kind semi-lens absorbs the path, and two semi-lenses
    facing each other fuse into a lens.  The semi-lens count drops every
    step, and the final combi is validated.
    """
    if inside.n != outside.n:
        raise ValueError("halves live on different ground sets")
    if CyclicPattern(inside.n, inside.pattern).canonical() != CyclicPattern(
        outside.n, outside.pattern
    ).canonical():
        raise ValueError("halves were split along different patterns")
    if inside.region == outside.region:
        raise ValueError("need one inside half and one outside half")
    deltas = set(inside.deltas) | set(outside.deltas)
    nablas = set(inside.nablas) | set(outside.nablas)
    lenses = set(inside.lenses) | set(outside.lenses)
    uppers = set(inside.upper_semis) | set(outside.upper_semis)
    lowers = set(inside.lower_semis) | set(outside.lower_semis)

    guard = len(uppers) + len(lowers)
    while uppers or lowers:
        if guard < 0:
            raise TilingError("merge", "semi-lens elimination failed to terminate")
        guard -= 1
        if lowers:
            piece = min(lowers)
            lowers.discard(piece)
            left, right = piece.chord
            apex = left | right
            t_low = bs.min_element(apex & ~right)
            t_high = bs.min_element(apex & ~left)
            cap = Delta(apex, t_low, t_high)
            if cap in deltas:
                deltas.discard(cap)
                for a, b in piece.edges():
                    deltas.add(Delta(apex, bs.min_element(apex & ~b), bs.min_element(apex & ~a)))
                continue
            host_lens = next(
                (
                    l
                    for l in lenses
                    for p in range(len(l.lower) - 1)
                    if l.lower[p] == left and l.lower[p + 1] == right
                ),
                None,
            )
            if host_lens is not None:
                lenses.discard(host_lens)
                spliced = _splice(host_lens.lower, piece.chord, piece.lower)
                lenses.add(Lens(host_lens.upper, spliced))
                continue
            host_low = next(
                (
                    w
                    for w in lowers
                    for p in range(len(w.lower) - 1)
                    if w.lower[p] == left and w.lower[p + 1] == right
                ),
                None,
            )
            if host_low is not None:
                lowers.discard(host_low)
                lowers.add(
                    LowerSemiLens(host_low.chord, _splice(host_low.lower, piece.chord, piece.lower))
                )
                continue
            host_up = next((u for u in uppers if u.chord == piece.chord), None)
            if host_up is not None:
                uppers.discard(host_up)
                lenses.add(Lens(host_up.upper, piece.lower))
                continue
            raise TilingError("merge", f"no tile above semi-lens chord {piece.chord}")
        else:
            piece = min(uppers)
            uppers.discard(piece)
            left, right = piece.chord
            bottom = left & right
            cup = Nabla(
                bottom,
                bs.min_element(left & ~bottom),
                bs.min_element(right & ~bottom),
            )
            if cup in nablas:
                nablas.discard(cup)
                for a, b in piece.edges():
                    nablas.add(
                        Nabla(bottom, bs.min_element(a & ~bottom), bs.min_element(b & ~bottom))
                    )
                continue
            host_lens = next(
                (
                    l
                    for l in lenses
                    for p in range(len(l.upper) - 1)
                    if l.upper[p] == left and l.upper[p + 1] == right
                ),
                None,
            )
            if host_lens is not None:
                lenses.discard(host_lens)
                spliced = _splice(host_lens.upper, piece.chord, piece.upper)
                lenses.add(Lens(spliced, host_lens.lower))
                continue
            host_up = next(
                (
                    u
                    for u in uppers
                    for p in range(len(u.upper) - 1)
                    if u.upper[p] == left and u.upper[p + 1] == right
                ),
                None,
            )
            if host_up is not None:
                uppers.discard(host_up)
                uppers.add(
                    UpperSemiLens(host_up.chord, _splice(host_up.upper, piece.chord, piece.upper))
                )
                continue
            host_low = next((w for w in lowers if w.chord == piece.chord), None)
            if host_low is not None:
                lowers.discard(host_low)
                lenses.add(Lens(piece.upper, host_low.lower))
                continue
            raise TilingError("merge", f"no tile below semi-lens chord {piece.chord}")

    merged = Combi(inside.n, deltas, nablas, lenses)
    validate_combi(merged)
    want = inside.vertex_masks() | outside.vertex_masks()
    if not want <= merged.vertex_masks():
        raise TilingError("merge", "merge lost vertices of the two halves")
    return merged


def _splice(path: tuple[int, ...], chord: tuple[int, int], insert: tuple[int, ...]) -> tuple[int, ...]:
    left, right = chord
    out: list[int] = []
    k = 0
    while k < len(path):
        if k + 1 < len(path) and path[k] == left and path[k + 1] == right:
            out.extend(insert[:-1])
            k += 1
        else:
            out.append(path[k])
            k += 1
    return tuple(out)


# --------------------------------------------------------------------------
# planar graph patterns and their face domains


@dataclass(frozen=True)
class GraphPattern:
    """Planar graph of pattern vertices with 1-/2-distance edges."""

    n: int
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    def __init__(self, n: int, vertices, edges) -> None:
        bs.check_ground(n)
        verts = tuple(sorted(set(vertices)))
        for v in verts:
            bs.check_subset(v, n)
        vset = set(verts)
        norm = set()
        for u, v in edges:
            if u == v or u not in vset or v not in vset:
                raise ValueError("edges must join two distinct pattern vertices")
            d = bs.size(u ^ v)
            if not (d == 1 or (d == 2 and bs.size(u) == bs.size(v))):
                raise ValueError("edges must be 1- or 2-distance pairs")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", tuple(sorted(norm)))


def graph_pattern(n: int, vertices, edges, add_boundary: bool = True) -> GraphPattern:
    """Build and fully check a graph pattern.

    Verifies that the vertex family is weakly separated, that every edge
    pair obeys the quadruple conditions, and that the drawn segments are
    pairwise non-crossing; the zonogon boundary cycle is added by default.
    """
    verts = set(vertices)
    edge_set = {(min(u, v), max(u, v)) for u, v in edges}
    if add_boundary:
        left, right = boundary_vertices(default_generators(n))
        cyc = right[:-1] + list(reversed(left))[:-1]
        verts.update(cyc)
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            edge_set.add((min(a, b), max(a, b)))
    if not _pairwise_weakly_separated(verts):
        raise ValueError("graph-pattern vertices must form a weakly separated family")
    pat = GraphPattern(n, verts, edge_set)
    twos = [e for e in pat.edges if bs.size(e[0] ^ e[1]) == 2]
    ones = [e for e in pat.edges if bs.size(e[0] ^ e[1]) == 1]
    for p, q in combinations(twos, 2):
        if _violates_c3(p, q):
            raise ValueError(f"edges {p} and {q} violate the interleaving condition")
    for two in twos:
        for one in ones:
            if _violates_c4(two, one):
                raise ValueError(f"edges {two} and {one} violate the spanning condition")
    gens = default_generators(n)
    pts = {v: embed(v, gens) for v in pat.vertices}
    for (a, b), (c, d) in combinations(pat.edges, 2):
        contact = _segment_contact(pts[a], pts[b], pts[c], pts[d])
        if contact == "cross":
            raise ValueError(f"edges {(a, b)} and {(c, d)} cross in the plane")
    return pat


@dataclass(frozen=True)
class PatternFace:
    """A bounded face of the graph pattern, traced counterclockwise."""

    cycle: tuple[int, ...]
    area2: int


def pattern_faces(pat: GraphPattern, gens: Generators | None = None) -> list[PatternFace]:
    """Bounded faces from the rotation system of the exact embedding."""
    if gens is None:
        gens = default_generators(pat.n)
    pts = {v: embed(v, gens) for v in pat.vertices}
    outgoing: dict[int, list[int]] = {v: [] for v in pat.vertices}
    for u, v in pat.edges:
        outgoing[u].append(v)
        outgoing[v].append(u)
    for v in outgoing:
        outgoing[v].sort(key=lambda w: angle_sort_key(sub(pts[w], pts[v])))
    index_of = {
        (v, w): k for v, targets in outgoing.items() for k, w in enumerate(targets)
    }
    faces = []
    seen: set[tuple[int, int]] = set()
    for u0, targets in sorted(outgoing.items()):
        for w0 in targets:
            if (u0, w0) in seen:
                continue
            cycle = []
            u, w = u0, w0
            while (u, w) not in seen:
                seen.add((u, w))
                cycle.append(u)
                back = index_of[(w, u)]
                nxt = outgoing[w][(back - 1) % len(outgoing[w])]
                u, w = w, nxt
            area2 = polygon_area2([pts[v] for v in cycle])
            if area2 > 0:
                faces.append(PatternFace(tuple(cycle), area2))
    faces.sort(key=lambda f: f.cycle)
    return faces


def _face_closure_contains(
    face: PatternFace, all_faces: list[PatternFace], point: Point, pts_cache: dict[int, Point]
) -> bool:
    cyc = [pts_cache[v] for v in face.cycle]
    m = len(cyc)
    for k in range(m):
        if on_segment(point, cyc[k], cyc[(k + 1) % m]):
            return True
    if winding_number(point, cyc) == 0:
        return False
    for other in all_faces:
        if other is face or other.area2 >= face.area2:
            continue
        ocyc = [pts_cache[v] for v in other.cycle]
        if any(on_segment(point, ocyc[k], ocyc[(k + 1) % len(ocyc)]) for k in range(len(ocyc))):
            continue
        if winding_number(point, ocyc) != 0:
            return False
    return True


def graph_pattern_domains(pat: GraphPattern, gens: Generators | None = None):
    """Map each bounded face to the compatible sets lying in its closure."""
    n = pat.n
    if n > _max_enum_n():
        raise ResourceGuardError(f"domain scan guard: n={n}")
    if gens is None:
        gens = default_generators(n)
    faces = pattern_faces(pat, gens)
    pts_cache = {v: embed(v, gens) for v in pat.vertices}
    compatible = [
        x for x in range(1 << n) if all(weakly_separated(x, s) for s in pat.vertices)
    ]
    out = []
    for face in faces:
        hits = [
            x
            for x in compatible
            if _face_closure_contains(face, faces, embed(x, gens), pts_cache)
        ]
        out.append((face, SetFamily(n, hits)))
    return out


def verify_face_domains(pat: GraphPattern) -> bool:
    """All face-domain pairs complementary and every face domain pure."""
    doms = graph_pattern_domains(pat)
    for (_, fa), (_, fb) in combinations(doms, 2):
        if not verify_complementary(fa, fb):
            return False
    return all(verify_purity(fam).pure for _, fam in doms)


def grassmann_necklace(sequence, n: int) -> tuple[CyclicPattern, int]:
    """Validate a necklace in the discrete Grassmannian and build its pattern.

    The defining condition fixes each consecutive difference to one rotating
    singleton; the index convention is discovered by trying every offset,
    and the validating offset is returned alongside the cyclic pattern.
    """
    seq = tuple(sequence)
    bs.check_ground(n)
    if len(seq) != n:
        raise ValueError(f"a necklace on ground size {n} needs exactly {n} sets")
    sizes = {bs.size(s) for s in seq}
    if len(sizes) != 1:
        raise ValueError("necklace sets must share one cardinality")
    valid_offsets = []
    for offset in range(n):
        ok = True
        for p in range(n):
            want = (p + offset) % n + 1
            nxt, cur = seq[(p + 1) % n], seq[p]
            if nxt & ~cur != bs.singleton(want):
                ok = False
                break
        if ok:
            valid_offsets.append(offset)
    if not valid_offsets:
        raise ValueError("sequence satisfies the necklace condition for no offset")
    pattern = CyclicPattern(n, seq)
    if classify_pattern(pattern) == "self_crossing":
        raise ValueError("necklace pattern is self-crossing")
    return pattern, valid_offsets[0]


def interval_necklace(n: int, m: int) -> tuple[int, ...]:
    """The necklace of cyclic intervals of size m."""
    if not 0 < m < n:
        raise ValueError("need 0 < m < n for a nondegenerate necklace")
    out = []
    for start in range(n):
        mask = 0
        for k in range(m):
            mask |= bs.singleton((start + k) % n + 1)
        out.append(mask)
    return tuple(out)
