"""Combined tilings (combies): triangles and lenses tiling the zonogon.

A combi is a planar tiling whose edges are either vertical steps (congruent
to a generator, adding one element) or horizontal steps (trading a smaller
element for a larger one).  Its tiles are:

  Delta  - upward triangle, apex on top, horizontal base below;
  Nabla  - downward triangle, bottom vertex below, horizontal base on top;
  Lens   - bounded by an upper horizontal path with strictly increasing
           types around a common intersection set, and a lower horizontal
           path with strictly decreasing types around a common union.

The central facts implemented here: the vertex set (spectrum) of a combi is
a maximal weakly separated collection, every such collection arises from a
unique combi, and that combi is reconstructed by `from_w_collection`.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import bitsets as bs
from ._planar import TilingError, check_planar_cover
from .geometry import Generators, boundary_cycle, default_generators
from .rhombus import RhombusTiling
from .separation import SetFamily, is_maximal_separated


@dataclass(frozen=True, order=True)
class Delta:
    """Upward triangle: apex, base from apex-high (left) to apex-low (right)."""

    apex: int
    low: int
    high: int

    def __post_init__(self) -> None:
        if not 1 <= self.low < self.high:
            raise ValueError(f"need 1 <= low < high, got {self.low}, {self.high}")
        need = bs.singleton(self.low) | bs.singleton(self.high)
        if self.apex & need != need:
            raise ValueError("apex of a Delta must contain both type elements")

    @property
    def left(self) -> int:
        return self.apex ^ bs.singleton(self.high)

    @property
    def right(self) -> int:
        return self.apex ^ bs.singleton(self.low)

    @property
    def base(self) -> tuple[int, int]:
        return (self.left, self.right)

    def cycle(self) -> list[int]:
        return [self.left, self.right, self.apex]


@dataclass(frozen=True, order=True)
class Nabla:
    """Downward triangle: bottom, base from bottom+low (left) to bottom+high."""

    bottom: int
    low: int
    high: int

    def __post_init__(self) -> None:
        if not 1 <= self.low < self.high:
            raise ValueError(f"need 1 <= low < high, got {self.low}, {self.high}")
        if self.bottom & (bs.singleton(self.low) | bs.singleton(self.high)):
            raise ValueError("bottom of a Nabla must avoid both type elements")

    @property
    def left(self) -> int:
        return self.bottom | bs.singleton(self.low)

    @property
    def right(self) -> int:
        return self.bottom | bs.singleton(self.high)

    @property
    def base(self) -> tuple[int, int]:
        return (self.left, self.right)

    def cycle(self) -> list[int]:
        return [self.bottom, self.right, self.left]


def _path_types(vertices: tuple[int, ...]) -> list[tuple[int, int]]:
    """(removed, added) element pair per consecutive horizontal step."""
    out = []
    for a, b in zip(vertices, vertices[1:]):
        gone, came = a & ~b, b & ~a
        if bs.size(gone) != 1 or bs.size(came) != 1:
            raise ValueError("lens path steps must trade exactly one element")
        out.append((bs.min_element(gone), bs.min_element(came)))
    return out


@dataclass(frozen=True, order=True)
class Lens:
    upper: tuple[int, ...]
    lower: tuple[int, ...]

    def __init__(self, upper, lower) -> None:
        up, lo = tuple(upper), tuple(lower)
        if len(up) < 3 or len(lo) < 3:
            raise ValueError("lens boundaries need at least two edges each")
        if up[0] != lo[0] or up[-1] != lo[-1]:
            raise ValueError("lens boundaries must share their end vertices")
        sizes = {bs.size(v) for v in up} | {bs.size(v) for v in lo}
        if len(sizes) != 1:
            raise ValueError("all lens vertices must have the same cardinality")
        ups = _path_types(up)
        types = [ups[0][0]] + [t[1] for t in ups]
        if any(a >= b for a, b in zip(types, types[1:])):
            raise ValueError("upper path types must strictly increase")
        inter = up[0]
        for v in up:
            inter &= v
        if any(bs.size(v & ~inter) != 1 for v in up):
            raise ValueError("upper path vertices must share a common center")
        union = 0
        for v in lo:
            union |= v
        if any(bs.size(union & ~v) != 1 for v in lo):
            raise ValueError("lower path vertices must share a common union")
        lseq = [bs.min_element(union & ~v) for v in lo]
        if any(a <= b for a, b in zip(lseq, lseq[1:])):
            raise ValueError("lower path types must strictly decrease")
        object.__setattr__(self, "upper", up)
        object.__setattr__(self, "lower", lo)

    @property
    def left(self) -> int:
        return self.upper[0]

    @property
    def right(self) -> int:
        return self.upper[-1]

    @property
    def upper_center(self) -> int:
        inter = self.upper[0]
        for v in self.upper:
            inter &= v
        return inter

    @property
    def lower_center(self) -> int:
        union = 0
        for v in self.lower:
            union |= v
        return union

    @property
    def level(self) -> int:
        return bs.size(self.upper[0])

    @property
    def upper_types(self) -> tuple[int, ...]:
        c = self.upper_center
        return tuple(bs.min_element(v & ~c) for v in self.upper)

    @property
    def lower_types(self) -> tuple[int, ...]:
        u = self.lower_center
        return tuple(bs.min_element(u & ~v) for v in self.lower)

    def cycle(self) -> list[int]:
        return list(self.lower) + list(reversed(self.upper))[1:-1]


Tile = Delta | Nabla | Lens


@dataclass(frozen=True)
class Combi:
    n: int
    deltas: frozenset[Delta]
    nablas: frozenset[Nabla]
    lenses: frozenset[Lens]

    def __init__(self, n: int, deltas=(), nablas=(), lenses=()) -> None:
        bs.check_ground(n)
        dset, nset, lset = frozenset(deltas), frozenset(nablas), frozenset(lenses)
        for d in dset:
            bs.check_subset(d.apex, n)
        for v in nset:
            bs.check_subset(v.right, n)
        for l in lset:
            bs.check_subset(l.lower_center, n)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "deltas", dset)
        object.__setattr__(self, "nablas", nset)
        object.__setattr__(self, "lenses", lset)

    def tiles(self) -> list[Tile]:
        return sorted(self.deltas) + sorted(self.nablas) + sorted(self.lenses)

    def vertex_masks(self) -> frozenset[int]:
        verts: set[int] = set()
        for d in self.deltas:
            verts.update(d.cycle())
        for v in self.nablas:
            verts.update(v.cycle())
        for l in self.lenses:
            verts.update(l.upper)
            verts.update(l.lower)
        if self.n == 1:
            verts.update((0, 1))
        return frozenset(verts)

    def vertical_edges(self) -> frozenset[tuple[int, int]]:
        """Upward (X, X+i) edges of the derived graph."""
        out = set()
        for d in self.deltas:
            out.add((d.left, d.apex))
            out.add((d.right, d.apex))
        for v in self.nablas:
            out.add((v.bottom, v.left))
            out.add((v.bottom, v.right))
        if self.n == 1:
            out.add((0, 1))
        return frozenset(out)

    def horizontal_edges(self) -> frozenset[tuple[int, int]]:
        """Rightward trading edges of the derived graph."""
        out = set()
        for d in self.deltas:
            out.add(d.base)
        for v in self.nablas:
            out.add(v.base)
        for l in self.lenses:
            out.update(zip(l.upper, l.upper[1:]))
            out.update(zip(l.lower, l.lower[1:]))
        return frozenset(out)

    def size_sum(self) -> int:
        """Sum of vertex cardinalities (the flip potential)."""
        return sum(bs.size(v) for v in self.vertex_masks())


def validate_combi(combi: Combi, gens: Generators | None = None) -> bool:
    """Tile-local invariants plus exact planar-cover axioms; raises TilingError."""
    n = combi.n
    if gens is None:
        gens = default_generators(n)
    if n == 1:
        if combi.deltas or combi.nablas or combi.lenses:
            raise TilingError("tile-shape", "a 1-element ground set admits no tiles")
        return True
    cycles: list[tuple[str, list[int]]] = []
    for d in sorted(combi.deltas):
        cycles.append((f"delta({bs.format_subset(d.apex)};{d.low},{d.high})", d.cycle()))
    for v in sorted(combi.nablas):
        cycles.append((f"nabla({bs.format_subset(v.bottom)};{v.low},{v.high})", v.cycle()))
    for l in sorted(combi.lenses):
        cycles.append((f"lens({bs.format_subset(l.left)}..{bs.format_subset(l.right)})", l.cycle()))
    cyc = boundary_cycle(gens)
    boundary = [(cyc[k], cyc[(k + 1) % len(cyc)]) for k in range(len(cyc))]
    check_planar_cover(gens, cycles, boundary, gens.zonogon_area2())
    return True


def from_rhombus(tiling: RhombusTiling) -> Combi:
    """Split every rhombus into its upper and lower triangle (semi-rhombus combi)."""
    deltas = []
    nablas = []
    for t in tiling.tiles:
        deltas.append(Delta(t.top, t.low, t.high))
        nablas.append(Nabla(t.bottom, t.low, t.high))
    return Combi(tiling.n, deltas, nablas)


def spectrum(combi: Combi) -> SetFamily:
    return SetFamily(combi.n, combi.vertex_masks())


def is_semi_rhombus(combi: Combi) -> bool:
    if combi.lenses:
        return False
    return {d.base for d in combi.deltas} == {v.base for v in combi.nablas}


def _vertical_edges_of_family(members: frozenset[int], n: int) -> dict[int, list[int]]:
    """For each member, the sorted list of elements i with X+i also a member."""
    out: dict[int, list[int]] = {}
    for x in members:
        ups = [i for i in range(1, n + 1) if not bs.has(x, i) and (x | bs.singleton(i)) in members]
        out[x] = ups
    return out


def _triangles_from_vertices(members: frozenset[int], n: int) -> tuple[list[Delta], list[Nabla]]:
    """Fan rule: consecutive outgoing edges at a vertex span a Nabla, and
    consecutive incoming edges span a Delta."""
    ups = _vertical_edges_of_family(members, n)
    nablas = []
    deltas = []
    for x, types in ups.items():
        for i, j in zip(types, types[1:]):
            nablas.append(Nabla(x, i, j))
    downs: dict[int, list[int]] = {}
    for x, types in ups.items():
        for i in types:
            downs.setdefault(x | bs.singleton(i), []).append(i)
    for x, types in downs.items():
        types.sort(reverse=True)
        for i, j in zip(types, types[1:]):
            deltas.append(Delta(x, j, i))
    return deltas, nablas


def _peel_lenses(
    level: int,
    nabla_bases: list[tuple[int, int]],
    delta_bases: set[tuple[int, int]],
    members: frozenset[int],
) -> list[Lens]:
    """Recover the lenses of one girdle from the triangle base edges.

    The lower frontier starts as the nabla bases; a maximal run of frontier
    edges with a constant pairwise union and at least two edges is the lower
    boundary of a lens exactly when witness vertices exist between its end
    types; emitting the lens replaces the run by the lens's upper path.
    Edges that are also delta bases are complete (degenerate lenses).
    """
    succ = {a: b for a, b in nabla_bases}
    frontier = set(nabla_bases)
    lenses: list[Lens] = []
    while frontier - delta_bases:
        starts = [a for a, b in frontier if not any(x == a for _, x in frontier)]
        progress = False
        for start in sorted(starts):
            path = [start]
            while path[-1] in succ and (path[-1], succ[path[-1]]) in frontier:
                path.append(succ[path[-1]])
            runs: list[list[int]] = []
            k = 0
            while k + 1 < len(path):
                if (path[k], path[k + 1]) in delta_bases:
                    k += 1
                    continue
                j = k
                union = path[k] | path[k + 1]
                while (
                    j + 1 < len(path)
                    and (path[j], path[j + 1]) not in delta_bases
                    and (path[j] | path[j + 1]) == union
                ):
                    j += 1
                if j - k >= 2:
                    runs.append(path[k : j + 1])
                k = j
            for run in runs:
                lo, hi = run[0], run[-1]
                meet = lo & hi
                t_lo, t_hi = bs.min_element(lo & ~meet), bs.min_element(hi & ~meet)
                witnesses = [
                    meet | bs.singleton(s)
                    for s in range(min(t_lo, t_hi) + 1, max(t_lo, t_hi))
                    if not bs.has(meet, s) and (meet | bs.singleton(s)) in members
                ]
                if not witnesses:
                    continue
                upper = [lo] + witnesses + [hi]
                lens = Lens(upper, run)
                lenses.append(lens)
                for a, b in zip(run, run[1:]):
                    frontier.discard((a, b))
                    succ.pop(a, None)
                for a, b in zip(upper, upper[1:]):
                    frontier.add((a, b))
                    succ[a] = b
                progress = True
        if not progress:
            raise TilingError(
                "girdle",
                f"level {level}: lens recovery stalled with frontier "
                f"{sorted(frontier - delta_bases)}",
            )
    if frontier != delta_bases:
        raise TilingError(
            "girdle", f"level {level}: frontier does not close onto the delta bases"
        )
    return lenses


def from_w_collection(family: SetFamily, validate: bool = True, check_input: bool = True) -> Combi:
    """Reconstruct the unique combi whose spectrum is the given maximal
    weakly separated collection.

    Vertical edges are all pairs (X, X+i) inside the family; triangles are
    the fans between consecutive such edges; lenses are peeled girdle by
    girdle from the remaining triangle bases.  The result is validated, so
    success certifies correctness on each instance.
    """
    n = family.n
    if check_input and not is_maximal_separated(family, "weak"):
        raise ValueError("family is not a maximal weakly separated collection")
    members = family.as_set()
    deltas, nablas = _triangles_from_vertices(members, n)
    by_level: dict[int, set[int]] = {}
    for m in members:
        by_level.setdefault(bs.size(m), set()).add(m)
    lenses: list[Lens] = []
    nb_by_level: dict[int, list[tuple[int, int]]] = {}
    for v in nablas:
        nb_by_level.setdefault(bs.size(v.left), []).append(v.base)
    db_by_level: dict[int, set[tuple[int, int]]] = {}
    for d in deltas:
        db_by_level.setdefault(bs.size(d.left), set()).add(d.base)
    for level, bases in sorted(nb_by_level.items()):
        lenses.extend(
            _peel_lenses(
                level,
                sorted(bases),
                db_by_level.get(level, set()),
                frozenset(by_level.get(level, ())),
            )
        )
    combi = Combi(n, deltas, nablas, lenses)
    if validate:
        validate_combi(combi)
        if combi.vertex_masks() != members:
            raise TilingError("spectrum", "reconstruction changed the vertex set")
    return combi


def girdle(combi: Combi, level: int) -> tuple[list[Lens], list[tuple[int, int]]]:
    """Lenses of the given level plus its degenerate lenses (edges that are
    simultaneously a nabla base and a delta base)."""
    lenses = [l for l in combi.lenses if l.level == level]
    nb = {v.base for v in combi.nablas if bs.size(v.left) == level}
    db = {d.base for d in combi.deltas if bs.size(d.left) == level}
    return lenses, sorted(nb & db)


@dataclass(frozen=True)
class WConfig:
    """Two nablas sharing their middle top vertex, witnessing a lowering flip."""

    core: int
    i: int
    j: int
    k: int

    @property
    def middle(self) -> int:
        return self.core | bs.singleton(self.i) | bs.singleton(self.k)

    @property
    def replacement(self) -> int:
        return self.core | bs.singleton(self.j)

    def left_nabla(self) -> Nabla:
        return Nabla(self.core | bs.singleton(self.i), self.j, self.k)

    def right_nabla(self) -> Nabla:
        return Nabla(self.core | bs.singleton(self.k), self.i, self.j)


@dataclass(frozen=True)
class MConfig:
    """Two deltas sharing their middle bottom vertex, witnessing a raising flip."""

    core: int
    i: int
    j: int
    k: int

    @property
    def middle(self) -> int:
        return self.core | bs.singleton(self.j)

    @property
    def replacement(self) -> int:
        return self.core | bs.singleton(self.i) | bs.singleton(self.k)

    def left_delta(self) -> Delta:
        return Delta(self.core | bs.singleton(self.i) | bs.singleton(self.j), self.i, self.j)

    def right_delta(self) -> Delta:
        return Delta(self.core | bs.singleton(self.j) | bs.singleton(self.k), self.j, self.k)


def find_w_configs(combi: Combi) -> list[WConfig]:
    nablas = combi.nablas
    out = []
    for nb in nablas:
        # nb as the left tile: bottom core+i, base types (j, k)
        for i in bs.iter_elements(nb.bottom):
            cand_core = nb.bottom ^ bs.singleton(i)
            if i < nb.low and Nabla(
                cand_core | bs.singleton(nb.high), i, nb.low
            ) in nablas:
                out.append(WConfig(cand_core, i, nb.low, nb.high))
    return sorted(out, key=lambda w: (w.core, w.i, w.j, w.k))


def find_m_configs(combi: Combi) -> list[MConfig]:
    deltas = combi.deltas
    out = []
    for d in deltas:
        # d as the left tile Delta(core+i+j; i, j); partner Delta(core+j+k; j, k)
        i, j = d.low, d.high
        core = d.apex & ~(bs.singleton(i) | bs.singleton(j))
        for k in range(j + 1, combi.n + 1):
            if bs.has(core, k):
                continue
            if Delta(core | bs.singleton(j) | bs.singleton(k), j, k) in deltas:
                out.append(MConfig(core, i, j, k))
    return sorted(out, key=lambda m: (m.core, m.i, m.j, m.k))


def find_w_config_at(combi: Combi, core: int, i: int, j: int, k: int) -> WConfig:
    w = WConfig(core, i, j, k)
    if w.left_nabla() not in combi.nablas or w.right_nabla() not in combi.nablas:
        raise ValueError("the requested W-configuration is not present")
    return w


def find_m_config_at(combi: Combi, core: int, i: int, j: int, k: int) -> MConfig:
    m = MConfig(core, i, j, k)
    if m.left_delta() not in combi.deltas or m.right_delta() not in combi.deltas:
        raise ValueError("the requested M-configuration is not present")
    return m


def adjacent_h_classify(combi: Combi, e: tuple[int, int], e2: tuple[int, int]) -> str:
    """Classify two horizontal edges sharing a middle vertex.

    For edges (A,B), (B,C) of types (j', k) then (i, j'') with i < j'' <= j' < k
    the middle types must agree and the pair lies on one lens's lower boundary
    or under two deltas with a common apex; the mirrored pattern lies on one
    lens's upper boundary or above two nablas with a common bottom.
    """
    (a, b), (b2, c) = e, e2
    if b != b2:
        raise ValueError("edges must share their middle vertex")
    if bs.size(a & ~b) != 1 or bs.size(b & ~a) != 1 or bs.size(b & ~c) != 1 or bs.size(c & ~b) != 1:
        raise ValueError("both edges must be single-trade horizontal steps")
    t1 = (bs.min_element(a & ~b), bs.min_element(b & ~a))
    t2 = (bs.min_element(b & ~c), bs.min_element(c & ~b))
    if t2[1] <= t1[0]:
        # types (j', k) then (i, j'') with i < j'' <= j' < k
        j_prime, k = t1
        i, j_second = t2
        if j_prime != j_second:
            raise TilingError("adjacency", "middle types differ, combi is inconsistent")
        for lens in combi.lenses:
            lo = lens.lower
            for p in range(len(lo) - 2):
                if lo[p] == a and lo[p + 1] == b and lo[p + 2] == c:
                    return "lens-lower"
        apex = b | bs.singleton(j_prime)
        if (
            Delta(apex, i, j_prime) in combi.deltas
            and Delta(apex, j_prime, k) in combi.deltas
        ):
            return "two-deltas"
        raise TilingError("adjacency", "neither a lens nor a delta pair covers the edges")
    if t1[1] <= t2[0]:
        # mirrored: types (i, j'') then (j', k) with i < j'' <= j' < k
        i, j_second = t1
        j_prime, k = t2
        if j_prime != j_second:
            raise TilingError("adjacency", "middle types differ, combi is inconsistent")
        for lens in combi.lenses:
            up = lens.upper
            for p in range(len(up) - 2):
                if up[p] == a and up[p + 1] == b and up[p + 2] == c:
                    return "lens-upper"
        bottom = b ^ bs.singleton(j_prime)
        if (
            Nabla(bottom, i, j_prime) in combi.nablas
            and Nabla(bottom, j_prime, k) in combi.nablas
        ):
            return "two-nablas"
        raise TilingError("adjacency", "neither a lens nor a nabla pair covers the edges")
    raise ValueError("edge types do not match the required pattern")
