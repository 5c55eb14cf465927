"""Rhombus tilings of the zonogon and strong (hexagon) flips.

The spectrum (vertex set) of a rhombus tiling is a maximal strongly
separated collection, and this correspondence is a bijection; both
directions are implemented and cross-validated.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import bitsets as bs
from ._planar import TilingError, check_planar_cover
from .geometry import Generators, boundary_cycle, default_generators
from .separation import SetFamily, is_maximal_separated


@dataclass(frozen=True, order=True)
class Rhombus:
    """Tile with corners base, base+low (left), base+high (right), base+both."""

    base: int
    low: int
    high: int

    def __post_init__(self) -> None:
        if not 1 <= self.low < self.high:
            raise ValueError(f"need 1 <= low < high, got {self.low}, {self.high}")
        if self.base & (bs.singleton(self.low) | bs.singleton(self.high)):
            raise ValueError("type elements must not lie in the base set")

    @property
    def bottom(self) -> int:
        return self.base

    @property
    def left(self) -> int:
        return self.base | bs.singleton(self.low)

    @property
    def right(self) -> int:
        return self.base | bs.singleton(self.high)

    @property
    def top(self) -> int:
        return self.base | bs.singleton(self.low) | bs.singleton(self.high)

    def cycle(self) -> list[int]:
        """Corner masks in counterclockwise order."""
        return [self.bottom, self.right, self.top, self.left]


@dataclass(frozen=True)
class RhombusTiling:
    n: int
    tiles: frozenset[Rhombus]

    def __init__(self, n: int, tiles) -> None:
        bs.check_ground(n)
        tset = frozenset(tiles)
        for t in tset:
            bs.check_subset(t.top, n)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "tiles", tset)

    def vertex_masks(self) -> frozenset[int]:
        verts = set()
        for t in self.tiles:
            verts.update(t.cycle())
        if self.n == 1:
            verts.update((0, 1))
        return frozenset(verts)

    def edges(self) -> frozenset[tuple[int, int]]:
        """Upward directed tile edges (X, X+i)."""
        out = set()
        for t in self.tiles:
            out.add((t.bottom, t.left))
            out.add((t.bottom, t.right))
            out.add((t.left, t.top))
            out.add((t.right, t.top))
        if self.n == 1:
            out.add((0, 1))
        return frozenset(out)


def validate_rhombus(tiling: RhombusTiling, gens: Generators | None = None) -> bool:
    """Planar-tiling axioms under the exact embedding; raises TilingError."""
    n = tiling.n
    if gens is None:
        gens = default_generators(n)
    if n == 1:
        if tiling.tiles:
            raise TilingError("tile-shape", "a 1-element ground set admits no rhombi")
        return True
    cyc = boundary_cycle(gens)
    boundary = [(cyc[k], cyc[(k + 1) % len(cyc)]) for k in range(len(cyc))]
    cycles = [(f"rhombus({bs.format_subset(t.base)};{t.low},{t.high})", t.cycle()) for t in sorted(tiling.tiles)]
    return check_planar_cover(gens, cycles, boundary, gens.zonogon_area2())


def spectrum_rhombus(tiling: RhombusTiling) -> SetFamily:
    return SetFamily(tiling.n, tiling.vertex_masks())


def from_s_collection(family: SetFamily, validate: bool = True) -> RhombusTiling:
    """The unique rhombus tiling whose vertex set is the given maximal
    strongly separated collection.

    Tiles are exactly the quadruples X, X+i, X+j, X+ij present in the family
    (no other subset point can fall inside such a rhombus, so each quadruple
    bounds a tile); validation certifies the result.
    """
    n = family.n
    if not is_maximal_separated(family, "strong"):
        raise ValueError("family is not a maximal strongly separated collection")
    present = family.as_set()
    tiles = []
    for x in family.members:
        free = [e for e in range(1, n + 1) if not bs.has(x, e)]
        for i, j in combinations(free, 2):
            a, b = bs.singleton(i), bs.singleton(j)
            if x | a in present and x | b in present and x | a | b in present:
                tiles.append(Rhombus(x, i, j))
    tiling = RhombusTiling(n, tiles)
    if validate and n >= 2:
        try:
            validate_rhombus(tiling)
        except TilingError as exc:
            raise TilingError(
                exc.axiom, f"collection does not assemble into a tiling ({exc.detail})"
            ) from exc
    return tiling


def minimal_tiling(n: int) -> RhombusTiling:
    from .separation import interval_collection

    return from_s_collection(interval_collection(n))


def maximal_tiling(n: int) -> RhombusTiling:
    from .separation import cointerval_collection

    return from_s_collection(cointerval_collection(n))


def strong_flip(
    tiling: RhombusTiling, base: int, i: int, j: int, k: int, direction: str
) -> RhombusTiling:
    """Hexagon flip at base set X and types i < j < k.

    raise: tiles (X;i,j), (X;j,k), (X+j;i,k) become (X+k;i,j), (X+i;j,k), (X;i,k),
    moving the spectrum vertex X+j to X+i+k.  lower: the inverse.
    """
    if not i < j < k:
        raise ValueError("types must satisfy i < j < k")
    sj = bs.singleton(j)
    lowered = (Rhombus(base, i, j), Rhombus(base, j, k), Rhombus(base | sj, i, k))
    raised = (
        Rhombus(base | bs.singleton(k), i, j),
        Rhombus(base | bs.singleton(i), j, k),
        Rhombus(base, i, k),
    )
    if direction == "raise":
        old, new = lowered, raised
    elif direction == "lower":
        old, new = raised, lowered
    else:
        raise ValueError(f"direction must be 'raise' or 'lower', got {direction!r}")
    tiles = set(tiling.tiles)
    if not all(t in tiles for t in old):
        raise ValueError("hexagon witnesses are not present in the tiling")
    tiles.difference_update(old)
    tiles.update(new)
    return RhombusTiling(tiling.n, tiles)


def hexagons(tiling: RhombusTiling, direction: str) -> list[tuple[int, int, int, int]]:
    """All (base, i, j, k) admitting a strong flip in the given direction."""
    tiles = tiling.tiles
    out = []
    for t in sorted(tiles):
        if direction == "raise":
            i, j = t.low, t.high
            for k in range(j + 1, tiling.n + 1):
                if bs.has(t.base, k):
                    continue
                if Rhombus(t.base, j, k) in tiles and Rhombus(t.base | bs.singleton(j), i, k) in tiles:
                    out.append((t.base, i, j, k))
        else:
            i, k = t.low, t.high
            for j in range(i + 1, k):
                if bs.has(t.base, j):
                    continue
                if (
                    Rhombus(t.base | bs.singleton(k), i, j) in tiles
                    and Rhombus(t.base | bs.singleton(i), j, k) in tiles
                ):
                    out.append((t.base, i, j, k))
    return out
