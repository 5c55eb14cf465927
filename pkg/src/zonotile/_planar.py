"""Shared exact validation of planar tile covers.

A family of convex, positively oriented polygons exactly tiles a region if
and only if their directed boundary edges cancel in opposite pairs except
for the directed boundary of the region, each direction being used at most
once.  (The covering degree of any generic point then equals the winding
number of the region boundary, which is 1.)  This gives a complete
O(edges) certificate with no pairwise intersection tests.
"""

from __future__ import annotations

from collections import Counter

from .geometry import Generators, Point, embed, orient, polygon_area2


class TilingError(ValueError):
    """A planar-tiling axiom failed; `axiom` names the first violated one."""

    def __init__(self, axiom: str, detail: str = "") -> None:
        self.axiom = axiom
        self.detail = detail
        super().__init__(f"{axiom}: {detail}" if detail else axiom)


def check_planar_cover(
    gens: Generators,
    cycles: list[tuple[str, list[int]]],
    boundary: list[tuple[int, int]],
    area2: int,
) -> bool:
    """Verify that `cycles` (CCW vertex-mask cycles) exactly tile the region
    whose counterclockwise directed boundary edges are `boundary` and whose
    doubled area is `area2`.  Raises TilingError on the first violation.
    """
    points: dict[int, Point] = {}

    def pt(mask: int) -> Point:
        p = points.get(mask)
        if p is None:
            p = points[mask] = embed(mask, gens)
        return p

    used: Counter[tuple[int, int]] = Counter()
    total2 = 0
    for label, cyc in cycles:
        m = len(cyc)
        if m < 3:
            raise TilingError("tile-shape", f"{label} has fewer than 3 vertices")
        if len(set(cyc)) != m:
            raise TilingError("tile-shape", f"{label} repeats a vertex")
        pts = [pt(v) for v in cyc]
        for k in range(m):
            if orient(pts[k - 1], pts[k], pts[(k + 1) % m]) <= 0:
                raise TilingError(
                    "tile-convexity",
                    f"{label} is not strictly convex and counterclockwise at "
                    f"vertex index {k}",
                )
        total2 += polygon_area2(pts)
        for k in range(m):
            e = (cyc[k], cyc[(k + 1) % m])
            used[e] += 1
            if used[e] > 1:
                raise TilingError("edge-sharing", f"directed edge {e} used twice")

    bnd = Counter(boundary)
    for e, c in bnd.items():
        if c > 1:
            raise TilingError("region-boundary", f"boundary edge {e} repeated")
    seen = set(used) | set(bnd)
    for e in sorted(seen):
        u, v = e
        net = used.get((u, v), 0) - used.get((v, u), 0)
        want = bnd.get((u, v), 0) - bnd.get((v, u), 0)
        if net != want:
            if bnd.get((u, v), 0) or bnd.get((v, u), 0):
                raise TilingError(
                    "region-boundary",
                    f"boundary edge {e} not covered exactly once by the tiles",
                )
            raise TilingError(
                "edge-sharing",
                f"interior edge {e} is not shared by tiles on both sides",
            )
    if total2 != area2:
        raise TilingError(
            "area", f"tile areas sum to {total2}/2, region area is {area2}/2"
        )
    return True
