"""JSON encodings for the public object kinds.

Subsets are encoded as ascending element lists; every decoder validates
through the ordinary constructors, so parse(serialize(x)) == x on valid
data and malformed input raises ValueError.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Any

from . import bitsets as bs
from .combi import Combi, Delta, Lens, Nabla
from .geometry import Generators
from .patterns import CyclicPattern, GraphPattern
from .rhombus import Rhombus, RhombusTiling
from .separation import DomainReport, Permutation, SetFamily


def subset_to_json(mask: int) -> list[int]:
    return list(bs.iter_elements(mask))


def subset_from_json(data: Any) -> int:
    if not isinstance(data, list):
        raise ValueError("subset must be a list of elements")
    return bs.mask_of(int(e) for e in data)


def family_to_json(family: SetFamily) -> dict:
    return {"n": family.n, "members": [subset_to_json(m) for m in family.members]}


def family_from_json(data: Any) -> SetFamily:
    return SetFamily(int(data["n"]), (subset_from_json(m) for m in data["members"]))


def permutation_to_json(perm: Permutation) -> dict:
    return {"images": list(perm.images)}


def permutation_from_json(data: Any) -> Permutation:
    return Permutation(int(x) for x in data["images"])


def report_to_json(report: DomainReport) -> dict:
    return {
        "domain": family_to_json(report.domain),
        "relation": report.relation,
        "pure": report.pure,
        "ranks": list(report.ranks),
        "maximal_collections": [
            [subset_to_json(m) for m in fam.members]
            for fam in report.maximal_collections
        ],
    }


def tiling_to_json(tiling: RhombusTiling) -> dict:
    return {
        "n": tiling.n,
        "rhombi": [
            {"X": subset_to_json(t.base), "i": t.low, "j": t.high}
            for t in sorted(tiling.tiles)
        ],
    }


def tiling_from_json(data: Any) -> RhombusTiling:
    tiles = [
        Rhombus(subset_from_json(r["X"]), int(r["i"]), int(r["j"]))
        for r in data["rhombi"]
    ]
    return RhombusTiling(int(data["n"]), tiles)


def combi_to_json(combi: Combi) -> dict:
    return {
        "n": combi.n,
        "deltas": [
            {"apex": subset_to_json(d.apex), "base": [subset_to_json(d.left), subset_to_json(d.right)]}
            for d in sorted(combi.deltas)
        ],
        "nablas": [
            {"bottom": subset_to_json(v.bottom), "base": [subset_to_json(v.left), subset_to_json(v.right)]}
            for v in sorted(combi.nablas)
        ],
        "lenses": [
            {"upper": [subset_to_json(v) for v in l.upper], "lower": [subset_to_json(v) for v in l.lower]}
            for l in sorted(combi.lenses)
        ],
    }


def combi_from_json(data: Any) -> Combi:
    deltas = []
    for d in data.get("deltas", ()):
        apex = subset_from_json(d["apex"])
        left, right = (subset_from_json(x) for x in d["base"])
        deltas.append(Delta(apex, bs.min_element(apex & ~right), bs.min_element(apex & ~left)))
    nablas = []
    for v in data.get("nablas", ()):
        bottom = subset_from_json(v["bottom"])
        left, right = (subset_from_json(x) for x in v["base"])
        nablas.append(Nabla(bottom, bs.min_element(left & ~bottom), bs.min_element(right & ~bottom)))
    lenses = [
        Lens(
            tuple(subset_from_json(v) for v in l["upper"]),
            tuple(subset_from_json(v) for v in l["lower"]),
        )
        for l in data.get("lenses", ())
    ]
    return Combi(int(data["n"]), deltas, nablas, lenses)


def pattern_to_json(pattern: CyclicPattern) -> dict:
    return {"n": pattern.n, "cycle": [subset_to_json(v) for v in pattern.cycle]}


def pattern_from_json(data: Any) -> CyclicPattern:
    return CyclicPattern(int(data["n"]), (subset_from_json(v) for v in data["cycle"]))


def graph_pattern_to_json(pat: GraphPattern) -> dict:
    verts = list(pat.vertices)
    index = {v: k for k, v in enumerate(verts)}
    return {
        "n": pat.n,
        "vertices": [subset_to_json(v) for v in verts],
        "edges": [[index[u], index[v]] for u, v in pat.edges],
    }


def graph_pattern_from_json(data: Any) -> GraphPattern:
    verts = [subset_from_json(v) for v in data["vertices"]]
    edges = [(verts[int(u)], verts[int(v)]) for u, v in data["edges"]]
    return GraphPattern(int(data["n"]), verts, edges)


def path_to_json(path) -> dict:
    return {"vertices": [subset_to_json(v) for v in path]}


def path_from_json(data: Any) -> tuple[int, ...]:
    return tuple(subset_from_json(v) for v in data["vertices"])


def generators_to_json(gens: Generators) -> list:
    return [
        [{"num": x, "den": 1}, {"num": y, "den": 1}]
        for x, y in gens.vectors
    ]


def generators_from_json(data: Any, n: int | None = None) -> Generators:
    vecs = []
    for pair in data:
        (xr, yr) = (Fraction(int(c["num"]), int(c["den"])) for c in pair)
        vecs.append((xr, yr))
    denom = 1
    for x, y in vecs:
        denom = denom // gcd(denom, x.denominator) * x.denominator
        denom = denom // gcd(denom, y.denominator) * y.denominator
    ivecs = [(int(x * denom), int(y * denom)) for x, y in vecs]
    return Generators(n if n is not None else len(ivecs), ivecs)


def flip_trace_line(op: str, core: int, i: int, j: int, k: int) -> dict:
    return {"op": op, "Y": subset_to_json(core), "i": i, "j": j, "k": k}
