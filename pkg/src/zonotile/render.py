"""Deterministic SVG rendering of tilings, combies, and pattern curves.

Coordinates stay exact until serialization, where they are rounded to a
fixed six-decimal policy; identical inputs therefore produce byte-identical
output.  Vertical edges are drawn bold, horizontal edges thin, lenses are
shaded, and pattern curves dashed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import bitsets as bs
from .combi import Combi
from .geometry import Generators, default_generators, embed
from .patterns import CyclicPattern, QuasiCombi
from .rhombus import RhombusTiling


@dataclass(frozen=True)
class RenderStyle:
    scale: Fraction = Fraction(160)
    margin: Fraction = Fraction(30)
    vertical_width: Fraction = Fraction(5, 2)
    horizontal_width: Fraction = Fraction(1)
    lens_fill: bool = True
    labels: bool = True

    def __post_init__(self) -> None:
        if self.vertical_width <= self.horizontal_width:
            raise ValueError("vertical edges must be drawn wider than horizontal ones")


def _fmt(x: Fraction) -> str:
    scaled = round(Fraction(x) * 10**6)
    sign = "-" if scaled < 0 else ""
    scaled = abs(scaled)
    whole, frac = divmod(scaled, 10**6)
    return f"{sign}{whole}.{frac:06d}"


class _Canvas:
    def __init__(self, gens: Generators, style: RenderStyle) -> None:
        self.gens = gens
        self.style = style
        norm2 = sum(c * c for c in gens.vectors[0])
        self.unit = Fraction(style.scale) / _isqrt_fraction(norm2)
        top = gens.top
        self.width = Fraction(abs(sum(min(v[0], 0) for v in gens.vectors))
                              + abs(sum(max(v[0], 0) for v in gens.vectors))) * self.unit
        self.height = Fraction(top[1]) * self.unit
        self.x_shift = Fraction(-sum(min(v[0], 0) for v in gens.vectors)) * self.unit
        self.parts: list[str] = []

    def to_svg(self, p) -> tuple[Fraction, Fraction]:
        x = Fraction(p[0]) * self.unit + self.x_shift + self.style.margin
        y = self.height - Fraction(p[1]) * self.unit + self.style.margin
        return x, y

    def line(self, a, b, width: Fraction, color: str, dashed: bool = False) -> None:
        (x1, y1), (x2, y2) = self.to_svg(a), self.to_svg(b)
        dash = ' stroke-dasharray="6,4"' if dashed else ""
        self.parts.append(
            f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
            f'stroke="{color}" stroke-width="{_fmt(width)}" stroke-linecap="round"{dash}/>'
        )

    def polygon(self, pts, fill: str, opacity: str = "0.45") -> None:
        coords = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in (self.to_svg(p) for p in pts))
        self.parts.append(f'<polygon points="{coords}" fill="{fill}" fill-opacity="{opacity}" stroke="none"/>')

    def label(self, p, text: str) -> None:
        x, y = self.to_svg(p)
        self.parts.append(
            f'<text x="{_fmt(x)}" y="{_fmt(y - Fraction(7))}" font-size="11" '
            f'font-family="monospace" text-anchor="middle">{text}</text>'
        )
        self.parts.append(
            f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="3" fill="black"/>'
        )

    def document(self) -> str:
        w = _fmt(self.width + 2 * self.style.margin)
        h = _fmt(self.height + 2 * self.style.margin)
        body = "\n".join(self.parts)
        return (
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
            f'viewBox="0 0 {w} {h}">\n{body}\n</svg>\n'
        )


def _isqrt_fraction(norm2: int) -> Fraction:
    """Rational approximation of sqrt(norm2), good far beyond pixel scale."""
    from math import isqrt

    scale = 10**12
    return Fraction(isqrt(norm2 * scale * scale), scale)


def _vertex_label(mask: int) -> str:
    if mask == 0:
        return "&#8709;"
    return ",".join(str(e) for e in bs.iter_elements(mask))


def render_svg(obj, style: RenderStyle | None = None, gens: Generators | None = None) -> str:
    """SVG text for a Combi, RhombusTiling, QuasiCombi, or CyclicPattern."""
    style = style or RenderStyle()
    if isinstance(obj, RhombusTiling):
        return _render_edges(obj.n, _rhombus_edges(obj), [], [], style, gens)
    if isinstance(obj, Combi):
        vert = sorted(obj.vertical_edges())
        horiz = sorted(obj.horizontal_edges())
        fills = [tuple(l.cycle()) for l in sorted(obj.lenses)]
        return _render_edges(obj.n, vert, horiz, fills, style, gens)
    if isinstance(obj, QuasiCombi):
        vert, horiz = set(), set()
        for d in obj.deltas:
            vert.update(((d.left, d.apex), (d.right, d.apex)))
            horiz.add(d.base)
        for v in obj.nablas:
            vert.update(((v.bottom, v.left), (v.bottom, v.right)))
            horiz.add(v.base)
        fills = [tuple(l.cycle()) for l in sorted(obj.lenses)]
        for l in obj.lenses:
            horiz.update(zip(l.upper, l.upper[1:]))
            horiz.update(zip(l.lower, l.lower[1:]))
        for u in sorted(obj.upper_semis):
            horiz.update(u.edges())
            horiz.add(u.chord)
            fills.append(tuple(u.cycle()))
        for w in sorted(obj.lower_semis):
            horiz.update(w.edges())
            horiz.add(w.chord)
            fills.append(tuple(w.cycle()))
        return _render_edges(obj.n, sorted(vert), sorted(horiz), fills, style, gens)
    if isinstance(obj, CyclicPattern):
        return _render_pattern(obj, style, gens)
    raise TypeError(f"cannot render object of type {type(obj).__name__}")


def _rhombus_edges(tiling: RhombusTiling):
    return sorted(tiling.edges())


def _render_edges(n, vertical, horizontal, lens_cycles, style, gens) -> str:
    gens = gens or default_generators(n)
    canvas = _Canvas(gens, style)
    if style.lens_fill:
        for cyc in lens_cycles:
            canvas.polygon([embed(v, gens) for v in cyc], "#9ecae1")
    for a, b in horizontal:
        canvas.line(embed(a, gens), embed(b, gens), style.horizontal_width, "#555555")
    for a, b in vertical:
        canvas.line(embed(a, gens), embed(b, gens), style.vertical_width, "#000000")
    if style.labels:
        verts = {v for e in list(vertical) + list(horizontal) for v in e}
        for v in sorted(verts):
            canvas.label(embed(v, gens), _vertex_label(v))
    return canvas.document()


def _render_pattern(pattern: CyclicPattern, style: RenderStyle, gens) -> str:
    gens = gens or default_generators(pattern.n)
    canvas = _Canvas(gens, style)
    cyc = pattern.cycle
    for a, b in zip(cyc, cyc[1:] + cyc[:1]):
        canvas.line(embed(a, gens), embed(b, gens), style.horizontal_width * 2, "#c22", dashed=True)
    if style.labels:
        for v in sorted(set(cyc)):
            canvas.label(embed(v, gens), _vertex_label(v))
    return canvas.document()
