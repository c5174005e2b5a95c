"""Materialize per-vertex polygons and run the full layout pipeline.

The pipeline: biconnect and stellate the input to a triangulation,
compute the canonical order, carve the capped binary tree, draw it on
the grid (optionally rotating the 45-degree lattice), map every region's
corner nodes to coordinates, and finally re-tag dummy polygons as holes.
For a triangulated input the polygons tile the drawn outer triangle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .canonical import canonical_order
from .carve import RegionRecord, carve
from .compact import GridDrawing, draw_tree, rotate_drawing
from .graph import EmbeddedGraph, GraphError, validate
from .prepare import AugmentationRecord, strip, triangulate

Point = tuple[int, int]


@dataclass
class HexLayout:
    """Per-vertex convex <=6-gons on an integer grid, plus tagged holes.

    Polygons are counterclockwise with the lexicographically smallest
    corner first; ``mode`` names the slope set the sides live in.
    """

    polygons: dict[int, list[Point]]
    holes: list[list[Point]] = field(default_factory=list)
    grid: tuple[int, int] = (0, 0)
    mode: str = "standard"
    outer: Optional[list[Point]] = None  # drawn outer boundary, if known

    def to_json_dict(self, dummies: Optional[AugmentationRecord] = None) -> dict:
        d = {
            "mode": self.mode,
            "grid": {"w": self.grid[0], "h": self.grid[1]},
            "vertices": [
                {"id": v, "polygon": [list(p) for p in poly]}
                for v, poly in sorted(self.polygons.items())
            ],
            "holes": [[list(p) for p in poly] for poly in self.holes],
        }
        if dummies is not None:
            d["dummies"] = dummies.to_json_dict()
        return d

    @classmethod
    def from_json_dict(cls, d: dict) -> "HexLayout":
        return cls(
            polygons={e["id"]: [tuple(p) for p in e["polygon"]] for e in d["vertices"]},
            holes=[[tuple(p) for p in poly] for poly in d.get("holes", [])],
            grid=(d["grid"]["w"], d["grid"]["h"]),
            mode=d["mode"],
        )


def collapse_polygon(pts: list[Point]) -> list[Point]:
    """Drop duplicate and collinear consecutive corners; rotate to lex-min."""
    uniq: list[Point] = []
    for p in pts:
        if uniq and p == uniq[-1]:
            continue
        uniq.append(p)
    if len(uniq) > 1 and uniq[0] == uniq[-1]:
        uniq.pop()
    out: list[Point] = []
    for p in uniq:
        while len(out) >= 2:
            a, b = out[-2], out[-1]
            if (b[0] - a[0]) * (p[1] - b[1]) - (b[1] - a[1]) * (p[0] - b[0]) == 0:
                out.pop()
            else:
                break
        out.append(p)
    # wrap-around corners
    while len(out) >= 3:
        a, b, c = out[-2], out[-1], out[0]
        if (b[0] - a[0]) * (c[1] - b[1]) - (b[1] - a[1]) * (c[0] - b[0]) == 0:
            out.pop()
        else:
            break
    while len(out) >= 3:
        a, b, c = out[-1], out[0], out[1]
        if (b[0] - a[0]) * (c[1] - b[1]) - (b[1] - a[1]) * (c[0] - b[0]) == 0:
            out.pop(0)
        else:
            break
    if len(out) < 3:
        raise GraphError("polygon degenerated while collapsing corners")
    j = min(range(len(out)), key=lambda i: out[i])
    return out[j:] + out[:j]


def materialize(d: GridDrawing, recs: list[RegionRecord]) -> HexLayout:
    """Map every region's corner nodes to grid coordinates.

    Corner lists are clockwise in drawing coordinates, so they are
    reversed for counterclockwise emission; the zero-length bottoms and
    any collinear corners collapse away here, never in the records.
    """
    polygons: dict[int, list[Point]] = {}
    xs, ys = d.xs, d.ys
    nn = len(xs)
    for rec in recs:
        ids = rec.corners()
        if any(i < 0 or i >= nn for i in ids):
            raise GraphError(f"region of vertex {rec.vertex} references a missing node")
        pts = [(xs[i], ys[i]) for i in reversed(ids)]
        polygons[rec.vertex] = collapse_polygon(pts)
    return HexLayout(polygons=polygons, grid=(d.width, d.height), mode=d.mode)


def outer_triangle(d: GridDrawing, tree) -> list[Point]:
    """The drawn image of the initial triangle: root and the outermost
    cap set's two extreme leaves, counterclockwise."""
    outer_cap = tree.cap_sets[-1]
    pts = [d.pos(tree.root), d.pos(outer_cap[-1]), d.pos(outer_cap[0])]
    from .verifier import doubled_area

    if doubled_area(pts) < 0:
        pts.reverse()
    return pts


def layout(
    g: EmbeddedGraph,
    *,
    backend: str = "carve",
    rotated: bool = False,
    keep_dummies: bool = False,
    merge: str = "zip",
) -> tuple[HexLayout, AugmentationRecord]:
    """Full pipeline from any connected planar embedded graph."""
    validate(g).raise_if_failed()
    if backend == "kant":
        if rotated:
            raise GraphError("--rotated applies to the carve backend only")
        from .kant import kant_layout

        return kant_layout(g, keep_dummies=keep_dummies)
    if backend != "carve":
        raise GraphError(f"unknown backend {backend!r}")

    tri, rec = triangulate(g)
    a, b, c = tri.outer_face
    order = canonical_order(tri, (a, c, b))
    tree, recs = carve(tri, order)
    # carve's output satisfies the tree invariants by construction
    drawing, _ = draw_tree(tree, merge=merge, validated=True)
    if rotated:
        drawing = rotate_drawing(drawing)
    lay = materialize(drawing, recs)
    lay.outer = outer_triangle(drawing, tree)
    if not keep_dummies:
        lay = strip(lay, rec)
    return lay, rec
