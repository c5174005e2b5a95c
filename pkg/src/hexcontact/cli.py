"""Command-line interface, file formats, and SVG rendering.

Subcommands: layout, verify, gen, render, stats.  Graphs travel as
embedded-graph JSON ({"n", "rotation", "outer_face", "labels"?}); plain
edge-list text ("n m" header then "u v" lines) is accepted only for
triangulations, whose embedding is unique up to reflection and gets
reconstructed face by face.  All emissions are byte-deterministic;
"-" means standard input/output.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .compact import draw_tree, rotate_drawing
from .graph import EmbeddedGraph, GraphError, validate
from .hexlayout import HexLayout, layout
from .prepare import AugmentationRecord
from .tree import CappedBinaryTree
from .verifier import verify_contact


class ParseError(ValueError):
    pass


def _reconstruct_embedding(n: int, edges: list[tuple[int, int]]) -> EmbeddedGraph:
    """Unique (up to reflection) embedding of an abstract triangulation.

    Faces are glued outward from a seed triangle: the two triangles on an
    edge are its endpoints' two common neighbors, so each known face
    forces its three neighbors.  Non-triangulations are rejected.
    """
    if n < 3 or len(edges) != 3 * n - 6:
        raise ParseError(
            f"edge list with n={n}, m={len(edges)} is not a triangulation; "
            "supply a rotation system instead"
        )
    nbr: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n) or u == v or v in nbr[u]:
            raise ParseError(f"bad edge {u} {v}")
        nbr[u].add(v)
        nbr[v].add(u)

    a = 0
    if not nbr[a]:
        raise ParseError("vertex 0 is isolated")
    b = min(nbr[a])
    common = sorted(nbr[a] & nbr[b])
    if len(common) != 2:
        raise ParseError(f"edge {a}-{b} has {len(common)} flanking triangles, expected 2")
    c = common[0]

    succ: dict[tuple[int, int], int] = {}

    def set_face(p: int, q: int, r: int) -> list[tuple[int, int, int]]:
        new = []
        for u, v, w in ((p, q, r), (q, r, p), (r, p, q)):
            if (u, v) in succ:
                if succ[(u, v)] != w:
                    raise ParseError("inconsistent face gluing; not a planar triangulation")
            else:
                succ[(u, v)] = w
                new.append((u, v, w))
        return new

    stack = set_face(a, b, c)
    while stack:
        u, v, w = stack.pop()
        # the face on the other side of (v, u): apex is the other common neighbor
        if (v, u) in succ:
            continue
        others = nbr[u] & nbr[v]
        others.discard(w)
        if len(others) != 1:
            raise ParseError(
                f"edge {u}-{v} has {1 + len(others)} flanking triangles; "
                "not a planar triangulation"
            )
        stack.extend(set_face(v, u, others.pop()))

    if len(succ) != 2 * len(edges):
        raise ParseError("face gluing did not cover every edge; graph is disconnected?")

    rotation = []
    for v in range(n):
        if not nbr[v]:
            raise ParseError(f"vertex {v} is isolated")
        start = min(nbr[v])
        seq = [start]
        while True:
            nxt = succ[(v, seq[-1])]
            if nxt == start:
                break
            seq.append(nxt)
            if len(seq) > len(nbr[v]):
                raise ParseError(f"rotation at vertex {v} does not close up")
        rotation.append(seq)

    g0 = EmbeddedGraph(n, rotation, ())
    best = None
    for fl in (g0.face_of(a, b), g0.face_of(b, a)):
        key = tuple(sorted(fl.vertices))
        if best is None or key < best[0]:
            best = (key, fl.vertices)
    g = EmbeddedGraph(n, rotation, best[1])
    validate(g).raise_if_failed()
    return g


def parse_graph(text: str) -> EmbeddedGraph:
    """Embedded-graph JSON, or an edge-list triangulation as a fallback."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            d = json.loads(text)
        except json.JSONDecodeError as e:
            raise ParseError(f"JSON parse error at line {e.lineno}, column {e.colno}: {e.msg}")
        for key in ("n", "rotation", "outer_face"):
            if key not in d:
                raise ParseError(f"graph JSON is missing the {key!r} field")
        g = EmbeddedGraph.from_json_dict(d)
        rep = validate(g)
        if not rep.ok:
            raise ParseError("invalid embedded graph: " + "; ".join(rep.problems))
        return g

    lines = [ln for ln in (raw.split("#", 1)[0].strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise ParseError("empty graph file")
    try:
        n, m = map(int, lines[0].split())
    except ValueError:
        raise ParseError(f"bad header line {lines[0]!r}; expected 'n m'")
    if len(lines) - 1 != m:
        raise ParseError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    for k, ln in enumerate(lines[1:], start=2):
        try:
            u, v = map(int, ln.split())
        except ValueError:
            raise ParseError(f"bad edge at line {k}: {ln!r}")
        edges.append((u, v))
    return _reconstruct_embedding(n, edges)


def emit_graph(g: EmbeddedGraph) -> str:
    return json.dumps(g.to_json_dict(), sort_keys=True, indent=1) + "\n"


def emit_layout(lay: HexLayout, rec: Optional[AugmentationRecord] = None) -> str:
    """Deterministic, key-sorted layout JSON; round-trips bit-exactly."""
    return json.dumps(lay.to_json_dict(rec), sort_keys=True, indent=1) + "\n"


def read_layout(text: str) -> HexLayout:
    return HexLayout.from_json_dict(json.loads(text))


# ---------------------------------------------------------------------------
# SVG
# ---------------------------------------------------------------------------

_PALETTE = (
    "#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462",
    "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd", "#ccebc5", "#ffed6f",
)


def emit_svg(lay: HexLayout, scale: int = 20, labels: bool = True) -> str:
    """One filled path per polygon, hatched holes, labels at centroids."""
    w, h = lay.grid
    pad = 1

    def pt(p) -> str:
        # flip y so larger y is up, as on paper
        return f"{(p[0] + pad) * scale},{(h - p[1] + pad) * scale}"

    out = []
    out.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="0 0 {(w + 2 * pad) * scale} {(h + 2 * pad) * scale}">'
    )
    out.append(
        '<defs><pattern id="hatch" width="6" height="6" patternUnits="userSpaceOnUse">'
        '<path d="M0,6 L6,0" stroke="#888888" stroke-width="1"/></pattern></defs>'
    )
    for i, (v, poly) in enumerate(sorted(lay.polygons.items())):
        fill = _PALETTE[i % len(_PALETTE)]
        d = "M" + " L".join(pt(p) for p in poly) + " Z"
        out.append(f'<path d="{d}" fill="{fill}" stroke="#333333" stroke-width="1"/>')
    for poly in lay.holes:
        d = "M" + " L".join(pt(p) for p in poly) + " Z"
        out.append(f'<path d="{d}" fill="url(#hatch)" stroke="#888888" stroke-width="1"/>')
    if labels:
        for v, poly in sorted(lay.polygons.items()):
            cx = sum(p[0] for p in poly) / len(poly)
            cy = sum(p[1] for p in poly) / len(poly)
            out.append(
                f'<text x="{(cx + pad) * scale:.1f}" y="{(h - cy + pad) * scale:.1f}" '
                f'font-size="{scale * 0.6:.1f}" text-anchor="middle" '
                f'dominant-baseline="middle">{v}</text>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# command dispatch
# ---------------------------------------------------------------------------


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hexcontact")
    sub = ap.add_subparsers(dest="cmd", required=True)

    lay = sub.add_parser("layout", help="compute a touching-hexagons layout")
    lay.add_argument("-i", "--input", default="-")
    lay.add_argument("-o", "--output", default="-")
    lay.add_argument("--backend", choices=("carve", "kant"), default="carve")
    lay.add_argument("--rotated", action="store_true")
    lay.add_argument("--keep-dummies", action="store_true")
    lay.add_argument("--svg", help="also write an SVG rendering here")
    lay.add_argument("--order-json", help="dump the canonical order for debugging")

    ver = sub.add_parser("verify", help="verify a layout against a graph")
    ver.add_argument("-g", "--graph", required=True)
    ver.add_argument("-l", "--layout", required=True)

    gen = sub.add_parser("gen", help="generate fixture graphs")
    gsub = gen.add_subparsers(dest="family", required=True)
    ggk = gsub.add_parser("gk")
    ggk.add_argument("--k", type=int, required=True)
    ggk.add_argument("-o", "--output", default="-")
    gtri = gsub.add_parser("tri")
    gtri.add_argument("--n", type=int, required=True)
    gtri.add_argument("--seed", type=int, default=0)
    gtri.add_argument("-o", "--output", default="-")

    ren = sub.add_parser("render", help="render a layout JSON to SVG")
    ren.add_argument("-i", "--input", default="-")
    ren.add_argument("-o", "--output", default="-")
    ren.add_argument("--scale", type=int, default=20)

    st = sub.add_parser("stats", help="layout statistics for a graph")
    st.add_argument("-i", "--input", default="-")
    st.add_argument("--backend", choices=("carve", "kant"), default="carve")
    return ap


def main(argv: Optional[list[str]] = None) -> int:
    ap = _build_parser()
    args = ap.parse_args(argv)
    try:
        if args.cmd == "layout":
            g = parse_graph(_read(args.input))
            if args.order_json:
                from .canonical import canonical_order
                from .prepare import triangulate

                tri, _ = triangulate(g)
                a, b, c = tri.outer_face
                _write(
                    args.order_json,
                    json.dumps(canonical_order(tri, (a, c, b)).to_json_dict(), sort_keys=True)
                    + "\n",
                )
            lay, rec = layout(
                g,
                backend=args.backend,
                rotated=args.rotated,
                keep_dummies=args.keep_dummies,
            )
            _write(args.output, emit_layout(lay, rec))
            if args.svg:
                _write(args.svg, emit_svg(lay))
            return 0

        if args.cmd == "verify":
            g = parse_graph(_read(args.graph))
            lay = read_layout(_read(args.layout))
            rep = verify_contact(g, lay)
            sys.stdout.write(json.dumps(rep.to_json_dict(), sort_keys=True, indent=1) + "\n")
            return 0 if rep.ok else 1

        if args.cmd == "gen":
            from .generators import gen_gk, gen_random_triangulation

            if args.family == "gk":
                g = gen_gk(args.k)
            else:
                g = gen_random_triangulation(args.n, args.seed)
            _write(args.output, emit_graph(g))
            return 0

        if args.cmd == "render":
            lay = read_layout(_read(args.input))
            _write(args.output, emit_svg(lay, scale=args.scale))
            return 0

        if args.cmd == "stats":
            return _stats(args)
    except (ParseError, GraphError, OSError) as e:
        sys.stderr.write(f"error: {e}\n")
        return 1
    return 2


def _stats(args) -> int:
    from collections import Counter

    from .canonical import canonical_order
    from .carve import carve, shape_class
    from .prepare import triangulate

    g = parse_graph(_read(args.input))
    lay, rec = layout(g, backend=args.backend)
    info: dict = {
        "n": g.n,
        "m": g.m,
        "backend": args.backend,
        "grid": {"w": lay.grid[0], "h": lay.grid[1]},
        "max_sides": max(len(p) for p in lay.polygons.values()),
        "holes": len(lay.holes),
        "dummies": len(rec.dummy_vertices),
    }
    if args.backend == "carve":
        tri, _ = triangulate(g)
        a, b, c = tri.outer_face
        order = canonical_order(tri, (a, c, b))
        tree, recs = carve(tri, order)
        census = Counter(shape_class(r) for r in recs)
        info["tree_nodes"] = tree.n_nodes
        info["shape_census"] = {k: census[k] for k in sorted(census)}
    sys.stdout.write(json.dumps(info, sort_keys=True, indent=1) + "\n")
    return 0


def main_entry() -> None:
    sys.exit(main(sys.argv[1:]))


def draw_tree_json(text: str, rotated: bool = False) -> str:
    """Standalone tree-drawing entry: capped-tree JSON in, positions out.

    Lets golden tests replay the compaction tables without a graph.
    """
    t = CappedBinaryTree.from_json_dict(json.loads(text))
    d, _ = draw_tree(t)
    if rotated:
        d = rotate_drawing(d)
    return json.dumps(d.to_json_dict(), sort_keys=True) + "\n"
