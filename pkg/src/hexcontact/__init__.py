"""hexcontact: touching-hexagons contact representations of planar graphs.

Any connected planar graph becomes a set of interior-disjoint convex
polygons with at most six sides each, sides drawn with at most three
slopes, on an O(n) x O(n) integer grid, such that two polygons share a
positive-length boundary segment exactly when their vertices are
adjacent.  An exact-arithmetic verifier checks that claim independently.
"""

from .canonical import CanonicalOrder, canonical_order, verify_canonical
from .carve import RegionRecord, carve, shape_class
from .compact import GridDrawing, draw_tree, front_sets, rotate_drawing
from .exact import DyadicDrawing, carve_exact, extract_tree
from .graph import (
    EmbeddedGraph,
    Face,
    GraphError,
    ValidationReport,
    articulation_points,
    dual,
    faces,
    is_triangulated,
    validate,
)
from .hexlayout import HexLayout, layout, materialize
from .kant import KantDrawing, augment_xyz, kant_draw, kant_layout
from .prepare import AugmentationRecord, biconnect, stellate, strip, triangulate
from .tree import CappedBinaryTree, validate_tree
from .verifier import ContactReport, verify_contact, verify_geometry, verify_tiling

__all__ = [
    "AugmentationRecord",
    "CanonicalOrder",
    "CappedBinaryTree",
    "ContactReport",
    "DyadicDrawing",
    "EmbeddedGraph",
    "Face",
    "GraphError",
    "GridDrawing",
    "HexLayout",
    "KantDrawing",
    "RegionRecord",
    "ValidationReport",
    "articulation_points",
    "augment_xyz",
    "biconnect",
    "canonical_order",
    "carve",
    "carve_exact",
    "draw_tree",
    "dual",
    "extract_tree",
    "faces",
    "front_sets",
    "is_triangulated",
    "kant_draw",
    "kant_layout",
    "layout",
    "materialize",
    "rotate_drawing",
    "shape_class",
    "stellate",
    "strip",
    "triangulate",
    "validate",
    "validate_tree",
    "verify_canonical",
    "verify_contact",
    "verify_geometry",
    "verify_tiling",
]

__version__ = "0.1.0"
