"""Direct computation of the topological counters of a digital object.

The counters are: p pixels, v distinct corner lattice points, c0/c1 connected
components under 0-/1-adjacency, h proper holes (finite 1-components of the
complement), b 2x2 blocks, and t tunnels.  A tunnel is a lattice point whose
incident pixels are exactly a diagonal pair: two pixels meeting only at that
point.  The counters are tied together by

    t = v - 2(p + c - h) + b        (c = number of 0-components)

which ``analyze`` evaluates alongside the directly counted t as a built-in
consistency check.

Two implementations back the public functions: a dict/union-find path for
small objects and a numpy/scipy raster path that takes over once the bounding
box passes ``DENSE_AREA_THRESHOLD`` cells.  Both produce identical reports;
the test suite cross-checks them.  Hole counting always materializes the
bounding box (inflated by one cell), so memory is proportional to box area,
capped at ``MAX_RASTER_CELLS``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Optional, Tuple

import numpy as np
from scipy import ndimage as ndi

from .grid import Adjacency, DigitalObject, Pixel

# Pure-Python counting is faster than per-call numpy overhead below roughly
# this many bounding-box cells.
DENSE_AREA_THRESHOLD = 4096

# Hard ceiling for rasterization (hole counting is O(bounding box area)).
MAX_RASTER_CELLS = 100_000_000

_STRUCT4 = np.array([[0, 1, 0], [1, 1, 1], [0, 1, 0]], dtype=bool)
_STRUCT8 = np.ones((3, 3), dtype=bool)

# Occupancy bits of the four pixel slots around a lattice point, seen from the
# point: SW=1, SE=2, NW=4, NE=8.  A point is a tunnel iff its mask is one of
# the two diagonal pairs, and the center of a 2-block iff all four are set.
_TUNNEL_MASKS = (0b0110, 0b1001)
_BLOCK_MASK = 0b1111


@dataclass(frozen=True)
class InvariantReport:
    """All counters of one object plus the formula cross-check.

    ``t_formula`` is v - 2(p + c0 - h) + b; ``consistent`` records whether it
    agrees with the directly counted ``t_direct``.  ``c1`` is diagnostic only
    and may be None (incremental snapshots do not track it).
    """

    p: int
    v: int
    c0: int
    c1: Optional[int]
    h: int
    b: int
    t_direct: int
    t_formula: int
    consistent: bool


EMPTY_REPORT = InvariantReport(0, 0, 0, 0, 0, 0, 0, 0, True)


# ---------------------------------------------------------------------------
# sparse helpers

def corner_masks(pixels: Iterable[Pixel]) -> Dict[Tuple[int, int], int]:
    """Map each corner lattice point to its 4-bit pixel-occupancy mask."""
    masks: Dict[Tuple[int, int], int] = {}
    get = masks.get
    for x, y in pixels:
        x1 = x + 1
        y1 = y + 1
        masks[(x, y)] = get((x, y), 0) | 8
        masks[(x1, y)] = get((x1, y), 0) | 4
        masks[(x, y1)] = get((x, y1), 0) | 2
        masks[(x1, y1)] = get((x1, y1), 0) | 1
    return masks


def _vbt_sparse(pixels: FrozenSet[Pixel]) -> Tuple[int, int, int]:
    masks = corner_masks(pixels)
    b = t = 0
    for m in masks.values():
        if m == _BLOCK_MASK:
            b += 1
        elif m == 0b0110 or m == 0b1001:
            t += 1
    return len(masks), b, t


def _union_scan(cells: Iterable[Pixel], preds: Tuple[Pixel, ...]) -> int:
    """Count connected components of ``cells`` (given in raster order).

    ``preds`` are the neighbor offsets pointing at already-scanned cells, so
    a single pass with union-find labels everything.
    """
    parent: Dict[Pixel, Pixel] = {}
    count = 0
    for p in cells:
        parent[p] = p
        count += 1
        x, y = p
        for dx, dy in preds:
            q = (x + dx, y + dy)
            if q in parent:
                a = p
                while parent[a] != a:
                    parent[a] = parent[parent[a]]
                    a = parent[a]
                r = q
                while parent[r] != r:
                    parent[r] = parent[parent[r]]
                    r = parent[r]
                if a != r:
                    parent[r] = a
                    count -= 1
    return count


_PREDS_0 = ((-1, 0), (-1, -1), (0, -1), (1, -1))
_PREDS_1 = ((-1, 0), (0, -1))


def _components_sparse(pixels: FrozenSet[Pixel], adjacency: Adjacency) -> int:
    if not pixels:
        return 0
    order = sorted(pixels, key=lambda p: (p[1], p[0]))
    preds = _PREDS_1 if adjacency is Adjacency.ONE else _PREDS_0
    return _union_scan(order, preds)


def _complement_components_sparse(obj: DigitalObject, adjacency: Adjacency) -> int:
    """Components of the complement within the bounding box inflated by 1."""
    box = obj.bounding_box()
    if box is None:
        return 1
    (x0, y0), (x1, y1) = box
    pixels = obj.pixels
    preds = _PREDS_1 if adjacency is Adjacency.ONE else _PREDS_0
    cells = [
        (x, y)
        for y in range(y0 - 1, y1 + 2)
        for x in range(x0 - 1, x1 + 2)
        if (x, y) not in pixels
    ]
    return _union_scan(cells, preds)


# ---------------------------------------------------------------------------
# dense helpers

def rasterize(obj: DigitalObject) -> Tuple[np.ndarray, Tuple[int, int]]:
    """Boolean mask over the tight bounding box plus its (x0, y0) origin.

    Row index is y - y0, column index is x - x0.  Raises ValueError when the
    box exceeds MAX_RASTER_CELLS.
    """
    box = obj.bounding_box()
    if box is None:
        return np.zeros((0, 0), dtype=bool), (0, 0)
    (x0, y0), (x1, y1) = box
    w = x1 - x0 + 1
    h = y1 - y0 + 1
    if w * h > MAX_RASTER_CELLS:
        raise ValueError(
            f"bounding box {w}x{h} exceeds the raster limit of {MAX_RASTER_CELLS} cells"
        )
    flat = np.zeros(w * h, dtype=bool)
    idx = np.fromiter(
        ((y - y0) * w + (x - x0) for x, y in obj.pixels),
        dtype=np.int64,
        count=len(obj),
    )
    flat[idx] = True
    return flat.reshape(h, w), (x0, y0)


def _quadrants(mask: np.ndarray):
    """The four pixel-occupancy views around every corner of a padded mask."""
    padded = np.pad(mask, 1)
    return padded[:-1, :-1], padded[:-1, 1:], padded[1:, :-1], padded[1:, 1:]


def _analyze_dense(obj: DigitalObject) -> InvariantReport:
    mask, _ = rasterize(obj)
    p = int(mask.sum())
    q00, q01, q10, q11 = _quadrants(mask)
    inc = q00.astype(np.uint8) + q01 + q10 + q11
    v = int(np.count_nonzero(inc))
    b = int(np.count_nonzero(inc == 4))
    diagonal = (q00 & q11 & ~q01 & ~q10) | (q01 & q10 & ~q00 & ~q11)
    t = int(np.count_nonzero(diagonal))
    c0 = int(ndi.label(mask, structure=_STRUCT8)[1])
    c1 = int(ndi.label(mask, structure=_STRUCT4)[1])
    h = int(ndi.label(~np.pad(mask, 1), structure=_STRUCT4)[1]) - 1
    tf = tunnels_by_formula(p, v, c0, h, b)
    return InvariantReport(p, v, c0, c1, h, b, t, tf, t == tf)


def _box_area(obj: DigitalObject) -> int:
    box = obj.bounding_box()
    if box is None:
        return 0
    (x0, y0), (x1, y1) = box
    return (x1 - x0 + 1) * (y1 - y0 + 1)


# ---------------------------------------------------------------------------
# public counters

def count_pixels(obj: DigitalObject) -> int:
    """Number of pixels of the object."""
    return len(obj)


def count_vertices(obj: DigitalObject) -> int:
    """Number of distinct lattice points occurring as pixel corners."""
    return len(corner_masks(obj.pixels))


def count_blocks(obj: DigitalObject) -> int:
    """Number of complete 2x2 squares of pixels."""
    masks = corner_masks(obj.pixels)
    return sum(1 for m in masks.values() if m == _BLOCK_MASK)


def count_tunnels_direct(obj: DigitalObject) -> int:
    """Number of lattice points incident to exactly one diagonal pixel pair."""
    masks = corner_masks(obj.pixels)
    return sum(1 for m in masks.values() if m in _TUNNEL_MASKS)


def count_components(obj: DigitalObject, adjacency: Adjacency = Adjacency.ZERO) -> int:
    """Number of maximal connected subsets under the given adjacency."""
    return _components_sparse(obj.pixels, adjacency)


def count_holes(obj: DigitalObject) -> int:
    """Number of proper holes: finite 1-components of the complement.

    Flood fill runs over the bounding box inflated by one cell on each side;
    the single component touching the inflated frame is the improper region
    and is never counted.
    """
    if not obj:
        return 0
    if _box_area(obj) > DENSE_AREA_THRESHOLD:
        mask, _ = rasterize(obj)
        return int(ndi.label(~np.pad(mask, 1), structure=_STRUCT4)[1]) - 1
    return _complement_components_sparse(obj, Adjacency.ONE) - 1


def tunnels_by_formula(p: int, v: int, c: int, h: int, b: int) -> int:
    """Evaluate v - 2(p + c - h) + b.

    Signed on purpose: a negative result from counter inputs signals a bug
    rather than a valid tunnel count.
    """
    return v - 2 * (p + c - h) + b


def analyze(obj: DigitalObject) -> InvariantReport:
    """All counters of the object, plus the formula evaluation and verdict."""
    p = len(obj)
    if p == 0:
        return EMPTY_REPORT
    if _box_area(obj) > DENSE_AREA_THRESHOLD:
        return _analyze_dense(obj)
    pixels = obj.pixels
    v, b, t = _vbt_sparse(pixels)
    c0 = _components_sparse(pixels, Adjacency.ZERO)
    c1 = _components_sparse(pixels, Adjacency.ONE)
    h = _complement_components_sparse(obj, Adjacency.ONE) - 1
    tf = tunnels_by_formula(p, v, c0, h, b)
    return InvariantReport(p, v, c0, c1, h, b, t, tf, t == tf)


def is_tunnel_free(obj: DigitalObject) -> bool:
    """True when the object has no tunnels at all."""
    return count_tunnels_direct(obj) == 0


def is_k_separating(m: DigitalObject, s: DigitalObject, adjacency: Adjacency) -> bool:
    """True when removing m from s leaves s disconnected under the adjacency.

    Requires m to be a subset of s; an empty remainder counts as connected.
    """
    if not m.pixels <= s.pixels:
        raise ValueError("m must be a subset of s")
    rest = s.pixels - m.pixels
    return _components_sparse(frozenset(rest), adjacency) >= 2


def has_separating_tunnels(obj: DigitalObject) -> bool:
    """True when some complement regions merge under 0- but not 1-adjacency.

    Computed on the complement within the inflated bounding box: strictly
    more 1-components than 0-components means a hole escapes diagonally,
    i.e. the object separates under 1- but not 0-adjacency.  This is the
    region-separation notion of a tunnel; it implies count_tunnels_direct > 0
    but not conversely (a lone diagonal pair has a countable tunnel point yet
    separates nothing).
    """
    if not obj:
        return False
    if _box_area(obj) > DENSE_AREA_THRESHOLD:
        mask, _ = rasterize(obj)
        comp = ~np.pad(mask, 1)
        n1 = int(ndi.label(comp, structure=_STRUCT4)[1])
        n0 = int(ndi.label(comp, structure=_STRUCT8)[1])
    else:
        n1 = _complement_components_sparse(obj, Adjacency.ONE)
        n0 = _complement_components_sparse(obj, Adjacency.ZERO)
    return n1 > n0
