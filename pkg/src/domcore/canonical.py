"""Canonical forms for small graphs via individualization-refinement.

The canonical form of a graph is the lexicographically smallest byte
string over all relabelings: one byte for the vertex count, then the
upper triangle of the relabeled adjacency matrix packed row by row.
Instead of trying all n! labelings, the search refines an ordered
partition of the vertices to equitability (every cell sees every cell
with a uniform neighbor count), then branches only on the vertices of
the first non-singleton cell.  Cell splitting and cell ordering depend
only on neighbor-count keys, never on vertex labels, so isomorphic
graphs explore identical partition trees and reach identical minima.

One shortcut keeps highly symmetric graphs cheap: when the partition is
stable and every non-singleton cell is internally complete or empty and
uniform toward every other cell, any within-cell order yields the same
byte string, so cells are serialized in index order without branching.

Intended for the enumeration sizes (n <= 16); beyond that the search
may be slow, so larger inputs are rejected.
"""

from __future__ import annotations

from .graph import Graph, GraphError, bits

CANONICAL_MAX = 16


def _refine(adj: tuple[int, ...], cells: list[int]) -> list[int]:
    """Refine an ordered partition to equitability.

    Each round splits every cell by the vector of neighbor counts into
    the current round's cells; fragments are ordered by their key, so
    the outcome is independent of vertex labels.
    """
    while True:
        changed = False
        new_cells: list[int] = []
        for cell in cells:
            if cell & (cell - 1) == 0:
                new_cells.append(cell)
                continue
            groups: dict[tuple[int, ...], int] = {}
            m = cell
            while m:
                low = m & -m
                v = low.bit_length() - 1
                m ^= low
                key = tuple((adj[v] & c).bit_count() for c in cells)
                groups[key] = groups.get(key, 0) | low
            if len(groups) == 1:
                new_cells.append(cell)
            else:
                changed = True
                for key in sorted(groups):
                    new_cells.append(groups[key])
        cells = new_cells
        if not changed:
            return cells


def _uniform_cells(adj: tuple[int, ...], cells: list[int]) -> bool:
    """True if every non-singleton cell is interchangeable vertex-wise.

    Requires each such cell to induce a clique or an independent set and
    to see identical neighbor sets in every other cell; transposing two
    vertices of such a cell is then an automorphism.
    """
    for cell in cells:
        if cell & (cell - 1) == 0:
            continue
        seen_inside = None
        seen_outside = None
        m = cell
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            inside = adj[v] & cell
            inside_kind = 0 if inside == 0 else (1 if inside == cell ^ low else 2)
            outside = adj[v] & ~cell
            if seen_inside is None:
                seen_inside = inside_kind
                seen_outside = outside
            elif inside_kind != seen_inside or outside != seen_outside:
                return False
            if inside_kind == 2:
                return False
    return True


def _labeling_bits(adj: tuple[int, ...], order: list[int]) -> int:
    """Upper-triangle bits of the relabeled adjacency, row-major, as int."""
    n = len(order)
    value = 0
    for i in range(n):
        ai = adj[order[i]]
        for j in range(i + 1, n):
            value = (value << 1) | ((ai >> order[j]) & 1)
    return value


def _cells_to_order(cells: list[int]) -> list[int]:
    order = []
    for cell in cells:
        for v in bits(cell):
            order.append(v)
    return order


def _search(adj: tuple[int, ...], cells: list[int], best: list[int | None]) -> None:
    cells = _refine(adj, cells)
    non_singleton = next((i for i, c in enumerate(cells) if c & (c - 1)), None)
    if non_singleton is None or _uniform_cells(adj, cells):
        value = _labeling_bits(adj, _cells_to_order(cells))
        if best[0] is None or value < best[0]:
            best[0] = value
        return
    target = cells[non_singleton]
    for v in bits(target):
        child = (
            cells[:non_singleton]
            + [1 << v, target ^ (1 << v)]
            + cells[non_singleton + 1 :]
        )
        _search(adj, child, best)


def canonical_bits(g: Graph, initial_cells: list[int] | None = None) -> int:
    """Minimal upper-triangle bit value over the allowed relabelings.

    initial_cells restricts labelings to those respecting the given
    ordered partition (used for vertex-rooted forms); None means the
    single full cell.
    """
    if g.n > CANONICAL_MAX:
        raise GraphError(f"canonical forms are limited to {CANONICAL_MAX} vertices")
    if g.n == 0:
        return 0
    cells = [g.full_mask] if initial_cells is None else list(initial_cells)
    best: list[int | None] = [None]
    _search(g.adj, cells, best)
    assert best[0] is not None
    return best[0]


def canonical_form(g: Graph) -> bytes:
    """Canonical byte string: count byte, then packed triangle bits."""
    value = canonical_bits(g)
    nbits = g.n * (g.n - 1) // 2
    nbytes = (nbits + 7) // 8
    return bytes([g.n]) + (value << (nbytes * 8 - nbits)).to_bytes(nbytes, "big")


def rooted_canonical_bits(g: Graph, v: int) -> int:
    """Canonical bits among labelings that place v first."""
    g._check_vertex(v)
    rest = g.full_mask & ~(1 << v)
    cells = [1 << v] + ([rest] if rest else [])
    return canonical_bits(g, cells)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    """Isomorphism test by canonical form comparison."""
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    return canonical_form(g) == canonical_form(h)
