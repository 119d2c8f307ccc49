"""Canonical labeling via equitable partition refinement plus backtracking.

The canonical form of a graph is the graph6 text of the relabeling whose
upper-triangle bit string (column-major, the graph6 bit order) is
lexicographically least among the labelings the refinement search explores.
Equal forms mean isomorphic graphs.  Refinement orders cells by descending
signature, so the lowest-degree vertices sit in the last cell; the vertex
receiving the last canonical label always comes from that cell, which the
generator relies on.
"""

from __future__ import annotations

from .graphs import Graph, degree_sequence


def _refine(n: int, adj, cells):
    """Stable equitable refinement of an ordered partition.

    Each cell splits by the tuple of neighbour counts against every current
    cell; split groups are appended in descending signature order.  The
    result depends only on the isomorphism type and the incoming cell order,
    never on vertex labels beyond tie-breaking inside cells.
    """
    cells = [c if isinstance(c, list) else list(c) for c in cells]
    changed = True
    while changed:
        changed = False
        masks = []
        for c in cells:
            m = 0
            for v in c:
                m |= 1 << v
            masks.append(m)
        new_cells = []
        for c in cells:
            if len(c) == 1:
                new_cells.append(c)
                continue
            groups: dict[tuple, list[int]] = {}
            for v in c:
                av = adj[v]
                sig = tuple((av & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) == 1:
                new_cells.append(c)
            else:
                changed = True
                for sig in sorted(groups, reverse=True):
                    new_cells.append(groups[sig])
        cells = new_cells
    return cells


def _twin_representatives(adj, cell):
    # Vertices whose rows differ only in each other's bits are swappable by
    # an automorphism, so only one per twin class needs individualizing.
    reps = []
    for v in cell:
        av = adj[v]
        bv = 1 << v
        for u in reps:
            if ((adj[u] ^ av) & ~((1 << u) | bv)) == 0:
                break
        else:
            reps.append(v)
    return reps


def _canonical_order(n: int, adj, cells0=None) -> tuple[int, ...]:
    """Vertex sequence per canonical label: position k holds the old vertex
    that receives label k.  cells0 optionally fixes an initial ordered
    partition (used for rooted forms)."""
    if n == 0:
        return ()
    start = [sorted(range(n))] if cells0 is None else [sorted(c) for c in cells0 if c]
    best_cols: list | None = None
    best_pre: tuple | None = None

    def cols_for(pre):
        cols = []
        for j in range(1, len(pre)):
            aj = adj[pre[j]]
            c = 0
            for i in range(j):
                c = c << 1 | (aj >> pre[i] & 1)
            cols.append(c)
        return cols

    def rec(cells):
        nonlocal best_cols, best_pre
        pre = []
        branch = -1
        for ci, c in enumerate(cells):
            if len(c) == 1:
                pre.append(c[0])
            else:
                branch = ci
                break
        cols = cols_for(pre)
        if best_cols is not None and cols > best_cols[: len(cols)]:
            return
        if branch < 0:
            if best_cols is None or cols < best_cols:
                best_cols = cols
                best_pre = tuple(pre)
            return
        cell = cells[branch]
        head = cells[:branch]
        tail = cells[branch + 1 :]
        for v in _twin_representatives(adj, cell):
            rest = [u for u in cell if u != v]
            rec(_refine(n, adj, head + [[v], rest] + tail))

    rec(_refine(n, adj, start))
    assert best_pre is not None
    return best_pre


def _pack_order(n: int, adj, pre) -> str:
    # graph6 text of adj relabeled so that pre[k] becomes vertex k.
    out = [chr(63 + n)]
    acc = 0
    nb = 0
    for j in range(1, n):
        aj = adj[pre[j]]
        for i in range(j):
            acc = acc << 1 | (aj >> pre[i] & 1)
            nb += 1
            if nb == 6:
                out.append(chr(63 + acc))
                acc = 0
                nb = 0
    if nb:
        out.append(chr(63 + (acc << (6 - nb))))
    return "".join(out)


def _canonical_bytes(n: int, adj, cells0=None) -> str:
    return _pack_order(n, adj, _canonical_order(n, adj, cells0))


def canonical_labeling(g: Graph) -> tuple[int, ...]:
    """Permutation old -> new achieving the canonical form."""
    pre = _canonical_order(g.order, g.adj)
    perm = [0] * g.order
    for label, old in enumerate(pre):
        perm[old] = label
    return tuple(perm)


def canonical_form(g: Graph) -> str:
    """graph6 text of the canonically relabeled graph."""
    return _canonical_bytes(g.order, g.adj)


def _neighbour_degree_profile(g: Graph):
    degs = [row.bit_count() for row in g.adj]
    prof = []
    for v in range(g.order):
        row = g.adj[v]
        prof.append(tuple(sorted(degs[u] for u in range(g.order) if row >> u & 1)))
    return sorted(prof)


def are_isomorphic(a: Graph, b: Graph) -> bool:
    """Isomorphism test: cheap invariants first, canonical forms last."""
    if a.order != b.order or a.edge_count != b.edge_count:
        return False
    if degree_sequence(a) != degree_sequence(b):
        return False
    if _neighbour_degree_profile(a) != _neighbour_degree_profile(b):
        return False
    return _canonical_bytes(a.order, a.adj) == _canonical_bytes(b.order, b.adj)
