"""Isomorph-free generation of graphs with fixed order and edge count.

Augmentation flavor: vertex addition.  A graph on k+1 vertices is kept
exactly when its newest vertex is automorphic to the vertex holding the
last canonical label, so each isomorphism class is built along a unique
ancestry and no global seen-set is needed.  Children of one parent are
deduplicated locally by canonical form.  Arithmetic prunes (edge budget,
degree deficiency, waste) discard partial graphs that cannot reach the
target; biconnectivity is only a final filter because partial graphs may
legitimately pass through 1-connected states.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .canon import _canonical_order, _pack_order, _refine, _twin_representatives
from .graphs import MAX_VERTICES, Graph, _make, is_biconnected

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class GenSpec:
    """Target shape: exact order and edge count, degree floor, biconnectivity."""

    order: int
    edge_count: int
    min_degree: int = 3
    require_biconnected: bool = True

    def __post_init__(self):
        if not 0 <= self.order <= MAX_VERTICES:
            raise ValueError(f"order {self.order} outside 0..{MAX_VERTICES}")
        if self.edge_count < 0:
            raise ValueError("edge count must be nonnegative")
        if self.min_degree < 0:
            raise ValueError("min degree must be nonnegative")

    def infeasibilities(self) -> list[str]:
        """Human-readable reasons no graph can meet this spec (empty if fine)."""
        n, m, d = self.order, self.edge_count, self.min_degree
        problems = []
        cap = n * (n - 1) // 2
        if m > cap:
            problems.append(f"edge count {m} exceeds C({n},2) = {cap}")
        if n > 0 and d > n - 1:
            problems.append(f"min degree {d} exceeds order-1 = {n - 1}")
        if d * n > 2 * m:
            problems.append(f"degree sum floor {d * n} exceeds 2m = {2 * m}")
        if self.require_biconnected:
            if n < 3:
                problems.append("biconnectivity needs at least 3 vertices")
            elif m < n:
                problems.append(f"biconnected graphs on {n} vertices need at least {n} edges")
        return problems


def _future_min_edges(deficiency: int, delta: int, r: int) -> int:
    # Least number of still-addable edges: each deficient unit on current
    # vertices needs one current-future edge, and the r future vertices need
    # degree sum delta*r, met by current-future edges (1 each) plus
    # future-future edges (2 each, at most C(r,2)).
    if r == 0:
        return 0
    cf = deficiency
    need = delta * r - cf
    if need <= 0:
        return cf
    ffcap = r * (r - 1) // 2
    ff = (need + 1) // 2
    if ff > ffcap:
        return cf + (need - 2 * ffcap) + ffcap
    return cf + ff


def _components(k: int, rows) -> list[int]:
    masks = []
    seen = 0
    for v in range(k):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = comp
        while frontier:
            reach = 0
            mm = frontier
            while mm:
                b = mm & -mm
                mm ^= b
                reach |= rows[b.bit_length() - 1]
            frontier = reach & ~comp
            comp |= frontier
        masks.append(comp)
        seen |= comp
    return masks


def _pass2_survives(k1: int, crows, degs1) -> bool:
    # Exact replay of the second refinement pass on the minimum-degree class:
    # the new vertex u must not be beaten to the last cell.  Signatures are
    # neighbour counts per degree class, classes ordered by degree descending;
    # cells are ordered descending, so u needs the minimal signature.
    u = k1 - 1
    dmin = min(degs1)
    if degs1[u] != dmin:
        return False
    klass = sorted(set(degs1), reverse=True)
    class_masks = {d: 0 for d in klass}
    for v, d in enumerate(degs1):
        class_masks[d] |= 1 << v
    masks = [class_masks[d] for d in klass]
    row_u = crows[u]
    sig_u = tuple((row_u & m).bit_count() for m in masks)
    low = class_masks[dmin] & ~(1 << u)
    while low:
        b = low & -low
        low ^= b
        rw = crows[b.bit_length() - 1]
        if tuple((rw & m).bit_count() for m in masks) < sig_u:
            return False
    return True


def _rooted_form(k1: int, crows, v: int) -> str:
    # Canonical form over labelings that pin v to the last label; equal
    # rooted forms certify an automorphism mapping one root to the other.
    others = sorted(w for w in range(k1) if w != v)
    return _pack_order(k1, crows, _canonical_order(k1, crows, [others, [v]]))


def _accept_form(k1: int, crows) -> str | None:
    """Canonical form of the child when its newest vertex is in canonical
    deletion position (automorphic to the holder of the last label), else
    None."""
    cells = _refine(k1, crows, [list(range(k1))])
    last = cells[-1]
    u = k1 - 1
    if u not in last:
        # automorphisms preserve refinement cells, so u cannot reach the
        # canonical deletion vertex, which always lives in the last cell
        return None
    if len(last) > 1 and len(_twin_representatives(crows, last)) == 1:
        # whole last cell is one automorphism orbit
        return _pack_order(k1, crows, _canonical_order(k1, crows, cells))
    pre = _canonical_order(k1, crows, cells)
    if pre[-1] == u:
        return _pack_order(k1, crows, pre)
    if len(last) == 1:
        return None
    if _rooted_form(k1, crows, u) == _rooted_form(k1, crows, pre[-1]):
        return _pack_order(k1, crows, pre)
    return None


def generate(spec: GenSpec, *, hereditary_reject=None) -> Iterator[Graph]:
    """Exactly one representative per isomorphism class meeting spec.

    Deterministic: repeated runs yield the same graphs in the same order.
    Infeasible specs yield nothing after logging a diagnostic.

    hereditary_reject, when given, must be a predicate true only on graphs
    all of whose supergraphs-by-vertex-extension should also be discarded
    (a property closed under taking subgraphs, like containing a fixed
    subgraph); it prunes the augmentation at every level, so the output is
    one representative per class NOT satisfying it.
    """
    problems = spec.infeasibilities()
    if problems:
        log.warning("infeasible generation spec %r: %s", spec, "; ".join(problems))
        return
    n, m, delta = spec.order, spec.edge_count, spec.min_degree
    bicon = spec.require_biconnected
    if n <= 1:
        g = Graph(n)
        if hereditary_reject is None or not hereditary_reject(g):
            yield g
        return
    total_cap = n * (n - 1) // 2
    yield from _expand(n, m, delta, bicon, [0], 0, total_cap, hereditary_reject)


def _expand(n, m, delta, bicon, rows, e, total_cap, reject=None) -> Iterator[Graph]:
    k = len(rows)
    if k == n:
        if bicon and not is_biconnected(_make(n, tuple(rows))):
            return
        yield _make(n, tuple(rows))
        return
    degs = [rows[v].bit_count() for v in range(k)]
    r_after = n - k - 1
    need = m - e
    deficiency = sum(delta - d for d in degs if d < delta)
    waste_parent = sum(d - delta for d in degs if d > delta)
    waste_cap = 2 * m - delta * n
    f_max_child = total_cap - (k + 1) * k // 2
    forced = [v for v in range(k) if delta - degs[v] > r_after]
    free = [v for v in range(k) if delta - degs[v] <= r_after]
    nf = len(forced)
    bit_new = 1 << k

    if r_after == 0:
        s = need
        if s < max(nf, delta, 0) or s > k:
            return
        if bicon:
            # the finished graph minus its newest vertex is exactly the
            # parent, so a disconnected parent forces a cut vertex
            if s < 2 or len(_components(k, rows)) > 1:
                return
        accepted: dict[str, tuple] = {}
        base_mask = 0
        for v in forced:
            base_mask |= 1 << v
        for extra in combinations(free, s - nf):
            smask = base_mask
            for v in extra:
                smask |= 1 << v
            if delta and waste_parent + sum(
                1 for v in range(k) if smask >> v & 1 and degs[v] >= delta
            ) + max(0, s - delta) > waste_cap:
                continue
            crows = [rw | bit_new if smask >> v & 1 else rw for v, rw in enumerate(rows)]
            crows.append(smask)
            degs1 = [d + (smask >> v & 1) for v, d in enumerate(degs)]
            degs1.append(s)
            if not _pass2_survives(k + 1, crows, degs1):
                continue
            form = _accept_form(k + 1, crows)
            if form is not None and form not in accepted:
                if reject is not None and reject(_make(k + 1, tuple(crows))):
                    continue
                accepted[form] = tuple(crows)
        for crows_t in accepted.values():
            if bicon and not is_biconnected(_make(n, crows_t)):
                continue
            yield _make(n, crows_t)
        return

    s_lo = max(0, delta - r_after, need - f_max_child, nf)
    s_hi = min(k, need)
    if s_lo > s_hi:
        return
    base_mask = 0
    for v in forced:
        base_mask |= 1 << v
    def_free = [v for v in free if degs[v] < delta]
    accepted: dict[str, tuple] = {}
    for s in range(s_lo, s_hi + 1):
        e_child = e + s
        for extra in combinations(free, s - nf):
            smask = base_mask
            for v in extra:
                smask |= 1 << v
            covered_def = nf + sum(1 for v in def_free if smask >> v & 1)
            d_child = (deficiency - covered_def) + max(0, delta - s)
            if e_child + _future_min_edges(d_child, delta, r_after) > m:
                continue
            if delta and waste_parent + sum(
                1 for v in range(k) if smask >> v & 1 and degs[v] >= delta
            ) + max(0, s - delta) > waste_cap:
                continue
            crows = [rw | bit_new if smask >> v & 1 else rw for v, rw in enumerate(rows)]
            crows.append(smask)
            degs1 = [d + (smask >> v & 1) for v, d in enumerate(degs)]
            degs1.append(s)
            if not _pass2_survives(k + 1, crows, degs1):
                continue
            form = _accept_form(k + 1, crows)
            if form is not None and form not in accepted:
                if reject is not None and reject(_make(k + 1, tuple(crows))):
                    continue
                accepted[form] = (tuple(crows), e_child)
    for crows_t, e_child in accepted.values():
        yield from _expand(n, m, delta, bicon, list(crows_t), e_child, total_cap, reject)


def count(spec: GenSpec) -> int:
    """Number of isomorphism classes generate(spec) yields."""
    return sum(1 for _ in generate(spec))
