"""Hamiltonian cycle and path detection.

The primary engine is depth-first backtracking over bitmask adjacency rows
with three prunes applied at every extension: any unvisited vertex left with
fewer than two usable links fails the node, two or more unvisited vertices
with no links inside the unvisited set fail it, and the unvisited set must
stay reachable from the path end.  A subset dynamic program over
(visited set, endpoint) states is available behind the engine flag as an
independent cross-check; it is exact but memory-bound to 24 vertices.
"""

from __future__ import annotations

from .graphs import Graph

_ENGINES = ("backtracking", "dp")
_DP_LIMIT = 24


def _ham_cycle_bt(n: int, adj) -> bool:
    # adj may be any indexable of bit rows; callers pass mutated copies.
    if n < 3:
        return False
    full = (1 << n) - 1
    s = 0
    best = 64
    for v in range(n):
        d = adj[v].bit_count()
        if d < 2:
            return False
        if d < best:
            best = d
            s = v
    comp = 1 << s
    frontier = comp
    while frontier:
        reach = 0
        m = frontier
        while m:
            b = m & -m
            m ^= b
            reach |= adj[b.bit_length() - 1]
        frontier = reach & ~comp
        comp |= frontier
    if comp != full:
        return False

    sbit = 1 << s
    adj_s = adj[s]
    path = [s]
    visited = sbit
    stack = [adj_s & ~sbit]
    while True:
        cand = stack[-1]
        if cand:
            b = cand & -cand
            stack[-1] = cand ^ b
            v = b.bit_length() - 1
            nv = visited | b
            if nv == full:
                if adj[v] & sbit:
                    return True
                continue
            unvisited = full & ~nv
            if not adj_s & unvisited:
                continue
            allowed = unvisited | b | sbit
            lonely = 0
            ok = True
            m = unvisited
            while m:
                ub = m & -m
                m ^= ub
                au = adj[ub.bit_length() - 1]
                t = au & allowed
                if t == 0 or t & (t - 1) == 0:
                    ok = False
                    break
                if not au & unvisited:
                    lonely += 1
                    if lonely > 1:
                        ok = False
                        break
            if not ok:
                continue
            reach = adj[v] & unvisited
            if reach != unvisited:
                grow = reach
                while grow:
                    step = 0
                    mm = grow
                    while mm:
                        bb = mm & -mm
                        mm ^= bb
                        step |= adj[bb.bit_length() - 1]
                    grow = step & unvisited & ~reach
                    reach |= grow
                if reach != unvisited:
                    continue
            visited = nv
            path.append(v)
            stack.append(adj[v] & ~nv)
        else:
            stack.pop()
            if not stack:
                return False
            visited ^= 1 << path.pop()


def _ham_path_bt(n: int, adj) -> bool:
    # Spanning path exists iff adding a universal vertex yields a cycle.
    if n <= 2:
        return n == 1 or (n == 2 and bool(adj[0] >> 1 & 1))
    ub = 1 << n
    rows = [r | ub for r in adj]
    rows.append((1 << n) - 1)
    return _ham_cycle_bt(n + 1, rows)


def _ham_cycle_dp(n: int, adj) -> bool:
    if n < 3:
        return False
    if n > _DP_LIMIT:
        raise ValueError(f"dp engine holds 2^n states; {n} exceeds the {_DP_LIMIT}-vertex bound")
    full = (1 << n) - 1
    # Paths anchored at vertex 0; dp[mask] = endpoints reachable on mask.
    dp = [0] * (1 << n)
    dp[1] = 1
    for mask in range(1, 1 << n, 2):
        ends = dp[mask]
        if not ends:
            continue
        m = ends
        while m:
            b = m & -m
            m ^= b
            ext = adj[b.bit_length() - 1] & ~mask
            while ext:
                nb = ext & -ext
                ext ^= nb
                dp[mask | nb] |= nb
    return bool(dp[full] & adj[0])


def _ham_path_dp(n: int, adj) -> bool:
    if n <= 2:
        return n == 1 or (n == 2 and bool(adj[0] >> 1 & 1))
    if n > _DP_LIMIT:
        raise ValueError(f"dp engine holds 2^n states; {n} exceeds the {_DP_LIMIT}-vertex bound")
    full = (1 << n) - 1
    dp = [0] * (1 << n)
    for v in range(n):
        dp[1 << v] = 1 << v
    for mask in range(1, 1 << n):
        ends = dp[mask]
        if not ends:
            continue
        m = ends
        while m:
            b = m & -m
            m ^= b
            ext = adj[b.bit_length() - 1] & ~mask
            while ext:
                nb = ext & -ext
                ext ^= nb
                dp[mask | nb] |= nb
    return bool(dp[full])


def has_hamiltonian_cycle(g: Graph, engine: str = "backtracking") -> bool:
    """Spanning cycle decision; order below 3 is always False."""
    if engine not in _ENGINES:
        raise ValueError(f"engine must be one of {_ENGINES}, got {engine!r}")
    fn = _ham_cycle_bt if engine == "backtracking" else _ham_cycle_dp
    return fn(g.order, g.adj)


def has_hamiltonian_path(g: Graph, engine: str = "backtracking") -> bool:
    """Spanning path decision; a single vertex counts, the empty graph does not."""
    if engine not in _ENGINES:
        raise ValueError(f"engine must be one of {_ENGINES}, got {engine!r}")
    fn = _ham_path_bt if engine == "backtracking" else _ham_path_dp
    return fn(g.order, g.adj)
