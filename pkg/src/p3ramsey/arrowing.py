"""Arrowing decisions for (P3, cycle) and (P3, path) colorings.

A red/blue edge coloring of a host g avoids a red P3 exactly when the red
class is a matching.  g therefore arrows (P3, Cn), with n == g.order, iff
g minus M stays Hamiltonian for every inclusion-maximal matching M: removing
a non-maximal matching deletes fewer edges, so it can only be easier.  The
complete mode walks all maximal matchings; the window mode replays the
published size window, checking every independent edge set whose size lies
in [floor(n/2) - 2, floor(n/2)].
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph6 import parse_graph6, write_graph6
from .graphs import Graph, remove_edges
from .hamilton import _ham_cycle_bt, _ham_path_bt

_BRUTE_FORCE_EDGE_LIMIT = 28
_MODES = ("complete", "paper_window")
_TARGETS = ("cycle", "path")


@dataclass(frozen=True)
class Matching:
    """A set of pairwise vertex-disjoint edges."""

    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        seen = 0
        for u, v in self.edges:
            if not (isinstance(u, int) and isinstance(v, int) and u < v):
                raise ValueError(f"matching edge {(u, v)!r} is not an ordered pair u < v")
            m = (1 << u) | (1 << v)
            if seen & m:
                raise ValueError(f"edge ({u},{v}) shares a vertex with another matching edge")
            seen |= m

    @classmethod
    def of(cls, edges) -> "Matching":
        return cls(frozenset((u, v) if u < v else (v, u) for u, v in edges))

    def sorted_edges(self) -> tuple:
        return tuple(sorted(self.edges))

    def __len__(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class ColoringCertificate:
    """A red matching whose removal leaves no blue spanning target."""

    red: Matching
    target_n: int
    target: str = "cycle"


@dataclass(frozen=True)
class ArrowingResult:
    arrows: bool
    certificate: ColoringCertificate | None = None


def _maximal_matchings(n: int, adj):
    """Yield every inclusion-maximal matching exactly once, as edge tuples.

    Branches on the lowest-indexed undecided vertex: match it to each
    not-yet-decided neighbour in ascending order, then leave it uncovered,
    the latter only when no committed-uncovered neighbour forbids it.
    """
    out = []

    def rec(v, covered, blocked):
        taken = covered | blocked
        while v < n and taken >> v & 1:
            v += 1
        if v == n:
            yield tuple(out)
            return
        av = adj[v]
        partners = av & ~taken
        vbit = 1 << v
        m = partners
        while m:
            b = m & -m
            m ^= b
            u = b.bit_length() - 1
            out.append((v, u))
            yield from rec(v + 1, covered | vbit | b, blocked)
            out.pop()
        if not av & blocked:
            yield from rec(v + 1, covered, blocked | vbit)

    yield from rec(0, 0, 0)


def enumerate_maximal_matchings(g: Graph):
    """All maximal matchings of g in deterministic order."""
    for edges in _maximal_matchings(g.order, g.adj):
        yield Matching(frozenset(edges))


def _independent_edge_sets(n, edges, size):
    # All size-subsets of pairwise disjoint edges, lexicographic by index.
    vmasks = [(1 << u) | (1 << v) for u, v in edges]
    total = len(edges)
    chosen = []

    def rec(start, used):
        if len(chosen) == size:
            yield tuple(chosen)
            return
        for i in range(start, total - (size - len(chosen)) + 1):
            vm = vmasks[i]
            if vm & used:
                continue
            chosen.append(edges[i])
            yield from rec(i + 1, used | vm)
            chosen.pop()

    yield from rec(0, 0)


def _rows_without(adj, edge_list):
    rows = list(adj)
    for u, v in edge_list:
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
    return rows


def _validate_decide_args(g, n, mode, target):
    if mode not in _MODES:
        raise ValueError(f"mode must be one of {_MODES}, got {mode!r}")
    if g.order != n:
        raise ValueError(f"host has {g.order} vertices but the target needs n = {n}")
    if target == "cycle" and n < 3:
        raise ValueError(f"cycle target needs n >= 3, got {n}")
    if target == "path" and n < 2:
        raise ValueError(f"path target needs n >= 2, got {n}")


def _decide(g, n, mode, target):
    ham = _ham_cycle_bt if target == "cycle" else _ham_path_bt
    adj = g.adj
    if mode == "complete":
        candidates = _maximal_matchings(n, adj)
    else:
        edges = g.edges()
        lo = max(0, n // 2 - 2)

        def window():
            for size in range(lo, n // 2 + 1):
                yield from _independent_edge_sets(n, edges, size)

        candidates = window()
    for red in candidates:
        if not ham(n, _rows_without(adj, red)):
            cert = ColoringCertificate(Matching(frozenset(red)), n, target)
            return ArrowingResult(False, cert)
    return ArrowingResult(True, None)


def decide_arrowing_cycle(g: Graph, n: int, mode: str = "complete") -> ArrowingResult:
    """Does every red-P3-free coloring of g leave a blue spanning cycle?

    Requires g.order == n.  On failure the certificate holds the first
    failing matching in enumeration order.
    """
    _validate_decide_args(g, n, mode, "cycle")
    return _decide(g, n, mode, "cycle")


def decide_arrowing_path(g: Graph, n: int, mode: str = "complete") -> ArrowingResult:
    """Path-target variant of decide_arrowing_cycle (blue spanning path)."""
    _validate_decide_args(g, n, mode, "path")
    return _decide(g, n, mode, "path")


def arrows_by_bruteforce(g: Graph, n: int, target: str = "cycle") -> bool:
    """Reference decision over all 2^|E| red subsets.

    Red subsets with two edges sharing a vertex are detected by plain
    endpoint-mask arithmetic and skipped wholesale (they contain a red P3);
    every remaining subset must leave a blue spanning target.  Bounded to
    28 edges.
    """
    if target not in _TARGETS:
        raise ValueError(f"target must be one of {_TARGETS}, got {target!r}")
    _validate_decide_args(g, n, "complete", target)
    edges = g.edges()
    if len(edges) > _BRUTE_FORCE_EDGE_LIMIT:
        raise ValueError(
            f"{len(edges)} edges exceeds the 2^|E| enumeration bound of {_BRUTE_FORCE_EDGE_LIMIT}"
        )
    ham = _ham_cycle_bt if target == "cycle" else _ham_path_bt
    rows = list(g.adj)
    if not ham(n, rows):
        return False
    vmasks = [(1 << u) | (1 << v) for u, v in edges]
    total = len(edges)

    def rec(start, used):
        for i in range(start, total):
            vm = vmasks[i]
            if vm & used:
                continue
            u, v = edges[i]
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
            ok = ham(n, rows) and rec(i + 1, used | vm)
            rows[u] |= 1 << v
            rows[v] |= 1 << u
            if not ok:
                return False
        return True

    return rec(0, 0)


def check_certificate(g: Graph, cert: ColoringCertificate) -> bool:
    """Validate a non-arrowing certificate against its host.

    Structural problems (wrong order, red edge missing from g) raise
    ValueError; the return value reports whether the blue remainder really
    lacks the spanning target.
    """
    if cert.target not in _TARGETS:
        raise ValueError(f"certificate target must be one of {_TARGETS}")
    if g.order != cert.target_n:
        raise ValueError(
            f"host has {g.order} vertices but the certificate targets n = {cert.target_n}"
        )
    for u, v in cert.red.edges:
        if not g.has_edge(u, v):
            raise ValueError(f"red edge ({u},{v}) is not an edge of the host")
    blue = remove_edges(g, cert.red.edges)
    ham = _ham_cycle_bt if cert.target == "cycle" else _ham_path_bt
    return not ham(blue.order, blue.adj)


def minimize_certificate(g: Graph, cert: ColoringCertificate) -> ColoringCertificate:
    """Greedily drop red edges while the refutation still holds.

    The decision path returns the first failing inclusion-maximal matching;
    for reporting, an inclusion-minimal subset says more (a cycle host is
    often defeated by one or two edges).  Raises ValueError via
    check_certificate if the input certificate is not itself valid.
    """
    if not check_certificate(g, cert):
        raise ValueError("certificate does not refute; nothing to minimize")
    kept = list(cert.red.sorted_edges())
    i = 0
    while i < len(kept):
        trial = ColoringCertificate(
            Matching.of(kept[:i] + kept[i + 1:]), cert.target_n, cert.target)
        if check_certificate(g, trial):
            kept.pop(i)
        else:
            i += 1
    return ColoringCertificate(Matching.of(kept), cert.target_n, cert.target)


def serialize_certificate(g: Graph, cert: ColoringCertificate) -> str:
    """One-line text form: host graph6, n, red edges as u-v pairs."""
    reds = ",".join(f"{u}-{v}" for u, v in cert.red.sorted_edges()) or "-"
    line = f"{write_graph6(g)} {cert.target_n} {reds}"
    if cert.target != "cycle":
        line += f" {cert.target}"
    return line


def parse_certificate(line: str):
    """Inverse of serialize_certificate; returns (host, certificate)."""
    parts = line.split()
    if len(parts) not in (3, 4):
        raise ValueError(f"certificate line needs 3 or 4 fields, got {len(parts)}")
    g = parse_graph6(parts[0])
    n = int(parts[1])
    target = parts[3] if len(parts) == 4 else "cycle"
    edges = []
    if parts[2] != "-":
        for tok in parts[2].split(","):
            u, _, v = tok.partition("-")
            edges.append((int(u), int(v)))
    return g, ColoringCertificate(Matching.of(edges), n, target)
