"""Named host graphs, the even-cycle host family, and small extremal runs.

Every graph is transcribed as an explicit edge list in one reviewed table.
Transcription errors are the main risk, so each fixture carries at least
two independent expectations (edge count plus structural or arrowing
behavior); verify_fixture evaluates them against the deciding modules.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .arrowing import (
    ColoringCertificate,
    Matching,
    check_certificate,
    decide_arrowing_cycle,
)
from .generate import GenSpec, generate
from .graph6 import write_graph6
from .graphs import Graph, complement, contains_c4, remove_edges

# ---------------------------------------------------------------------------
# transcription table: every edge list in one place, 1-indexed as drawn
# ---------------------------------------------------------------------------

def _g(order: int, pairs) -> Graph:
    return Graph(order, [(u - 1, v - 1) for u, v in pairs])


# 7 vertices; the 13-edge host is the complement of this 8-edge graph
_SEVEN_HOST_COMPLEMENT = [
    (1, 2), (1, 3), (2, 3), (2, 4), (4, 5), (5, 6), (5, 7), (6, 7),
]

# the five quadrilateral-free 7-vertex graphs with 9 edges
_EXTREMAL_7 = {
    "G1": [(1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7),
           (2, 7), (3, 4), (5, 6)],
    "G2": [(1, 7), (1, 2), (1, 3), (3, 4), (3, 5), (1, 6), (2, 3), (4, 5),
           (6, 7)],
    "G3": [(1, 3), (1, 4), (2, 4), (2, 5), (3, 4), (4, 5), (1, 6), (6, 7),
           (2, 7)],
    "G4": [(1, 2), (2, 3), (3, 4), (1, 5), (2, 5), (3, 6), (4, 6), (5, 7),
           (6, 7)],
    "G5": [(1, 2), (1, 3), (1, 4), (3, 5), (4, 7), (5, 6), (5, 7), (6, 7),
           (2, 6)],
}

# 9 vertices; the 17-edge host is the complement of this 19-edge graph
# (two K4 blocks plus a ninth-vertex attachment)
_NINE_HOST_COMPLEMENT = (
    [(a, b) for a in (1, 2, 3) for b in range(a + 1, 5)]
    + [(a, b) for a in (5, 6, 7) for b in range(a + 1, 9)]
    + [(4, 6), (1, 7), (3, 9), (4, 9), (7, 9), (8, 9), (2, 5)]
)

_TEN_HOST = [
    (1, 2), (1, 3), (1, 4), (1, 5), (2, 6), (2, 7), (3, 6), (3, 7),
    (4, 8), (4, 9), (5, 8), (5, 9), (4, 6), (5, 7), (6, 10), (7, 10),
    (8, 10), (9, 10),
]

_ELEVEN_HOST = [
    (1, 2), (1, 6), (1, 9), (2, 3), (2, 5), (2, 7), (3, 4), (3, 6),
    (3, 8), (4, 7), (4, 10), (5, 9), (5, 6), (6, 7), (6, 11), (7, 8),
    (7, 11), (8, 10), (9, 11), (10, 11),
]

# red matchings refuting arrowing for the two 12-edge complements whose
# base graphs have maximum degree 3 (explicit non-arrowing witnesses)
_REFUTATIONS = {
    "G4_bar": [(2, 7), (3, 5)],
    "G5_bar": [(1, 6), (3, 7), (4, 5)],
}


def build_f7() -> Graph:
    """13-edge host on 7 vertices, given by complementing the transcribed
    8-edge graph."""
    return complement(_g(7, _SEVEN_HOST_COMPLEMENT))


def build_fn_even(n: int) -> Graph:
    """Host on n vertices (n even, n >= 12) with 2n-2 edges: two rails of
    t = (n-2)/2 vertices joined ladder-and-cross, plus end vertices x and y
    attached by three edges each.

    Vertex layout: x = 0, y = 1, u_i = 1 + i, v_i = t + 1 + i (1-indexed i).
    """
    if n % 2 or n < 12:
        raise ValueError(f"order must be even and >= 12, got {n}")
    t = (n - 2) // 2
    u = lambda i: 1 + i
    v = lambda i: t + 1 + i
    edges = [(0, u(1)), (0, v(1)), (0, u(3)),
             (u(t), 1), (v(t), 1), (v(t - 2), 1)]
    for i in range(1, t):
        edges += [(u(i), u(i + 1)), (v(i), v(i + 1)),
                  (v(i), u(i + 1)), (u(i), v(i + 1))]
    return Graph(n, edges)


def fn_even_path_host(n: int) -> Graph:
    """The 2n-3 edge variant: build_fn_even(n) minus the x-u3 edge, used
    for path-target arrowing."""
    g = build_fn_even(n)
    return remove_edges(g, [(0, 4)])  # x and u3


_NAMES = ("F9", "F10", "F11", "K44_minus_e",
          "G1", "G2", "G3", "G4", "G5", "G4_bar", "G5_bar")


def build_named(name: str) -> Graph:
    """One of the transcribed graphs: F9/F10/F11 (hosts on 9/10/11
    vertices), K44_minus_e, the five extremal graphs G1..G5, or the
    complements G4_bar/G5_bar."""
    if name == "F9":
        return complement(_g(9, _NINE_HOST_COMPLEMENT))
    if name == "F10":
        return _g(10, _TEN_HOST)
    if name == "F11":
        return _g(11, _ELEVEN_HOST)
    if name == "K44_minus_e":
        edges = [(a, b) for a in range(4) for b in range(4, 8)]
        edges.remove((0, 4))
        return Graph(8, edges)
    if name in _EXTREMAL_7:
        return _g(7, _EXTREMAL_7[name])
    if name in ("G4_bar", "G5_bar"):
        return complement(_g(7, _EXTREMAL_7[name[:2]]))
    raise ValueError(f"unknown fixture name {name!r}; known: {', '.join(_NAMES)}")


def refutation_certificate(name: str) -> ColoringCertificate:
    """The transcribed red matching showing G4_bar / G5_bar does not arrow
    the 7-cycle."""
    if name not in _REFUTATIONS:
        raise ValueError(f"no transcribed refutation for {name!r}")
    red = Matching.of((u - 1, v - 1) for u, v in _REFUTATIONS[name])
    return ColoringCertificate(red, 7, "cycle")


# ---------------------------------------------------------------------------
# fixture table with expectations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Fixture:
    """A named graph plus the expectations the test suite checks on it."""

    name: str
    graph: Graph
    source: str
    expected: dict = field(default_factory=dict)


def fixture_table() -> list[Fixture]:
    """Every transcribed fixture with at least two independent
    expectations each."""
    rows = [
        Fixture("F7", build_f7(),
                "complement of an explicit 8-edge list on 7 vertices",
                {"order": 7, "edges": 13, "arrows_cycle": (7, True),
                 "complement_max_degree": 3}),
        Fixture("K44_minus_e", build_named("K44_minus_e"),
                "complete bipartite 4+4 minus one edge",
                {"order": 8, "edges": 15, "arrows_cycle": (8, True)}),
        Fixture("F9", build_named("F9"),
                "complement of an explicit 19-edge list on 9 vertices",
                {"order": 9, "edges": 17, "arrows_cycle": (9, True)}),
        Fixture("F10", build_named("F10"),
                "explicit 18-edge list on 10 vertices",
                {"order": 10, "edges": 18, "arrows_cycle": (10, True)}),
        Fixture("F11", build_named("F11"),
                "explicit 20-edge list on 11 vertices",
                {"order": 11, "edges": 20, "arrows_cycle": (11, True)}),
        Fixture("F12", build_fn_even(12),
                "even-order rail construction at n=12",
                {"order": 12, "edges": 22, "arrows_cycle": (12, True)}),
    ]
    for gname in ("G1", "G2", "G3", "G4", "G5"):
        rows.append(Fixture(
            gname, build_named(gname),
            "explicit 9-edge quadrilateral-free list on 7 vertices",
            {"order": 7, "edges": 9, "c4_free": True}))
    for bname in ("G4_bar", "G5_bar"):
        rows.append(Fixture(
            bname, build_named(bname),
            "complement of the matching extremal graph",
            {"order": 7, "edges": 12, "arrows_cycle": (7, False),
             "refutation": bname}))
    return rows


def verify_fixture(f: Fixture) -> list[str]:
    """Failed expectation descriptions; empty means the fixture passes."""
    g = f.graph
    failures = []
    for key, want in f.expected.items():
        if key == "order":
            if g.order != want:
                failures.append(f"order: expected {want}, got {g.order}")
        elif key == "edges":
            if g.edge_count != want:
                failures.append(f"edges: expected {want}, got {g.edge_count}")
        elif key == "c4_free":
            if contains_c4(g) == want:
                failures.append(f"c4_free: expected {want}")
        elif key == "arrows_cycle":
            n, expect = want
            result = decide_arrowing_cycle(g, n)
            if result.arrows != expect:
                failures.append(
                    f"arrows_cycle({n}): expected {expect}, got {result.arrows}")
        elif key == "complement_max_degree":
            got = max(complement(g).degree(v) for v in range(g.order))
            if got != want:
                failures.append(
                    f"complement_max_degree: expected {want}, got {got}")
        elif key == "refutation":
            cert = refutation_certificate(want)
            if not check_certificate(g, cert):
                failures.append(f"refutation {want}: certificate rejected")
        else:
            failures.append(f"unknown expectation {key!r}")
    return failures


# ---------------------------------------------------------------------------
# small extremal computation: most edges with no 4-cycle
# ---------------------------------------------------------------------------

def turan_ex(n: int, forbid: str = "C4") -> tuple[int, list[Graph]]:
    """Maximum edge count among 4-cycle-free graphs on n vertices, plus one
    representative per extremal isomorphism class.

    Enumerates with the class generator (degree and connectivity constraints
    relaxed) pruned hereditarily by 4-cycle containment, scanning the edge
    count upward; 4-cycle-freeness survives edge deletion, so the first
    empty level ends the scan.
    """
    if forbid != "C4":
        raise ValueError(f"only C4 is supported, got {forbid!r}")
    if not 1 <= n <= 10:
        raise ValueError(f"order must be within 1..10 (exhaustive regime), got {n}")
    best: tuple[int, list[Graph]] = (0, [Graph(n)])
    for m in range(1, n * (n - 1) // 2 + 1):
        spec = GenSpec(n, m, min_degree=0, require_biconnected=False)
        found = list(generate(spec, hereditary_reject=contains_c4))
        if not found:
            break
        best = (m, found)
    return best


# ---------------------------------------------------------------------------
# certificate construction for 7-vertex hosts with a 4-cycle in the
# complement
# ---------------------------------------------------------------------------

def verify_lemma1(g7: Graph) -> ColoringCertificate:
    """For a 7-vertex graph whose complement contains a 4-cycle, build the
    red matching of that cycle's chords present in the graph and validate
    that it refutes arrowing the 7-cycle.

    The four cycle vertices are pairwise non-adjacent in the graph once the
    chords are red, and 7 vertices cannot host a cycle with 4 independent
    vertices, so validation failing would contradict the reduction itself:
    that aborts loudly rather than returning.
    """
    if g7.order != 7:
        raise ValueError(f"expected order 7, got {g7.order}")
    comp = complement(g7)
    quad = _first_quadrilateral(comp)
    if quad is None:
        raise ValueError("complement contains no 4-cycle")
    a, b, c, d = quad  # cycle a-b-c-d in the complement; chords a-c, b-d
    red = [e for e in ((a, c), (b, d)) if g7.has_edge(*e)]
    cert = ColoringCertificate(Matching.of(red), 7, "cycle")
    if not check_certificate(g7, cert):
        raise RuntimeError(
            "chord certificate failed validation; this contradicts the "
            "independence argument and should be investigated")
    return cert


def _first_quadrilateral(g: Graph):
    # lexicographically first (p, r, q, s) with p-r-q-s a 4-cycle
    for p in range(g.order):
        for q in range(p + 1, g.order):
            common = [w for w in range(g.order)
                      if g.has_edge(p, w) and g.has_edge(q, w)]
            if len(common) >= 2:
                r, s = common[0], common[1]
                return (p, r, q, s)
    return None


# ---------------------------------------------------------------------------
# export
# ---------------------------------------------------------------------------

def export_fixtures(directory) -> tuple[Path, Path]:
    """Write fixtures.g6 (one graph6 line per fixture) and fixtures.manifest
    (tab-separated name, source, expectations) into directory; returns both
    paths."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    g6_path = directory / "fixtures.g6"
    manifest_path = directory / "fixtures.manifest"
    rows = fixture_table()
    with open(g6_path, "w") as fh:
        for f in rows:
            fh.write(write_graph6(f.graph) + "\n")
    with open(manifest_path, "w") as fh:
        for f in rows:
            expect = ";".join(f"{k}={v}" for k, v in sorted(f.expected.items()))
            fh.write(f"{f.name}\t{f.source}\t{expect}\n")
    return g6_path, manifest_path
