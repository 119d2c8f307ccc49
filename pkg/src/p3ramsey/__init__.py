"""Arrowing decisions and restricted size Ramsey numbers for (P3, Cn).

The library decides whether a host graph forces a monochromatic red P3 or
blue spanning cycle in every 2-coloring, generates candidate hosts
isomorph-free, and scans edge counts to pin down the least size of a host
on the Ramsey-minimal vertex count.
"""

from .arrowing import (
    ArrowingResult,
    ColoringCertificate,
    Matching,
    arrows_by_bruteforce,
    check_certificate,
    decide_arrowing_cycle,
    decide_arrowing_path,
    enumerate_maximal_matchings,
    parse_certificate,
    serialize_certificate,
)
from .canon import are_isomorphic, canonical_form, canonical_labeling
from .graph6 import Graph6Error, dump_graphs, parse_graph6, stream_graphs, write_graph6
from .graphs import (
    Graph,
    apply_permutation,
    complement,
    contains_c4,
    degree_sequence,
    is_biconnected,
    is_connected,
    min_degree,
    remove_edges,
)
from .hamilton import has_hamiltonian_cycle, has_hamiltonian_path

__version__ = "0.1.0"

__all__ = [
    "ArrowingResult",
    "ColoringCertificate",
    "Graph",
    "Graph6Error",
    "Matching",
    "apply_permutation",
    "are_isomorphic",
    "arrows_by_bruteforce",
    "canonical_form",
    "canonical_labeling",
    "check_certificate",
    "complement",
    "contains_c4",
    "decide_arrowing_cycle",
    "decide_arrowing_path",
    "degree_sequence",
    "dump_graphs",
    "enumerate_maximal_matchings",
    "has_hamiltonian_cycle",
    "has_hamiltonian_path",
    "is_biconnected",
    "is_connected",
    "min_degree",
    "parse_certificate",
    "parse_graph6",
    "remove_edges",
    "serialize_certificate",
    "stream_graphs",
    "write_graph6",
]
