"""Deeply critical oriented cliques: exact oriented colouring, extension
constructions, circulant checks and exhaustive scans.

The heavy lifting lives in the compiled ``_core`` module; this package
re-exports it and adds a couple of conveniences.
"""

from ._core import (
    Error,
    Graph,
    build_circulant,
    canonical_hex,
    census_dcoc,
    check_extending_partition,
    chi_o,
    circulant_conditions,
    circulant_dcoc_check,
    colouring,
    criticality_report,
    find_colouring,
    find_extending_partition,
    format_compact,
    format_ograph,
    four_extension,
    generate_odd_dcoc,
    is_absolute_clique,
    is_deeply_critical,
    isomorphic,
    multiplier_canonical,
    parse_graph,
    random_probe,
    scan_circulants,
    six_extension,
    two_extension,
    verify,
)

__all__ = [
    "Error",
    "Graph",
    "build_circulant",
    "canonical_hex",
    "census_dcoc",
    "check_extending_partition",
    "chi_o",
    "circulant_conditions",
    "circulant_dcoc_check",
    "colouring",
    "criticality_report",
    "directed_cycle",
    "find_colouring",
    "find_extending_partition",
    "format_compact",
    "format_ograph",
    "four_extension",
    "generate_odd_dcoc",
    "is_absolute_clique",
    "is_deeply_critical",
    "is_dcoc",
    "isomorphic",
    "multiplier_canonical",
    "parse_graph",
    "random_probe",
    "scan_circulants",
    "six_extension",
    "two_extension",
    "verify",
]

__version__ = "1.0.0"


def directed_cycle(n: int) -> Graph:
    """The directed cycle on n vertices (the order-5 one is the smallest
    deeply critical oriented clique)."""
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def is_dcoc(g: Graph) -> bool:
    """Deeply critical oriented clique: chi_o equals the order and every arc
    removal drops it by exactly two."""
    return is_absolute_clique(g) and is_deeply_critical(g)
