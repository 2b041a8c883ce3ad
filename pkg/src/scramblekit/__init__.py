"""Scramble number, treewidth and divisorial gonality of multigraphs.

Submodules: ``multigraph``, ``families``, ``divisors``, ``scrambles``,
``treewidth``, ``formats``, ``report`` and ``cli``.  The most used names
are re-exported here; treewidth lives in ``scramblekit.treewidth``.
"""

from . import divisors, families, formats, multigraph, report, scrambles, treewidth
from .divisors import equivalent, gonality, has_positive_rank, is_reduced, reduce
from .errors import ScrambleKitError
from .families import (
    chain_of_loops,
    cycle,
    fig1_graph,
    fig2_wheel,
    fig4_left,
    fig4_right,
    grid,
    path,
    plied_path,
    random_connected_multigraph,
    random_tree,
    stacked_prism,
    torus,
)
from .multigraph import Multigraph, build, cartesian_product, contract_edge, subdivide_edge
from .report import InvariantReport, compute_invariants
from .scrambles import (
    OrderCertificate,
    Scramble,
    cut_number,
    hitting_number,
    scramble_order,
    sn_exact,
    sn_lower_bound,
)

__version__ = "0.1.0"

__all__ = [
    "InvariantReport",
    "Multigraph",
    "OrderCertificate",
    "Scramble",
    "ScrambleKitError",
    "build",
    "cartesian_product",
    "chain_of_loops",
    "compute_invariants",
    "contract_edge",
    "cut_number",
    "cycle",
    "divisors",
    "equivalent",
    "families",
    "fig1_graph",
    "fig2_wheel",
    "fig4_left",
    "fig4_right",
    "formats",
    "gonality",
    "grid",
    "has_positive_rank",
    "hitting_number",
    "is_reduced",
    "multigraph",
    "path",
    "plied_path",
    "random_connected_multigraph",
    "random_tree",
    "reduce",
    "report",
    "scramble_order",
    "scrambles",
    "sn_exact",
    "sn_lower_bound",
    "stacked_prism",
    "subdivide_edge",
    "torus",
    "treewidth",
]
