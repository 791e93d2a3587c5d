"""Package public exports."""
from .coloring import (
    ColorSet,
    EdgeColoring,
    MagnitudeSubgraph,
    Verdict,
    absent_colors,
    colors_used,
    embed,
    is_proper,
    magnitude_subgraph,
    make_color_set,
    present_colors,
    switch_coloring,
    validate,
)
from .config import EngineConfig, RunConfig
from .core import (
    Edge,
    SignedGraph,
    all_negative,
    build_graph,
    frustration_index,
    is_balanced,
    negate,
    switch,
    switching_equivalent,
)
from .errors import (
    ChainError,
    ColoringError,
    ColorSetError,
    EdgeLawError,
    GraphValidationError,
    ParseError,
    PreconditionError,
    SignedVizingError,
    SizeGuardError,
    VizingDiagnosticError,
    ZeroChainSwapError,
)
from .exact import (
    ClassRatio,
    class_of,
    class_ratio,
    exact_chromatic_index,
    exact_coloring,
    three_colorable_signature,
)
from .extras import (
    TotalColoring,
    chi_A_exact,
    chi_R_exact,
    chi_star_exact,
    chi_total_exact,
    delta0_exact,
    is_antiproper,
    is_completely_reversible,
    validate_total,
)
from .io_utils import emit_coloring, emit_graph, parse_coloring, parse_graph
from .kempe import KempeChain, kempe_chain, kempe_swap
from .linegraph import (
    BidirectedGraph,
    VertexColoring,
    edge_to_vertex_coloring,
    is_proper_vertex_coloring,
    line_graph,
    orient,
)
from .logging_utils import JsonFormatter, setup_logging
from .partial import PartialColoring
from .version import __version__
from .vizing import Fan, build_fan, color, delta_color_independent, extend_one_edge, zero_free_color

__all__ = [
    "__version__",
    "EngineConfig",
    "RunConfig",
    "setup_logging",
    "JsonFormatter",
    "Edge",
    "SignedGraph",
    "build_graph",
    "switch",
    "negate",
    "all_negative",
    "is_balanced",
    "switching_equivalent",
    "frustration_index",
    "ColorSet",
    "make_color_set",
    "EdgeColoring",
    "Verdict",
    "validate",
    "is_proper",
    "present_colors",
    "absent_colors",
    "colors_used",
    "embed",
    "switch_coloring",
    "MagnitudeSubgraph",
    "magnitude_subgraph",
    "PartialColoring",
    "KempeChain",
    "kempe_chain",
    "kempe_swap",
    "Fan",
    "build_fan",
    "extend_one_edge",
    "zero_free_color",
    "delta_color_independent",
    "color",
    "exact_coloring",
    "exact_chromatic_index",
    "class_of",
    "ClassRatio",
    "class_ratio",
    "three_colorable_signature",
    "BidirectedGraph",
    "orient",
    "line_graph",
    "VertexColoring",
    "is_proper_vertex_coloring",
    "edge_to_vertex_coloring",
    "TotalColoring",
    "validate_total",
    "is_completely_reversible",
    "is_antiproper",
    "chi_R_exact",
    "chi_star_exact",
    "delta0_exact",
    "chi_A_exact",
    "chi_total_exact",
    "parse_graph",
    "emit_graph",
    "parse_coloring",
    "emit_coloring",
    "SignedVizingError",
    "GraphValidationError",
    "ColorSetError",
    "ColoringError",
    "EdgeLawError",
    "ChainError",
    "ZeroChainSwapError",
    "PreconditionError",
    "ParseError",
    "SizeGuardError",
    "VizingDiagnosticError",
]
