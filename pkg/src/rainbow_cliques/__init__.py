"""Edge-colored graph extremal analysis: rainbow clique detection and
counting, extremal colorings, and desk-scale lemma verification."""

from .graph import (
    ColoredGraph,
    ECGParseError,
    SaturationProfile,
    Witness,
    counts,
    delete_vertex,
    format_ecg,
    induced_subgraph,
    is_complete,
    parse_ecg,
    saturation,
)
from .turan import (
    TuranPartition,
    thresholds,
    turan_increment,
    turan_number,
    turan_partition,
)
from .search import (
    count_rainbow_cliques,
    count_rainbow_cliques_naive,
    find_monochromatic_cycle,
    find_monochromatic_path,
    find_properly_colored_c4,
    find_rainbow_clique,
    find_rainbow_complete_bipartite,
    find_rainbow_turan,
    validate_witness,
)
from .constructions import (
    counterexample_n7,
    extremal,
    k6_variant,
    lexicographic,
    perturb_fresh_colors,
)
from .partitions import EdgePartitionCursor, bell, stirling2
from .verify import (
    VerificationReport,
    falsify_two_cliques,
    format_report,
    parse_report,
    supersaturation_experiment,
    verify_k6_dichotomy,
    verify_k8_reduction,
    verify_k9_reduction,
    verify_saturation_solutions,
    verify_tightness,
    verify_triangle_threshold,
)

__all__ = [
    "ColoredGraph",
    "ECGParseError",
    "SaturationProfile",
    "TuranPartition",
    "VerificationReport",
    "Witness",
    "EdgePartitionCursor",
    "bell",
    "counts",
    "count_rainbow_cliques",
    "count_rainbow_cliques_naive",
    "counterexample_n7",
    "delete_vertex",
    "extremal",
    "falsify_two_cliques",
    "find_monochromatic_cycle",
    "find_monochromatic_path",
    "find_properly_colored_c4",
    "find_rainbow_clique",
    "find_rainbow_complete_bipartite",
    "find_rainbow_turan",
    "format_ecg",
    "format_report",
    "induced_subgraph",
    "is_complete",
    "k6_variant",
    "lexicographic",
    "parse_ecg",
    "parse_report",
    "perturb_fresh_colors",
    "saturation",
    "stirling2",
    "supersaturation_experiment",
    "thresholds",
    "turan_increment",
    "turan_number",
    "turan_partition",
    "validate_witness",
    "verify_k6_dichotomy",
    "verify_k8_reduction",
    "verify_k9_reduction",
    "verify_saturation_solutions",
    "verify_tightness",
    "verify_triangle_threshold",
]
