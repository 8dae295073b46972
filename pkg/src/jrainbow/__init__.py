"""jrainbow: exact desk-scale analysis of J-colourings, rainbow
neighbourhoods and rainbow connectivity on small graphs."""

from .analysis import analyse_graph, dump_json, render_text
from .colouring import (
    Colouring,
    ConventionInfeasibleError,
    chromatic_number,
    convention_colouring,
    enumerate_proper_colourings,
    greedy_colouring,
    inverse_colouring,
    is_proper,
    maximum_independent_set,
)
from .connectivity import (
    ConnectivityReport,
    RainbowWitness,
    is_chi_rainbow_connected,
    is_jc_rainbow_connected,
    min_rainbow_path_lengths,
    rainbow_path_exists,
)
from .families import (
    FamilySpec,
    canonical_form,
    enumerate_graphs,
    enumerate_trees,
    generate,
    oracle_j,
    oracle_j_star,
    oracle_jc,
)
from .graphs import (
    ComponentDecomposition,
    DegreeProfile,
    Graph,
    build_graph,
    complement,
    decompose,
    degree_profile,
    induced_subgraph,
    is_connected,
)
from .io import (
    FormatError,
    export_dot,
    parse_dimacs,
    parse_edgelist,
    read_graph,
    write_dimacs,
    write_edgelist,
)
from .jcolouring import (
    ComponentaResult,
    JResult,
    NotJColourable,
    brute_force_j_number,
    enumerate_j_colourings,
    is_j_colouring,
    is_j_star_colouring,
    j_number,
    j_star_number,
    jc_number,
    jstarc_number,
    maximise_colouring,
    minimise_colouring,
)
from .neighbourhoods import (
    RainbowReport,
    rainbow_neighbourhood_number,
    yielding_vertices,
    yields_rainbow,
)
from .theorems import THEOREM_IDS, TheoremVerdict, Witness, check, check_all, report

__version__ = "0.1.0"

__all__ = [
    "Colouring",
    "ComponentDecomposition",
    "ComponentaResult",
    "ConnectivityReport",
    "ConventionInfeasibleError",
    "DegreeProfile",
    "FamilySpec",
    "FormatError",
    "Graph",
    "JResult",
    "NotJColourable",
    "RainbowReport",
    "RainbowWitness",
    "THEOREM_IDS",
    "TheoremVerdict",
    "Witness",
    "analyse_graph",
    "brute_force_j_number",
    "build_graph",
    "canonical_form",
    "check",
    "check_all",
    "chromatic_number",
    "complement",
    "convention_colouring",
    "decompose",
    "degree_profile",
    "dump_json",
    "enumerate_graphs",
    "enumerate_j_colourings",
    "enumerate_proper_colourings",
    "enumerate_trees",
    "export_dot",
    "generate",
    "greedy_colouring",
    "induced_subgraph",
    "inverse_colouring",
    "is_chi_rainbow_connected",
    "is_connected",
    "is_j_colouring",
    "is_j_star_colouring",
    "is_jc_rainbow_connected",
    "is_proper",
    "j_number",
    "j_star_number",
    "jc_number",
    "jstarc_number",
    "maximise_colouring",
    "maximum_independent_set",
    "min_rainbow_path_lengths",
    "minimise_colouring",
    "oracle_j",
    "oracle_j_star",
    "oracle_jc",
    "parse_dimacs",
    "parse_edgelist",
    "rainbow_neighbourhood_number",
    "rainbow_path_exists",
    "read_graph",
    "render_text",
    "report",
    "write_dimacs",
    "write_edgelist",
    "yielding_vertices",
    "yields_rainbow",
]
