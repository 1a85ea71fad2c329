"""Rainbow-triangle-free colorings of complete graphs: extremal
constructions, pattern detection, partition extraction, closed-form values,
and exhaustive two-color certification."""

from .constructions import (
    BlowUp5Recipe,
    PentagonRecipe,
    TwoCliqueRecipe,
    UniformRecipe,
    blow_up_5,
    lower_bound_construction,
    lower_bound_recipe,
    pentagon_k5,
    random_gallai,
    two_clique_example,
)
from .decompose import (
    GallaiPartition,
    InternalExhaustion,
    RainbowTrianglePresent,
    gallai_partition,
    reduced_graph,
    validate_partition,
)
from .formulas import cycle_ramsey, even_cycle_gr_bounds, gr_value, ramsey_value
from .graphs import (
    ColoredCompleteGraph,
    GcgFormatError,
    PartialColoring,
    decode,
    encode,
    iter_bits,
    new_uniform,
)
from .patterns import (
    Pattern,
    WitnessEmbedding,
    brute_force_find,
    contains_pattern,
    find_mono_cycle,
    find_mono_path_plus,
    find_mono_star_plus,
    find_rainbow_triangle,
    verify_witness,
)
from .search import (
    BudgetExhausted,
    ClaimReport,
    NotFoundBelowCap,
    RamseyCertificate,
    SearchBudget,
    SearchOutcome,
    ramsey_number,
    search_two_color,
    verify_paper_claims,
)

__all__ = [
    "BlowUp5Recipe",
    "BudgetExhausted",
    "ClaimReport",
    "ColoredCompleteGraph",
    "GallaiPartition",
    "GcgFormatError",
    "InternalExhaustion",
    "NotFoundBelowCap",
    "PartialColoring",
    "Pattern",
    "PentagonRecipe",
    "RainbowTrianglePresent",
    "RamseyCertificate",
    "SearchBudget",
    "SearchOutcome",
    "TwoCliqueRecipe",
    "UniformRecipe",
    "WitnessEmbedding",
    "blow_up_5",
    "brute_force_find",
    "contains_pattern",
    "cycle_ramsey",
    "decode",
    "encode",
    "even_cycle_gr_bounds",
    "find_mono_cycle",
    "find_mono_path_plus",
    "find_mono_star_plus",
    "find_rainbow_triangle",
    "gallai_partition",
    "gr_value",
    "iter_bits",
    "lower_bound_construction",
    "lower_bound_recipe",
    "new_uniform",
    "pentagon_k5",
    "ramsey_number",
    "ramsey_value",
    "random_gallai",
    "reduced_graph",
    "search_two_color",
    "two_clique_example",
    "validate_partition",
    "verify_paper_claims",
    "verify_witness",
]
