"""Edge ideals of weighted oriented graphs: covers, decompositions, symbolic powers."""

from ._core import (
    CapExceeded,
    Error,
    ExponentOverflow,
    Graph,
    Ideal,
    InputError,
    VerificationFailure,
    check_3rdsym_lemma,
    check_cycle_corollary,
    check_forest_theorem,
    check_jideal_structure,
    check_line_theorem,
    check_source_lemma,
    compare_powers,
    cover_partition,
    decompose,
    edge_ideal,
    irreducible_ideal,
    is_strong_cover,
    is_vertex_cover,
    line_condition,
    maximal_strong_covers,
    minimal_vertex_covers,
    ordinary_power,
    random_regression,
    rooted_tree,
    strong_covers,
    symbolic_power,
    symbolic_power_oracle,
)

__version__ = "0.1.0"
