from .patterns import (
    GammaWitness,
    find_gamma_witness,
    is_gamma_free,
    require_gamma_free,
    top_ones,
    leading_ones,
    is_complete_naf,
    RowKind,
    RowClass,
    classify_rows,
    non_ambiguous_forest,
    is_complete_by_children,
)
from .graphs import (
    ColumnEdge,
    EdgeGraph,
    RowPathGraph,
    build_edge_graph,
    project_rows,
    build_increasing_forest,
)
