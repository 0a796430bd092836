from src.core import (
    BinaryMatrix,
    CallanPair,
    CallanSequence,
    LabeledForest,
    PermPair,
    Point,
    PointSequence,
    InvalidObjectError,
    NotGammaFreeError,
    NotCompleteForestError,
    CommonRiseError,
    ForestClassError,
    SizeLimitError,
    parse_matrix,
    render_matrix,
    min_row_key,
    first_coordinate,
    eta_points,
    is_partition_sequence,
)

from src.gamma import (
    find_gamma_witness,
    is_gamma_free,
    top_ones,
    leading_ones,
    is_complete_naf,
    classify_rows,
    non_ambiguous_forest,
    is_complete_by_children,
    build_edge_graph,
    project_rows,
    build_increasing_forest,
)

from src.bijections import (
    pre_order,
    pi,
    pi_inverse,
    phi,
    phi_inverse,
    phi_inverse_trace,
    reconstruct_matrix,
    increasing_forest_of,
    callan_sequence,
    is_properly_labeled,
    is_leftmost_valid,
    has_common_rise,
    f_convert,
    f_inverse,
    psi,
    psi_inverse,
    point_forest_of,
    matrix_to_pair,
    pair_to_matrix,
)

from src.counting import (
    stirling2,
    poly_bernoulli,
    count_naf,
    callan_count_by_length,
    SeriesTable,
    UniSeries,
    egf_gamma_free,
    omega_series,
    bessel_tree_series,
)

from src.enumeration import (
    enumerate_gamma_free,
    enumerate_gamma_free_with_statistics,
    enumerate_callan,
    enumerate_increasing_forests,
    enumerate_point_forests,
    enumerate_complete_naf,
    enumerate_no_common_rise,
    count_complete_naf_by_eta,
    count_no_common_rise_by_eta,
    brute_force_f_inverse,
    tau_counts,
    complete_tree_counts,
)

from src.verification.report import VerificationReport
from src.verification.checks import (
    TABLE_1,
    verify_phi_bijective,
    verify_pi,
    verify_psi,
    verify_theorem5,
    verify_table1,
    verify_egf,
    verify_bessel,
)
from src.run_verification import VerificationRunner, VerifyTarget, TARGETS
