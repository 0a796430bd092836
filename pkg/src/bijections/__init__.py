from .pi import pre_order, pi, pi_inverse
from .phi import (
    Placement,
    increasing_forest_of,
    phi,
    phi_inverse,
    phi_inverse_trace,
    reconstruct_matrix,
    callan_sequence,
)
from .forest_classes import is_properly_labeled, is_leftmost_valid
from .psi import (
    has_common_rise,
    f_convert,
    f_inverse,
    psi,
    psi_inverse,
    point_forest_of,
    matrix_to_pair,
    pair_to_matrix,
)
