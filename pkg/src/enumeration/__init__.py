from .matrices import (
    enumerate_gamma_free,
    enumerate_gamma_free_with_statistics,
    enumerate_complete_naf,
    eta_of,
    count_complete_naf_by_eta,
    tau_counts,
    complete_tree_counts,
)
from .callan import enumerate_callan, ordered_subset_sequences
from .forests import enumerate_increasing_forests, enumerate_point_forests, brute_force_f_inverse
from .permutations import enumerate_no_common_rise, count_no_common_rise_by_eta
