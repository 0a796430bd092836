from .numbers import StirlingTable, stirling2, callan_count_by_length, poly_bernoulli, count_naf
from .series import (
    MarkerPoly,
    SeriesTable,
    UniSeries,
    egf_gamma_free,
    bessel_j0_series,
    omega_series,
    bessel_tree_series,
)
