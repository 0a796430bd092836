from .report import VerificationReport
from .checks import (
    TABLE_1,
    verify_phi_bijective,
    verify_pi,
    verify_psi,
    verify_theorem5,
    verify_table1,
    verify_egf,
    verify_bessel,
)
