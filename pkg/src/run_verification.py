# src/run_verification.py

import logging
import time
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, List, Tuple

from src import (
    VerificationReport,
    verify_bessel,
    verify_egf,
    verify_phi_bijective,
    verify_pi,
    verify_psi,
    verify_table1,
    verify_theorem5,
)

logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)


@dataclass(frozen=True)
class VerifyTarget:
    name: str
    driver: Callable[..., VerificationReport]
    params: Tuple[str, ...]
    description: str


TARGETS: Dict[str, VerifyTarget] = {
    t.name: t
    for t in (
        VerifyTarget("phi", verify_phi_bijective, ("n", "k"), "Γ-free matrices <-> Callan sequences"),
        VerifyTarget("pi", verify_pi, ("n",), "increasing forests <-> permutations"),
        VerifyTarget("psi", verify_psi, ("n",), "leftmost-valid <-> properly labeled forests"),
        VerifyTarget("theorem5", verify_theorem5, ("n",), "complete non-ambiguous forests <-> no-common-rise pairs"),
        VerifyTarget("table1", verify_table1, ("max_n", "max_k"), "poly-Bernoulli table against enumeration"),
        VerifyTarget("egf", verify_egf, ("max_n", "max_k"), "Γ-free generating function against enumeration"),
        VerifyTarget("bessel", verify_bessel, ("max_n",), "-ln J0 coefficients against complete trees"),
    )
}


class VerificationRunner:
    """
    Dispatches verify targets to their drivers:
      target name + integer parameters → driver → VerificationReport

    Domain errors (bad parameters, size guards) propagate to the caller; a mathematical
    mismatch comes back as a failed report.
    """

    def __init__(self, targets: Dict[str, VerifyTarget] = None):
        self.targets = targets or TARGETS
        self.history: List[VerificationReport] = []

    def target(self, name: str) -> VerifyTarget:
        try:
            return self.targets[name]
        except KeyError:
            raise ValueError(f"Unknown verify target {name!r}; expected one of {sorted(self.targets)}") from None

    # ------------------------------------------------------------------ #
    # Single target
    # ------------------------------------------------------------------ #
    def run(self, name: str, **params: int) -> VerificationReport:
        target = self.target(name)
        missing = [p for p in target.params if p not in params]
        if missing:
            raise ValueError(f"verify {name} needs parameters {list(target.params)}, missing {missing}")
        for p in target.params:
            if params[p] < 0:
                raise ValueError(f"verify {name}: {p} must be non-negative, got {params[p]}")

        args = {p: params[p] for p in target.params}
        logger.info("Running verify %s with %s", name, args)
        started = time.perf_counter()
        report = target.driver(**args)
        logger.info("verify %s finished in %.2fs: %s", name, time.perf_counter() - started,
                    "PASS" if report.passed else "FAIL")
        self.history.append(report)
        return report

    # ------------------------------------------------------------------ #
    # Batches
    # ------------------------------------------------------------------ #
    def run_many(self, plan: Iterable[Tuple[str, Dict[str, int]]]) -> List[VerificationReport]:
        return [self.run(name, **params) for name, params in plan]

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.history)
