# scripts/reproduce_claims.py
# Run every verify target at desk scale, grouped by the claim it checks.
# Useful for regression runs after touching a bijection or a counting formula.

import logging
import sys
import time
from collections import defaultdict
from typing import Optional

from src import SizeLimitError, VerificationReport, VerificationRunner


# -------------------------
# Verify runs grouped by claim
# -------------------------
CLAIMS = {
    "poly_bernoulli_table": [
        ("table1", {"max_n": 5, "max_k": 5}),
    ],
    "gamma_free_vs_callan": [
        ("phi", {"n": n, "k": k}) for n in range(5) for k in range(5)
    ],
    "forests_vs_permutations": [
        ("pi", {"n": n}) for n in range(7)
    ],
    "forest_conversion": [
        ("psi", {"n": n}) for n in range(5)
    ],
    "complete_forests_vs_no_common_rise": [
        ("theorem5", {"n": n}) for n in range(5)
    ],
    "generating_functions": [
        ("egf", {"max_n": 5, "max_k": 5}),
        ("bessel", {"max_n": 4}),
    ],
}


# -------------------------
# Classify each run for the summary
# -------------------------
def classify_outcome(report: Optional[VerificationReport] = None, error: Optional[Exception] = None) -> str:
    """pass / fail for a finished report, skipped past a size guard, error for any other rejection."""
    if error is not None:
        return "skipped" if isinstance(error, SizeLimitError) else "error"
    return "pass" if report.passed else "fail"


# -------------------------
# Main runner
# -------------------------
def main() -> int:
    logging.basicConfig(level=logging.WARNING)
    runner = VerificationRunner()
    summary_counts = defaultdict(int)

    for group_name, plan in CLAIMS.items():
        print(f"\n=== Group: {group_name} ===")
        for target, params in plan:
            started = time.perf_counter()
            try:
                report = runner.run(target, **params)
            except ValueError as e:
                status = classify_outcome(error=e)
                summary_counts[status] += 1
                print(f"[{status.upper()}] {target} {params}: {e}")
                continue
            summary_counts[classify_outcome(report)] += 1
            print(report.render())
            print(f"({time.perf_counter() - started:.2f}s)")

    print("\n\n===== SUMMARY =====")
    for status, count in sorted(summary_counts.items()):
        print(f"{status}: {count}")
    return 0 if summary_counts["fail"] == summary_counts["error"] == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
