"""Kernel arithmetic, powered-number counting, and certified two-part splits."""

from .decompose import (
    KERNEL_BOUND_4TH,
    CheckResult,
    Decomposition,
    RangeScanReport,
    SplitWitness,
    choose_exponents,
    solve_diophantine,
    split,
    verify_exact,
    verify_range,
    verify_structural,
)
from .kernel import (
    FactorLimitError,
    Factorization,
    RadicalTable,
    SieveLimitError,
    factorize,
    radical,
    radical_sieve,
)
from .oracle import (
    BestSplit,
    ComparisonReport,
    ProbeReport,
    best_decomposition,
    conjecture_probe,
    constructive_vs_oracle,
)
from .powered import (
    CountReport,
    Theta,
    count_log_weighted,
    count_members,
    is_member,
    multiplicity_index,
    subset_check_powers,
)

__version__ = "0.1.0"

__all__ = [
    "KERNEL_BOUND_4TH",
    "BestSplit",
    "CheckResult",
    "ComparisonReport",
    "CountReport",
    "Decomposition",
    "FactorLimitError",
    "Factorization",
    "ProbeReport",
    "RadicalTable",
    "RangeScanReport",
    "SieveLimitError",
    "SplitWitness",
    "Theta",
    "best_decomposition",
    "choose_exponents",
    "conjecture_probe",
    "constructive_vs_oracle",
    "count_log_weighted",
    "count_members",
    "factorize",
    "is_member",
    "multiplicity_index",
    "radical",
    "radical_sieve",
    "solve_diophantine",
    "split",
    "subset_check_powers",
    "verify_exact",
    "verify_range",
    "verify_structural",
]
