"""Exact q-series engine and verification suite for t-core partition identities."""

__version__ = "0.1.0"

from .catalog import CATALOG, BSequence, Identity, b_closed_form_4m3, b_value, build
from .eta import (
    EtaQuotient,
    ExpressionError,
    core_series,
    euler_f1,
    expand,
    expand_expression,
    k_series,
    parse_quotient,
)
from .partitions import (
    Partition,
    count_cores,
    enumerate_partitions,
    hook_numbers,
    is_t_core,
)
from .series import (
    EqualityOutcome,
    LaurentSeries,
    NonUnitError,
    PrecisionError,
    SeriesError,
    VacuousComparisonError,
    compare,
    monomial,
    one,
    zero,
)
from .verify import (
    DEFAULT_ORDER,
    VerificationReport,
    oracle_crosscheck,
    scan_congruence,
    summarize,
    verify,
    verify_all,
    write_report,
)

__all__ = [
    "__version__",
    "CATALOG",
    "BSequence",
    "Identity",
    "b_closed_form_4m3",
    "b_value",
    "build",
    "EtaQuotient",
    "ExpressionError",
    "core_series",
    "euler_f1",
    "expand",
    "expand_expression",
    "k_series",
    "parse_quotient",
    "Partition",
    "count_cores",
    "enumerate_partitions",
    "hook_numbers",
    "is_t_core",
    "EqualityOutcome",
    "LaurentSeries",
    "NonUnitError",
    "PrecisionError",
    "SeriesError",
    "VacuousComparisonError",
    "compare",
    "monomial",
    "one",
    "zero",
    "DEFAULT_ORDER",
    "VerificationReport",
    "oracle_crosscheck",
    "scan_congruence",
    "summarize",
    "verify",
    "verify_all",
    "write_report",
]
