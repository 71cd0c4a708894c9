"""debell: exact arithmetic for generalized Stirling numbers, r-derangements,
barred preferential arrangements, and higher-order r-deranged Bell numbers,
with brute-force enumeration oracles and an identity-verification harness.
"""

from .asymptotics import (
    AsymptoticComparison,
    BaseSequence,
    IntPartition,
    bell_asymptotic_estimate,
    geometric_base,
    hsu_expansion,
    partitions_with_parts,
    w_coefficient,
    w_explicit,
)
from .bell import (
    BellRoute,
    BellValue,
    bell_convolution,
    bell_egf,
    bell_general_closed,
    bell_lambda1,
    bell_value,
    deranged_bell_classic,
    omega,
    omega_egf,
    omega_identity_check,
    product_form_check,
)
from .derangements import (
    DerangementQuery,
    derangement,
    r_derangement,
    r_derangement_egf,
    r_derangement_rec,
)
from .enumeration import (
    ArrangementTally,
    BlockPartition,
    EnumerationCapError,
    barred_count,
    ordered_partitions_count,
    r_derangements_enum,
    r_deranged_partitions_enum,
    r_stirling_count,
    set_partitions,
    set_partitions_count,
)
from .exact import ParamSet, Rat, binomial, falling, format_rat, gen_falling, multinomial, parse_rat
from .series import TruncatedSeries, binpow
from .stirling import StirlingTable, colored_block_egf, stirling_egf, stirling_rec
from .verify import GridSpec, VerificationReport, emit_report, run_claims

__version__ = "0.1.0"

__all__ = [
    "ArrangementTally",
    "AsymptoticComparison",
    "BaseSequence",
    "BellRoute",
    "BellValue",
    "BlockPartition",
    "DerangementQuery",
    "EnumerationCapError",
    "GridSpec",
    "IntPartition",
    "ParamSet",
    "Rat",
    "StirlingTable",
    "TruncatedSeries",
    "VerificationReport",
    "barred_count",
    "bell_asymptotic_estimate",
    "bell_convolution",
    "bell_egf",
    "bell_general_closed",
    "bell_lambda1",
    "bell_value",
    "binomial",
    "binpow",
    "colored_block_egf",
    "deranged_bell_classic",
    "derangement",
    "emit_report",
    "falling",
    "format_rat",
    "gen_falling",
    "geometric_base",
    "hsu_expansion",
    "multinomial",
    "omega",
    "omega_egf",
    "omega_identity_check",
    "ordered_partitions_count",
    "parse_rat",
    "partitions_with_parts",
    "product_form_check",
    "r_derangement",
    "r_derangement_egf",
    "r_derangement_rec",
    "r_derangements_enum",
    "r_deranged_partitions_enum",
    "r_stirling_count",
    "run_claims",
    "set_partitions",
    "set_partitions_count",
    "stirling_egf",
    "stirling_rec",
    "w_coefficient",
    "w_explicit",
]
