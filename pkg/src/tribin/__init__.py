"""Exact arithmetic for Tribin-class nowhere monotonic functions.

The argument of ``f`` is written in an s-symbol Q-weighted numeral system,
its value in a two-symbol one; every computation is done with exact
rationals.
"""

from .codes import (
    Alphabet,
    DigitCode,
    Prefix,
    compare_lex,
    digit_at,
    dual_representation,
    normalize_code,
)
from .errors import (
    AlphabetMismatchError,
    DigitRangeError,
    GuardExceededError,
    MalformedCodeError,
    NotFoundError,
    PartitionError,
    TribinError,
    WeightError,
)
from .function import (
    LevelKind,
    LevelSetReport,
    Partition,
    Rule,
    TribinConfig,
    VariationReport,
    WellDefinedReport,
    Witness,
    admissible_partitions,
    beta_prefix,
    check_well_defined,
    cylinder_image,
    eval_f,
    level_set_classify,
    level_set_cylinders,
    monotonicity_witness,
    refinement_rank,
    transduce_code,
    variation_growth_schedule,
    variation_report,
    variation_Wk_brute,
    variation_Wk_dp,
)
from .numsys import (
    Cylinder,
    RepresentationSystem,
    code_value,
    cylinder_bounds,
    cylinder_length,
    project,
    value_digits,
)

__version__ = "0.1.0"
