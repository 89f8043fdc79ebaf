"""Exact value-set statistics of polynomials over finite fields, the curve
and representation-theoretic machinery behind the quartic image-size bound
|N_f - 5q/8| <= sqrt(q)/2 + 15/4, and the prime-sweep experiment verifying
it.
"""

from .artin import (
    LDegreeTable,
    RamificationProfile,
    l_degree_table,
    ramification_profile,
    tame_l_degree,
)
from .bounds import (
    BoundReport,
    QuarticLedger,
    QuarticVerdict,
    c_of_d,
    mu,
    quartic_ledger,
    quartic_verdict,
    theorem_constant,
)
from .curves import (
    CurveCounts,
    LPolynomial,
    count_t2,
    count_t3,
    count_t4,
    predicted_count,
    t2_l_polynomial,
    u_of,
)
from .ffield import (
    FieldCtx,
    factor_shape,
    field_arith,
    frobenius_power,
    make_extension,
    make_prime_field,
    multiplicity_profile,
    poly_gcd,
)
from .spectrum import (
    CycleCensus,
    GenericityVerdict,
    PreimageSpectrum,
    bsd_identity_check,
    classical_bounds,
    cycle_type_census,
    genericity_test,
    normalized_deviation,
    preimage_spectrum,
    tuple_counts,
    weil_character_sum,
)
from .sweep import SweepRecord, run_sweep, write_csv
from .symrep import (
    ReprTable,
    fixed_dim,
    hook_dimension,
    kostka_hook,
    mn_character,
    partitions,
    repr_table,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "CurveCounts",
    "CycleCensus",
    "FieldCtx",
    "GenericityVerdict",
    "LDegreeTable",
    "LPolynomial",
    "PreimageSpectrum",
    "QuarticLedger",
    "QuarticVerdict",
    "RamificationProfile",
    "ReprTable",
    "SweepRecord",
    "bsd_identity_check",
    "c_of_d",
    "classical_bounds",
    "count_t2",
    "count_t3",
    "count_t4",
    "cycle_type_census",
    "factor_shape",
    "field_arith",
    "fixed_dim",
    "frobenius_power",
    "genericity_test",
    "hook_dimension",
    "kostka_hook",
    "l_degree_table",
    "make_extension",
    "make_prime_field",
    "mn_character",
    "mu",
    "multiplicity_profile",
    "normalized_deviation",
    "partitions",
    "poly_gcd",
    "predicted_count",
    "preimage_spectrum",
    "quartic_ledger",
    "quartic_verdict",
    "ramification_profile",
    "repr_table",
    "run_sweep",
    "t2_l_polynomial",
    "tame_l_degree",
    "theorem_constant",
    "tuple_counts",
    "u_of",
    "weil_character_sum",
    "write_csv",
]
