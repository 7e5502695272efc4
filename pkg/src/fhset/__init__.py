"""Frequency-hopping sequence sets: constructions, exact Hamming correlation
statistics, and optimality against the Lempel-Greenberger, Peng-Fan and
average-correlation bounds."""

from .algebra import FieldContext, build_extension_field, build_field, build_prime_field, field_op
from .bounds import OptimalityVerdict, ahc_verdict, lg_bound, mhc_verdict, peng_fan_holds
from .constructions import (
    InterleaveMap,
    construction_c,
    gen_corollary16,
    gen_cyclotomic_a,
    gen_cyclotomic_b,
    gen_kumar,
    gen_multiplicative,
    gen_nhz,
    gen_p2p,
    gen_theorem17,
    generate,
    interleave,
)
from .core import CorrelationReport, Fhs, FhsSet, distribution, full_report, hamming_correlation, verify_sum_identities
from .cyclotomy import CyclotomicScheme, build_scheme, class_sum_identity, doubling_numbers_vanish
from .formats import AnalysisReport, analyze, read_sequence_file, write_sequence_file

__version__ = "0.1.0"
