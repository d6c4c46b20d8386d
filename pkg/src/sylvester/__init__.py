"""Exact Sylvester-wave decomposition of restricted partition functions."""

from sylvester.arith import (
    Rational,
    binomial,
    divisor_set,
    mobius,
    multinomial,
    totient,
)
from sylvester.bernoulli import (
    bernoulli_numbers,
    bernoulli_poly,
    hob_constants,
    hob_poly,
    multiplication_sum,
)
from sylvester.circulators import CirculatorTable, psi, psi_float_check
from sylvester.oracle import DenumerantTable, dp_count, series_count
from sylvester.poly import Poly, poly_add, poly_eval, poly_mul, poly_scale, poly_shift
from sylvester.waves import (
    EnumerationCapExceeded,
    GeneratorSet,
    QuasiPoly,
    WaveSplit,
    eval_quasipoly,
    partition_quasipoly,
    sigma,
    sylvester_waves,
    unit_weight_lhs,
    wave1,
    wave_j,
    wave_j_reference,
)

__all__ = [
    "Rational",
    "binomial",
    "multinomial",
    "mobius",
    "totient",
    "divisor_set",
    "Poly",
    "poly_add",
    "poly_scale",
    "poly_mul",
    "poly_eval",
    "poly_shift",
    "bernoulli_numbers",
    "bernoulli_poly",
    "hob_constants",
    "hob_poly",
    "multiplication_sum",
    "CirculatorTable",
    "psi",
    "psi_float_check",
    "GeneratorSet",
    "WaveSplit",
    "QuasiPoly",
    "EnumerationCapExceeded",
    "wave1",
    "wave_j",
    "wave_j_reference",
    "sylvester_waves",
    "partition_quasipoly",
    "eval_quasipoly",
    "sigma",
    "unit_weight_lhs",
    "DenumerantTable",
    "dp_count",
    "series_count",
]
