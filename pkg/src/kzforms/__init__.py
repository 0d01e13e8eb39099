"""Exact q-series computations for the quasimodular forms A_n, their normalizations and their Kummer-type congruences."""

from .checks import (
    CongruenceReport,
    ValuationTable,
    check_kummer,
    kummer_pairs,
    padic_valuations,
    theorem2_applicable,
    totient,
)
from .quasimodular import (
    EisensteinDecomposition,
    EisensteinMonomial,
    NotInSpan,
    SingularSystem,
    decompose,
    eisenstein,
    monomial_basis,
    reduce_decomposition_mod,
)
from .forms import ABarForm, AForm, a_form, abar, f_g, theta0, theta0_direct
from .partitions import (
    FrobeniusCoords,
    Partition,
    enumerate_partitions,
    frobenius_coords,
    lambda_weight,
    power_sum,
)
from .series import QSeries, XSeries, ZetaLaurent, eta_like_product, qs_add, qs_mul, xs_exp, xs_log, zl_coefficient

__all__ = [
    "ABarForm",
    "AForm",
    "CongruenceReport",
    "EisensteinDecomposition",
    "EisensteinMonomial",
    "FrobeniusCoords",
    "NotInSpan",
    "Partition",
    "QSeries",
    "SingularSystem",
    "ValuationTable",
    "XSeries",
    "ZetaLaurent",
    "a_form",
    "abar",
    "check_kummer",
    "decompose",
    "eisenstein",
    "enumerate_partitions",
    "eta_like_product",
    "f_g",
    "frobenius_coords",
    "kummer_pairs",
    "lambda_weight",
    "monomial_basis",
    "padic_valuations",
    "power_sum",
    "qs_add",
    "qs_mul",
    "reduce_decomposition_mod",
    "theorem2_applicable",
    "theta0",
    "theta0_direct",
    "totient",
    "xs_exp",
    "xs_log",
    "zl_coefficient",
]
