"""Characteristic classes, higher Todd genera and rational bordism of model varieties."""

from .algebra import (
    AlgebraElement,
    GradedAlgebra,
    Presentation,
    add,
    build_algebra,
    component,
    mul,
    pair_top,
    tensor,
)
from .genera import (
    GenusSpec,
    chern_to_pontrjagin,
    char_number,
    genus_number,
    higher_genus,
    multiplicative_class,
    newton_power_sums,
    standard_genus,
)
from .series import PowerSeries1, ahat_series, l_series, series_exp, series_log, todd_series
from .varieties import (
    BlowupPair,
    VarietyModel,
    abelian_variety,
    blow_up_point,
    compare_chern_reports,
    product,
    projective_space,
    verify_blowup_invariance,
)

__all__ = [
    "AlgebraElement", "GradedAlgebra", "Presentation", "add", "build_algebra", "component",
    "mul", "pair_top", "tensor",
    "GenusSpec", "chern_to_pontrjagin", "char_number", "genus_number", "higher_genus",
    "multiplicative_class", "newton_power_sums", "standard_genus",
    "PowerSeries1", "ahat_series", "l_series", "series_exp", "series_log", "todd_series",
    "BlowupPair", "VarietyModel", "abelian_variety", "blow_up_point", "compare_chern_reports",
    "product", "projective_space", "verify_blowup_invariance",
]

__version__ = "0.1.0"
