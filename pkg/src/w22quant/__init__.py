"""Exact computations in quantizations of U(W(2,2)) by Drinfeld twists."""

from .algebra import (
    ONE,
    ZERO,
    AlgebraElement,
    Generator,
    TwistConfig,
    L,
    W,
    ad_power,
    binomial,
    bracket_basis,
    commutator,
    hbar,
    hbar_falling,
    hbar_rising,
    multiply,
)
from .expr import evaluate, parse, to_source
from .hopf import delta0, eps, lift, s0
from .kernel import BACKEND
from .series import TruncatedSeries, one_minus_Xt_power, series_invert
from .tensor import TensorElement, embed, mu, tensor, tensor2, tensor3
from .twist import (
    bk_coefficients,
    build_twist,
    closed_form_antipode,
    closed_form_delta,
    d_inverse,
    twisted_antipode,
    twisted_delta,
)
from .verify import VerificationReport, run_all, run_suite

__version__ = "0.1.0"

__all__ = [
    "ONE", "ZERO", "AlgebraElement", "Generator", "TwistConfig", "L", "W",
    "ad_power", "binomial", "bracket_basis", "commutator", "hbar", "hbar_falling",
    "hbar_rising", "multiply", "evaluate", "parse", "to_source", "delta0", "eps",
    "lift", "s0", "BACKEND", "TruncatedSeries", "one_minus_Xt_power", "series_invert",
    "TensorElement", "embed", "mu", "tensor", "tensor2", "tensor3", "bk_coefficients",
    "build_twist", "closed_form_antipode", "closed_form_delta", "d_inverse",
    "twisted_antipode", "twisted_delta", "VerificationReport", "run_all", "run_suite",
]
