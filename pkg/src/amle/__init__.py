"""Approximate maximum likelihood estimation for scalar diffusions."""
from .errors import (
    ConfigError,
    ConvergenceError,
    DomainError,
    QuadratureError,
    TruncationBreakdown,
    UnsupportedCapability,
)
from .estimation import FitOptions, FitResult, fit, select_J, wald_statistic
from .expansion import TransformCache, approx_logdensity, coeff_c, logdensity_terms
from .kernels import BACKEND
from .likelihood import SamplePath, approx_loglik, exact_loglik, loglik
from .models import CIR, DiffusionModel, ParamVector, Vasicek, get_model, register_model
from .simulate import SimSpec, read_path, write_path

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CIR",
    "ConfigError",
    "ConvergenceError",
    "DiffusionModel",
    "DomainError",
    "FitOptions",
    "FitResult",
    "ParamVector",
    "QuadratureError",
    "SamplePath",
    "SimSpec",
    "TransformCache",
    "TruncationBreakdown",
    "UnsupportedCapability",
    "Vasicek",
    "approx_logdensity",
    "approx_loglik",
    "coeff_c",
    "exact_loglik",
    "fit",
    "get_model",
    "logdensity_terms",
    "loglik",
    "read_path",
    "register_model",
    "select_J",
    "wald_statistic",
    "write_path",
]
