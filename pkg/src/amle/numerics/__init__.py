"""Numerical primitives shared by the estimation code."""
from .finite_diff import finite_diff_gradient, finite_diff_hessian
from .gof import kolmogorov_sf, ks_test
from .linalg import SymEigen, spectral_norm, sym_eigen, symmetrize
from .quadrature import DEFAULT_SPEC, QuadratureSpec, integrate
from .random import make_rng, sample_noncentral_chisq
from .special import hermite, log_bessel_i, log_bessel_i_array

__all__ = [
    "DEFAULT_SPEC",
    "QuadratureSpec",
    "SymEigen",
    "finite_diff_gradient",
    "finite_diff_hessian",
    "hermite",
    "integrate",
    "kolmogorov_sf",
    "ks_test",
    "log_bessel_i",
    "log_bessel_i_array",
    "make_rng",
    "sample_noncentral_chisq",
    "spectral_norm",
    "sym_eigen",
    "symmetrize",
]
