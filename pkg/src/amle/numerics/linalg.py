"""Small symmetric-matrix algebra."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import DomainError

MAX_DIM = 16


def symmetrize(m) -> np.ndarray:
    """Copy the upper triangle of ``m`` onto the lower one.

    The result is exactly symmetric, which is the storage invariant for every
    information-type matrix in the package.
    """
    m = np.array(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DomainError(f"expected a square matrix, got shape {m.shape}")
    if m.shape[0] > MAX_DIM:
        raise DomainError(f"matrix dimension {m.shape[0]} exceeds {MAX_DIM}")
    iu = np.triu_indices(m.shape[0], 1)
    m[(iu[1], iu[0])] = m[iu]
    return m


@dataclass(frozen=True)
class SymEigen:
    """Eigen-decomposition ``m = V diag(values) V.T`` with values descending."""

    values: np.ndarray
    vectors: np.ndarray

    def reconstruct(self) -> np.ndarray:
        return symmetrize((self.vectors * self.values) @ self.vectors.T)

    def inverse(self) -> np.ndarray:
        if np.any(self.values == 0):
            raise DomainError("matrix is singular")
        return symmetrize((self.vectors / self.values) @ self.vectors.T)

    def sqrt(self) -> np.ndarray:
        lam_min = float(self.values[-1])
        if lam_min <= 0:
            raise DomainError(f"square root needs a positive definite matrix; lambda_min={lam_min!r}")
        return symmetrize((self.vectors * np.sqrt(self.values)) @ self.vectors.T)

    def spectral_norm(self) -> float:
        return float(np.max(np.abs(self.values)))


def sym_eigen(m) -> SymEigen:
    m = symmetrize(m)
    values, vectors = np.linalg.eigh(m)
    order = np.argsort(values)[::-1]
    return SymEigen(values[order], vectors[:, order])


def spectral_norm(m) -> float:
    return sym_eigen(m).spectral_norm()
