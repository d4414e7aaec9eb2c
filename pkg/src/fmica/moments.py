"""Empirical moment machinery: whitening, fourth-moment and cumulant matrices,
and the joint statistics the validation harness tracks.

All empirical moments use 1/n normalization so the finite-sample estimating
equations match the population functionals exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidInput
from .linalg import inv_sqrt


def as_data(X, name: str = "X") -> np.ndarray:
    """Validate a p x n data matrix (one observation per column)."""
    X = np.asarray(X, dtype=float)
    if X.ndim != 2:
        raise InvalidInput(f"{name} must be 2-d, got shape {X.shape}")
    p, n = X.shape
    if n <= p:
        raise InvalidInput(f"{name} needs more observations than dimensions (p={p}, n={n})")
    if not np.all(np.isfinite(X)):
        raise InvalidInput(f"{name} has non-finite entries")
    return X


def sample_cov(X) -> np.ndarray:
    """Covariance with 1/n normalization."""
    X = as_data(X)
    C = X - X.mean(axis=1, keepdims=True)
    return C @ C.T / X.shape[1]


@dataclass(frozen=True)
class WhitenedSample:
    """Centered, decorrelated data: ``data`` has sample mean 0 and sample
    covariance I; ``whitener`` is the symmetric PD matrix that produced it."""

    data: np.ndarray
    mean: np.ndarray
    whitener: np.ndarray

    @property
    def p(self) -> int:
        return self.data.shape[0]

    @property
    def n(self) -> int:
        return self.data.shape[1]


def whiten(X) -> WhitenedSample:
    """Standardize columns of X with the symmetric inverse square root of the
    sample covariance."""
    X = as_data(X)
    mu = X.mean(axis=1)
    C = X - mu[:, None]
    M = inv_sqrt(C @ C.T / X.shape[1])
    return WhitenedSample(data=M @ C, mean=mu, whitener=M)


def _whitened_data(W) -> np.ndarray:
    if isinstance(W, WhitenedSample):
        return W.data
    return as_data(W)


def kurtosis_matrix(W) -> np.ndarray:
    """Fourth-moment matrix (1/n) sum ||y_i||^2 y_i y_i' of whitened data."""
    Y = _whitened_data(W)
    n = Y.shape[1]
    B = (Y * (Y * Y).sum(axis=0)) @ Y.T / n
    return (B + B.T) / 2.0


@dataclass(frozen=True)
class CumulantMatrixSet:
    """The p^2 fourth-cumulant slices C^ij, stored as an array of shape
    (p, p, p, p) with ``matrices[i, j]`` the p x p matrix C^ij."""

    p: int
    matrices: np.ndarray

    def matrix(self, i: int, j: int) -> np.ndarray:
        return self.matrices[i, j]

    def stacked(self) -> np.ndarray:
        """View of shape (p^2, p, p), rows in row-major (i, j) order."""
        return self.matrices.reshape(self.p * self.p, self.p, self.p)

    def combine(self, A) -> np.ndarray:
        """The linear combination sum_ij a_ij C^ij."""
        A = np.asarray(A, dtype=float)
        if A.shape != (self.p, self.p):
            raise InvalidInput(f"A must be {self.p} x {self.p}, got {A.shape}")
        return np.einsum("ij,ijkl->kl", A, self.matrices)


def cumulant_matrices(W) -> CumulantMatrixSet:
    """All cumulant slices C^ij = B^ij - E^ij - E^ji - tr(E^ij) I of whitened
    data, with B^ij = (1/n) sum (y_i' E^ij y_i) y_i y_i'."""
    Y = _whitened_data(W)
    p, n = Y.shape
    pairs = (Y[:, None, :] * Y[None, :, :]).reshape(p * p, n)
    fourth = (pairs @ pairs.T / n).reshape(p, p, p, p)
    C = fourth.copy()
    eye = np.eye(p)
    for i in range(p):
        for j in range(p):
            C[i, j] -= np.outer(eye[i], eye[j]) + np.outer(eye[j], eye[i])
            if i == j:
                C[i, j] -= eye
    return CumulantMatrixSet(p=p, matrices=C)


def cumulant_matrix(W, A) -> np.ndarray:
    """Direct evaluation of C(A) = (1/n) sum (y'Ay) y y' - A - A' - tr(A) I."""
    Y = _whitened_data(W)
    A = np.asarray(A, dtype=float)
    p, n = Y.shape
    if A.shape != (p, p):
        raise InvalidInput(f"A must be {p} x {p}, got {A.shape}")
    quad = np.einsum("in,ij,jn->n", Y, A, Y)
    return (Y * quad) @ Y.T / n - A - A.T - np.trace(A) * np.eye(p)


def cov4(X) -> np.ndarray:
    """Fourth-moment scatter (1/n) sum d_i c_i c_i' with c_i the centered
    observation and d_i its squared Mahalanobis norm."""
    X = as_data(X)
    n = X.shape[1]
    C = X - X.mean(axis=1, keepdims=True)
    M = inv_sqrt(C @ C.T / n)
    d = ((M @ C) ** 2).sum(axis=0)
    S4 = (C * d) @ C.T / n
    return (S4 + S4.T) / 2.0


@dataclass(frozen=True)
class EmpiricalAsymStats:
    """Joint second/fourth moment statistics of (approximately) standardized
    sources: s_hat[k, l] = mean(z_k z_l), r_hat[k, l] = mean((z_k^3 - g_k) z_l)
    with g_k the sample third moment."""

    s_hat: np.ndarray
    r_hat: np.ndarray
    gamma_hat: np.ndarray


def asym_stats(Z) -> EmpiricalAsymStats:
    Z = as_data(Z, "Z")
    n = Z.shape[1]
    cubes = Z**3
    gamma = cubes.mean(axis=1)
    s_hat = Z @ Z.T / n
    r_hat = (cubes - gamma[:, None]) @ Z.T / n
    return EmpiricalAsymStats(s_hat=(s_hat + s_hat.T) / 2.0, r_hat=r_hat, gamma_hat=gamma)


def r_mkl(Z, m: int, k: int, l: int) -> float:
    """The cross statistic mean(z_m^2 z_k z_l), computed on demand."""
    Z = as_data(Z, "Z")
    return float((Z[m] ** 2 * Z[k] * Z[l]).mean())
