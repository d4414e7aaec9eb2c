"""Dense symmetric linear algebra for small matrices.

Everything here is sized for ICA problems (dimension up to a few tens) and
favors deterministic, dependency-free routines: the eigensolver is a cyclic
Jacobi iteration, so repeated calls on equal input are bit-identical.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateUpdate, InvalidInput, SingularCovariance

# Jacobi stop: largest off-diagonal below this times ||S||_F.
_OFF_TOL = 1e-12
# Symmetry tolerance on inputs, relative to ||S||_F.
_SYM_TOL = 1e-10
# Eigenvalue floor for SPD inputs, relative to the largest eigenvalue.
PD_FLOOR = 1e-12


@dataclass(frozen=True)
class SymEigen:
    """Eigendecomposition of a symmetric matrix.

    ``values`` are in descending order and ``vectors[:, k]`` is the unit
    eigenvector paired with ``values[k]``, signed so that its
    largest-magnitude entry is positive.
    """

    values: np.ndarray
    vectors: np.ndarray


def check_square(S, name: str = "matrix") -> np.ndarray:
    S = np.asarray(S, dtype=float)
    if S.ndim != 2 or S.shape[0] != S.shape[1]:
        raise InvalidInput(f"{name} must be square, got shape {S.shape}")
    if not np.all(np.isfinite(S)):
        raise InvalidInput(f"{name} has non-finite entries")
    return S


def basis_outer(p: int, i: int, j: int) -> np.ndarray:
    """The matrix e_i e_j': all zeros except a one at (i, j)."""
    m = np.zeros((p, p))
    m[i, j] = 1.0
    return m


def sym_eigen(S, max_sweeps: int = 60) -> SymEigen:
    """Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.

    The input is symmetrized as (S + S')/2 first; asymmetry beyond 1e-10
    relative is rejected.  Sweeps stop once every off-diagonal entry is below
    1e-12 times the Frobenius norm of the input.
    """
    S = check_square(S, "S")
    scale = float(np.linalg.norm(S))
    if np.abs(S - S.T).max(initial=0.0) > _SYM_TOL * max(1.0, scale):
        raise InvalidInput("S is not symmetric")
    A = (S + S.T) / 2.0
    p = A.shape[0]
    V = np.eye(p)

    if scale > 0.0:
        stop = _OFF_TOL * scale
        for _ in range(max_sweeps):
            off = 0.0
            for i in range(p - 1):
                row = np.abs(A[i, i + 1 :])
                m = row.max()
                if m > off:
                    off = m
            if off <= stop:
                break
            for i in range(p - 1):
                for j in range(i + 1, p):
                    a_ij = A[i, j]
                    if abs(a_ij) <= stop:
                        continue
                    tau = (A[j, j] - A[i, i]) / (2.0 * a_ij)
                    t = math.copysign(1.0, tau) / (abs(tau) + math.hypot(1.0, tau))
                    c = 1.0 / math.hypot(1.0, t)
                    s = t * c
                    ci, cj = A[:, i].copy(), A[:, j].copy()
                    A[:, i] = c * ci - s * cj
                    A[:, j] = s * ci + c * cj
                    ri, rj = A[i, :].copy(), A[j, :].copy()
                    A[i, :] = c * ri - s * rj
                    A[j, :] = s * ri + c * rj
                    A[i, j] = A[j, i] = 0.0
                    vi, vj = V[:, i].copy(), V[:, j].copy()
                    V[:, i] = c * vi - s * vj
                    V[:, j] = s * vi + c * vj

    values = np.diag(A).copy()
    order = np.argsort(-values, kind="stable")
    values = values[order]
    V = V[:, order]
    for k in range(p):
        col = V[:, k]
        if col[np.argmax(np.abs(col))] < 0.0:
            V[:, k] = -col
    return SymEigen(values=values, vectors=V)


def inv_sqrt(S) -> np.ndarray:
    """Symmetric positive-definite inverse square root M with M S M = I."""
    eig = sym_eigen(S)
    lmax = eig.values[0]
    floor = PD_FLOOR * max(lmax, 0.0)
    lmin = eig.values[-1]
    if lmax <= 0.0 or lmin <= floor:
        raise SingularCovariance(
            f"eigenvalue {lmin:.6e} at or below positive-definite floor {floor:.6e}",
            eigenvalue=float(lmin),
        )
    M = (eig.vectors / np.sqrt(eig.values)) @ eig.vectors.T
    return (M + M.T) / 2.0


def orthogonalize(T) -> np.ndarray:
    """The orthogonal polar factor T (T'T)^{-1/2}.

    This is the orthogonal matrix closest to T in Frobenius norm; it requires
    T to have full rank.
    """
    T = check_square(T, "T")
    G = T.T @ T
    eig = sym_eigen((G + G.T) / 2.0)
    lmax = eig.values[0]
    if lmax <= 0.0 or eig.values[-1] <= PD_FLOOR * lmax:
        raise DegenerateUpdate(
            f"rank-deficient update: Gram eigenvalue {eig.values[-1]:.6e}"
        )
    return T @ (eig.vectors / np.sqrt(eig.values)) @ eig.vectors.T
