"""Dense scalar/matrix foundation: Hermitian eigensolver, numerical rank,
and seeded random unitaries.

Matrices are plain numpy arrays (float64 in real mode, complex128 in
complex mode); the same code path serves both scalar modes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import DEFAULT_TOL, ToleranceConfig
from .errors import DimensionMismatch, NoConvergence, NotHermitian

__all__ = [
    "EigenResult",
    "as_matrix",
    "fro",
    "fix_column_phases",
    "hermitian_eigendecompose",
    "rank_from_singular_values",
    "numerical_rank",
    "unitary_random",
    "haar_unitary",
]

_MAX_JACOBI_SWEEPS = 100


def as_matrix(a, name: str = "matrix") -> np.ndarray:
    """Coerce array-like input to a 2-D float64/complex128 ndarray."""
    m = np.asarray(a)
    if m.ndim == 1:
        m = m[:, None]
    if m.ndim != 2:
        raise DimensionMismatch(f"{name} must be 2-D, got ndim={m.ndim}")
    if np.iscomplexobj(m):
        return m.astype(np.complex128, copy=False)
    return m.astype(np.float64, copy=False)


def fro(a) -> float:
    """Frobenius norm as a plain float."""
    return float(np.linalg.norm(np.asarray(a)))


def fix_column_phases(V: np.ndarray) -> np.ndarray:
    """Rescale each column so its largest-magnitude entry is real positive.

    Ties pick the first maximal index, which makes eigenvector output
    reproducible across runs.
    """
    V = V.copy()
    for k in range(V.shape[1]):
        col = V[:, k]
        i = int(np.argmax(np.abs(col)))
        pivot = col[i]
        if pivot != 0:
            V[:, k] = col * (abs(pivot) / pivot)
    return V


@dataclass(frozen=True)
class EigenResult:
    """Eigenvalues (real, descending) and matching unit eigenvectors.

    Column k of ``vectors`` is the eigenvector for ``values[k]``.
    """

    values: np.ndarray
    vectors: np.ndarray


def hermitian_eigendecompose(M, tol: ToleranceConfig | None = None) -> EigenResult:
    """Eigendecompose a Hermitian matrix by cyclic Jacobi rotations.

    Parameters
    ----------
    M : array_like
        Square Hermitian (real symmetric) matrix.
    tol : ToleranceConfig, optional
        Supplies the symmetry-check threshold.

    Returns
    -------
    EigenResult
        Real eigenvalues sorted descending with a unitary eigenvector
        matrix, column phases normalized so the largest-magnitude
        component of each eigenvector is real positive.

    Raises
    ------
    NotHermitian
        If ``||M - M^H||_F > residual_tol * (1 + ||M||_F)``.
    NoConvergence
        If the sweep cap is exceeded (not observed in practice).
    """
    cfg = tol or DEFAULT_TOL
    A = as_matrix(M, "M")
    n, nc = A.shape
    if n != nc:
        raise DimensionMismatch(f"M must be square, got {A.shape}")
    defect = fro(A - A.conj().T)
    if defect > cfg.residual_tol * (1.0 + fro(A)):
        raise NotHermitian(f"symmetry defect {defect:.3e} exceeds tolerance")

    A = 0.5 * (A + A.conj().T)
    if n == 0:
        return EigenResult(np.zeros(0), A.copy())

    def off_norm(B: np.ndarray) -> float:
        C = B.copy()
        np.fill_diagonal(C, 0.0)
        return fro(C)

    V = np.eye(n, dtype=A.dtype)
    target = n * np.finfo(np.float64).eps * max(fro(A), 1e-300)
    converged = False
    for _ in range(_MAX_JACOBI_SWEEPS):
        if off_norm(A) <= target:
            converged = True
            break
        for i in range(n - 1):
            for k in range(i + 1, n):
                c = A[i, k]
                if abs(c) == 0.0:
                    continue
                # Phase-rotate so the 2x2 pivot block is real symmetric,
                # then apply the classical Jacobi rotation: the combined
                # plane transform on (i, k) is W = [cs, sn; -w*sn, w*cs]
                # with w = conj(c)/|c|, and A <- W^H A W.
                omega = np.conj(c) / abs(c)
                tau = (A[k, k].real - A[i, i].real) / (2.0 * abs(c))
                t = np.sign(tau) / (abs(tau) + np.hypot(1.0, tau)) if tau != 0 else 1.0
                cs = 1.0 / np.hypot(1.0, t)
                sn = t * cs
                col_i = A[:, i].copy()
                col_k = A[:, k].copy()
                A[:, i] = cs * col_i - omega * sn * col_k
                A[:, k] = sn * col_i + omega * cs * col_k
                row_i = A[i, :].copy()
                row_k = A[k, :].copy()
                A[i, :] = cs * row_i - np.conj(omega) * sn * row_k
                A[k, :] = sn * row_i + np.conj(omega) * cs * row_k
                A[i, k] = 0.0
                A[k, i] = 0.0
                col_i = V[:, i].copy()
                col_k = V[:, k].copy()
                V[:, i] = cs * col_i - omega * sn * col_k
                V[:, k] = sn * col_i + omega * cs * col_k
    if not converged and off_norm(A) > target:
        raise NoConvergence(
            f"Jacobi sweeps exhausted with off-diagonal norm {off_norm(A):.3e}"
        )

    values = np.real(np.diagonal(A)).copy()
    order = np.argsort(-values, kind="stable")
    return EigenResult(values[order], fix_column_phases(V[:, order]))


def rank_from_singular_values(
    s: np.ndarray, shape: tuple[int, int], rank_rtol: float
) -> int:
    """Count singular values above ``rank_rtol * max(shape) * s_max``.

    Values exactly at the threshold classify as zero (conservative).
    """
    if s.size == 0:
        return 0
    threshold = rank_rtol * max(shape) * float(s[0])
    return int(np.sum(s > threshold))


def numerical_rank(A, tol: ToleranceConfig | None = None) -> int:
    """Tolerance-aware rank of a dense matrix via its singular values."""
    cfg = tol or DEFAULT_TOL
    M = as_matrix(A, "A")
    if M.size == 0:
        return 0
    s = np.linalg.svd(M, compute_uv=False)
    return rank_from_singular_values(s, M.shape, cfg.rank_rtol)


def haar_unitary(rng: np.random.Generator, n: int, complex_mode: bool) -> np.ndarray:
    """Haar-distributed unitary (orthogonal in real mode) from ``rng``."""
    if n == 0:
        dtype = np.complex128 if complex_mode else np.float64
        return np.zeros((0, 0), dtype=dtype)
    G = rng.standard_normal((n, n))
    if complex_mode:
        G = G + 1j * rng.standard_normal((n, n))
    Q, R = np.linalg.qr(G)
    d = np.diagonal(R).copy()
    d[d == 0] = 1.0
    # Fix the QR gauge so the distribution is Haar and the output is
    # deterministic for a fixed generator state.
    return Q * (np.abs(d) / d)


def unitary_random(n: int, seed: int, complex_mode: bool = False) -> np.ndarray:
    """Deterministic seeded random unitary of size n.

    Orthogonalizes a seeded Gaussian matrix; ``||Q^H Q - I||_F`` is at
    machine level (well below 1e-12).
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return haar_unitary(np.random.default_rng(seed), n, complex_mode)
