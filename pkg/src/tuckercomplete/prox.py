"""Matrix factorizations and proximal operators used by the solver steps."""

from dataclasses import dataclass

import numpy as np

__all__ = [
    "SvdResult",
    "thin_svd",
    "soft_threshold",
    "svd_shrink",
    "nuclear_norm",
    "spectral_norm",
]


@dataclass(frozen=True)
class SvdResult:
    """Thin SVD ``u @ diag(s) @ vt`` with singular values sorted descending."""

    u: np.ndarray
    s: np.ndarray
    vt: np.ndarray


def thin_svd(matrix):
    """Thin singular value decomposition of a real matrix.

    Raises
    ------
    ValueError
        If the input contains non-finite entries.
    numpy.linalg.LinAlgError
        If the iteration fails to converge (propagated, never truncated).
    """
    matrix = np.asarray(matrix, dtype=np.float64)
    if not np.all(np.isfinite(matrix)):
        raise ValueError("thin_svd: input contains non-finite entries")
    u, s, vt = np.linalg.svd(matrix, full_matrices=False)
    return SvdResult(u=u, s=s, vt=vt)


def soft_threshold(x, tau):
    """Componentwise shrinkage ``sign(x) * max(|x| - tau, 0)``."""
    if tau < 0:
        raise ValueError(f"soft_threshold: tau must be >= 0, got {tau}")
    x = np.asarray(x, dtype=np.float64)
    return np.sign(x) * np.maximum(np.abs(x) - tau, 0.0)


def svd_shrink(matrix, tau):
    """Singular value shrinkage ``U diag(max(s - tau, 0)) Vt``.

    Minimizes ``0.5 * ||X - matrix||_F^2 + tau * ||X||_*`` over X.
    """
    if tau < 0:
        raise ValueError(f"svd_shrink: tau must be >= 0, got {tau}")
    res = thin_svd(matrix)
    shrunk = np.maximum(res.s - tau, 0.0)
    return (res.u * shrunk) @ res.vt


def nuclear_norm(matrix):
    """Sum of singular values."""
    return float(np.sum(thin_svd(matrix).s))


def spectral_norm(matrix):
    """Largest singular value."""
    s = thin_svd(matrix).s
    return float(s[0]) if s.size else 0.0
