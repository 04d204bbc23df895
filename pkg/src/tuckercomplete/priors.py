"""Per-mode graph Laplacian smoothness priors and the self-adaptive weights.

The Laplacian for mode n is built from the rows of the mode-n unfolding of a
reference tensor with a Gaussian kernel ``w_ij = exp(-||x_i - x_j||^2 / b)``.
Bandwidth ``b = 1`` is the raw kernel; the default is the median of the
pairwise squared row distances, which keeps the weights from underflowing
when the unfolding rows are long.
"""

from dataclasses import dataclass, field

import numpy as np

from .prox import nuclear_norm, spectral_norm
from .tensor_ops import unfold

__all__ = [
    "SmoothnessPrior",
    "AdaptiveWeights",
    "pairwise_sq_dists",
    "median_bandwidth",
    "build_laplacian",
    "build_smoothness_prior",
    "smoothness_energy",
    "compute_beta",
    "compute_omega",
]


@dataclass
class SmoothnessPrior:
    """Laplacian matrices for the smooth modes.

    ``laplacians[n]`` is set for every ``n`` in ``gamma`` and None elsewhere;
    ``bandwidths`` records the kernel scale actually used per mode.
    """

    laplacians: list
    gamma: tuple
    bandwidths: dict = field(default_factory=dict)

    @property
    def order(self):
        return len(self.laplacians)


@dataclass
class AdaptiveWeights:
    """Resolved hyperparameters: trade-off alpha, penalty lam, beta and omega."""

    alpha: float
    lam: float
    beta: np.ndarray
    omega: np.ndarray


def pairwise_sq_dists(rows):
    """Squared Euclidean distances between all row pairs of a 2-d array."""
    sq = np.sum(rows * rows, axis=1)
    d2 = sq[:, None] + sq[None, :] - 2.0 * (rows @ rows.T)
    return np.maximum(d2, 0.0)


def median_bandwidth(rows):
    """Median pairwise squared distance of the rows; 1.0 when degenerate."""
    d2 = pairwise_sq_dists(rows)
    off_diag = d2[~np.eye(d2.shape[0], dtype=bool)]
    if off_diag.size == 0:
        return 1.0
    med = float(np.median(off_diag))
    return med if med > 0 else 1.0


def build_laplacian(tensor, mode, bandwidth=None):
    """Graph Laplacian ``D - W`` over the rows of the mode-``mode`` unfolding.

    Parameters
    ----------
    tensor : ndarray
        Reference data the similarity graph is computed from.
    mode : int
        Mode whose unfolding rows are compared (0-based).
    bandwidth : float, optional
        Kernel scale; ``None`` selects the per-mode median heuristic and
        ``1.0`` gives the plain ``exp(-||x_i - x_j||^2)`` kernel.

    Returns
    -------
    (laplacian, bandwidth_used)
    """
    rows = unfold(tensor, mode)
    if not np.all(np.isfinite(rows)):
        raise ValueError(f"build_laplacian: non-finite entries in mode-{mode} unfolding")
    if bandwidth is None:
        bandwidth = median_bandwidth(rows)
    if bandwidth <= 0:
        raise ValueError(f"build_laplacian: bandwidth must be > 0, got {bandwidth}")
    w = np.exp(-pairwise_sq_dists(rows) / bandwidth)
    w = 0.5 * (w + w.T)  # exact symmetry against FP noise in the distances
    lap = np.diag(np.sum(w, axis=1)) - w
    return lap, float(bandwidth)


def build_smoothness_prior(tensor, gamma=None, bandwidth=None):
    """Build the Laplacians for every mode in ``gamma`` (default: all modes)."""
    order = np.ndim(tensor)
    if gamma is None:
        gamma = tuple(range(order))
    gamma = tuple(sorted(set(int(g) for g in gamma)))
    for g in gamma:
        if not 0 <= g < order:
            raise ValueError(f"gamma mode {g} out of range for order-{order} tensor")
    laplacians = [None] * order
    bandwidths = {}
    for g in gamma:
        laplacians[g], bandwidths[g] = build_laplacian(tensor, g, bandwidth)
    return SmoothnessPrior(laplacians=laplacians, gamma=gamma, bandwidths=bandwidths)


def smoothness_energy(factor, laplacian):
    """Factor-gradient energy ``0.5 * tr(U.T L U)``."""
    return 0.5 * float(np.trace(factor.T @ (laplacian @ factor)))


def compute_beta(x0, prior):
    """Per-mode trade-off weights between low rankness and smoothness.

    For mode n in the smooth set, ``beta_n`` is proportional to the ratio of
    the top singular value of the mode-n unfolding of ``x0`` to twice the top
    singular value of the mode-n Laplacian, normalized to sum to one over the
    smooth modes.  Modes outside the smooth set get zero.
    """
    order = np.ndim(x0)
    rho = np.zeros(order)
    for g in prior.gamma:
        lap_top = spectral_norm(prior.laplacians[g])
        if lap_top == 0.0:
            raise ValueError(f"compute_beta: Laplacian for mode {g} is degenerate (zero)")
        rho[g] = spectral_norm(unfold(x0, g)) / (2.0 * lap_top)
    total = rho.sum()
    if total == 0.0:
        return rho
    return rho / total


def compute_omega(factors):
    """Nuclear-norm weights ``omega_n = prod_{i != n} 1 / ||U_i||_*``."""
    r = np.array([nuclear_norm(u) for u in factors])
    if np.any(r == 0.0):
        zero = int(np.argmax(r == 0.0))
        raise ValueError(f"compute_omega: factor {zero} has zero nuclear norm")
    total = np.prod(r)
    return (r / total).astype(np.float64)
