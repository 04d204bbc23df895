"""Dense N-way tensor algebra: unfolding, folding, mode products, masked composition.

All tensors are ``numpy.float64`` arrays.  The vectorization convention is
first-index-fastest (column-major), so ``vec(X) = X.flatten(order="F")`` and
the identity ``vec(G x_1 U_1 ... x_N U_N) = (U_N kron ... kron U_1) vec(G)``
holds with the unfolding defined here.
"""

import numpy as np

__all__ = [
    "unfold",
    "fold",
    "mode_product",
    "tucker_reconstruct",
    "core_times_all_but",
    "compose_completion",
    "frobenius_norm",
    "inner",
]


def unfold(tensor, mode):
    """Mode-``mode`` unfolding of ``tensor`` (modes are 0-based).

    Row i of the result enumerates index i of the chosen mode; columns
    enumerate the remaining indices with lower-numbered modes varying fastest.

    Parameters
    ----------
    tensor : ndarray
    mode : int
        In ``range(tensor.ndim)``.

    Returns
    -------
    ndarray of shape ``(tensor.shape[mode], prod(other dims))``
    """
    tensor = np.asarray(tensor)
    if not 0 <= mode < tensor.ndim:
        raise ValueError(f"mode {mode} out of range for order-{tensor.ndim} tensor")
    return np.reshape(
        np.moveaxis(tensor, mode, 0), (tensor.shape[mode], -1), order="F"
    )


def fold(matrix, mode, shape):
    """Inverse of :func:`unfold`: refold a mode-``mode`` unfolding into ``shape``."""
    matrix = np.asarray(matrix)
    shape = tuple(int(s) for s in shape)
    if not 0 <= mode < len(shape):
        raise ValueError(f"mode {mode} out of range for shape {shape}")
    expected = (shape[mode], int(np.prod(shape)) // shape[mode])
    if matrix.shape != expected:
        raise ValueError(
            f"matrix shape {matrix.shape} does not match mode-{mode} "
            f"unfolding {expected} of shape {shape}"
        )
    intermediate = (shape[mode],) + shape[:mode] + shape[mode + 1 :]
    return np.moveaxis(np.reshape(matrix, intermediate, order="F"), 0, mode)


def mode_product(tensor, matrix, mode):
    """Mode-``mode`` product ``tensor x_mode matrix``.

    The result satisfies ``unfold(result, mode) == matrix @ unfold(tensor, mode)``;
    dimension ``mode`` is replaced by ``matrix.shape[0]``.
    """
    tensor = np.asarray(tensor)
    matrix = np.asarray(matrix)
    if matrix.ndim != 2:
        raise ValueError("mode_product expects a 2-d matrix")
    if matrix.shape[1] != tensor.shape[mode]:
        raise ValueError(
            f"matrix has {matrix.shape[1]} columns but tensor dim {mode} "
            f"is {tensor.shape[mode]}"
        )
    new_shape = list(tensor.shape)
    new_shape[mode] = matrix.shape[0]
    return fold(matrix @ unfold(tensor, mode), mode, new_shape)


def tucker_reconstruct(core, factors):
    """Multiply ``core`` by one factor matrix along each mode, ascending order."""
    if len(factors) != np.ndim(core):
        raise ValueError(
            f"expected {np.ndim(core)} factors, got {len(factors)}"
        )
    out = np.asarray(core)
    for mode, factor in enumerate(factors):
        out = mode_product(out, factor, mode)
    return out


def core_times_all_but(core, factors, skip):
    """Unfolded product of ``core`` with every factor except ``factors[skip]``.

    Returns ``G_(skip) @ V_skip.T`` where ``V_skip`` is the Kronecker product of
    the remaining factors in descending mode order.  The Kronecker product is
    never materialized; the result is built from sequential mode products.
    """
    out = np.asarray(core)
    for mode, factor in enumerate(factors):
        if mode == skip:
            continue
        out = mode_product(out, factor, mode)
    return unfold(out, skip)


def compose_completion(observed, mask, reconstruction):
    """Take ``observed`` values where ``mask`` is True, ``reconstruction`` elsewhere."""
    observed = np.asarray(observed)
    mask = np.asarray(mask, dtype=bool)
    reconstruction = np.asarray(reconstruction)
    if not (observed.shape == mask.shape == reconstruction.shape):
        raise ValueError(
            f"shape mismatch: observed {observed.shape}, mask {mask.shape}, "
            f"reconstruction {reconstruction.shape}"
        )
    return np.where(mask, observed, reconstruction)


def frobenius_norm(tensor):
    """Frobenius norm, ``sqrt(sum of squared entries)``."""
    return float(np.sqrt(np.sum(np.square(np.asarray(tensor, dtype=np.float64)))))


def inner(a, b):
    """Sum of elementwise products of two same-shaped tensors."""
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
    return float(np.sum(a * b))
