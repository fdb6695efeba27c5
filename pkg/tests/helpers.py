"""Shared numeric checks for explicit eigenfunctions."""

import numpy as np

from steklov_trees.graph import leaves
from steklov_trees.spectra import dtn_matrix, harmonic_extension


def steklov_residual(tree, ef) -> float:
    """||Lambda xi_B - sigma xi_B||_inf, plus the failure of xi to be the harmonic extension of xi_B."""
    b = leaves(tree)
    xb = ef.values[list(b.members)]
    res = float(np.max(np.abs(dtn_matrix(tree) @ xb - ef.sigma * xb)))
    ext = harmonic_extension(tree, b, xb)
    return max(res, float(np.max(np.abs(ext - ef.values))))
