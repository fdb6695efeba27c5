"""Steklov and Laplacian spectra of trees with extremal-bound verification."""

__version__ = "0.1.0"
