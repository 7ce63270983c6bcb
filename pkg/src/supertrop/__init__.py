"""Exact supertropical algebra: rational functions, skeletons, kernels."""

__version__ = "0.1.0"
