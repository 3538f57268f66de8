"""Small input-validation helpers used across estimators and readers."""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .errors import ConfigError, DataError, MetricError


def check_non_empty(seq: Sequence, name: str, exc=DataError) -> None:
    if len(seq) == 0:
        raise exc(f"{name} must not be empty")


def check_equal_lengths(a: Sequence, b: Sequence, what: str = "sequences") -> None:
    if len(a) != len(b):
        raise MetricError(f"{what} have different lengths: {len(a)} vs {len(b)}")


def check_ratio_partition(ratios: Sequence[float], tol: float = 1e-9) -> None:
    if any(r < 0 for r in ratios):
        raise ConfigError(f"split ratios must be non-negative, got {list(ratios)}")
    total = float(sum(ratios))
    if abs(total - 1.0) > tol:
        raise ConfigError(f"split ratios must sum to 1, got {total!r}")


def check_vector(x, name: str = "vector") -> np.ndarray:
    arr = np.asarray(x, dtype=float)
    if arr.ndim != 1:
        raise DataError(f"{name} must be 1-dimensional, got shape {arr.shape}")
    return arr


def check_same_dim(u: np.ndarray, v: np.ndarray) -> None:
    if u.shape != v.shape:
        raise DataError(f"dimension mismatch: {u.shape} vs {v.shape}")


def check_finite(arr: np.ndarray, name: str = "array") -> None:
    if not np.all(np.isfinite(arr)):
        raise DataError(f"{name} contains non-finite values")


def check_fitted(obj, attr: str) -> None:
    if getattr(obj, attr, None) is None:
        raise ConfigError(f"{type(obj).__name__} is not fitted")
