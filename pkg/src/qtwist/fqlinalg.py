"""Dense linear algebra over F_q: reduced row echelon form, rank,
kernel bases, and row-space membership.

Matrices are plain numpy int64 arrays holding canonical residues.
Sizes here stay small (at most a few hundred rows/columns), so dense
Gaussian elimination with word-sized arithmetic is the right tool.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .gf import PrimeField


class DimensionMismatchError(ValueError):
    """Vector/matrix shapes are incompatible."""


def as_field_matrix(mat, field: PrimeField) -> np.ndarray:
    """Copy input into a canonical int64 matrix with entries in [0, q)."""
    a = np.array(mat, dtype=np.int64)
    if a.ndim == 1:
        a = a.reshape(1, -1)
    return np.mod(a, field.q)


@dataclass
class RREF:
    """Reduced row echelon form with recorded pivots."""

    field: PrimeField
    matrix: np.ndarray
    pivot_cols: np.ndarray
    rank: int


def rref(mat, field: PrimeField) -> RREF:
    """Deterministic reduced row echelon form over F_q.

    Pivots are the first nonzero entries in column order, scaled to 1;
    identical inputs give bit-identical results on every platform.
    """
    a = as_field_matrix(mat, field)
    pivots = np.zeros(min(a.shape), dtype=np.int64)
    r = _kernels.rref_inplace(a, field.q, field.inverse_table, pivots)
    return RREF(field, a, pivots[:r].copy(), int(r))


def rank(mat, field: PrimeField) -> int:
    return rref(mat, field).rank


def kernel_basis(mat, field: PrimeField) -> np.ndarray:
    """Basis of the right null space, one vector per row.

    Returns a (cols - rank, cols) array; M @ v = 0 mod q for each row v.
    """
    red = rref(mat, field)
    cols = red.matrix.shape[1]
    pivot_set = set(red.pivot_cols.tolist())
    free_cols = [c for c in range(cols) if c not in pivot_set]
    basis = np.zeros((len(free_cols), cols), dtype=np.int64)
    for idx, fc in enumerate(free_cols):
        basis[idx, fc] = 1
        for i in range(red.rank):
            entry = red.matrix[i, fc]
            if entry:
                basis[idx, red.pivot_cols[i]] = field.q - entry
    return basis


def in_rowspace(v, red: RREF) -> bool:
    """True iff v reduces to zero against the rows of ``red``."""
    vec = np.mod(np.array(v, dtype=np.int64).ravel(), red.field.q)
    if vec.shape[0] != red.matrix.shape[1]:
        raise DimensionMismatchError(
            f"vector length {vec.shape[0]} != {red.matrix.shape[1]} columns"
        )
    _kernels.reduce_against_rref(
        vec, red.matrix, red.pivot_cols, red.rank, red.field.q
    )
    return not vec.any()


def matmul_mod(a: np.ndarray, b: np.ndarray, field: PrimeField) -> np.ndarray:
    """a @ b mod q (int64 inputs assumed canonical)."""
    return np.mod(a @ b, field.q)
