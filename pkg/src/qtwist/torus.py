"""The twisted torus: coset representatives of Z^2 modulo the lattice
spanned by (0, alpha) and (beta, gamma), and multiplication matrices of
Laurent polynomials on the associated group algebra.

A point (m, n) is a cell of the infinite lattice; the boundary
relations y^alpha = 1 and x^beta y^gamma = 1 fold it into the
fundamental domain {(m, n) : 0 <= m < beta, 0 <= n < alpha}.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .gf import PrimeField
from .laurent import LaurentPoly


@dataclass(frozen=True)
class TwistSpec:
    """Torus data (alpha, beta, gamma).

    gamma is reduced mod alpha at construction (gamma and gamma + alpha
    define the same quotient); the value as given is kept in
    ``gamma_raw`` for provenance.
    """

    alpha: int
    beta: int
    gamma: int
    gamma_raw: int = field(default=0, compare=False, repr=False)

    def __post_init__(self):
        if self.alpha < 1 or self.beta < 1:
            raise ValueError(f"alpha and beta must be >= 1, got {self.alpha}, {self.beta}")
        object.__setattr__(self, "gamma_raw", self.gamma)
        object.__setattr__(self, "gamma", self.gamma % self.alpha)

    @property
    def cell_count(self) -> int:
        return self.alpha * self.beta

    @property
    def num_qudits(self) -> int:
        """Physical qudits: two per unit cell."""
        return 2 * self.alpha * self.beta

    def __str__(self) -> str:
        return f"(0,{self.alpha}),({self.beta},{self.gamma_raw})"


class CellIndex(NamedTuple):
    """Canonical cell (m, n) with 0 <= m < beta, 0 <= n < alpha."""

    m: int
    n: int

    def linear(self, twist: TwistSpec) -> int:
        return self.m * twist.alpha + self.n


def canonical_form(m: int, n: int, twist: TwistSpec) -> CellIndex:
    """Unique representative of (m, n) under the boundary relations.

    Writing m = m' + s*beta with 0 <= m' < beta, wrapping the x-cycle s
    times picks up a y-shift of -s*gamma, so n' = (n - s*gamma) mod alpha.
    """
    mp = m % twist.beta
    s = (m - mp) // twist.beta
    np_ = (n - s * twist.gamma) % twist.alpha
    return CellIndex(mp, np_)


def cell_of_linear(idx: int, twist: TwistSpec) -> CellIndex:
    return CellIndex(idx // twist.alpha, idx % twist.alpha)


def _shift_permutation(i: int, j: int, twist: TwistSpec) -> np.ndarray:
    """Linear indices of canonical_form(m + i, n + j) for every cell."""
    alpha, beta, gamma = twist.alpha, twist.beta, twist.gamma
    m = np.repeat(np.arange(beta), alpha) + i
    n = np.tile(np.arange(alpha), beta) + j
    mp = np.mod(m, beta)
    s = (m - mp) // beta
    np_ = np.mod(n - s * gamma, alpha)
    return mp * alpha + np_


def mult_matrix(p: LaurentPoly, twist: TwistSpec) -> np.ndarray:
    """Matrix of multiplication by p on the quotient algebra.

    Column c (the basis monomial of cell c) receives, for every term
    x^i y^j of p with coefficient l, an addition of l at the row of
    canonical_form(c.m + i, c.n + j).  Shape (alpha*beta, alpha*beta).
    """
    size = twist.cell_count
    q = p.field.q
    mat = np.zeros((size, size), dtype=np.int64)
    cols = np.arange(size)
    for (i, j), coeff in p.terms.items():
        rows = _shift_permutation(i, j, twist)
        mat[rows, cols] = (mat[rows, cols] + coeff) % q
    return mat


def antipode_transpose_check(p: LaurentPoly, twist: TwistSpec) -> bool:
    """True iff the matrix of the antipode of p equals mult_matrix(p).T."""
    return bool(np.array_equal(mult_matrix(p.antipode(), twist), mult_matrix(p, twist).T))
