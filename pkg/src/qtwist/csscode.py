"""Qudit CSS codes on twisted tori built from a polynomial pair (f, g).

The X-check matrix is HX = [M_f | M_g] and the Z-check matrix is
HZ = [M_g^T | -M_f^T], where M_p is multiplication by p on the torus
algebra.  The minus sign makes every X-check commute symplectically
with every Z-check for odd q (for q = 2 it is invisible); equivalently
HX @ HZ^T = M_f M_g - M_g M_f = 0.

The logical qudit count is k = 2 * (alpha*beta - rank [M_f | M_g]),
which the constructor cross-checks against n - rank HX - rank HZ.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from . import fqlinalg
from .fqlinalg import RREF, DimensionMismatchError
from .gf import PrimeField, field_new
from .laurent import LaurentPoly, ZeroPolynomialError, parse_poly
from .torus import TwistSpec, mult_matrix


class CssViolationError(RuntimeError):
    """Internal consistency failure while assembling a code (HX @ HZ^T != 0
    or disagreeing logical counts); indicates a construction bug."""


@dataclass
class CssCode:
    """A constructed code with its checks and exact parameters."""

    field: PrimeField
    f: LaurentPoly
    g: LaurentPoly
    twist: TwistSpec
    hx: np.ndarray
    hz: np.ndarray
    n: int
    k: int
    _hx_rref: RREF | None = field(default=None, repr=False, compare=False)
    _hz_rref: RREF | None = field(default=None, repr=False, compare=False)

    @property
    def hx_rref(self) -> RREF:
        if self._hx_rref is None:
            self._hx_rref = fqlinalg.rref(self.hx, self.field)
        return self._hx_rref

    @property
    def hz_rref(self) -> RREF:
        if self._hz_rref is None:
            self._hz_rref = fqlinalg.rref(self.hz, self.field)
        return self._hz_rref

    def __str__(self) -> str:
        return f"[[{self.n},{self.k}]]_{self.field.q} twist {self.twist}"


@dataclass
class PauliVector:
    """X and Z exponent vectors of a Pauli pattern (phases untracked)."""

    x_part: np.ndarray
    z_part: np.ndarray

    @classmethod
    def zero(cls, n: int) -> PauliVector:
        return cls(np.zeros(n, dtype=np.int64), np.zeros(n, dtype=np.int64))


def _check_matrices(field: PrimeField, f: LaurentPoly, g: LaurentPoly,
                    twist: TwistSpec) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    mf = mult_matrix(f, twist)
    mg = mult_matrix(g, twist)
    hx = np.hstack([mf, mg])
    hz = np.hstack([mg.T, np.mod(-mf.T, field.q)])
    return hx, hz, np.hstack([mf, mg])


def build_code(field: PrimeField, f: LaurentPoly, g: LaurentPoly,
               twist: TwistSpec) -> CssCode:
    """Assemble the code for (q, f, g, twist) with exact n and k.

    Raises CssViolationError if the CSS condition fails or the two
    logical-count formulas disagree (impossible for commuting
    multiplication matrices; kept as a guard against regressions).
    """
    if f.is_zero() or g.is_zero():
        raise ZeroPolynomialError("f and g must be nonzero")
    if f.field != field or g.field != field:
        raise ValueError("f and g must live over the given field")
    hx, hz, fg = _check_matrices(field, f, g, twist)
    if np.mod(hx @ hz.T, field.q).any():
        raise CssViolationError("HX @ HZ^T != 0")
    n = twist.num_qudits
    hx_rref = fqlinalg.rref(hx, field)
    hz_rref = fqlinalg.rref(hz, field)
    k_ranks = n - hx_rref.rank - hz_rref.rank
    k_module = 2 * (twist.cell_count - fqlinalg.rank(fg, field))
    if k_ranks != k_module:
        raise CssViolationError(
            f"logical count mismatch: {k_ranks} (check ranks) vs {k_module} (module)"
        )
    return CssCode(field, f, g, twist, hx, hz, n, k_ranks,
                   _hx_rref=hx_rref, _hz_rref=hz_rref)


def compute_k(field: PrimeField, f: LaurentPoly, g: LaurentPoly,
              twist: TwistSpec) -> int:
    """Logical qudit count 2 * (alpha*beta - rank [M_f | M_g]) without
    building the full code."""
    if f.is_zero() or g.is_zero():
        raise ZeroPolynomialError("f and g must be nonzero")
    fg = np.hstack([mult_matrix(f, twist), mult_matrix(g, twist)])
    return 2 * (twist.cell_count - fqlinalg.rank(fg, field))


def symplectic_product(u: PauliVector, v: PauliVector, field: PrimeField) -> int:
    """<u_x, v_z> - <u_z, v_x> in F_q; zero iff the Paulis commute."""
    if u.x_part.shape != v.x_part.shape or u.z_part.shape != v.z_part.shape:
        raise DimensionMismatchError("Pauli vectors have different lengths")
    q = field.q
    return int((int(u.x_part @ v.z_part) - int(u.z_part @ v.x_part)) % q)


def syndrome(v: PauliVector, code: CssCode) -> tuple[np.ndarray, np.ndarray]:
    """(x_syndrome, z_syndrome) = (HZ @ v_x, HX @ v_z).

    Both vanish exactly when v commutes with every check, i.e. when v
    is a logical-operator candidate.
    """
    if v.x_part.shape[0] != code.n or v.z_part.shape[0] != code.n:
        raise DimensionMismatchError(f"expected vectors of length {code.n}")
    q = code.field.q
    x_syn = np.mod(code.hz @ v.x_part, q)
    z_syn = np.mod(code.hx @ v.z_part, q)
    return x_syn, z_syn


def is_logical(v, sector: str, code: CssCode) -> bool:
    """Whether v is a nontrivial logical operator in the given sector.

    Z sector: HX @ v = 0 and v not in rowspace(HZ); X sector symmetric.
    """
    vec = np.mod(np.array(v, dtype=np.int64).ravel(), code.field.q)
    if vec.shape[0] != code.n:
        raise DimensionMismatchError(f"expected a vector of length {code.n}")
    if sector == "z":
        checks, other = code.hx, code.hz_rref
    elif sector == "x":
        checks, other = code.hz, code.hx_rref
    else:
        raise ValueError(f"sector must be 'x' or 'z', got {sector!r}")
    if np.mod(checks @ vec, code.field.q).any():
        return False
    return not fqlinalg.in_rowspace(vec, other)


# ---------------------------------------------------------------------
# code-spec documents
# ---------------------------------------------------------------------
# {"q": int, "f": str, "g": str, "alpha": int, "beta": int, "gamma": int}
# is the interchange format used by the CLI and search checkpoints.

def code_from_spec(spec: dict) -> CssCode:
    """Build a code from a code-spec mapping (see module docstring)."""
    fld = field_new(int(spec["q"]))
    f = parse_poly(spec["f"], fld)
    g = parse_poly(spec["g"], fld)
    twist = TwistSpec(int(spec["alpha"]), int(spec["beta"]), int(spec["gamma"]))
    return build_code(fld, f, g, twist)


def code_to_spec(code: CssCode) -> dict:
    return {
        "q": code.field.q,
        "f": str(code.f),
        "g": str(code.g),
        "alpha": code.twist.alpha,
        "beta": code.twist.beta,
        "gamma": code.twist.gamma_raw,
    }


def load_code_spec(path) -> CssCode:
    with open(path, "r", encoding="utf-8") as fh:
        return code_from_spec(json.load(fh))
