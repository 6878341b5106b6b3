"""Hermitian adjacency matrices N^alpha of mixed multigraphs.

For a unit-modulus weight alpha = a + bi with a >= 0, the matrix has
entries N[u, v] = e(u, v) alpha + e(v, u) conj(alpha), where e counts
arcs.  Loops are undirected and add 2a per loop to the diagonal.  The
second kind uses alpha = omega = (1 + i sqrt(3)) / 2, the primitive
sixth root of unity, for which a digon behaves exactly like an
undirected edge (omega + conj(omega) = 1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .digraph import Digraph

_UNIT_TOL = 1e-12


@dataclass(frozen=True)
class AlphaParam:
    """Unit-modulus arc weight alpha = a + bi with a >= 0.

    The modulus must be 1 within 1e-12; the stored components are
    renormalized so a*a + b*b == 1 to machine precision.
    """

    a: float
    b: float

    def __post_init__(self):
        r = math.hypot(self.a, self.b)
        if abs(r - 1.0) > _UNIT_TOL:
            raise ValueError(f"|alpha| = {r!r}, expected 1 within {_UNIT_TOL}")
        if self.a < 0:
            raise ValueError(f"Re(alpha) = {self.a!r} < 0; use the reversed digraph instead")
        object.__setattr__(self, "a", float(self.a) / r)
        object.__setattr__(self, "b", float(self.b) / r)

    @property
    def value(self) -> complex:
        return complex(self.a, self.b)

    @property
    def conj(self) -> complex:
        return complex(self.a, -self.b)

    def label(self) -> str:
        """Short display name; known grid points get their usual symbol."""
        if self == OMEGA:
            return "omega"
        if self == ALPHA_I:
            return "i"
        if self == ALPHA_ONE:
            return "1"
        return f"{self.a:.12g}{self.b:+.12g}i"


OMEGA = AlphaParam(0.5, math.sqrt(3.0) / 2.0)
ALPHA_I = AlphaParam(0.0, 1.0)
ALPHA_ONE = AlphaParam(1.0, 0.0)

# Default family to sweep in verification runs: the second-kind weight,
# the first-kind weight i, and plain adjacency.
DEFAULT_ALPHA_GRID = (OMEGA, ALPHA_I, ALPHA_ONE)


def parse_alpha(text: str) -> AlphaParam:
    """Parse 'omega', 'i', '1', or an explicit 'a,b' component pair."""
    key = text.strip().lower()
    if key in ("omega", "w"):
        return OMEGA
    if key == "i":
        return ALPHA_I
    if key in ("1", "one"):
        return ALPHA_ONE
    parts = key.split(",")
    if len(parts) == 2:
        try:
            return AlphaParam(float(parts[0]), float(parts[1]))
        except ValueError as exc:
            raise ValueError(f"bad alpha {text!r}: {exc}") from exc
    raise ValueError(f"bad alpha {text!r}: expected omega | i | 1 | a,b")


class HermitianMatrix:
    """Exactly Hermitian complex matrix (M equals its conjugate transpose
    entry for entry, not merely within tolerance)."""

    __slots__ = ("array",)

    def __init__(self, array: np.ndarray):
        arr = np.ascontiguousarray(array, dtype=np.complex128)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {arr.shape}")
        if not np.array_equal(arr, arr.conj().T):
            raise ValueError("matrix is not exactly Hermitian; use from_array to symmetrize")
        arr.setflags(write=False)
        object.__setattr__(self, "array", arr)

    def __setattr__(self, name, value):
        raise AttributeError("HermitianMatrix is immutable")

    @classmethod
    def from_array(cls, array, tol: float = 1e-12) -> "HermitianMatrix":
        """Accept a numerically Hermitian array and symmetrize it exactly.

        The Hermiticity defect must satisfy ||M - M^H||_F <= tol * ||M||_F.
        """
        arr = np.asarray(array, dtype=np.complex128)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {arr.shape}")
        scale = max(1.0, float(np.linalg.norm(arr)))
        defect = float(np.linalg.norm(arr - arr.conj().T))
        if defect > tol * scale:
            raise ValueError(f"Hermiticity defect {defect:.3e} exceeds {tol:.1e} * scale")
        return cls((arr + arr.conj().T) / 2.0)

    @property
    def n(self) -> int:
        return self.array.shape[0]

    def norm_fro(self) -> float:
        return float(np.linalg.norm(self.array))

    def __eq__(self, other):
        if isinstance(other, HermitianMatrix):
            return np.array_equal(self.array, other.array)
        return NotImplemented

    def __repr__(self):
        return f"HermitianMatrix(n={self.n})"

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "re": self.array.real.tolist(),
            "im": self.array.imag.tolist(),
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "HermitianMatrix":
        arr = np.asarray(data["re"], dtype=float) + 1j * np.asarray(data["im"], dtype=float)
        if arr.shape != (data["n"], data["n"]):
            raise ValueError("matrix payload shape disagrees with n")
        return cls.from_array(arr)


def build_matrix(g: Digraph, alpha: AlphaParam) -> HermitianMatrix:
    """Hermitian adjacency matrix N^alpha of a digraph.

    Entry (u, v) is e(u, v) alpha + e(v, u) conj(alpha); a loop of
    multiplicity m adds 2 a m on the diagonal.
    """
    n = g.n
    mat = np.zeros((n, n), dtype=np.complex128)
    for (u, v), m in g.arcs.items():
        mat[u, v] += m * alpha.value
        mat[v, u] += m * alpha.conj
    for v, m in g.loops.items():
        mat[v, v] += 2.0 * alpha.a * m
    return HermitianMatrix(mat)


def build_second_kind(g: Digraph) -> HermitianMatrix:
    """Second-kind Hermitian adjacency matrix M(D) = N^omega."""
    return build_matrix(g, OMEGA)


_QUAD_IMAG_TOL = 1e-10


def quadratic_form(mat, z) -> float:
    """Real value of z^* M z for Hermitian M.

    Raises ArithmeticError if the imaginary residue exceeds
    1e-10 * ||M||_F * ||z||^2, which would mean M is not Hermitian
    enough for the form to be trusted.
    """
    arr = mat.array if isinstance(mat, HermitianMatrix) else np.asarray(mat, dtype=np.complex128)
    vec = np.asarray(z, dtype=np.complex128)
    q = complex(np.vdot(vec, arr @ vec))
    scale = float(np.linalg.norm(arr)) * float(np.vdot(vec, vec).real)
    if abs(q.imag) > _QUAD_IMAG_TOL * max(scale, 1e-300):
        raise ArithmeticError(
            f"quadratic form has imaginary residue {q.imag:.3e} (scale {scale:.3e})"
        )
    return q.real


@dataclass(frozen=True)
class QuadFormDecomp:
    """Arc-wise split z^* N^alpha z = X + Y + Z for z = x + iy.

    Over arcs from v to u (initial vertex conjugated), with alpha = a + bi:
    X = 2a sum x_v x_u, Y = 2a sum y_v y_u, Z = 2b sum (y_v x_u - x_v y_u).
    Loops contribute 2a |z_v|^2 split between X and Y.  Conjugating z
    keeps X and Y and flips the sign of Z.
    """

    X: float
    Y: float
    Z: float

    @property
    def total(self) -> float:
        return self.X + self.Y + self.Z

    def as_dict(self) -> dict:
        return {"X": self.X, "Y": self.Y, "Z": self.Z, "total": self.total}


def quad_form_decomposition(g: Digraph, alpha: AlphaParam, z) -> QuadFormDecomp:
    """Compute the X, Y, Z split of z^* N^alpha z arc by arc."""
    vec = np.asarray(z, dtype=np.complex128)
    if vec.shape != (g.n,):
        raise ValueError(f"expected a vector of length {g.n}, got shape {vec.shape}")
    x = vec.real
    y = vec.imag
    a2 = 2.0 * alpha.a
    b2 = 2.0 * alpha.b
    X = Y = Z = 0.0
    for (v, u), m in g.arcs.items():
        X += a2 * m * x[v] * x[u]
        Y += a2 * m * y[v] * y[u]
        Z += b2 * m * (y[v] * x[u] - x[v] * y[u])
    for v, m in g.loops.items():
        X += a2 * m * x[v] * x[v]
        Y += a2 * m * y[v] * y[v]
    return QuadFormDecomp(X, Y, Z)
