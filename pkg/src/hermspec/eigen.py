"""Self-contained Hermitian eigensolver and characteristic polynomials.

The eigensolver is a cyclic complex Jacobi iteration: each off-diagonal
entry a_pq = r w (r >= 0, |w| = 1) is annihilated by a unitary plane
rotation built from the phase w and the real rotation that would kill r
in the 2x2 real problem.  Sweeps run in fixed (p, q) order, so results
are deterministic.  Everything is batched over a leading axis; a single
matrix is a batch of one.

Characteristic polynomials come from the Faddeev-LeVerrier recursion
M_k = A (M_{k-1} + c_{k-1} I), c_k = -tr(M_k) / k, which needs only
matrix products and traces and therefore batches the same way.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .digraph import Digraph
from .hermitian import OMEGA, AlphaParam, HermitianMatrix, build_matrix

JACOBI_MAX_SWEEPS = 50
JACOBI_TOL = 1e-12
_HERM_TOL = 1e-12
# above this |tau| the rotation tangent is 1/(2 tau) to double precision
_TAU_ASYMPTOTIC = 1e12
# skip rotations on entries below this fraction of the matrix norm: the
# batch sweeps every matrix until the whole batch converges, so residuals
# on early-converged matrices decay into the subnormal range, where the
# reduced significand makes w = a_pq / |a_pq| unit-modulus only to ~1e-8
# and the rotation visibly perturbs finished diagonals; entries this far
# below tol * ||A||_F contribute nothing to the convergence test
_ROT_FLOOR = 1e-18


class JacobiConvergenceError(ArithmeticError):
    """Off-diagonal mass failed to reach tolerance within the sweep cap."""


def _as_batch(mats) -> np.ndarray:
    arr = np.ascontiguousarray(mats, dtype=np.complex128)
    if arr.ndim == 2:
        arr = arr[None]
    if arr.ndim != 3 or arr.shape[1] != arr.shape[2]:
        raise ValueError(f"expected (n, n) or (B, n, n) matrices, got shape {arr.shape}")
    return arr


def _check_hermitian_batch(arr: np.ndarray) -> None:
    defect = np.abs(arr - arr.conj().transpose(0, 2, 1)).max(axis=(1, 2), initial=0.0)
    scale = np.abs(arr).max(axis=(1, 2), initial=0.0)
    bad = defect > _HERM_TOL * np.maximum(scale, 1.0)
    if bad.any():
        k = int(np.argmax(bad))
        raise ValueError(
            f"matrix {k} is not Hermitian: max entry defect {float(defect[k]):.3e}"
        )


def _off_norm(a: np.ndarray) -> np.ndarray:
    """Frobenius norm of the off-diagonal part, per batch matrix."""
    n = a.shape[1]
    mask = ~np.eye(n, dtype=bool)
    return np.sqrt((np.abs(a[:, mask]) ** 2).sum(axis=1))


def jacobi_eigh_batch(mats, vectors=True, max_sweeps=JACOBI_MAX_SWEEPS, tol=JACOBI_TOL):
    """Eigenvalues (and optionally eigenvectors) of Hermitian matrices.

    Returns (values, vecs): values has shape (B, n) sorted descending,
    vecs has shape (B, n, n) with columns matching values, or is None
    when vectors=False.  Convergence means off(A) <= tol * ||A||_F per
    matrix; exceeding ``max_sweeps`` sweeps raises JacobiConvergenceError.
    """
    a = _as_batch(mats).copy()
    _check_hermitian_batch(a)
    nb, n = a.shape[0], a.shape[1]
    v = None
    if vectors:
        v = np.broadcast_to(np.eye(n, dtype=np.complex128), (nb, n, n)).copy()
    if n < 2:
        vals = a[:, range(n), range(n)].real.copy()
        return (vals, v) if vectors else (vals, None)

    norms = np.linalg.norm(a, axis=(1, 2))
    thresh = tol * np.maximum(norms, 1e-300)
    for _ in range(max_sweeps):
        if (_off_norm(a) <= thresh).all():
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[:, p, q]
                r = np.abs(apq)
                rot = r > norms * _ROT_FLOOR
                if not rot.any():
                    continue
                safe_r = np.where(rot, r, 1.0)
                # divide real and imaginary parts separately: complex/real
                # division in numpy routes through a complex reciprocal whose
                # denominator overflows once |apq| drops below ~1e-309
                w = apq.real / safe_r + 1j * (apq.imag / safe_r)
                w = np.where(rot, w, 1.0)
                diff = (a[:, q, q] - a[:, p, p]).real
                # t solves t^2 + 2 tau t - 1 = 0 with tau = diff / (2r);
                # for huge tau use t ~ 1/(2 tau) = r / diff to avoid overflow
                big = np.abs(diff) > safe_r * _TAU_ASYMPTOTIC
                tau = np.where(big, 0.0, diff) / (2.0 * safe_r)
                sgn = np.where(tau >= 0.0, 1.0, -1.0)
                t = sgn / (np.abs(tau) + np.sqrt(1.0 + tau * tau))
                t = np.where(big, safe_r / np.where(big, diff, 1.0), t)
                t = np.where(rot, t, 0.0)
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                wc = np.conj(w)
                # columns: A <- A J with J = [[c, s], [-s conj(w), c conj(w)]]
                col_p = a[:, :, p].copy()
                col_q = a[:, :, q].copy()
                a[:, :, p] = c[:, None] * col_p - (s * wc)[:, None] * col_q
                a[:, :, q] = s[:, None] * col_p + (c * wc)[:, None] * col_q
                # rows: A <- J^H A
                row_p = a[:, p, :].copy()
                row_q = a[:, q, :].copy()
                a[:, p, :] = c[:, None] * row_p - (s * w)[:, None] * row_q
                a[:, q, :] = s[:, None] * row_p + (c * w)[:, None] * row_q
                # the pair is annihilated by construction; make it exact
                a[:, p, q] = np.where(rot, 0.0, a[:, p, q])
                a[:, q, p] = np.where(rot, 0.0, a[:, q, p])
                a[:, p, p] = a[:, p, p].real
                a[:, q, q] = a[:, q, q].real
                if vectors:
                    vp = v[:, :, p].copy()
                    vq = v[:, :, q].copy()
                    v[:, :, p] = c[:, None] * vp - (s * wc)[:, None] * vq
                    v[:, :, q] = s[:, None] * vp + (c * wc)[:, None] * vq
    else:
        # the loop-top check never ran after the final sweep
        off = _off_norm(a)
        if (off > thresh).any():
            k = int(np.argmax(off / np.maximum(thresh, 1e-300)))
            raise JacobiConvergenceError(
                f"matrix {k}: off-diagonal norm {float(off[k]):.3e} above "
                f"{float(thresh[k]):.3e} after {max_sweeps} sweeps"
            )

    diag = a[:, range(n), range(n)].real.copy()
    order = np.argsort(-diag, axis=1, kind="stable")
    vals = np.take_along_axis(diag, order, axis=1)
    if vectors:
        v = np.take_along_axis(v, order[:, None, :], axis=2)
        return vals, v
    return vals, None


def batch_spectra(mats, max_sweeps=JACOBI_MAX_SWEEPS, tol=JACOBI_TOL) -> np.ndarray:
    """Descending eigenvalues of a batch, shape (B, n); no eigenvectors."""
    vals, _ = jacobi_eigh_batch(mats, vectors=False, max_sweeps=max_sweeps, tol=tol)
    return vals


def zero_tolerance(values) -> float:
    """Numerical-zero threshold scaled by the spectral radius: 1e-8 max(1, rho)."""
    vals = np.asarray(values, dtype=float)
    rho = float(np.abs(vals).max(initial=0.0))
    return 1e-8 * max(1.0, rho)


@dataclass(frozen=True)
class Spectrum:
    """Descending eigenvalue list with its numerical-zero threshold."""

    values: tuple
    zero_tol: float

    @classmethod
    def from_values(cls, values) -> "Spectrum":
        vals = np.sort(np.asarray(values, dtype=float))[::-1]
        return cls(values=tuple(float(x) for x in vals), zero_tol=zero_tolerance(vals))

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def rho(self) -> float:
        """Spectral radius max |lambda|."""
        if not self.values:
            return 0.0
        return max(abs(self.values[0]), abs(self.values[-1]))

    @property
    def largest(self) -> float:
        if not self.values:
            raise ValueError("empty spectrum")
        return self.values[0]

    @property
    def smallest(self) -> float:
        if not self.values:
            raise ValueError("empty spectrum")
        return self.values[-1]

    def count_positive(self) -> int:
        return sum(1 for x in self.values if x > self.zero_tol)

    def count_negative(self) -> int:
        return sum(1 for x in self.values if x < -self.zero_tol)

    def count_zero(self) -> int:
        return self.n - self.count_positive() - self.count_negative()

    def as_array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=float)

    def to_json_dict(self) -> dict:
        return {"values": list(self.values), "zero_tol": self.zero_tol}


@dataclass(frozen=True, eq=False)
class EigenDecomposition:
    """Spectrum plus orthonormal eigenvector columns in matching order."""

    spectrum: Spectrum
    vectors: np.ndarray

    @property
    def n(self) -> int:
        return self.spectrum.n

    @property
    def values(self) -> np.ndarray:
        return self.spectrum.as_array()

    def residual_norm(self, mat) -> float:
        """max_j || M v_j - lambda_j v_j ||, a direct quality certificate."""
        arr = mat.array if isinstance(mat, HermitianMatrix) else np.asarray(mat, dtype=np.complex128)
        res = arr @ self.vectors - self.vectors * self.values[None, :]
        return float(np.linalg.norm(res, axis=0).max(initial=0.0))

    def orthonormality_defect(self) -> float:
        """max |v_j^* v_k - delta_jk| over all eigenvector pairs."""
        gram = self.vectors.conj().T @ self.vectors
        return float(np.abs(gram - np.eye(self.n)).max(initial=0.0))


def hermitian_eigen(mat, max_sweeps=JACOBI_MAX_SWEEPS, tol=JACOBI_TOL) -> EigenDecomposition:
    """Full eigendecomposition of one Hermitian matrix via cyclic Jacobi."""
    arr = mat.array if isinstance(mat, HermitianMatrix) else np.asarray(mat, dtype=np.complex128)
    vals, vecs = jacobi_eigh_batch(arr[None], vectors=True, max_sweeps=max_sweeps, tol=tol)
    return EigenDecomposition(spectrum=Spectrum.from_values(vals[0]), vectors=vecs[0])


def spectrum(obj, alpha: AlphaParam = OMEGA) -> Spectrum:
    """Spectrum of a digraph's N^alpha (default second kind) or of a matrix."""
    if isinstance(obj, Digraph):
        mat = build_matrix(obj, alpha)
    elif isinstance(obj, HermitianMatrix):
        mat = obj
    else:
        mat = HermitianMatrix.from_array(obj)
    vals, _ = jacobi_eigh_batch(mat.array[None], vectors=False)
    return Spectrum.from_values(vals[0])


# --- characteristic polynomials ---


def batch_char_poly(mats, imag_tol: float = 1e-8) -> np.ndarray:
    """Coefficients of det(nu I - M) for a batch of Hermitian matrices.

    Returns shape (B, n+1), row [1, c_1, ..., c_n] meaning
    nu^n + c_1 nu^(n-1) + ... + c_n.  Coefficients of a Hermitian matrix
    are real; an imaginary residue above imag_tol * max(1, ||M||_F)^k
    raises ArithmeticError.
    """
    a = _as_batch(mats)
    _check_hermitian_batch(a)
    nb, n = a.shape[0], a.shape[1]
    coeffs = np.zeros((nb, n + 1), dtype=np.complex128)
    coeffs[:, 0] = 1.0
    eye = np.eye(n, dtype=np.complex128)
    m = a.copy()
    for k in range(1, n + 1):
        ck = -np.trace(m, axis1=1, axis2=2) / k
        coeffs[:, k] = ck
        if k < n:
            m = a @ (m + ck[:, None, None] * eye)
    scale = np.maximum(np.linalg.norm(a, axis=(1, 2)), 1.0)
    bound = imag_tol * scale[:, None] ** np.arange(n + 1)[None, :]
    resid = np.abs(coeffs.imag)
    if (resid > bound).any():
        k = int(np.argmax((resid / bound).max(axis=1)))
        raise ArithmeticError(
            f"matrix {k}: characteristic coefficients have imaginary residue "
            f"{float(resid[k].max()):.3e}"
        )
    return coeffs.real.copy()


@dataclass(frozen=True)
class CharPoly:
    """Monic characteristic polynomial det(nu I - M), coefficients high to low."""

    coeffs: tuple

    @classmethod
    def of(cls, mat) -> "CharPoly":
        arr = mat.array if isinstance(mat, HermitianMatrix) else np.asarray(mat, dtype=np.complex128)
        row = batch_char_poly(arr[None])[0]
        return cls(coeffs=tuple(float(c) for c in row))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def evaluate(self, x: float) -> float:
        acc = 0.0
        for c in self.coeffs:
            acc = acc * x + c
        return acc

    def to_json_dict(self) -> dict:
        return {"degree": self.degree, "coeffs": list(self.coeffs)}


def char_poly(obj, alpha: AlphaParam = OMEGA) -> CharPoly:
    """Characteristic polynomial of a digraph's N^alpha or of a matrix."""
    if isinstance(obj, Digraph):
        return CharPoly.of(build_matrix(obj, alpha))
    return CharPoly.of(obj)
