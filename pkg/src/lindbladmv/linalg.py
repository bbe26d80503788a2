"""Dense complex linear algebra kernels.

Kronecker products, Hilbert-Schmidt inner products, matrix exponentials
(full and action-on-vector) and a general non-Hermitian eigensolver.  All
functions are pure: inputs are never modified and results are fresh arrays.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import ConvergenceError, EigenSolverError, ExpOverflowError, ValidationError

#: Tolerance for exact arithmetic identities (bilinearity, group law checks).
ATOL_EXACT = 1e-12
#: Tolerance for iteratively computed quantities (eigenpairs, Krylov actions).
TOL_ITERATIVE = 1e-9


def as_matrix(a, name: str = "matrix") -> np.ndarray:
    """Coerce ``a`` to a 2-D complex array with finite entries."""
    arr = np.asarray(a, dtype=complex)
    if arr.ndim != 2:
        raise ValidationError(f"{name} must be 2-dimensional, got shape {arr.shape}")
    if not np.isfinite(arr).all():
        raise ValidationError(f"{name} contains non-finite entries")
    return arr


def as_square(a, name: str = "matrix") -> np.ndarray:
    """Coerce ``a`` to a square complex matrix."""
    arr = as_matrix(a, name)
    if arr.shape[0] != arr.shape[1]:
        raise ValidationError(f"{name} must be square, got shape {arr.shape}")
    return arr


def as_vector(a, name: str = "vector") -> np.ndarray:
    """Coerce ``a`` to a 1-D complex array with finite entries."""
    arr = np.asarray(a, dtype=complex)
    if arr.ndim != 1:
        raise ValidationError(f"{name} must be 1-dimensional, got shape {arr.shape}")
    if not np.isfinite(arr).all():
        raise ValidationError(f"{name} contains non-finite entries")
    return arr


def kron(a, b) -> np.ndarray:
    """Kronecker product: block (i, j) of the result is ``a[i, j] * b``."""
    return np.kron(as_matrix(a, "a"), as_matrix(b, "b"))


def hs_inner(a, b) -> complex:
    """Hilbert-Schmidt inner product ``Tr(a^dag b)`` of two same-sized square matrices."""
    a = as_square(a, "a")
    b = as_square(b, "b")
    if a.shape != b.shape:
        raise ValidationError(f"dimension mismatch: {a.shape} vs {b.shape}")
    return complex(np.vdot(a, b))


def hs_norm(a) -> float:
    """Hilbert-Schmidt (Frobenius) norm induced by :func:`hs_inner`."""
    return float(np.linalg.norm(as_square(a, "a")))


def expm(m, t: float = 1.0) -> np.ndarray:
    """Matrix exponential ``exp(m * t)``.

    Uses scaling-and-squaring with a Pade core, with the order chosen from
    the scaled norm.  Overflow is reported, never silently saturated.
    """
    m = as_square(m, "m")
    result = scipy.linalg.expm(m * t)
    if not np.isfinite(result).all():
        raise ExpOverflowError(
            f"exp(m*t) overflowed for ||m*t|| = {np.linalg.norm(m) * abs(t):.3e}"
        )
    return result


def expm_action(
    m,
    v,
    t: float = 1.0,
    *,
    tol: float = 1e-12,
    krylov_dim: int = 30,
    max_steps: int = 10_000,
) -> np.ndarray:
    """Compute ``exp(m * t) @ v`` without forming the full exponential.

    An Arnoldi approximation of dimension at most ``krylov_dim`` is built
    from matrix-vector products with ``m`` and the time interval is split
    adaptively until the per-step residual estimate is below ``tol``
    relative to the current vector norm.  Cost is dominated by the
    matrix-vector products.

    Raises :class:`ConvergenceError` when the step control cannot reach the
    requested tolerance within ``max_steps`` substeps.
    """
    m = as_square(m, "m")
    v = as_vector(v, "v")
    n = m.shape[0]
    if v.shape[0] != n:
        raise ValidationError(f"dimension mismatch: matrix {m.shape}, vector {v.shape}")
    if t == 0.0 or not m.any():
        return v.copy()

    dim = min(krylov_dim, n)
    w = v.copy()
    remaining = float(t)
    step_guess = remaining
    for _ in range(max_steps):
        if remaining == 0.0:
            return w
        beta = np.linalg.norm(w)
        if beta == 0.0:
            return w
        basis = np.empty((n, dim + 1), dtype=complex)
        hess = np.zeros((dim + 1, dim), dtype=complex)
        basis[:, 0] = w / beta
        k = dim
        invariant = False
        for j in range(dim):
            u = m @ basis[:, j]
            scale_j = np.linalg.norm(u)
            for i in range(j + 1):
                c = np.vdot(basis[:, i], u)
                u -= c * basis[:, i]
                hess[i, j] += c
            # one re-orthogonalization pass keeps the basis orthonormal
            for i in range(j + 1):
                c = np.vdot(basis[:, i], u)
                u -= c * basis[:, i]
                hess[i, j] += c
            h_next = np.linalg.norm(u)
            hess[j + 1, j] = h_next
            if h_next <= 1e-14 * max(scale_j, 1e-300):
                k = j + 1
                invariant = True
                break
            basis[:, j + 1] = u / h_next
        tau = remaining if invariant or abs(step_guess) >= abs(remaining) else step_guess
        for _halving in range(80):
            phi = scipy.linalg.expm(tau * hess[:k, :k])[:, 0]
            if invariant:
                err = 0.0
            else:
                err = beta * abs(hess[k, k - 1]) * abs(phi[k - 1])
            if err <= tol * beta:
                break
            tau *= 0.5
        else:
            raise ConvergenceError("expm_action step control stalled", residual=err / beta)
        w = basis[:, :k] @ (beta * phi)
        remaining -= tau
        step_guess = 2.0 * tau  # let accepted steps grow back
    raise ConvergenceError(
        f"expm_action did not cover the interval in {max_steps} substeps",
        residual=abs(remaining),
    )


@dataclass(frozen=True)
class EigenDecomposition:
    """Full spectrum of a dense (generally non-Hermitian) matrix.

    ``eigenvalues[i]`` pairs with column ``i`` of ``right_eigenvectors``;
    ``residual_norms[i]`` bounds ``||M v_i - lambda_i v_i||``.  A large
    ``eigenvector_condition`` signals a near-defective matrix (eigenvalue
    crossings where the eigenvectors coalesce), which callers can use to
    detect degeneracies instead of trusting individual eigenvectors.
    """

    eigenvalues: np.ndarray
    right_eigenvectors: np.ndarray
    residual_norms: np.ndarray
    eigenvector_condition: float

    def __len__(self) -> int:
        return self.eigenvalues.shape[0]


def eig(m) -> EigenDecomposition:
    """All eigenvalues (with multiplicity) and right eigenvectors of ``m``.

    Standard dense route: Hessenberg reduction followed by shifted QR
    iteration (LAPACK).  Output is sorted by real part, then imaginary
    part.  Never fails at defective inputs; those are reported through
    ``eigenvector_condition``.
    """
    m = as_square(m, "m")
    try:
        values, vectors = scipy.linalg.eig(m)
    except Exception as exc:  # LAPACK zgeev convergence failure
        raise EigenSolverError(f"dense eigensolver failed: {exc}") from exc
    order = np.lexsort((values.imag, values.real))
    values = values[order]
    vectors = vectors[:, order]
    residuals = np.linalg.norm(m @ vectors - vectors * values[np.newaxis, :], axis=0)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        condition = float(np.linalg.cond(vectors))
    if not np.isfinite(condition):
        condition = np.inf
    return EigenDecomposition(values, vectors, residuals, condition)
