"""Representation 3: closed operator sets under the adjoint generator.

Given a candidate basis of observables, decide whether the adjoint
generator maps each member back into the span, extract the coefficient
matrix of the resulting linear system, and propagate expectation-value
vectors with it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DependentBasisError, NotClosedError, ValidationError
from .linalg import EigenDecomposition, as_square, eig, expm, hs_inner, hs_norm
from .model import LindbladModel, _state_matrix, apply_adjoint

#: Relative out-of-span residual below which a basis counts as closed.
CLOSURE_RTOL = 1e-10
#: Gram-matrix condition number beyond which the basis is treated as dependent.
GRAM_COND_LIMIT = 1e12


@dataclass(frozen=True)
class AdjointRep:
    """A closed operator set with its adjoint-generator coefficient matrix.

    Row ``k`` of ``coeffs`` expands the adjoint image of ``basis[k]`` in the
    basis, i.e. it gives the time derivative of the k-th expectation value.
    ``closure_residuals[k]`` is the (absolute) out-of-span remainder norm.
    """

    basis: tuple
    coeffs: np.ndarray
    closure_residuals: np.ndarray

    @property
    def size(self) -> int:
        return len(self.basis)


def close_set(model: LindbladModel, basis, *, tol: float = CLOSURE_RTOL) -> AdjointRep:
    """Decompose the adjoint image of each basis operator inside the span.

    The least-squares decomposition is solved through the Gram matrix of
    the basis (basis sets here are tiny).  Fails with
    :class:`DependentBasisError` for a numerically dependent basis and with
    :class:`NotClosedError` when any image leaves the span by more than
    ``tol`` relative to its norm.
    """
    ops = [as_square(x, f"basis operator {k}") for k, x in enumerate(basis)]
    if not ops:
        raise ValidationError("basis must contain at least one operator")
    n = model.dim
    for k, x in enumerate(ops):
        if x.shape != (n, n):
            raise ValidationError(
                f"basis operator {k} has shape {x.shape}, expected ({n}, {n})"
            )
    gram = np.array([[hs_inner(a, b) for b in ops] for a in ops])
    condition = np.linalg.cond(gram)
    if not np.isfinite(condition) or condition > GRAM_COND_LIMIT:
        raise DependentBasisError(
            f"basis Gram matrix has condition number {condition:.3e}"
        )
    size = len(ops)
    coeffs = np.zeros((size, size), dtype=complex)
    residuals = np.zeros(size)
    for k, x in enumerate(ops):
        image = apply_adjoint(model, x)
        rhs = np.array([hs_inner(b, image) for b in ops])
        row = np.linalg.solve(gram, rhs)
        remainder = image - sum(c * b for c, b in zip(row, ops))
        residual = hs_norm(remainder)
        image_norm = hs_norm(image)
        if residual > tol * max(image_norm, 1e-300):
            raise NotClosedError(k, residual / max(image_norm, 1e-300))
        coeffs[k] = row
        residuals[k] = residual
    return AdjointRep(tuple(ops), coeffs, residuals)


def expectations(basis, rho) -> np.ndarray:
    """Expectation values ``Tr(X_k rho)`` for every operator in ``basis``."""
    rho = _state_matrix(rho)
    values = []
    for k, x in enumerate(basis):
        x = as_square(x, f"basis operator {k}")
        if x.shape != rho.shape:
            raise ValidationError(
                f"basis operator {k} has shape {x.shape}, state has {rho.shape}"
            )
        values.append(complex(np.trace(x @ rho)))
    return np.array(values)


def propagate_expectations(rep: AdjointRep, initial, times) -> np.ndarray:
    """Evolve an expectation-value vector: row ``i`` holds the values at ``times[i]``.

    For a closed set this matches the Schroedinger-picture readout
    ``Tr(X_k rho(t))`` at every time.
    """
    initial = np.asarray(initial, dtype=complex).reshape(-1)
    if initial.shape[0] != rep.size:
        raise ValidationError(
            f"expectation vector length {initial.shape[0]} does not match basis size {rep.size}"
        )
    times = [float(t) for t in times]
    if any(t < 0.0 for t in times):
        raise ValidationError("times must be non-negative")
    if any(b < a for a, b in zip(times, times[1:])):
        raise ValidationError("times must be ascending")
    return np.array([expm(rep.coeffs, t) @ initial for t in times])


def adjoint_spectrum(rep: AdjointRep) -> EigenDecomposition:
    """Eigenvalues of the coefficient matrix.

    Their complex conjugates form a sub-multiset of the superoperator
    spectrum, so conjugate before comparing across representations.
    """
    return eig(rep.coeffs)
