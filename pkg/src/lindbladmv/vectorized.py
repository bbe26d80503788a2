"""Representation 1: vectorize states and build the dense superoperator matrix.

Column-stacking convention throughout: entry ``(a, b)`` of an ``n x n``
matrix lands at flat index ``b*n + a`` (0-based).  Left multiplication
``A rho`` becomes ``kron(I, A)``, right multiplication ``rho B`` becomes
``kron(B.T, I)``, and a sandwich ``A rho B`` becomes ``kron(B.T, A)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ValidationError
from .linalg import EigenDecomposition, as_square, as_vector, eig, expm, expm_action
from .model import DensityMatrix, LindbladModel, _state_matrix, validate_state

COLUMN_STACKING = "column-stacking"


def vec(rho) -> np.ndarray:
    """Flatten a square matrix by stacking its columns."""
    return as_square(rho, "rho").reshape(-1, order="F")


def unvec(r, dim: int) -> np.ndarray:
    """Inverse of :func:`vec`: rebuild the ``dim x dim`` matrix from a flat vector."""
    r = as_vector(r, "r")
    if r.shape[0] != dim * dim:
        raise ValidationError(f"vector length {r.shape[0]} is not {dim}^2")
    return r.reshape((dim, dim), order="F")


@dataclass(frozen=True)
class Superoperator:
    """The generator as an ``n^2 x n^2`` matrix acting on column-stacked states."""

    dim_hilbert: int
    matrix: np.ndarray
    convention: str = field(default=COLUMN_STACKING)

    def __post_init__(self):
        m = as_square(self.matrix, "superoperator matrix")
        if m.shape[0] != self.dim_hilbert**2:
            raise ValidationError(
                f"matrix dimension {m.shape[0]} is not dim_hilbert^2 = {self.dim_hilbert**2}"
            )
        object.__setattr__(self, "matrix", m)


def build_superoperator(model: LindbladModel) -> Superoperator:
    """Assemble the dense matrix of the generator via Kronecker identities.

    For every matrix ``rho``, ``unvec(L @ vec(rho))`` equals
    ``apply_generator(model, rho)``; this consistency is the defining
    contract of the construction.
    """
    n = model.dim
    identity = np.eye(n, dtype=complex)
    h = model.hamiltonian
    matrix = -1j * (np.kron(identity, h) - np.kron(h.T, identity))
    for rate, op in model.jumps:
        if rate == 0.0:
            continue
        gram = op.conj().T @ op
        matrix += rate * (
            np.kron(op.conj(), op)
            - 0.5 * (np.kron(identity, gram) + np.kron(gram.T, identity))
        )
    return Superoperator(n, matrix)


def propagate(
    superop: Superoperator,
    rho0,
    times,
    *,
    method: str = "expm",
) -> list[DensityMatrix]:
    """Evolve ``rho0`` to each requested time through the matrix exponential.

    ``method`` selects the dense exponential (``"expm"``) or the
    matrix-free action (``"expm_action"``).  Times must be non-negative and
    ascending; every returned state is re-validated.
    """
    times = [float(t) for t in times]
    if any(t < 0.0 for t in times):
        raise ValidationError("times must be non-negative")
    if any(b < a for a, b in zip(times, times[1:])):
        raise ValidationError("times must be ascending")
    if method not in ("expm", "expm_action"):
        raise ValidationError(f"unknown propagation method {method!r}")
    rho0 = _state_matrix(rho0)
    n = superop.dim_hilbert
    if rho0.shape != (n, n):
        raise ValidationError(f"state shape {rho0.shape} does not match dim {n}")
    r0 = vec(rho0)
    out = []
    for t in times:
        if method == "expm":
            rt = expm(superop.matrix, t) @ r0
        else:
            rt = expm_action(superop.matrix, r0, t)
        out.append(validate_state(unvec(rt, n)))
    return out


def spectrum(superop: Superoperator) -> EigenDecomposition:
    """Full spectrum of the superoperator matrix.

    For a valid model this is a contraction-semigroup spectrum: real parts
    are non-positive (up to round-off) and eigenvalues come in conjugate
    pairs, with a zero eigenvalue for the stationary state.
    """
    return eig(superop.matrix)
