"""Physical model layer: Hamiltonian, jump operators, density matrices.

The generator and its adjoint are applied directly as matrix-matrix
operations (no superoperator matrix is formed here); the vectorized
representation lives in :mod:`lindbladmv.vectorized`.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import StateValidationError, ValidationError
from .linalg import as_square

#: Relative tolerance for Hermiticity of the Hamiltonian and of states.
HERMITICITY_RTOL = 1e-12
#: Relative tolerance for unit trace of a state.
TRACE_RTOL = 1e-12
#: Most negative admissible state eigenvalue (round-off floor).
POSITIVITY_FLOOR = -1e-10


@dataclass(frozen=True)
class LindbladModel:
    """A Markovian open-system model: Hamiltonian plus rated jump operators.

    ``jumps`` is a sequence of ``(rate, operator)`` pairs; rates must be
    non-negative and operators are arbitrary square matrices of the
    Hamiltonian's dimension (hbar = 1 throughout, so Hamiltonian entries
    are rates).
    """

    hamiltonian: np.ndarray
    jumps: tuple = field(default_factory=tuple)

    def __post_init__(self):
        h = as_square(self.hamiltonian, "hamiltonian")
        defect = np.linalg.norm(h - h.conj().T)
        if defect > HERMITICITY_RTOL * np.linalg.norm(h):
            raise ValidationError(
                f"hamiltonian is not Hermitian (defect {defect:.3e})"
            )
        normalized = []
        for k, (rate, op) in enumerate(self.jumps):
            rate = float(rate)
            if rate < 0.0:
                raise ValidationError(f"jump rate {k} is negative: {rate}")
            op = as_square(op, f"jump operator {k}")
            if op.shape != h.shape:
                raise ValidationError(
                    f"jump operator {k} has shape {op.shape}, expected {h.shape}"
                )
            normalized.append((rate, op))
        object.__setattr__(self, "hamiltonian", h)
        object.__setattr__(self, "jumps", tuple(normalized))

    @property
    def dim(self) -> int:
        return self.hamiltonian.shape[0]


@dataclass(frozen=True)
class DensityMatrix:
    """A validated quantum state; construct via :func:`validate_state`."""

    matrix: np.ndarray

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


def validate_state(
    rho,
    *,
    herm_rtol: float = HERMITICITY_RTOL,
    trace_rtol: float = TRACE_RTOL,
    positivity_floor: float = POSITIVITY_FLOOR,
) -> DensityMatrix:
    """Check the density-matrix invariants and wrap ``rho`` on success.

    Raises :class:`StateValidationError` listing every violated invariant
    (Hermiticity, unit trace, positive semidefiniteness) with magnitudes.
    """
    if isinstance(rho, DensityMatrix):
        return rho
    rho = as_square(rho, "state")
    violations = []
    scale = max(np.linalg.norm(rho), 1.0)
    herm_defect = np.linalg.norm(rho - rho.conj().T)
    if herm_defect > herm_rtol * scale:
        violations.append(("hermiticity", float(herm_defect), herm_rtol * scale))
    trace_defect = abs(np.trace(rho) - 1.0)
    if trace_defect > trace_rtol * scale:
        violations.append(("trace", float(trace_defect), trace_rtol * scale))
    if not violations:
        lowest = float(np.linalg.eigvalsh(0.5 * (rho + rho.conj().T)).min())
        if lowest < positivity_floor:
            violations.append(("positivity", lowest, positivity_floor))
    if violations:
        raise StateValidationError(violations)
    return DensityMatrix(rho)


def _state_matrix(rho) -> np.ndarray:
    return rho.matrix if isinstance(rho, DensityMatrix) else as_square(rho, "rho")


def apply_generator(model: LindbladModel, rho) -> np.ndarray:
    """Apply the generator: ``-i[H, rho] + sum_i g_i (A rho A^dag - {A^dag A, rho}/2)``.

    ``rho`` need not be a physical state; the map is linear.  The result is
    traceless, and Hermitian whenever ``rho`` is.
    """
    rho = _state_matrix(rho)
    h = model.hamiltonian
    if rho.shape != h.shape:
        raise ValidationError(f"state shape {rho.shape} does not match model dim {model.dim}")
    out = -1j * (h @ rho - rho @ h)
    for rate, op in model.jumps:
        if rate == 0.0:
            continue
        op_dag = op.conj().T
        gram = op_dag @ op
        out += rate * (op @ rho @ op_dag - 0.5 * (gram @ rho + rho @ gram))
    return out


def apply_adjoint(model: LindbladModel, observable) -> np.ndarray:
    """Apply the adjoint (Heisenberg-picture) generator to an observable.

    ``+i[H, X] + sum_i g_i (A^dag X A - {A^dag A, X}/2)``; the identity is a
    fixed point.
    """
    x = as_square(observable, "observable")
    h = model.hamiltonian
    if x.shape != h.shape:
        raise ValidationError(
            f"observable shape {x.shape} does not match model dim {model.dim}"
        )
    out = 1j * (h @ x - x @ h)
    for rate, op in model.jumps:
        if rate == 0.0:
            continue
        op_dag = op.conj().T
        gram = op_dag @ op
        out += rate * (op_dag @ x @ op - 0.5 * (gram @ x + x @ gram))
    return out


def duality_check(model: LindbladModel, rho, observable) -> tuple[complex, complex]:
    """Evaluate both sides of the defining adjoint relation.

    Returns ``(Tr(X . L rho), Tr((L^dag X) . rho))``; the two must agree for
    any ``rho`` and ``X`` of the model's dimension.
    """
    rho = _state_matrix(rho)
    x = as_square(observable, "observable")
    forward = complex(np.trace(x @ apply_generator(model, rho)))
    backward = complex(np.trace(apply_adjoint(model, x) @ rho))
    return forward, backward


def random_model(rng: np.random.Generator, dim: int, n_jumps: int = 1) -> LindbladModel:
    """Draw a random valid model: symmetrized Gaussian H, Gaussian jumps, rates in (0, 1]."""
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    hamiltonian = 0.5 * (g + g.conj().T)
    jumps = []
    for _ in range(n_jumps):
        op = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
        rate = float(1.0 - rng.uniform(0.0, 1.0))  # uniform on (0, 1]
        jumps.append((rate, op))
    return LindbladModel(hamiltonian, tuple(jumps))


def random_density(rng: np.random.Generator, dim: int) -> DensityMatrix:
    """Draw a random full-rank density matrix (Wishart normalized to unit trace)."""
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    rho = g @ g.conj().T
    rho /= np.trace(rho).real
    return validate_state(rho)
