"""Cross-representation analytics.

Mode decomposition of observable trajectories, eigenvalue clustering with
defectiveness detection (exceptional points), and a wall-clock scaling
benchmark over the propagation methods.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .arnoldi import arnoldi_reduce, propagate_reduced
from .errors import DefectiveSpectrumError, ValidationError
from .linalg import expm, expm_action, hs_norm
from .model import _state_matrix, random_density, random_model
from .vectorized import Superoperator, build_superoperator, spectrum, unvec, vec

#: Eigenvector condition number beyond which a spectrum counts as defective.
DEFECTIVE_CONDITION_LIMIT = 1e8
#: Modes with amplitude below this fraction of the total are pruned.
AMPLITUDE_PRUNE_RTOL = 1e-12


@dataclass(frozen=True)
class ModeDecomposition:
    """An observable trajectory as a finite sum of decaying oscillations.

    ``c(t) = sum_m amplitudes[m] * exp(eigenvalues[m] * t)``; decay rates
    and oscillation frequencies are minus the real parts and the imaginary
    parts of the eigenvalues.
    """

    eigenvalues: np.ndarray
    amplitudes: np.ndarray

    @property
    def decay_rates(self) -> np.ndarray:
        return -self.eigenvalues.real

    @property
    def frequencies(self) -> np.ndarray:
        return self.eigenvalues.imag

    def evaluate(self, times) -> np.ndarray:
        """Reconstruct the trajectory at the given times."""
        times = np.asarray(times, dtype=float).reshape(-1)
        return np.exp(np.outer(times, self.eigenvalues)) @ self.amplitudes


def observable_modes(superop: Superoperator, rho0, observable) -> ModeDecomposition:
    """Decompose ``Tr(X rho(t))`` into the eigenmodes of the superoperator.

    Amplitudes are left/right eigenvector projections of the observable and
    the initial state in Liouville space; zero-amplitude modes are pruned.
    Raises :class:`DefectiveSpectrumError` when the eigenvector basis is too
    ill-conditioned to trust (use :func:`detect_degeneracy` there instead).
    """
    rho0 = _state_matrix(rho0)
    n = superop.dim_hilbert
    if rho0.shape != (n, n):
        raise ValidationError(f"state shape {rho0.shape} does not match dim {n}")
    x = np.asarray(observable, dtype=complex)
    if x.shape != (n, n):
        raise ValidationError(f"observable shape {x.shape} does not match dim {n}")
    dec = spectrum(superop)
    if dec.eigenvector_condition > DEFECTIVE_CONDITION_LIMIT:
        raise DefectiveSpectrumError(
            f"eigenvector condition {dec.eigenvector_condition:.3e} exceeds "
            f"{DEFECTIVE_CONDITION_LIMIT:.1e}; spectrum is (numerically) defective"
        )
    vectors = dec.right_eigenvectors
    weights = vec(x.conj().T).conj() @ vectors
    components = np.linalg.solve(vectors, vec(rho0))
    amplitudes = weights * components
    total = np.abs(amplitudes).sum()
    keep = np.abs(amplitudes) >= AMPLITUDE_PRUNE_RTOL * total if total > 0 else np.abs(amplitudes) > 0
    return ModeDecomposition(dec.eigenvalues[keep], amplitudes[keep])


@dataclass(frozen=True)
class EigenvalueCluster:
    center: complex
    members: tuple
    diameter: float

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class DegeneracyReport:
    """Single-linkage eigenvalue clusters plus a defectiveness verdict.

    ``defective`` is True exactly when the eigenvector condition number
    exceeds the defectiveness threshold, i.e. when coalescing eigenvalues
    come with coalescing eigenvectors (an exceptional point) rather than an
    ordinary degeneracy.
    """

    clusters: tuple
    eigenvector_condition: float
    defective: bool


def detect_degeneracy(superop: Superoperator, cluster_tol: float) -> DegeneracyReport:
    """Cluster the spectrum at scale ``cluster_tol`` and flag defectiveness."""
    if cluster_tol <= 0.0:
        raise ValidationError(f"cluster_tol must be positive, got {cluster_tol}")
    dec = spectrum(superop)
    values = dec.eigenvalues
    count = values.shape[0]
    parent = list(range(count))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(count):
        for j in range(i + 1, count):
            if abs(values[i] - values[j]) <= cluster_tol:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[rj] = ri

    groups: dict[int, list[int]] = {}
    for i in range(count):
        groups.setdefault(find(i), []).append(i)
    clusters = []
    for members in groups.values():
        pts = values[members]
        diameter = max(
            (abs(a - b) for a in pts for b in pts), default=0.0
        )
        clusters.append(
            EigenvalueCluster(complex(pts.mean()), tuple(members), float(diameter))
        )
    clusters.sort(key=lambda c: (c.center.real, c.center.imag))
    defective = dec.eigenvector_condition > DEFECTIVE_CONDITION_LIMIT
    return DegeneracyReport(tuple(clusters), dec.eigenvector_condition, defective)


@dataclass(frozen=True)
class BenchRecord:
    """One benchmark cell: a propagation method timed at one dimension."""

    n: int
    method: str
    wall_time_s: float
    result_error: float
    status: str = "ok"


def _method_runner(method, model, superop, r0, rho0, t):
    n = model.dim
    if method == "full-diagonalization":
        def run():
            values, vectors = scipy.linalg.eig(superop.matrix)
            comps = np.linalg.solve(vectors, r0)
            return vectors @ (np.exp(values * t) * comps)
        return run
    if method == "full-expm":
        return lambda: expm(superop.matrix, t) @ r0
    if method == "expm-action":
        return lambda: expm_action(superop.matrix, r0, t)
    if method.startswith("arnoldi-"):
        try:
            k = int(method.split("-", 1)[1])
        except ValueError:
            raise ValidationError(f"bad arnoldi method tag {method!r}")
        k = min(k, n * n - 1)
        norm0 = hs_norm(_state_matrix(rho0))
        def run():
            reduction = arnoldi_reduce(model, rho0, k)
            return vec(propagate_reduced(reduction, t)) * norm0
        return run
    raise ValidationError(f"unknown benchmark method {method!r}")


def run_benchmark(
    dims,
    methods,
    seed: int = 0,
    *,
    t: float = 1.0,
    repeats: int = 5,
    timeout_s: float | None = None,
    model_factory=None,
) -> list[BenchRecord]:
    """Time every method propagating the same random model at each dimension.

    Per cell: one discarded warm-up run, then the median of ``repeats``
    timed runs on the monotonic clock.  ``result_error`` is the HS-norm
    distance of the produced state from a dense eigendecomposition
    reference.  A warm-up run exceeding ``timeout_s`` marks the cell
    ``"timeout"`` instead of aborting the sweep.  ``model_factory``
    (callable ``(rng, n) -> LindbladModel``) overrides the random model
    generator.
    """
    dims = [int(n) for n in dims]
    if any(n < 2 for n in dims):
        raise ValidationError("benchmark dimensions must be >= 2")
    if model_factory is None:
        model_factory = random_model
    rng = np.random.default_rng(seed)
    records = []
    for n in dims:
        model = model_factory(rng, n)
        rho0 = random_density(rng, n)
        superop = build_superoperator(model)
        r0 = vec(rho0.matrix)
        values, vectors = scipy.linalg.eig(superop.matrix)
        reference = unvec(vectors @ (np.exp(values * t) * np.linalg.solve(vectors, r0)), n)
        for method in methods:
            run = _method_runner(method, model, superop, r0, rho0, t)
            start = time.perf_counter()
            result = run()  # warm-up, discarded from timing
            warmup = time.perf_counter() - start
            if timeout_s is not None and warmup > timeout_s:
                records.append(BenchRecord(n, method, warmup, float("nan"), "timeout"))
                continue
            samples = []
            for _ in range(repeats):
                start = time.perf_counter()
                result = run()
                samples.append(time.perf_counter() - start)
            error = float(np.linalg.norm(unvec(result, n) - reference))
            records.append(BenchRecord(n, method, float(np.median(samples)), error))
    return records


def fit_scaling_slopes(records) -> dict[str, float]:
    """Least-squares slope of ``log(wall time)`` against ``log(n)`` per method."""
    by_method: dict[str, list[BenchRecord]] = {}
    for rec in records:
        if rec.status == "ok":
            by_method.setdefault(rec.method, []).append(rec)
    slopes = {}
    for method, recs in by_method.items():
        if len(recs) < 2:
            continue
        xs = np.log([r.n for r in recs])
        ys = np.log([max(r.wall_time_s, 1e-12) for r in recs])
        slopes[method] = float(np.polyfit(xs, ys, 1)[0])
    return slopes


def benchmark_csv(records) -> str:
    """Flat CSV, one row per record: ``n,method,wall_time_s,result_error``.

    Cells that did not complete carry ``nan`` in the error column (their
    wall time is the measured time before cut-off).
    """
    lines = ["n,method,wall_time_s,result_error"]
    for rec in records:
        lines.append(f"{rec.n},{rec.method},{rec.wall_time_s!r},{rec.result_error!r}")
    return "\n".join(lines) + "\n"
