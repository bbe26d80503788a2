import numpy as np
import pytest

from lindbladmv.errors import StateValidationError, ValidationError
from lindbladmv.model import (
    LindbladModel,
    apply_adjoint,
    apply_generator,
    duality_check,
    random_density,
    random_model,
    validate_state,
)
from lindbladmv.tls import EXCITED, GROUND, IDENTITY, SX, SY, SZ, TLSParams, build_tls

from conftest import random_hermitian


def generator_scale(model):
    return np.linalg.norm(model.hamiltonian) + sum(
        rate * np.linalg.norm(op) ** 2 for rate, op in model.jumps
    )


class TestModelConstruction:
    def test_non_hermitian_hamiltonian_rejected(self):
        with pytest.raises(ValidationError):
            LindbladModel(np.array([[0.0, 1.0], [0.0, 0.0]]))

    def test_negative_rate_rejected(self):
        with pytest.raises(ValidationError):
            LindbladModel(np.eye(2), ((-0.5, np.eye(2)),))

    def test_jump_dimension_mismatch_rejected(self):
        with pytest.raises(ValidationError):
            LindbladModel(np.eye(2), ((1.0, np.eye(3)),))

    def test_zero_rate_allowed(self):
        model = LindbladModel(np.eye(2), ((0.0, SX),))
        assert model.dim == 2

    def test_tls_commutation_relations(self):
        # the spin constants must satisfy [Si, Sj] = i eps_ijk Sk
        assert np.allclose(SX @ SY - SY @ SX, 1j * SZ, atol=1e-15)
        assert np.allclose(SY @ SZ - SZ @ SY, 1j * SX, atol=1e-15)
        assert np.allclose(SZ @ SX - SX @ SZ, 1j * SY, atol=1e-15)

    def test_negative_decay_rejected(self):
        with pytest.raises(ValidationError):
            TLSParams(0.0, 0.0, -1.0)


class TestApplyGenerator:
    def test_trivial_model(self, rng):
        model = LindbladModel(np.zeros((3, 3)))
        rho = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
        assert np.allclose(apply_generator(model, rho), 0.0, atol=1e-15)

    def test_ground_state_coherence_pumping(self):
        eps, gamma = 1.3, 0.7
        model = build_tls(TLSParams(0.4, eps, gamma))
        out = apply_generator(model, GROUND)
        e_eg = np.array([[0.0, 1.0], [0.0, 0.0]])
        e_ge = np.array([[0.0, 0.0], [1.0, 0.0]])
        assert np.allclose(out, (-0.5j * eps) * (e_eg - e_ge), atol=1e-14)

    def test_undriven_decay(self):
        gamma = 0.9
        model = build_tls(TLSParams(0.0, 0.0, gamma))
        out = apply_generator(model, EXCITED)
        assert np.allclose(out, gamma * (GROUND - EXCITED), atol=1e-15)

    def test_dimension_mismatch(self):
        model = build_tls(TLSParams(0.0, 0.0, 1.0))
        with pytest.raises(ValidationError):
            apply_generator(model, np.eye(3))


class TestApplyAdjoint:
    def test_identity_fixed_point(self, rng):
        for n in (2, 3, 4):
            model = random_model(rng, n, n_jumps=2)
            defect = np.linalg.norm(apply_adjoint(model, np.eye(n)))
            assert defect <= 1e-12 * generator_scale(model)

    def test_sx_image(self):
        delta, eps, gamma = 0.8, 1.1, 0.6
        model = build_tls(TLSParams(delta, eps, gamma))
        out = apply_adjoint(model, SX)
        assert np.allclose(out, -delta * SY - 0.5 * gamma * SX, atol=1e-14)

    def test_sz_image(self):
        delta, eps, gamma = 0.8, 1.1, 0.6
        model = build_tls(TLSParams(delta, eps, gamma))
        out = apply_adjoint(model, SZ)
        assert np.allclose(out, eps * SY - gamma * SZ - 0.5 * gamma * IDENTITY, atol=1e-14)


class TestDuality:
    def test_identity_observable_gives_zero(self, rng):
        model = random_model(rng, 3)
        rho = random_density(rng, 3)
        forward, backward = duality_check(model, rho, np.eye(3))
        assert abs(forward) <= 1e-12 * generator_scale(model)
        assert abs(backward) <= 1e-12 * generator_scale(model)

    def test_random_agreement(self, rng):
        for _ in range(20):
            model = random_model(rng, 3, n_jumps=2)
            rho = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
            x = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
            forward, backward = duality_check(model, rho, x)
            assert abs(forward - backward) <= 1e-11 * max(abs(forward), 1.0)

    def test_tls_excited_population_flow(self):
        gamma = 0.7
        model = build_tls(TLSParams(0.5, 0.9, gamma))
        forward, backward = duality_check(model, EXCITED, SZ)
        assert forward == pytest.approx(-gamma, abs=1e-13)
        assert backward == pytest.approx(-gamma, abs=1e-13)


class TestValidateState:
    def test_maximally_mixed_valid(self):
        state = validate_state(np.eye(2) / 2.0)
        assert state.dim == 2

    def test_trace_violation(self):
        with pytest.raises(StateValidationError) as excinfo:
            validate_state(np.eye(2))
        assert any(name == "trace" for name, _, _ in excinfo.value.violations)

    def test_positivity_violation(self):
        with pytest.raises(StateValidationError) as excinfo:
            validate_state(np.diag([1.5, -0.5]))
        assert any(name == "positivity" for name, _, _ in excinfo.value.violations)

    def test_hermiticity_violation(self):
        with pytest.raises(StateValidationError) as excinfo:
            validate_state(np.array([[0.5, 1.0], [0.0, 0.5]]))
        assert any(name == "hermiticity" for name, _, _ in excinfo.value.violations)

    def test_passthrough(self, rng):
        state = random_density(rng, 3)
        assert validate_state(state) is state


class TestGeneratorProperties:
    """Structural invariants on a population of random models."""

    sizes = (2, 3, 4, 6)

    def test_trace_annihilation_and_hermiticity(self, rng):
        for i in range(200):
            n = self.sizes[i % len(self.sizes)]
            model = random_model(rng, n, n_jumps=1 + i % 2)
            rho = random_hermitian(rng, n)
            out = apply_generator(model, rho)
            scale = generator_scale(model) * np.linalg.norm(rho)
            assert abs(np.trace(out)) <= 1e-11 * scale
            assert np.linalg.norm(out - out.conj().T) <= 1e-11 * scale

    def test_linearity(self, rng):
        for _ in range(50):
            model = random_model(rng, 3)
            r1 = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
            r2 = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
            a, b = rng.normal(size=2) + 1j * rng.normal(size=2)
            lhs = apply_generator(model, a * r1 + b * r2)
            rhs = a * apply_generator(model, r1) + b * apply_generator(model, r2)
            assert np.linalg.norm(lhs - rhs) <= 1e-12 * max(np.linalg.norm(rhs), 1.0)

    def test_adjoint_duality(self, rng):
        for i in range(200):
            n = self.sizes[i % len(self.sizes)]
            model = random_model(rng, n)
            rho = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
            x = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
            forward, backward = duality_check(model, rho, x)
            scale = generator_scale(model) * np.linalg.norm(rho) * np.linalg.norm(x)
            assert abs(forward - backward) <= 1e-11 * scale

    def test_random_density_is_valid(self, rng):
        for n in (2, 3, 4, 6):
            state = random_density(rng, n)
            assert np.trace(state.matrix) == pytest.approx(1.0, abs=1e-12)
            assert np.linalg.eigvalsh(state.matrix).min() >= -1e-12
