import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from strategies import alg_elements, conf_elements, vec3

from conforbits import euclid
from conforbits.euclid import (
    GX,
    GY,
    GZ,
    LAM,
    T1,
    T2,
    T3,
    X,
    Y,
    Z,
    ConfAlgElement,
    ConfElement,
    act,
    adjoint,
    bracket,
    compose,
    generator_field,
    inverse,
)


def close(g: ConfElement, h: ConfElement, tol=1e-9) -> bool:
    return abs(g.alpha - h.alpha) <= tol and np.allclose(g.A, h.A, atol=tol) and np.allclose(g.v, h.v, atol=tol)


def alg_close(x: ConfAlgElement, y: ConfAlgElement, tol=1e-9) -> bool:
    return np.allclose(x.coords, y.coords, atol=tol)


def rot_block(t):
    c, s = np.cos(t), np.sin(t)
    return np.array([[c, s, 0.0], [-s, c, 0.0], [0.0, 0.0, 1.0]])


class TestConstruction:
    def test_rejects_zero_alpha(self):
        with pytest.raises(ValueError):
            ConfElement(0.0, np.eye(3), np.zeros(3))

    def test_rejects_non_orthogonal(self):
        with pytest.raises(ValueError):
            ConfElement(1.0, np.diag([1.0, 1.0, 1.1]), np.zeros(3))

    def test_rejects_non_skew_generator(self):
        with pytest.raises(ValueError):
            ConfAlgElement(0.0, np.eye(3), np.zeros(3))

    def test_values_are_read_only(self):
        g = ConfElement.identity()
        with pytest.raises(ValueError):
            g.v[0] = 1.0

    def test_coords_round_trip(self):
        c = np.arange(7.0)
        assert np.array_equal(ConfAlgElement.from_coords(c).coords, c)

    def test_basis_names(self):
        assert np.array_equal(GX.V, X) and np.array_equal(GY.V, Y) and np.array_equal(GZ.V, Z)
        assert LAM.a == 1.0 and np.array_equal(T3.w, [0, 0, 1])

    def test_scalar_addition_means_homothety(self):
        xi = 2 + GX
        assert xi.a == 2.0 and np.array_equal(xi.V, X)


class TestGroupLaw:
    def test_compose_example(self):
        g = compose(ConfElement(2, np.eye(3), [1, 0, 0]), ConfElement(3, np.eye(3), [0, 1, 0]))
        assert close(g, ConfElement(6, np.eye(3), [1, 2, 0]))

    def test_inverse_examples(self):
        assert close(inverse(ConfElement.translation([5, 0, 0])), ConfElement.translation([-5, 0, 0]))
        assert close(inverse(ConfElement.homothety(2.0)), ConfElement.homothety(0.5))

    def test_act_examples(self):
        assert np.allclose(act(ConfElement(2, np.eye(3), [1, 1, 1]), np.zeros(3)), [1, 1, 1])

    def test_act_vectorized(self, rng):
        g = euclid.random_element(rng)
        pts = rng.standard_normal((5, 3))
        assert np.allclose(act(g, pts), [act(g, p) for p in pts])

    def test_homogeneous_matrix_is_a_representation(self, rng):
        g, h = euclid.random_element(rng), euclid.random_element(rng)
        assert np.allclose(compose(g, h).matrix(), g.matrix() @ h.matrix())

    def test_orthogonality_survives_long_products(self, rng):
        g = ConfElement.identity()
        for _ in range(100):
            h = euclid.random_element(rng)
            g = compose(h, inverse(compose(g, h)))
        assert np.abs(g.A.T @ g.A - np.eye(3)).max() <= 1e-9

    @given(conf_elements(), conf_elements(), conf_elements())
    def test_associative(self, f, g, h):
        lhs, rhs = compose(compose(f, g), h), compose(f, compose(g, h))
        scale = 1 + np.abs(lhs.v).max()
        assert close(lhs, rhs, 1e-9 * scale)

    @given(conf_elements())
    def test_identity_and_inverse(self, g):
        e = ConfElement.identity()
        assert close(compose(e, g), g) and close(compose(g, e), g)
        assert close(compose(g, inverse(g)), e, 1e-9 * (1 + np.abs(g.v).max()))
        assert close(compose(inverse(g), g), e, 1e-9 * (1 + np.abs(g.v).max()))

    @given(conf_elements(), conf_elements(), vec3)
    def test_action_axiom(self, g, h, p):
        lhs, rhs = act(compose(g, h), p), act(g, act(h, p))
        assert np.allclose(lhs, rhs, atol=1e-9 * (1 + np.abs(lhs).max()))


class TestBracket:
    def test_so3_relations(self):
        assert alg_close(bracket(GX, GY), -1 * GZ)
        assert alg_close(bracket(GX, GZ), GY)
        assert alg_close(bracket(GY, GZ), -1 * GX)

    def test_homothety_acts_as_identity_on_translations(self):
        assert alg_close(bracket(LAM, T3), T3)
        assert alg_close(bracket(LAM, GX), ConfAlgElement.zero())

    def test_rotation_on_translations(self):
        # X e1 = -e2, X e2 = e1, Y e1 = -e3
        assert alg_close(bracket(GX, T1), -1 * T2)
        assert alg_close(bracket(GX, T2), T1)
        assert alg_close(bracket(GY, T1), -1 * T3)
        assert alg_close(bracket(GX, T3), ConfAlgElement.zero())

    def test_matches_matrix_commutator(self, rng):
        x, y = euclid.random_alg_element(rng), euclid.random_alg_element(rng)
        m = x.matrix() @ y.matrix() - y.matrix() @ x.matrix()
        assert np.allclose(bracket(x, y).matrix(), m)

    @given(alg_elements, alg_elements)
    def test_antisymmetric(self, x, y):
        assert alg_close(bracket(x, y), -1 * bracket(y, x))
        assert alg_close(bracket(x, x), ConfAlgElement.zero())

    @given(alg_elements, alg_elements, alg_elements)
    def test_jacobi(self, x, y, z):
        s = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))
        assert np.abs(s.coords).max() <= 1e-9 * 100


class TestAdjoint:
    def test_translation_example(self):
        u = np.array([0.3, -1.2, 2.0])
        xi = ConfAlgElement(1.0, np.zeros((3, 3)), u)
        assert alg_close(adjoint(ConfElement.translation(u), xi), LAM)

    def test_identity(self, rng):
        xi = euclid.random_alg_element(rng)
        assert alg_close(adjoint(ConfElement.identity(), xi), xi)

    def test_matches_matrix_conjugation(self, rng):
        g, xi = euclid.random_element(rng), euclid.random_alg_element(rng)
        m = g.matrix() @ xi.matrix() @ np.linalg.inv(g.matrix())
        assert np.allclose(adjoint(g, xi).matrix(), m)

    def test_adjoint_matrix_agrees(self, rng):
        g, xi = euclid.random_element(rng), euclid.random_alg_element(rng)
        assert np.allclose(euclid.adjoint_matrix(g) @ xi.coords, adjoint(g, xi).coords)

    @given(conf_elements(), conf_elements(), alg_elements)
    def test_homomorphism(self, g, h, xi):
        lhs = adjoint(compose(g, h), xi).coords
        rhs = adjoint(g, adjoint(h, xi)).coords
        assert np.allclose(lhs, rhs, atol=1e-9 * (1 + np.abs(lhs).max()))

    @given(conf_elements(), alg_elements, alg_elements)
    def test_bracket_automorphism(self, g, x, y):
        lhs = adjoint(g, bracket(x, y)).coords
        rhs = bracket(adjoint(g, x), adjoint(g, y)).coords
        assert np.allclose(lhs, rhs, atol=1e-9 * (1 + np.abs(lhs).max()))


class TestExp:
    @pytest.mark.parametrize("a", [1.0, -2.0, 0.5])
    def test_screw_homothety_closed_form(self, a):
        for t in np.linspace(-5, 5, 100):
            g = euclid.exp(a + GX, t)
            assert abs(g.alpha - np.exp(a * t)) <= 1e-9 * max(1.0, np.exp(a * t))
            assert np.abs(g.A - rot_block(t)).max() <= 1e-9
            assert np.abs(g.v).max() <= 1e-9

    def test_screw_motion_closed_form(self):
        for t in np.linspace(-5, 5, 100):
            g = euclid.exp(GX + T3, t)
            assert abs(g.alpha - 1.0) <= 1e-9
            assert np.abs(g.A - rot_block(t)).max() <= 1e-9
            assert np.abs(g.v - [0, 0, t]).max() <= 1e-9

    def test_zero(self):
        assert close(euclid.exp(ConfAlgElement.zero(), 3.0), ConfElement.identity())

    @given(alg_elements, st.floats(-1, 1), st.floats(-1, 1))
    def test_one_parameter_subgroup(self, xi, s, t):
        lhs = euclid.exp(xi, s + t)
        rhs = compose(euclid.exp(xi, s), euclid.exp(xi, t))
        tol = 1e-9 * (1 + abs(lhs.alpha) + np.abs(lhs.v).max())
        assert close(lhs, rhs, tol)

    @given(conf_elements(connected=True), alg_elements, st.floats(-2, 2))
    def test_conjugation(self, g, xi, t):
        lhs = euclid.exp(adjoint(g, xi), t)
        rhs = compose(compose(g, euclid.exp(xi, t)), inverse(g))
        tol = 1e-8 * (1 + abs(lhs.alpha) + np.abs(lhs.v).max())
        assert close(lhs, rhs, tol)


class TestGeneratorField:
    def test_anchor_values(self, rng):
        for p in rng.uniform(-5, 5, (100, 3)):
            x, y, z = p
            assert np.abs(generator_field(GX + T3, p) - [y, -x, 1]).max() <= 1e-12
            for a in (1.0, -2.0, 0.5):
                want = [a * x + y, -x + a * y, a * z]
                assert np.abs(generator_field(a + GX, p) - want).max() <= 1e-12 * 10
        assert np.array_equal(generator_field(T1, rng.standard_normal(3)), [1, 0, 0])

    @pytest.mark.parametrize("h", [1e-5])
    def test_central_difference(self, rng, h):
        for _ in range(50):
            xi = euclid.random_alg_element(rng)
            p = rng.uniform(-2, 2, 3)
            fd = (act(euclid.exp(xi, h), p) - act(euclid.exp(xi, -h), p)) / (2 * h)
            assert np.abs(fd - generator_field(xi, p)).max() <= 1e-8

    def test_vectorized(self, rng):
        xi, pts = euclid.random_alg_element(rng), rng.standard_normal((4, 3))
        assert np.allclose(generator_field(xi, pts), [generator_field(xi, p) for p in pts])


class TestProjections:
    def test_examples(self):
        xi = LAM + GX + T3
        assert np.array_equal(euclid.project_li(xi), X)
        assert euclid.project_h(xi) == 1.0
        assert alg_close(euclid.project_l(xi), LAM + GX)

    @given(alg_elements, alg_elements)
    def test_morphisms(self, x, y):
        b = bracket(x, y)
        assert alg_close(euclid.project_l(b), bracket(euclid.project_l(x), euclid.project_l(y)))
        V, W = euclid.project_li(x), euclid.project_li(y)
        assert np.allclose(euclid.project_li(b), V @ W - W @ V, atol=1e-9)
        assert abs(euclid.project_h(b)) <= 1e-12
