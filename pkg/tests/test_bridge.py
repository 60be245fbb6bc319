import numpy as np
import pytest
from hypothesis import given
from strategies import alg_elements, conf_elements, vec3

from conforbits import bridge, catalog, euclid, lorentz, orbits
from conforbits.bridge import AT_INFINITY, P0, embed_alg, embed_conf, embed_point, unembed
from conforbits.errors import OutsideIdentityComponent
from conforbits.euclid import GX, LAM, ConfElement
from conforbits.lorentz import q_form


def test_embed_examples():
    assert np.allclose(embed_point(np.zeros(3)).n, [1, 0, 0, 0, 1])
    raw = bridge.embed_point_raw([1, 0, 0])
    assert np.allclose(raw, [1, 1, 0, 0, 0]) and q_form(raw) == 0


@given(vec3)
def test_embedded_points_are_null(x):
    raw = bridge.embed_point_raw(x)
    assert abs(q_form(raw)) <= 1e-9 * (raw @ raw)


@given(vec3)
def test_round_trip(x):
    assert np.allclose(unembed(embed_point(x)), x, atol=1e-9 * (1 + x @ x))


def test_unembed_special_points():
    assert unembed(P0) is AT_INFINITY
    assert not AT_INFINITY
    assert np.allclose(unembed([1, 0, 0, 0, 1]), 0)


def test_vectorized_embedding(rng):
    xs = rng.standard_normal((6, 3))
    assert np.allclose(bridge.embed_points(xs), [embed_point(x).n for x in xs])


def test_embed_conf_identity_and_rotation(rng):
    assert np.allclose(embed_conf(ConfElement.identity()), np.eye(5))
    A = euclid.exp(GX, 0.7).A
    m = embed_conf(ConfElement.rotation(A))
    assert np.allclose(m[1:4, 1:4], A) and np.allclose(m[0, 1:4], 0)
    x = rng.standard_normal(3)
    assert np.allclose(lorentz.act_sphere(m, embed_point(x)).n, embed_point(A @ x).n, atol=1e-9)


def test_embed_conf_rejects_other_components():
    with pytest.raises(OutsideIdentityComponent):
        embed_conf(ConfElement.homothety(-1.0))
    with pytest.raises(OutsideIdentityComponent):
        embed_conf(ConfElement.rotation(np.diag([1.0, 1.0, -1.0])))


@given(conf_elements(connected=True), vec3)
def test_equivariance(g, x):
    lhs = embed_point(euclid.act(g, x)).n
    rhs = lorentz.act_sphere(embed_conf(g), embed_point(x)).n
    assert np.abs(lhs - rhs).max() <= 1e-8


@given(conf_elements(connected=True))
def test_fixes_infinity(g):
    m = embed_conf(g)
    assert lorentz.is_lorentz(m, 1e-9 * max(1.0, np.abs(m).max() ** 2))
    assert np.allclose(lorentz.act_sphere(m, P0).n, P0.n, atol=1e-9)


def test_embed_alg_examples():
    m = embed_alg(LAM)
    assert lorentz.is_lorentz_alg(m)
    assert np.allclose(m, lorentz.boost_generator(4)) or np.allclose(m, -lorentz.boost_generator(4))
    assert np.allclose(embed_alg(GX), lorentz.rotation_generator(1, 2))


@given(alg_elements, alg_elements)
def test_embed_alg_morphism(x, y):
    mx, my = embed_alg(x), embed_alg(y)
    assert np.allclose(embed_alg(euclid.bracket(x, y)), mx @ my - my @ mx, atol=1e-8)
    assert np.allclose(mx @ P0.n, (P0.n @ mx @ P0.n / (P0.n @ P0.n)) * P0.n, atol=1e-9)


def test_embed_alg_is_differential(rng):
    xi, h = euclid.random_alg_element(rng), 1e-6
    fd = (embed_conf(euclid.exp(xi, h)) - embed_conf(euclid.exp(xi, -h))) / (2 * h)
    assert np.allclose(fd, embed_alg(xi), atol=1e-7)


@pytest.mark.parametrize("label", catalog.EUCLID_LABELS)
def test_orbit_dims_intertwine(label, rng):
    g = catalog.get(label, 1.0 if label in catalog.FAMILY_LABELS else None).generators
    s = bridge.embed_subalgebra(g)
    for x in np.vstack([rng.standard_normal((5, 3)), orbits.EUCLID_SINGULAR]):
        assert orbits.orbit_dim_at(g, x) == lorentz.sphere_orbit_dim(s.basis, embed_point(x))
