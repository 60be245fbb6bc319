import numpy as np
import pytest
from hypothesis import given
from strategies import conf_elements, lorentz_alg, separated_unit4, separated_vec3

from conforbits import catalog, euclid, lorentz, orbits
from conforbits.errors import ModelMismatch, UnknownInvariant
from conforbits.euclid import GX, T1, T2, T3
from conforbits.orbits import cohomogeneity, orbit_cloud, orbit_dim_at, orbits_equivalent
from conforbits.subalgebra import Subalgebra


def gens(label, a=1.0):
    return catalog.get(label, a if label in catalog.FAMILY_LABELS else None).generators


class TestOrbitDim:
    def test_screw_plane_everywhere_open(self, rng):
        g = gens("SxP")
        assert all(orbit_dim_at(g, p) == 3 for p in rng.standard_normal((20, 3)))

    def test_na_plane_singular_plane(self):
        g = gens("NaxP")
        assert orbit_dim_at(g, [0.3, -1.0, 0.0]) == 2
        assert orbit_dim_at(g, [0.3, -1.0, 0.2]) == 3

    def test_so3_origin(self):
        assert orbit_dim_at(gens("SO(3)"), np.zeros(3)) == 0

    def test_model_mismatch(self):
        with pytest.raises(ModelMismatch):
            orbit_dim_at(gens("SO(3)"), np.zeros(5))
        with pytest.raises(ModelMismatch):
            orbit_dim_at(gens("SO(4)"), np.zeros(3))

    def test_lorentz_accepts_unit_part(self):
        assert orbit_dim_at(gens("SO(2)xSO(2)"), [1.0, 0, 0, 0]) == 1

    @given(conf_elements(), separated_vec3)
    def test_conjugation_invariance_euclid(self, h, p):
        g = gens("(R+*xSO(2))xL")
        assert orbit_dim_at(g, p) == orbit_dim_at(g.conjugate(h), euclid.act(h, p))

    @given(lorentz_alg, separated_unit4)
    def test_conjugation_invariance_sphere(self, m, u):
        g = gens("SO(2)xSO(2)")
        h = lorentz.exp(m)
        s = lorentz.SpherePoint.from_unit(u)
        assert orbit_dim_at(g, s.n) == orbit_dim_at(g.conjugate(h), lorentz.act_sphere(h, s).n)


class TestCohomogeneity:
    def test_examples(self):
        rep = cohomogeneity(gens("P"))
        assert rep.max_dim == 2 and rep.cohomogeneity == 1 and rep.dims() == [2]
        assert cohomogeneity(gens("R3")).cohomogeneity == 0
        assert cohomogeneity(gens("SO0(1,2)")).cohomogeneity == 1

    def test_so3_strata(self):
        rep = cohomogeneity(gens("SO(3)"))
        assert rep.dims() == [0, 2]
        assert np.allclose(rep.strata[0].witness, 0)

    def test_torus_strata(self):
        rep = cohomogeneity(gens("SO(2)xSO(2)"))
        assert rep.cohomogeneity == 1 and rep.dims() == [1, 2]

    def test_full_group_single_stratum(self):
        rep = cohomogeneity(gens("SO0(1,4)"))
        assert rep.cohomogeneity == 0 and rep.dims() == [3]

    def test_translations_give_single_open_stratum(self):
        for label in ("R+*xR3", "(R+*xSO(3))xR3", "SO(3)xR3", "NaxR3", "R3", "SO(2)xR3", "(R+*xSO(2))xR3", "SxP"):
            assert cohomogeneity(gens(label)).dims() == [3]

    def test_deterministic(self):
        a = cohomogeneity(gens("R+*xSO(2)"), seed=7).to_dict()
        b = cohomogeneity(gens("R+*xSO(2)"), seed=7).to_dict()
        assert a == b

    def test_without_forced_points_singular_strata_vanish(self):
        assert cohomogeneity(gens("SO(3)"), force_singular=False).dims() == [2]

    @pytest.mark.parametrize("seed", range(5))
    def test_single_sample_never_overreports(self, seed):
        for e in catalog.list_entries():
            rep = cohomogeneity(e.generators, samples=1, seed=seed, force_singular=False)
            assert rep.max_dim <= 3 - e.claimed_cohomogeneity

    def test_rejects_zero_samples(self):
        with pytest.raises(ValueError):
            cohomogeneity(gens("P"), samples=0)

    @pytest.mark.parametrize("entry", catalog.list_entries(), ids=lambda e: e.label)
    def test_matches_claims(self, entry):
        assert cohomogeneity(entry.generators).cohomogeneity == entry.claimed_cohomogeneity


class TestEquivalence:
    def test_examples(self):
        assert orbits_equivalent(gens("P"), gens("SO(2)xP")).equivalent
        assert orbits_equivalent(gens("R+*xP"), gens("NaxP")).equivalent
        rep = orbits_equivalent(gens("P"), Subalgebra.euclid(T3, GX))
        assert not rep.equivalent and rep.first_mismatch is not None

    def test_line_vs_plane(self):
        rep = orbits_equivalent(Subalgebra.euclid(T1, T2), Subalgebra.euclid(GX, T3))
        assert not rep.equivalent

    def test_cross_model(self):
        with pytest.raises(ModelMismatch):
            orbits_equivalent(gens("P"), gens("SO(4)"))


class TestClouds:
    def test_sphere_radius(self):
        cloud = orbit_cloud(gens("SO(3)"), [1.0, 0, 0], steps=100)
        assert np.abs(np.linalg.norm(cloud.points, axis=1) - 1).max() <= 1e-8

    def test_cylinder(self):
        cloud = orbit_cloud(gens("SO(2)xL"), [1.0, 0, 0])
        r = np.hypot(cloud.points[:, 0], cloud.points[:, 1])
        assert np.abs(r - 1).max() <= 1e-8

    def test_half_plane(self):
        cloud = orbit_cloud(gens("R+*xL"), [1.0, 0, 0])
        assert np.abs(cloud.points[:, 1]).max() <= 1e-8 and cloud.points[:, 0].min() > 0

    def test_seed_reproducible(self):
        a = orbit_cloud(gens("SO(3)"), [0, 2.0, 0], seed=3).points
        b = orbit_cloud(gens("SO(3)"), [0, 2.0, 0], seed=3).points
        assert np.array_equal(a, b)

    def test_points_stay_in_stratum(self):
        g = gens("NaxP")
        cloud = orbit_cloud(g, [0.5, 0.5, 0.0])
        assert cloud.meta["orbit_dim"] == 2
        assert np.abs(cloud.points[:, 2]).max() <= 1e-12

    def test_sphere_cloud_points_are_normalized(self):
        cloud = orbit_cloud(gens("SO0(1,2)"), [1.0, 0, 0, 0.6, 0.8])
        assert np.allclose(cloud.points[:, 0], 1)
        assert np.allclose(np.linalg.norm(cloud.points[:, 1:], axis=1), 1)


class TestInvariants:
    def test_so3_norm_two(self):
        rep = orbits.invariant_check("SO(3)", orbit_cloud(gens("SO(3)"), [0, 2.0, 0]))
        assert rep.reference == pytest.approx(2.0) and rep.max_deviation <= 1e-8

    def test_torus(self):
        cloud = orbit_cloud(gens("SO(2)xSO(2)"), [1.0, 0.6, 0.0, 0.0, 0.8])
        assert orbits.invariant_check("SO(2)xSO(2)", cloud).max_deviation <= 1e-8

    def test_so13_great_sphere(self):
        cloud = orbit_cloud(gens("SO0(1,3)"), [1.0, 0.6, 0.8, 0.0, 0.0])
        assert np.abs(cloud.points[:, 4]).max() <= 1e-8

    def test_so13_off_great_sphere_keeps_sign(self):
        cloud = orbit_cloud(gens("SO0(1,3)"), [1.0, 0.6, 0.0, 0.0, 0.8])
        assert orbits.invariant_check("SO0(1,3)", cloud).max_deviation == 0.0
        assert cloud.points[:, 4].min() > 0

    def test_plane_height(self):
        cloud = orbit_cloud(gens("P"), [0.3, -0.2, 1.5])
        assert orbits.invariant_check("P", cloud).max_deviation <= 1e-12

    def test_unknown(self):
        with pytest.raises(UnknownInvariant):
            orbits.invariant_check("R3", orbit_cloud(gens("R3"), [0, 0, 0.0]))
