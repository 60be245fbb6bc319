import numpy as np
import pytest

from conforbits import catalog
from conforbits.errors import MissingParameter, UnknownLabel
from conforbits.euclid import GX, GY, GZ, T3
from conforbits.linalg import subspace_distance
from conforbits.subalgebra import Model, Subalgebra, closure_check

COHOM_ONE = {"P", "SO(2)xP", "SO(2)xL", "NaxL", "R+*xL", "SO(3)", "R+*xSO(2)"}


def test_twenty_euclid_entries():
    assert len(catalog.EUCLID_LABELS) == 20 == len(set(catalog.EUCLID_LABELS))
    assert len(catalog.list_entries(Model.EUCLID)) == 20


def test_unfiltered_listing():
    entries = catalog.list_entries()
    assert len(entries) == 27
    assert [e.label for e in entries[:20]] == list(catalog.EUCLID_LABELS)


def test_cohomogeneity_filter():
    one = catalog.list_entries("euclid", cohomogeneity=1)
    assert {e.label for e in one} == COHOM_ONE
    zero = catalog.list_entries("euclid", cohomogeneity=0)
    assert len(zero) == 13


def test_lorentz_filter():
    labels = [e.label for e in catalog.list_entries("lorentz")]
    assert len(labels) == 7 and "SO0(1,2)" in labels


def test_so3_entry():
    e = catalog.get("SO(3)")
    assert e.claimed_cohomogeneity == 1 and e.compact and e.model is Model.EUCLID
    assert subspace_distance(e.generators.coords(), Subalgebra.euclid(GX, GY, GZ).coords()) <= 1e-12


def test_na_line_entry():
    e = catalog.get("N_a|L", 1.0)
    assert e.label == "NaxL" and e.claimed_cohomogeneity == 1 and e.parameter == 1.0
    assert subspace_distance(e.generators.coords(), Subalgebra.euclid(1 + GX, T3).coords()) <= 1e-12


def test_full_lorentz_entry():
    e = catalog.get("SO₀(1,4)")
    assert e.dim == 10 and e.claimed_cohomogeneity == 0


@pytest.mark.parametrize("spelling,label", [
    ("so(3)", "SO(3)"),
    ("ℝ₊*×SO(2)", "R+*xSO(2)"),
    ("SO0(1,2)", "SO0(1,2)"),
    ("SO(2)⋉𝒫", "SO(2)xP"),
    ("𝒩_a⋉ℝ³", "NaxR3"),
    ("r+*xl", "R+*xL"),
])
def test_spellings(spelling, label):
    assert catalog.canonical_label(spelling) == label


def test_errors():
    with pytest.raises(UnknownLabel):
        catalog.get("SO(5)")
    with pytest.raises(MissingParameter):
        catalog.get("NaxP")
    with pytest.raises(ValueError):
        catalog.get("NaxP", 0.0)
    with pytest.raises(ValueError):
        catalog.get("P", 2.0)


@pytest.mark.parametrize("entry", catalog.list_entries(), ids=lambda e: e.label)
def test_entries_are_closed(entry):
    assert closure_check(entry.generators).passed
    assert entry.generators.dim() == entry.dim
    assert entry.claimed_cohomogeneity in (0, 1)


def test_compactness_flags():
    compact = {e.label for e in catalog.list_entries() if e.compact}
    assert compact == {"SO(3)", "SO(3)-block", "SO(2)xSO(2)", "SO(4)"}


def test_metadata_only_notes():
    notes = catalog.list_entries(include_notes=True)[27:]
    assert len(notes) == 4 and all(n.metadata_only and n.generators is None for n in notes)


def test_positive_homotheties_spelling_variant():
    assert catalog.canonical_label("(ℝ₊×SO(2))⋉ℒ") == "(R+*xSO(2))xL"


def test_span_coords_shape():
    assert catalog.span_coords("NaxR3", 2.0).shape == (4, 7)
    assert np.allclose(catalog.span_coords("NaxR3", 2.0)[0, :2], [2, 1])
