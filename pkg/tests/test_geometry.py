import pytest

from f4lie import f4, f4star, geometry
from f4lie import octonion as oc
from f4lie.exactlin import Subspace
from f4lie.geometry import TG, PStarVector


def test_std_triples_are_lie_triple_systems():
    for label in geometry.PROP_LABELS:
        assert geometry.is_lie_triple(geometry.std_triple(label)), label


def test_non_triple_has_witness():
    # y in H and z in C: unequal dimensions
    L = geometry.pstar_span([("y", i) for i in range(4)] + [("z", 0), ("z", 1)])
    assert geometry.lie_triple_witness(L) is not None
    with pytest.raises(ValueError):
        geometry.is_lie_triple(f4.K_SUBSPACE)


@pytest.mark.parametrize("m", range(1, 9))
def test_generated_dims_hyperbolic(m):
    L = geometry.std_triple(TG.hyperbolic(m))
    assert geometry.generated_subalgebra(L).dim == m * (m + 1) // 2


def test_signatures():
    assert geometry.signature(geometry.std_triple(TG.RH2)) == (2, 3)
    assert geometry.signature(geometry.std_triple(TG.CH2)) == (4, 8)
    assert geometry.signature(geometry.std_triple(TG.HH2)) == (8, 21)
    assert geometry.signature(geometry.std_triple(TG.FULL)) == (16, 52)


def test_curvature_values():
    e, e1, z = oc.E, oc.basis(1), oc.zero()
    assert geometry.sectional_curvature(PStarVector(e, z), PStarVector(z, e)) == 8
    assert geometry.sectional_curvature(PStarVector(e, z), PStarVector(e1, z)) == 32
    assert geometry.sectional_curvature(PStarVector(e, z), PStarVector(z, e),
                                        alg="noncompact") == -8
    # rescaling the plane does not change the curvature
    assert geometry.sectional_curvature(PStarVector(3 * e, z), PStarVector(e + e1, z)) == 32


def test_curvature_rejects_bad_input():
    with pytest.raises(ValueError):
        geometry.sectional_curvature(PStarVector(oc.E, oc.zero()), PStarVector(oc.E, oc.zero()))
    with pytest.raises(ValueError):
        geometry.sectional_curvature(f4.F4Elt.basis(0), PStarVector(oc.E, oc.zero()))


def test_curvature_spectra():
    assert geometry.curvature_spectrum(geometry.std_triple(TG.RH2)) == {8}
    assert geometry.curvature_spectrum(geometry.std_triple(TG.H2)) == {32}
    assert geometry.curvature_spectrum(geometry.std_triple(TG.CH2)) == {8, 32}


def test_classification_of_standard_and_rotated():
    for label in geometry.PROP_LABELS:
        assert geometry.classify_triple_system(geometry.std_triple(label)) is label
    # a plane inside y = O other than the standard one
    L = geometry.pstar_span([("y", 3), ("y", 6)])
    assert geometry.classify_triple_system(L) is TG.H2
    # the mixed plane (e1, 0), (0, e1) is again a RH2
    assert geometry.classify_triple_system(geometry.pstar_span([("y", 1), ("z", 1)])) is TG.RH2


def test_classification_rejects_non_triple():
    L = geometry.pstar_span([("y", 0), ("y", 1), ("z", 0)])
    with pytest.raises(ValueError):
        geometry.classify_triple_system(L)


def test_sp_subalgebras():
    NC = f4.f4star_algebra()
    s13, s14, s12 = geometry.sp13(), geometry.sp14(), geometry.sp12_algebra()
    assert (s13.dim, s14.dim, s12.dim) == (9, 12, 21)
    assert s13 <= s14
    for S in (s13, s14, s12):
        assert NC.is_subalgebra(S) is None
    assert NC.bracket_span(s13, s12) <= s12
    c = geometry.centralizer_in(s13, s14)
    assert c.dim == 3
    assert NC.bracket_span(c, s12).dim == 0
    assert geometry.generated_subalgebra(geometry.std_triple(TG.HH2)) == s12


@pytest.mark.parametrize("row,z,n", geometry.TABLE1_ROWS[:5])
def test_table1_rows(row, z, n):
    assert geometry.table1_dims(row) == (z, n)


def test_normalizer_of_a():
    d = f4star.root_decomposition()
    assert geometry.normalizer_in(d.a, Subspace.full(52)) == d.g_0


def test_centralizer_of_zero_is_everything():
    assert geometry.centralizer_in(Subspace.zero(52), f4.K_SUBSPACE) == f4.K_SUBSPACE


def test_unclassified_has_no_representative():
    with pytest.raises(ValueError):
        geometry.std_triple(TG.UNCLASSIFIED)
