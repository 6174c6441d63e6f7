import pytest
from hypothesis import given, settings, strategies as st

from f4lie import f4, f4star
from f4lie import octonion as oc
from f4lie import triality as tr
from f4lie.exactlin import canonicalize
from f4lie.f4star import IwasawaCoords


@pytest.fixture(scope="module")
def decomp():
    return f4star.root_decomposition()


def test_root_space_dims(decomp):
    assert decomp.dims() == (7, 8, 22, 8, 7)
    assert decomp.k0.dim == 21 and decomp.a.dim == 1
    assert decomp.n.dim == 15


def test_eigenvalues():
    x = oc.octonion([1, 0, 2, 0, 0, 0, 0, -1])
    p = oc.basis(5)
    H = f4star.H
    assert f4star.bracket_nc(H, f4star.g_alpha_elt(x)) == f4star.g_alpha_elt(x)
    assert f4star.bracket_nc(H, f4star.g_alpha_elt(x, -1)) == -1 * f4star.g_alpha_elt(x, -1)
    assert f4star.bracket_nc(H, f4star.g_2alpha_elt(p)) == 2 * f4star.g_2alpha_elt(p)
    assert f4star.bracket_nc(H, f4star.k0_elt(tr.wedge_basis(2, 6))).is_zero()


def test_g2alpha_requires_pure():
    with pytest.raises(ValueError):
        f4star.g_2alpha_elt(oc.E)


def test_iwasawa_decomposition(decomp):
    k, an = f4star.iwasawa_k(), f4star.iwasawa_an()
    assert an.dim == 16
    assert (k + an).dim == 52 and (k & an).dim == 0
    assert f4star.parabolic().dim == 37


def test_series(decomp):
    assert [S.dim for S in f4star.lower_central_series(decomp.n)] == [15, 7, 0]
    assert [S.dim for S in f4star.derived_series(f4star.iwasawa_an())] == [16, 15, 7, 0]
    assert f4star.is_nilpotent(decomp.n)
    assert f4star.is_solvable(f4star.iwasawa_an())
    assert not f4star.is_nilpotent(f4star.iwasawa_an())


def test_series_rejects_non_subalgebra():
    with pytest.raises(f4star.NotSubalgebraError):
        f4star.lower_central_series(f4.P_SUBSPACE)


def test_cartan_involution_is_automorphism():
    basis = f4.f4_basis()
    th = f4star.cartan_involution
    for i, j in [(0, 40), (36, 44), (30, 50), (37, 38)]:
        assert th(f4star.bracket_nc(basis[i], basis[j])) == \
            f4star.bracket_nc(th(basis[i]), th(basis[j]))


def test_killing_is_theta_form_multiple():
    NC = f4.f4star_algebra()
    for i in (0, 30, 40, 51):
        b = f4.F4Elt.basis(i)
        assert NC.killing(b.to_vector(), b.to_vector()) == -9 * f4star.theta_form(b, b)


def test_iwasawa_coords_validation():
    with pytest.raises(ValueError):
        IwasawaCoords(A=tr.wedge_basis(0, 1))
    with pytest.raises(ValueError):
        IwasawaCoords(p=oc.E)
    assert len(f4star.iwasawa_basis()) == 37


def test_iota_image_is_parabolic():
    images = [f4star.iota(c).to_vector() for c in f4star.iwasawa_basis()]
    assert canonicalize(images, ambient_dim=52) == f4star.parabolic()


coord = st.fractions(min_value=-2, max_value=2, max_denominator=2)
so7 = st.lists(coord, min_size=21, max_size=21).map(
    lambda c: sum((v * A for v, A in zip(c, f4star.SO7_BASIS)), tr.zero_matrix()))
octs = st.lists(coord, min_size=8, max_size=8).map(oc.octonion)
pures = octs.map(oc.pu)
coords = st.builds(IwasawaCoords, so7, coord, octs, pures)


@settings(max_examples=20)
@given(coords, coords)
def test_an_bracket_matches_iota(c1, c2):
    lhs = f4star.iota(f4star.an_bracket(c1, c2))
    assert lhs == f4star.bracket_nc(f4star.iota(c1), f4star.iota(c2))
