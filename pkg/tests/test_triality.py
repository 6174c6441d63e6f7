from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from f4lie import octonion as oc
from f4lie import triality as tr

coord = st.fractions(min_value=-2, max_value=2, max_denominator=2)
skews = st.lists(coord, min_size=28, max_size=28).map(tr.coords_to_skew)
octs = st.lists(coord, min_size=8, max_size=8).map(oc.octonion)


def test_wedge_coordinates():
    assert tr.WEDGE_PAIRS[0] == (0, 1) and tr.WEDGE_PAIRS[-1] == (6, 7)
    A = tr.wedge_basis(2, 5)
    c = tr.skew_to_coords(A)
    assert c[tr.WEDGE_INDEX[2, 5]] == 1 and sum(abs(v) for v in c) == 1
    assert np.array_equal(tr.coords_to_skew(c), A)


def test_group_relations():
    I = tr.identity(28)
    assert np.array_equal(tr.PI @ tr.PI, I)
    assert np.array_equal(tr.KAPPA @ tr.KAPPA, I)
    assert np.array_equal(tr.LAMBDA @ tr.LAMBDA @ tr.LAMBDA, I)
    assert np.array_equal(tr.KAPPA @ tr.LAMBDA2, tr.PI)
    assert np.array_equal(tr.LAMBDA @ tr.KAPPA, tr.PI)
    assert not np.array_equal(tr.LAMBDA, I)


def test_pi_on_a_wedge():
    e1, e2 = oc.basis(1), oc.basis(2)
    expected = oc.lmat(e2) @ oc.lmat(e1) / 2
    assert np.array_equal(tr.pi(tr.wedge(e1, e2)), expected)


def test_lambda_formula_for_orthogonal_pairs():
    e3, e6 = oc.basis(3), oc.basis(6)
    rhs = oc.lmat(oc.conj(e6)) @ oc.lmat(oc.conj(e3)) / 2
    assert np.array_equal(tr.lam(tr.wedge(e3, e6)), rhs)


def test_lambda_fixes_nothing_obvious():
    # lambda(e0 ^ e1) is a combination of wedges, not a multiple of e0 ^ e1
    c = tr.skew_to_coords(tr.lam(tr.wedge_basis(0, 1)))
    assert sum(1 for v in c if v) == 4


def test_apply_rejects_wrong_shape():
    with pytest.raises(ValueError):
        tr.pi(np.eye(8, dtype=object) * Fraction(1))


@given(skews, skews)
def test_automorphisms_preserve_brackets(A, B):
    for f in (tr.pi, tr.kappa, tr.lam):
        assert np.array_equal(f(tr.bracket(A, B)), tr.bracket(f(A), f(B)))


@given(skews, octs, octs)
def test_infinitesimal_triality(A, x, y):
    assert not np.any(tr.infinitesimal_triality_defect(A, x, y))


def test_so9_basis_and_bracket():
    basis = tr.so9_basis()
    assert len(basis) == 36
    v, w = basis[28], basis[29]  # (0, e0), (0, e1)
    b = tr.so9_bracket(v, w)
    assert np.array_equal(b.A, -4 * tr.wedge_basis(0, 1))
    V, W = tr.so9_embed(v), tr.so9_embed(w)
    assert np.array_equal(tr.so9_embed(b), tr.bracket(V, W))


def test_index_helpers():
    assert len(tr.so7_subspace_pairs()) == 21
    assert len(tr.so4_subspace_pairs()) == 6
