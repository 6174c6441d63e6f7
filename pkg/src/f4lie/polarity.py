"""Section orthogonality for subalgebras of f4* and the worked examples.

Polarity of an action with section Sigma through o needs two things: the
slice representation at o must have T_o Sigma as a section, and
``<h, [T_o Sigma, T_o Sigma]> = 0``.  Only the second condition is decided
here; it is purely Lie-algebraic.  The first needs isotropy orbits and is
always reported as not evaluated.

Singular orbits of polar actions with a CH^2 or HH^2 section do not occur,
but that is an orbit-level fact and is not checked here.
"""
from dataclasses import dataclass
from fractions import Fraction

from . import octonion as oc
from .exactlin import Subspace, canonicalize
from .f4 import DIM, F4Elt, P_SUBSPACE, inner, inner_vec
from .f4star import (NotSubalgebraError, g_2alpha_elt, g_alpha_elt, k0_elt,
                     root_decomposition, SO7_BASIS, PURE_BASIS, OCT_BASIS)
from .geometry import _resolve, normalizer_in

SLICE_NOT_EVALUATED = "not evaluated"


@dataclass(frozen=True)
class PolarityReport:
    h: Subspace
    sigma: Subspace
    sigma_brackets: Subspace
    orthogonality_holds: bool
    witness: tuple = None  # (X, Y, h element, <[X, Y], h element>)
    slice_condition: str = SLICE_NOT_EVALUATED


def section_orthogonality(h, sigma, alg=None):
    alg = _resolve(alg)
    if not sigma <= P_SUBSPACE:
        raise ValueError("sigma must lie in p*")
    pair = alg.is_subalgebra(h)
    if pair is not None:
        raise NotSubalgebraError(pair)
    witness = None
    for i, X in enumerate(sigma.basis):
        for Y in sigma.basis[i + 1:]:
            b = alg.bracket(X, Y)
            for k in h.basis:
                value = inner_vec(b, k)
                if value:
                    witness = (X, Y, k, value)
                    break
            if witness:
                break
        if witness:
            break
    return PolarityReport(h=h, sigma=sigma, sigma_brackets=alg.bracket_span(sigma, sigma),
                          orthogonality_holds=witness is None, witness=witness)


def _span(elts):
    return canonicalize([e.to_vector() for e in elts], ambient_dim=DIM)


def h8_witness_elements():
    """(L_e1, 0, 0, 0) from [T Sigma, T Sigma] and (R_e1, 0, e1, 0) from z."""
    e1 = oc.basis(1)
    return F4Elt(A=oc.lmat(e1)), g_2alpha_elt(e1)


def h8_witness_pairing():
    """<(L_e1, 0, 0, 0), (R_e1, 0, e1, 0)> under the invariant scalar product."""
    return inner(*h8_witness_elements())


def nonpolar_witness_h8():
    """tr(L_e1 R_e1) = 4.

    The scalar product of the two witness elements is ``-tr(L_e1 R_e1)``;
    either way it is nonzero, so any subgroup of Spin(1, 8) containing Z with
    orbit H^8 and a section through (0, e1) fails section orthogonality.
    """
    L, Z = h8_witness_elements()
    return Fraction(sum((L.A @ Z.A)[i, i] for i in range(8)))


def v_subspace(keep):
    """Coordinate subspace of v = g_alpha spanned by (0, -conj(e_i), 0, e_i), i in keep."""
    return _span([g_alpha_elt(OCT_BASIS[i]) for i in keep])


def codim_subspace(d):
    """Codimension-d coordinate subspace of v, dropping the last d octonion coordinates."""
    if not 0 <= d <= 8:
        raise ValueError("codimension must be between 0 and 8")
    return v_subspace(range(8 - d))


def k0_subspace():
    return _span([k0_elt(X) for X in SO7_BASIS])


def z_subspace():
    return _span([g_2alpha_elt(p) for p in PURE_BASIS])


def normalizer_nk0(m, alg=None):
    """{X in k_0 : [X, m] is contained in m}."""
    d = root_decomposition()
    if not m <= d.g_a:
        raise ValueError("m must lie in g_alpha")
    return normalizer_in(m, d.k0, alg)


def coh2nilp_h():
    """m' + z with m' = {(0, x, 0, x) : x pure}."""
    return _span([F4Elt(x=p, z=p) for p in PURE_BASIS]) + z_subspace()


def example_subalgebras():
    d = root_decomposition()
    out = {
        "horo": d.n,
        "coh1A": d.a + codim_subspace(1) + d.g_2a,
        "coh2nilp": coh2nilp_h(),
    }
    alg = _resolve(None)
    for name, S in out.items():
        pair = alg.is_subalgebra(S)
        if pair is not None:
            raise NotSubalgebraError(pair)
    return out


def coh2nilp_section():
    return _span([F4Elt(y=oc.E), F4Elt(z=oc.E)])


def coh2nilp_report():
    return section_orthogonality(coh2nilp_h(), coh2nilp_section())


def full_algebra():
    return Subspace.full(DIM)
