"""The non-compact form f4*: Cartan involution, restricted roots, Iwasawa data.

The maximal abelian subspace is spanned by ``H = (0, 0, e, 0)`` and the root
``alpha`` is normalized by ``alpha(H) = 1``.  The root spaces are

    g_{+-alpha}  = {(0, -+conj(x), 0, x) : x in O}
    g_{+-2alpha} = {(+-R_p, 0, p, 0) : p in Pu(O)}
    g_0          = k_0 + a,  k_0 = {(lambda^2(X), 0, 0, 0) : X in so(7)}
"""
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import octonion as oc
from . import triality as tr
from .exactlin import Subspace, canonicalize
from .f4 import DIM, F4Elt, K_SUBSPACE, P_SUBSPACE, bracket, f4star_algebra, inner


class RootDecompositionError(ArithmeticError):
    pass


class NotSubalgebraError(ValueError):
    def __init__(self, witness):
        super().__init__(f"not closed under the bracket: witness pair {witness}")
        self.witness = witness


def bracket_nc(p, q):
    return bracket(p, q, -1)


def cartan_involution(p):
    return F4Elt(p.A, p.x, -p.y, -p.z)


H = F4Elt(y=oc.E)

SO7_BASIS = [tr.wedge_basis(i, j) for i, j in tr.WEDGE_PAIRS if i >= 1]
PURE_BASIS = [oc.basis(i) for i in range(1, 8)]
OCT_BASIS = [oc.basis(i) for i in range(8)]


def g_alpha_elt(x, sign=1):
    """Element of g_{sign*alpha} with octonion parameter x."""
    return F4Elt(x=-sign * oc.conj(x), z=x)


def g_2alpha_elt(p, sign=1):
    if p[0]:
        raise ValueError("g_2alpha is parametrized by pure octonions")
    return F4Elt(A=sign * oc.rmat(p), y=p)


def k0_elt(X):
    return F4Elt(A=tr.lam2(X))


def _span(elts):
    return canonicalize([e.to_vector() for e in elts], ambient_dim=DIM)


@dataclass(frozen=True)
class RootSpaceDecomp:
    g_m2a: Subspace
    g_ma: Subspace
    g_0: Subspace
    g_a: Subspace
    g_2a: Subspace
    k0: Subspace
    a: Subspace

    def dims(self):
        return tuple(S.dim for S in (self.g_m2a, self.g_ma, self.g_0, self.g_a, self.g_2a))

    def by_root(self):
        return {-2: self.g_m2a, -1: self.g_ma, 0: self.g_0, 1: self.g_a, 2: self.g_2a}

    @property
    def n(self):
        return self.g_a + self.g_2a


def _check_eigen(elts, eigenvalue):
    for xi in elts:
        if bracket_nc(H, xi) != eigenvalue * xi:
            raise RootDecompositionError(
                f"[H, xi] != {eigenvalue} xi for xi = {xi.to_vector()}")


def root_decomposition():
    """Build the five root spaces and check [H, xi] = beta(H) xi on their bases."""
    gen = {
        -2: [g_2alpha_elt(p, -1) for p in PURE_BASIS],
        -1: [g_alpha_elt(x, -1) for x in OCT_BASIS],
        1: [g_alpha_elt(x, 1) for x in OCT_BASIS],
        2: [g_2alpha_elt(p, 1) for p in PURE_BASIS],
    }
    k0 = [k0_elt(X) for X in SO7_BASIS]
    for beta, elts in gen.items():
        _check_eigen(elts, beta)
    _check_eigen(k0 + [H], 0)
    k0_space = _span(k0)
    a_space = _span([H])
    return RootSpaceDecomp(
        g_m2a=_span(gen[-2]), g_ma=_span(gen[-1]), g_0=k0_space + a_space,
        g_a=_span(gen[1]), g_2a=_span(gen[2]), k0=k0_space, a=a_space)


def iwasawa_k():
    return K_SUBSPACE


def iwasawa_an():
    d = root_decomposition()
    return d.a + d.n


def parabolic():
    d = root_decomposition()
    return d.k0 + d.a + d.n


@dataclass(frozen=True, eq=False)
class IwasawaCoords:
    """(A, s, x, p) in so(7) x R x O x Pu(O), coordinates on k_0 + a + n."""

    A: np.ndarray = field(default_factory=tr.zero_matrix)
    s: Fraction = Fraction(0)
    x: np.ndarray = field(default_factory=oc.zero)
    p: np.ndarray = field(default_factory=oc.zero)

    def __post_init__(self):
        if not tr.is_skew(self.A):
            raise ValueError("A must be skew-symmetric")
        if np.any(self.A[0, :]):
            raise ValueError("A must lie in so(7): row and column 0 vanish")
        if self.p[0]:
            raise ValueError("p must be a pure octonion")
        object.__setattr__(self, "s", Fraction(self.s))

    def __eq__(self, other):
        return (np.array_equal(self.A, other.A) and self.s == other.s
                and np.array_equal(self.x, other.x) and np.array_equal(self.p, other.p))

    def __repr__(self):
        return (f"IwasawaCoords(A={tr.skew_to_coords(self.A).tolist()}, s={self.s}, "
                f"x={self.x.tolist()}, p={self.p.tolist()})")


def iwasawa_basis():
    """37 coordinate basis elements: so(7), then a, then v = O, then z = Pu(O)."""
    out = [IwasawaCoords(A=X) for X in SO7_BASIS]
    out.append(IwasawaCoords(s=1))
    out += [IwasawaCoords(x=x) for x in OCT_BASIS]
    out += [IwasawaCoords(p=p) for p in PURE_BASIS]
    return out


def iota(c):
    """(A, s, x, p) -> (lambda^2(A) + R_p, -conj(x), s e + p, x)."""
    return F4Elt(tr.lam2(c.A) + oc.rmat(c.p), -oc.conj(c.x), c.s * oc.E + c.p, c.x)


def an_bracket(c1, c2):
    A, s, x, p = c1.A, c1.s, c1.x, c1.p
    B, t, y, q = c2.A, c2.s, c2.x, c2.p
    z = tr.lam(A) @ y - tr.lam(B) @ x + s * y - t * x
    r = (A @ q - B @ p + 2 * s * q - 2 * t * p
         + oc.mul(x, oc.conj(y)) - oc.mul(y, oc.conj(x)))
    return IwasawaCoords(A=tr.bracket(A, B), s=0, x=z, p=r)


def _require_subalgebra(S, alg):
    witness = alg.is_subalgebra(S)
    if witness is not None:
        raise NotSubalgebraError(witness)


def lower_central_series(S, alg=None):
    """S, [S, S], [S, [S, S]], ... until the terms stop changing."""
    alg = alg or f4star_algebra()
    _require_subalgebra(S, alg)
    series = [S]
    while True:
        nxt = alg.bracket_span(S, series[-1])
        if nxt == series[-1]:
            return series
        series.append(nxt)
        if nxt.dim == 0:
            return series


def derived_series(S, alg=None):
    alg = alg or f4star_algebra()
    _require_subalgebra(S, alg)
    series = [S]
    while True:
        nxt = alg.bracket_span(series[-1], series[-1])
        if nxt == series[-1]:
            return series
        series.append(nxt)
        if nxt.dim == 0:
            return series


def theta_form(p, q):
    """<p, cartan_involution(q)>, a multiple of the Killing form of f4*."""
    return inner(p, cartan_involution(q))


def is_nilpotent(S, alg=None):
    return lower_central_series(S, alg)[-1].dim == 0


def is_solvable(S, alg=None):
    return derived_series(S, alg)[-1].dim == 0



P_STAR = P_SUBSPACE
