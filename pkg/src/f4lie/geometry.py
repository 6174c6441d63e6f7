"""Lie triple systems in p* and the totally geodesic subspaces of OH^2.

``p*`` is the subspace ``{0} x {0} x O x O`` of f4*; a pair ``(y, z)`` of
octonions stands for ``(0, 0, y, z)``.  All computations go through the
structure-constant tables of :mod:`f4lie.f4`.
"""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from . import triality as tr
from .exactlin import Echelon, Subspace, canonicalize, dot, kernel
from .f4 import DIM, F4Elt, K_SUBSPACE, P_SUBSPACE, algebra as _algebra, inner_vec

Y0, Z0 = 36, 44  # first coordinate of the y and z octonion slots


@dataclass(frozen=True, eq=False)
class PStarVector:
    """Shorthand (y, z) for the element (0, 0, y, z) of p*."""

    y: object
    z: object

    def element(self):
        return F4Elt(y=self.y, z=self.z)

    def to_vector(self):
        return self.element().to_vector()


class TotallyGeodesicLabel(Enum):
    H1 = "H1"
    H2 = "H2"
    H3 = "H3"
    H4 = "H4"
    H5 = "H5"
    H6 = "H6"
    H7 = "H7"
    H8 = "H8"
    RH2 = "RH2"
    CH2 = "CH2"
    HH2 = "HH2"
    FULL = "FULL"
    UNCLASSIFIED = "unclassified"

    @classmethod
    def hyperbolic(cls, m):
        return cls(f"H{m}")


TG = TotallyGeodesicLabel
PROP_LABELS = tuple(lab for lab in TG if lab is not TG.UNCLASSIFIED)


def _resolve(alg):
    if alg is None or alg == "noncompact":
        return _algebra("f4star")
    if alg == "compact":
        return _algebra("f4")
    if isinstance(alg, str):
        return _algebra(alg)
    return alg


def _vec(v):
    return v.to_vector() if hasattr(v, "to_vector") else tuple(v)


def pstar_span(pairs):
    """Subspace of f4* spanned by (y, z) pairs given as octonion basis indices.

    ``("y", i)`` means (e_i, 0) and ``("z", i)`` means (0, e_i).
    """
    return Subspace.coordinate(DIM, [(Y0 if s == "y" else Z0) + i for s, i in pairs])


def lie_triple_witness(L, alg=None):
    """None if [[L, L], L] is contained in L, else a failing basis triple."""
    alg = _resolve(alg)
    if not L <= P_SUBSPACE:
        raise ValueError("a Lie triple system must lie in p*")
    for a, b in combinations(L.basis, 2):
        ab = alg.bracket(a, b)
        if not any(ab):
            continue
        for c in L.basis:
            if alg.bracket(ab, c) not in L:
                return a, b, c
    return None


def is_lie_triple(L, alg=None):
    return lie_triple_witness(L, alg) is None


def generated_subalgebra(S, alg=None):
    """Smallest bracket-closed subspace containing S."""
    alg = _resolve(alg)
    ech = Echelon(alg.dim)
    found = []
    for v in S.basis:
        if ech.add(v):
            found.append(v)
    i = 0
    while i < len(found):
        v = found[i]
        for w in found[:i]:
            u = alg.bracket(v, w)
            if any(u) and ech.add(u):
                found.append(u)
        i += 1
    return ech.subspace()


def _euclid_gram_det(X, Y):
    xx = dot(X[Y0:], X[Y0:])
    yy = dot(Y[Y0:], Y[Y0:])
    xy = dot(X[Y0:], Y[Y0:])
    return xx * yy - xy * xy


def sectional_curvature(X, Y, alg="compact"):
    """Sectional curvature of the plane spanned by X, Y in p*.

    Equals <[X, Y], [X, Y]> when X and Y are orthonormal in the octonion
    coordinates; other independent pairs are normalized by their Gram
    determinant.  The non-compact value is the negative of the compact one.
    """
    X, Y = _vec(X), _vec(Y)
    for v in (X, Y):
        if any(v[:Y0]):
            raise ValueError("curvature arguments must lie in p*")
    det = _euclid_gram_det(X, Y)
    if det == 0:
        raise ValueError("curvature of a degenerate plane")
    b = _resolve("compact").bracket(X, Y)
    k = inner_vec(b, b) / det
    if alg in ("noncompact", "f4star"):
        return -k
    return k


def orthogonal_basis(L):
    """Rational Gram-Schmidt of L's basis for the Euclidean product on p*."""
    out = []
    for v in L.basis:
        w = list(v)
        for u in out:
            c = dot(w, u) / dot(u, u)
            w = [a - c * b for a, b in zip(w, u)]
        out.append(tuple(w))
    return out


def curvature_spectrum(L):
    basis = orthogonal_basis(L)
    return frozenset(sectional_curvature(a, b) for a, b in combinations(basis, 2))


_H_BASIS = (0, 1, 2, 3)
_C_BASIS = (0, 1)


def std_triple(label):
    label = TG(label)
    if label is TG.UNCLASSIFIED:
        raise ValueError("no standard representative for an unclassified label")
    if label is TG.RH2:
        return pstar_span([("y", 0), ("z", 0)])
    if label is TG.CH2:
        return pstar_span([(s, i) for s in "yz" for i in _C_BASIS])
    if label is TG.HH2:
        return pstar_span([(s, i) for s in "yz" for i in _H_BASIS])
    if label is TG.FULL:
        return P_SUBSPACE
    m = int(label.value[1:])
    return pstar_span([("y", i) for i in range(m)])


@lru_cache(maxsize=None)
def _signature_table():
    alg = _resolve("noncompact")
    table = {}
    for label in PROP_LABELS:
        L = std_triple(label)
        if not is_lie_triple(L, alg):
            raise ArithmeticError(f"standard representative of {label.value} is not a Lie triple system")
        key = (L.dim, generated_subalgebra(L, alg).dim)
        table.setdefault(key, []).append((label, curvature_spectrum(L)))
    return table


def signature(L, alg=None):
    return L.dim, generated_subalgebra(L, _resolve(alg)).dim


def classify_triple_system(L):
    """Label a Lie triple system by (dim L, dim generated algebra), then curvature."""
    alg = _resolve("noncompact")
    if not is_lie_triple(L, alg):
        raise ValueError("not a Lie triple system")
    candidates = _signature_table().get(signature(L, alg), [])
    if len(candidates) == 1:
        return candidates[0][0]
    if candidates:
        spectrum = curvature_spectrum(L)
        matches = [lab for lab, s in candidates if s == spectrum]
        if len(matches) == 1:
            return matches[0]
    return TG.UNCLASSIFIED


def a_slot_span(matrices):
    """Subspace of f4* spanned by (A, 0, 0, 0) for the given skew matrices."""
    return canonicalize([F4Elt(A=A).to_vector() for A in matrices], ambient_dim=DIM)


def so4_matrices():
    return [tr.wedge_basis(i, j) for i, j in tr.WEDGE_PAIRS if j < 4]


def sp13():
    """so(4) + lambda(so(4)) + lambda^2(so(4)), a 9-dimensional subalgebra of so(8)."""
    so4 = so4_matrices()
    return a_slot_span(so4 + [tr.lam(A) for A in so4] + [tr.lam2(A) for A in so4])


def sp14():
    """Block-diagonal so(4) + so(4)."""
    return a_slot_span([tr.wedge_basis(i, j) for i, j in tr.WEDGE_PAIRS
                        if j < 4 or i >= 4])


def quaternion_slots():
    """H x H x H inside the three octonion factors."""
    return Subspace.coordinate(DIM, [base + i for base in (28, Y0, Z0) for i in _H_BASIS])


def sp12_algebra():
    """sp(1)^3 x H x H x H, isomorphic to sp(1, 2)."""
    return sp13() + quaternion_slots()


def _solve_in(ambient, rows):
    """Vectors sum c_j a_j of ambient whose coefficients satisfy rows . c = 0."""
    coeffs = kernel(rows, ambient.dim)
    vecs = [[sum((c * a[k] for c, a in zip(row, ambient.basis) if c), Fraction(0))
             for k in range(DIM)] for row in coeffs.basis]
    return canonicalize(vecs, ambient_dim=DIM)


def centralizer_in(S, ambient, alg=None):
    """{X in ambient : [X, s] = 0 for all s in S}."""
    alg = _resolve(alg)
    rows = []
    for s in S.basis:
        images = [alg.bracket(a, s) for a in ambient.basis]
        rows += [[im[k] for im in images] for k in range(DIM)]
    return _solve_in(ambient, rows)


def normalizer_in(S, ambient, alg=None):
    """{X in ambient : [X, S] is contained in S}."""
    alg = _resolve(alg)
    # [X, s] lies in S iff it is orthogonal to the dot-product complement of S
    perp = kernel(S.basis, DIM).basis if S.dim else ()
    rows = []
    for s in S.basis:
        images = [alg.bracket(a, s) for a in ambient.basis]
        rows += [[dot(p, im) for im in images] for p in perp]
    return _solve_in(ambient, rows)


def normalizer_of_tg(L, alg=None):
    """Lie algebra of N(P): generated subalgebra of L plus the part of k preserving L."""
    alg = _resolve(alg)
    return generated_subalgebra(L, alg) + normalizer_in(L, K_SUBSPACE, alg)


TABLE1_ROWS = (
    # label, dim Z(P)_0, dim N(P)_0
    ("pt", 36, 36),
    ("RH2", 14, 17),
    ("CH2", 8, 16),
    ("HH2", 3, 24),
    ("H1", 21, 22),
    ("H2", 15, 18),
    ("H3", 10, 16),
    ("H4", 6, 16),
    ("H5", 3, 18),
    ("H6", 1, 22),
    ("H7", 0, 28),
    ("H8", 0, 36),
)


def table1_subspace(row):
    return Subspace.zero(DIM) if row == "pt" else std_triple(row)


def table1_dims(row, alg=None):
    """(dim of centralizer of L in k, dim of the normalizer algebra of P)."""
    L = table1_subspace(row)
    return centralizer_in(L, K_SUBSPACE, alg).dim, normalizer_of_tg(L, alg).dim

