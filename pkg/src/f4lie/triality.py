"""so(8), the wedge basis and the triality automorphisms pi, kappa, lambda.

Skew matrices are 8x8 numpy object arrays.  The 28 coordinates of a skew
matrix ``A`` are ``A[i, j]`` for ``i < j`` in lexicographic order, i.e. the
coefficients of ``A`` in the basis ``e_i ^ e_j``.  This order is frozen: the
structure constants and the JSON export depend on it.
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import numpy as np

from . import octonion as oc

WEDGE_PAIRS = tuple(combinations(range(8), 2))
WEDGE_INDEX = {p: n for n, p in enumerate(WEDGE_PAIRS)}


def zero_matrix(n=8):
    return np.full((n, n), Fraction(0), dtype=object)


def identity(n=8):
    m = zero_matrix(n)
    for i in range(n):
        m[i, i] = Fraction(1)
    return m


def is_skew(A):
    return A.shape == (8, 8) and not np.any(A + A.T)


def _require_skew(A):
    if not is_skew(A):
        raise ValueError("expected a skew-symmetric 8x8 matrix")


def wedge(x, y):
    return np.outer(x, y) - np.outer(y, x)


def wedge_basis(i, j):
    return wedge(oc.basis(i), oc.basis(j))


def skew_to_coords(A):
    return np.array([A[i, j] for i, j in WEDGE_PAIRS], dtype=object)


def coords_to_skew(c):
    A = zero_matrix()
    for (i, j), v in zip(WEDGE_PAIRS, c):
        A[i, j] = v
        A[j, i] = -v
    return A


def matmul(A, B):
    """Matrix product that skips zero entries; the matrices here are sparse."""
    out = np.full((A.shape[0], B.shape[1]), Fraction(0), dtype=object)
    rows_b = [[(j, c) for j, c in enumerate(row) if c] for row in B]
    for i, row in enumerate(A):
        for k, a in enumerate(row):
            if a:
                for j, c in rows_b[k]:
                    out[i, j] += a * c
    return out


def bracket(A, B):
    return matmul(A, B) - matmul(B, A)


def _matrix_of(f):
    cols = [skew_to_coords(f(*p)) for p in WEDGE_PAIRS]
    return np.array(cols, dtype=object).T


def _pi_on_basis(i, j):
    if i == 0:
        # e0 ^ ej = -(ej ^ e0) keeps the first slot pure
        return -oc.lmat(oc.basis(0)) @ oc.lmat(oc.basis(j)) / 2
    return oc.lmat(oc.basis(j)) @ oc.lmat(oc.basis(i)) / 2


_GAMMA = np.diag(np.array([Fraction(1)] + [Fraction(-1)] * 7, dtype=object))


def _kappa_on_basis(i, j):
    return _GAMMA @ wedge_basis(i, j) @ _GAMMA


PI = _matrix_of(_pi_on_basis)
KAPPA = _matrix_of(_kappa_on_basis)
LAMBDA = PI @ KAPPA
LAMBDA2 = LAMBDA @ LAMBDA
for _m in (PI, KAPPA, LAMBDA, LAMBDA2):
    _m.flags.writeable = False

AUTOMORPHISMS = {"pi": PI, "kappa": KAPPA, "lambda": LAMBDA, "lambda2": LAMBDA2}


def apply(matrix, A):
    """Apply a 28x28 automorphism matrix to a skew matrix."""
    _require_skew(A)
    c = skew_to_coords(A)
    out = np.full(28, Fraction(0), dtype=object)
    for n in np.flatnonzero(c):
        out += c[n] * matrix[:, n]
    return coords_to_skew(out)


def pi(A):
    return apply(PI, A)


def kappa(A):
    return apply(KAPPA, A)


def lam(A):
    return apply(LAMBDA, A)


def lam2(A):
    return apply(LAMBDA2, A)


def infinitesimal_triality_defect(A, x, y):
    """kappa(lambda^2(A))(xy) - x lambda(A)(y) - A(x) y, which vanishes identically."""
    _require_skew(A)
    return (kappa(lam2(A)) @ oc.mul(x, y)
            - oc.mul(x, lam(A) @ y)
            - oc.mul(A @ x, y))


@dataclass(frozen=True, eq=False)
class So9Elt:
    """An element (A, x) of so(8) x R^8."""

    A: np.ndarray
    x: np.ndarray

    def __eq__(self, other):
        return (np.array_equal(self.A, other.A)
                and np.array_equal(self.x, other.x))


def so9_embed(v):
    m = zero_matrix(9)
    m[:8, :8] = v.A
    m[:8, 8] = 2 * v.x
    m[8, :8] = -2 * v.x
    return m


def so9_bracket(v, w):
    return So9Elt(bracket(v.A, w.A) - 4 * wedge(v.x, w.x), v.A @ w.x - w.A @ v.x)


def so9_basis():
    """The 36 basis elements: 28 wedges e_i ^ e_j, then (0, e_k)."""
    out = [So9Elt(wedge_basis(i, j), oc.zero()) for i, j in WEDGE_PAIRS]
    out += [So9Elt(zero_matrix(), oc.basis(k)) for k in range(8)]
    return out


def so7_subspace_pairs():
    """Wedge indices spanning so(7) = span{e_i ^ e_j : 1 <= i < j <= 7}."""
    return [n for n, (i, j) in enumerate(WEDGE_PAIRS) if i >= 1]


def so4_subspace_pairs():
    """Wedge indices spanning the upper-left 4x4 block so(4)."""
    return [n for n, (i, j) in enumerate(WEDGE_PAIRS) if j < 4]
