"""The compact exceptional Lie algebra f4 = so(8) x O^3.

Elements are :class:`F4Elt` quadruples ``(A, x, y, z)``.  Their 52
coordinates are the 28 wedge coordinates of ``A`` followed by the
coordinates of ``x``, ``y`` and ``z``.

The non-compact form f4* lives on the same coordinates; only the sign of
the bracket on the last two octonion factors changes.  Both brackets are
implemented by :func:`bracket` and both are also available as sparse
structure-constant tables through :class:`LieAlgebra`.
"""
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import combinations

import numpy as np

from . import octonion as oc
from . import triality as tr
from .exactlin import Echelon, Subspace, as_vector, unit_vector

DIM = 52
SO8 = range(0, 28)
X_SLOT = range(28, 36)
Y_SLOT = range(36, 44)
Z_SLOT = range(44, 52)

# Gram matrix of <.,.> is diagonal in the frozen coordinates: -tr(AB) counts
# each wedge coordinate twice.
GRAM_DIAGONAL = (Fraction(2),) * 28 + (Fraction(8),) * 24


class F4Elt:
    """An element (A, x, y, z) of so(8) x O x O x O."""

    __slots__ = ("A", "x", "y", "z")

    def __init__(self, A=None, x=None, y=None, z=None):
        self.A = tr.zero_matrix() if A is None else A
        self.x = oc.zero() if x is None else x
        self.y = oc.zero() if y is None else y
        self.z = oc.zero() if z is None else z

    def __repr__(self):
        return f"F4Elt({self.to_vector()!r})"

    def __eq__(self, other):
        if not isinstance(other, F4Elt):
            return NotImplemented
        return self.to_vector() == other.to_vector()

    def __hash__(self):
        return hash(self.to_vector())

    def __add__(self, other):
        return F4Elt(self.A + other.A, self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other):
        return F4Elt(self.A - other.A, self.x - other.x, self.y - other.y, self.z - other.z)

    def __neg__(self):
        return F4Elt(-self.A, -self.x, -self.y, -self.z)

    def __mul__(self, c):
        c = Fraction(c)
        return F4Elt(c * self.A, c * self.x, c * self.y, c * self.z)

    __rmul__ = __mul__

    def is_zero(self):
        return not any(self.to_vector())

    def to_vector(self):
        return tuple(Fraction(c) for c in
                     (*tr.skew_to_coords(self.A), *self.x, *self.y, *self.z))

    @classmethod
    def from_vector(cls, v):
        v = as_vector(v)
        if len(v) != DIM:
            raise ValueError(f"expected {DIM} coordinates, got {len(v)}")
        return cls(tr.coords_to_skew(v[:28]), oc.octonion(v[28:36]),
                   oc.octonion(v[36:44]), oc.octonion(v[44:52]))

    @classmethod
    def basis(cls, i):
        return cls.from_vector(unit_vector(DIM, i))


def _nz(a):
    return bool(np.any(a))


def bracket(p, q, sign=1):
    """Bracket of f4 (``sign=1``) or f4* (``sign=-1``).

    ``sign`` multiplies every contribution coming from the last two octonion
    factors of both arguments.
    """
    A, u, v, w = p.A, p.x, p.y, p.z
    B, x, y, z = q.A, q.x, q.y, q.z
    C = tr.bracket(A, B) if _nz(A) and _nz(B) else tr.zero_matrix()
    if _nz(u) and _nz(x):
        C = C - 4 * tr.wedge(u, x)
    if _nz(v) and _nz(y):
        C = C - sign * 4 * tr.lam2(tr.wedge(v, y))
    if _nz(w) and _nz(z):
        C = C - sign * 4 * tr.lam(tr.wedge(w, z))
    r = A @ x - B @ u + sign * (oc.conj(oc.mul(v, z)) - oc.conj(oc.mul(y, w)))
    s = (tr.lam(A) @ y if _nz(A) and _nz(y) else 0) \
        - (tr.lam(B) @ v if _nz(B) and _nz(v) else 0) \
        + oc.conj(oc.mul(w, x)) - oc.conj(oc.mul(z, u))
    t = (tr.lam2(A) @ z if _nz(A) and _nz(z) else 0) \
        - (tr.lam2(B) @ w if _nz(B) and _nz(w) else 0) \
        + oc.conj(oc.mul(u, y)) - oc.conj(oc.mul(x, v))
    return F4Elt(C, r, s, t)


def bracket_c(p, q):
    return bracket(p, q, 1)


def tau(p):
    return F4Elt(tr.lam(p.A), p.y, p.z, p.x)


def inner(p, q):
    """8 (u.x + v.y + w.z) - tr(AB)."""
    return Fraction(8 * (oc.dot(p.x, q.x) + oc.dot(p.y, q.y) + oc.dot(p.z, q.z))
                    - np.trace(p.A @ q.A))


def inner_vec(u, v):
    return sum((g * a * b for g, a, b in zip(GRAM_DIAGONAL, u, v)), Fraction(0))


def gram_matrix():
    return [[GRAM_DIAGONAL[i] if i == j else Fraction(0) for j in range(DIM)]
            for i in range(DIM)]


def so8_derivation(X, p):
    """Infinitesimal Spin(8) action ([X, A], X x, lambda(X) y, lambda^2(X) z)."""
    if not tr.is_skew(X):
        raise ValueError("expected a skew-symmetric 8x8 matrix")
    return F4Elt(tr.bracket(X, p.A), X @ p.x, tr.lam(X) @ p.y, tr.lam2(X) @ p.z)


def jacobi_defect(p, q, r, sign=1):
    return (bracket(p, bracket(q, r, sign), sign)
            + bracket(q, bracket(r, p, sign), sign)
            + bracket(r, bracket(p, q, sign), sign))


def _sparse(v):
    return {i: c for i, c in enumerate(v) if c}


class LieAlgebra:
    """A Lie algebra on Q^n given by sparse structure constants.

    ``table[i, j]`` maps ``k`` to the coefficient of ``e_k`` in ``[e_i, e_j]``;
    pairs with zero bracket are absent.  Skew symmetry is built in: only
    ``i < j`` is stored.
    """

    def __init__(self, dim, constants, name=""):
        self.dim = dim
        self.name = name
        self._table = {}
        for (i, j), col in constants.items():
            col = {k: Fraction(c) for k, c in col.items() if c}
            if i == j or not col:
                continue
            if i > j:
                i, j = j, i
                col = {k: -c for k, c in col.items()}
            self._table[i, j] = col
        self._ad = {}

    @classmethod
    def from_bracket(cls, fn, basis, name=""):
        table = {}
        for i, j in combinations(range(len(basis)), 2):
            col = _sparse(fn(basis[i], basis[j]).to_vector())
            if col:
                table[i, j] = col
        return cls(len(basis), table, name)

    def constants(self):
        """Sorted ``(i, j, k, c)`` with ``i < j``."""
        return [(i, j, k, c) for (i, j), col in sorted(self._table.items())
                for k, c in sorted(col.items())]

    def basis_bracket(self, i, j):
        if i < j:
            return self._table.get((i, j), {})
        if i > j:
            return {k: -c for k, c in self._table.get((j, i), {}).items()}
        return {}

    def bracket_sparse(self, u, v):
        out = {}
        for i, a in u.items():
            for j, b in v.items():
                for k, c in self.basis_bracket(i, j).items():
                    out[k] = out.get(k, 0) + a * b * c
        return {k: c for k, c in out.items() if c}

    def bracket(self, u, v):
        out = self.bracket_sparse(_sparse(as_vector(u)), _sparse(as_vector(v)))
        return tuple(Fraction(out.get(k, 0)) for k in range(self.dim))

    def ad(self, i):
        """Matrix (list of rows) of ad(e_i)."""
        if i not in self._ad:
            m = [[Fraction(0)] * self.dim for _ in range(self.dim)]
            for j in range(self.dim):
                for k, c in self.basis_bracket(i, j).items():
                    m[k][j] = c
            self._ad[i] = m
        return self._ad[i]

    def ad_vector(self, u):
        m = [[Fraction(0)] * self.dim for _ in range(self.dim)]
        for i, a in _sparse(as_vector(u)).items():
            for j in range(self.dim):
                for k, c in self.basis_bracket(i, j).items():
                    m[k][j] += a * c
        return m

    def jacobi_basis_defect(self, i, j, k):
        out = {}
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            inner_ = self.basis_bracket(b, c)
            for m, coef in inner_.items():
                for n, d in self.basis_bracket(a, m).items():
                    out[n] = out.get(n, 0) + coef * d
        return {n: c for n, c in out.items() if c}

    def jacobi_failures(self, triples=None):
        """Basis triples (i < j < k) whose Jacobi sum is nonzero."""
        if triples is None:
            triples = combinations(range(self.dim), 3)
        return [(t, d) for t in triples if (d := self.jacobi_basis_defect(*t))]

    def killing_matrix(self):
        """B[i][j] = trace(ad e_i ad e_j)."""
        n = self.dim
        B = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                s = Fraction(0)
                for k in range(n):
                    for m, c in self.basis_bracket(j, k).items():
                        d = self.basis_bracket(i, m).get(k)
                        if d:
                            s += c * d
                B[i][j] = B[j][i] = s
        return B

    def killing(self, u, v):
        B = self.killing_gram
        u, v = as_vector(u), as_vector(v)
        return sum((u[i] * B[i][j] * v[j] for i in range(self.dim) for j in range(self.dim)
                    if u[i] and v[j]), Fraction(0))

    @cached_property
    def killing_gram(self):
        return self.killing_matrix()

    def is_subalgebra(self, S):
        """Return None if S is bracket-closed, else a witness pair."""
        for a, b in combinations(S.basis, 2):
            if self.bracket(a, b) not in S:
                return a, b
        return None

    def bracket_span(self, S, T):
        """Span of all brackets [s, t] with s in S and t in T."""
        ech = Echelon(self.dim)
        for a in S.basis:
            sa = _sparse(a)
            for b in T.basis:
                w = self.bracket_sparse(sa, _sparse(b))
                if w:
                    ech.add(tuple(Fraction(w.get(k, 0)) for k in range(self.dim)))
        return ech.subspace()

    def ideal_closure(self, seed):
        seed = as_vector(seed)
        if not any(seed):
            raise ValueError("ideal closure of the zero vector")
        ech = Echelon(self.dim)
        ech.add(seed)
        queue = [seed]
        while queue and len(ech) < self.dim:
            v = _sparse(queue.pop())
            for i in range(self.dim):
                w = self.bracket_sparse({i: Fraction(1)}, v)
                if w:
                    w = tuple(Fraction(w.get(k, 0)) for k in range(self.dim))
                    if ech.add(w):
                        queue.append(w)
                if len(ech) == self.dim:
                    break
        return ech.subspace()


def f4_basis():
    return [F4Elt.basis(i) for i in range(DIM)]


@lru_cache(maxsize=None)
def f4_algebra():
    return LieAlgebra.from_bracket(bracket_c, f4_basis(), name="f4")


@lru_cache(maxsize=None)
def f4star_algebra():
    return LieAlgebra.from_bracket(lambda p, q: bracket(p, q, -1), f4_basis(), name="f4star")


def algebra(name):
    if name == "f4":
        return f4_algebra()
    if name == "f4star":
        return f4star_algebra()
    raise ValueError(f"unknown algebra {name!r}; expected 'f4' or 'f4star'")


def killing(p, q, alg=None):
    alg = alg or f4_algebra()
    return alg.killing(p.to_vector(), q.to_vector())


def ideal_closure(seed, alg=None):
    alg = alg or f4_algebra()
    if isinstance(seed, F4Elt):
        seed = seed.to_vector()
    return alg.ideal_closure(seed)


K_SUBSPACE = Subspace.coordinate(DIM, range(36))
P_SUBSPACE = Subspace.coordinate(DIM, range(36, 52))
