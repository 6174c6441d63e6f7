"""Exact linear algebra over the rationals.

Every scalar is a :class:`fractions.Fraction`; nothing here ever touches a
float.  Subspaces are stored by their reduced row echelon basis, so two
subspaces are equal exactly when their ``basis`` tuples are equal.
"""
from dataclasses import dataclass
from fractions import Fraction

Rat = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


class DimensionMismatchError(ValueError):
    pass


class DegenerateFormError(ValueError):
    pass


def rat(value):
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass an int, Fraction or 'p/q' string")
    return Fraction(value)


def as_vector(v):
    return tuple(rat(c) for c in v)


def is_zero(v):
    return all(c == 0 for c in v)


def dot(u, v):
    return sum((a * b for a, b in zip(u, v)), _ZERO)


def _reduce_against(v, rows, pivots):
    # rows are fully reduced with leading 1 at the matching pivot
    v = list(v)
    for row, p in zip(rows, pivots):
        c = v[p]
        if c:
            for j in range(p, len(v)):
                if row[j]:
                    v[j] -= c * row[j]
    return v


class Echelon:
    """Incrementally maintained reduced row echelon basis.

    Used by the closure iterations, which add one candidate vector at a time
    and only care whether it enlarged the span.
    """

    def __init__(self, ambient_dim):
        self.ambient_dim = ambient_dim
        self._rows = {}

    def __len__(self):
        return len(self._rows)

    def reduce(self, v):
        if len(v) != self.ambient_dim:
            raise DimensionMismatchError(
                f"vector of length {len(v)} in ambient dimension {self.ambient_dim}")
        v = [rat(c) for c in v]
        for p, row in self._rows.items():
            c = v[p]
            if c:
                for j, r in enumerate(row):
                    if r:
                        v[j] -= c * r
        return v

    def add(self, v):
        """Add ``v`` to the span; return True iff the dimension grew."""
        v = self.reduce(v)
        p = next((j for j, c in enumerate(v) if c), None)
        if p is None:
            return False
        inv = 1 / v[p]
        v = [c * inv for c in v]
        for q, row in self._rows.items():
            c = row[p]
            if c:
                self._rows[q] = [a - c * b for a, b in zip(row, v)]
        self._rows[p] = v
        return True

    def contains(self, v):
        return is_zero(self.reduce(v))

    def subspace(self):
        basis = tuple(tuple(self._rows[p]) for p in sorted(self._rows))
        return Subspace(self.ambient_dim, basis)


def row_reduce(rows, ncols):
    """Return ``(rref_rows, pivots)`` for a list of rows of length ``ncols``."""
    m = [[rat(c) for c in r] for r in rows]
    for r in m:
        if len(r) != ncols:
            raise DimensionMismatchError(f"row of length {len(r)}, expected {ncols}")
    pivots = []
    pr = 0
    for pc in range(ncols):
        if pr == len(m):
            break
        i = next((i for i in range(pr, len(m)) if m[i][pc]), None)
        if i is None:
            continue
        m[pr], m[i] = m[i], m[pr]
        inv = 1 / m[pr][pc]
        piv = [c * inv for c in m[pr]]
        m[pr] = piv
        for r in range(len(m)):
            if r != pr:
                f = m[r][pc]
                if f:
                    m[r] = [a - f * b for a, b in zip(m[r], piv)]
        pivots.append(pc)
        pr += 1
    return m[:pr], pivots


@dataclass(frozen=True)
class Subspace:
    """A linear subspace of Q^n given by its reduced row echelon basis."""

    ambient_dim: int
    basis: tuple

    @property
    def dim(self):
        return len(self.basis)

    @property
    def pivots(self):
        return tuple(next(j for j, c in enumerate(r) if c) for r in self.basis)

    @classmethod
    def zero(cls, n):
        return cls(n, ())

    @classmethod
    def full(cls, n):
        return cls(n, tuple(unit_vector(n, i) for i in range(n)))

    @classmethod
    def coordinate(cls, n, indices):
        return canonicalize([unit_vector(n, i) for i in indices], ambient_dim=n)

    def __contains__(self, v):
        return member(v, self)

    def __le__(self, other):
        return is_subspace(self, other)

    def __add__(self, other):
        return span_sum(self, other)

    def __and__(self, other):
        return intersect(self, other)

    def coordinates(self, v):
        """Coefficients of ``v`` in ``self.basis``; raises if v is not a member."""
        v = as_vector(v)
        coeffs = [v[p] for p in self.pivots]
        rest = list(v)
        for c, row in zip(coeffs, self.basis):
            if c:
                rest = [a - c * b for a, b in zip(rest, row)]
        if not is_zero(rest):
            raise ValueError("vector is not in the subspace")
        return tuple(coeffs)


def unit_vector(n, i):
    return tuple(_ONE if j == i else _ZERO for j in range(n))


def canonicalize(vectors, ambient_dim=None):
    vectors = [as_vector(v) for v in vectors]
    dims = {len(v) for v in vectors}
    if ambient_dim is not None:
        dims.add(ambient_dim)
    if len(dims) > 1:
        raise DimensionMismatchError(f"mixed ambient dimensions {sorted(dims)}")
    if not dims:
        raise ValueError("cannot infer the ambient dimension of an empty list")
    n = dims.pop()
    rows, _ = row_reduce(vectors, n)
    return Subspace(n, tuple(tuple(r) for r in rows))


def _check_same(S, n):
    if S.ambient_dim != n:
        raise DimensionMismatchError(
            f"ambient dimensions {S.ambient_dim} and {n} differ")


def member(v, S):
    v = as_vector(v)
    _check_same(S, len(v))
    return is_zero(_reduce_against(v, S.basis, S.pivots))


def is_subspace(S, T):
    _check_same(S, T.ambient_dim)
    return all(member(v, T) for v in S.basis)


def span_sum(S, T):
    _check_same(S, T.ambient_dim)
    return canonicalize(S.basis + T.basis, ambient_dim=S.ambient_dim)


def kernel(M, ncols=None):
    """Null space ``{v : M v = 0}`` of a rectangular matrix given as rows."""
    M = [list(r) for r in M]
    if ncols is None:
        if not M:
            raise ValueError("need ncols for a matrix without rows")
        ncols = len(M[0])
    rows, pivots = row_reduce(M, ncols)
    free = [j for j in range(ncols) if j not in set(pivots)]
    basis = []
    for f in free:
        v = [_ZERO] * ncols
        v[f] = _ONE
        for row, p in zip(rows, pivots):
            v[p] = -row[f]
        basis.append(v)
    return canonicalize(basis, ambient_dim=ncols)


def rank(M, ncols=None):
    M = [list(r) for r in M]
    if ncols is None:
        ncols = len(M[0]) if M else 0
    return len(row_reduce(M, ncols)[1])


def intersect(S, T):
    _check_same(S, T.ambient_dim)
    n = S.ambient_dim
    perp = kernel(S.basis, n).basis + kernel(T.basis, n).basis
    return kernel(perp, n)


def orthocomplement(S, form):
    """``{v : form(v, s) = 0 for all s in S}`` for a symmetric Gram matrix."""
    n = S.ambient_dim
    if len(form) != n or any(len(r) != n for r in form):
        raise DimensionMismatchError(f"form is not {n}x{n}")
    if kernel(form, n).dim:
        raise DegenerateFormError("bilinear form is degenerate")
    rows = [[dot(s, col) for col in zip(*form)] for s in S.basis]
    return kernel(rows, n)


def mat_vec(M, v):
    return tuple(dot(r, v) for r in M)


def transpose(M):
    return [list(c) for c in zip(*M)]
