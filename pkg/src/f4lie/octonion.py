"""The Cayley numbers O with basis e0 = 1, e1, ..., e7.

Octonions are numpy object arrays of length 8 holding Fractions.  The
multiplication table is not typed in: it is completed from the seven
defining products

    e1e2 = e3, e1e4 = e5, e2e4 = e6, e3e4 = e7, e5e3 = e6, e6e1 = e7, e7e2 = e5

together with e_i^2 = -1, anticommutativity of distinct imaginary units and
the cyclic rule ``e_i e_j = e_k  =>  e_j e_k = e_i``, and is then checked
against the alternative laws.
"""
from fractions import Fraction
from itertools import product

import numpy as np

DEFINING_PRODUCTS = ((1, 2, 3), (1, 4, 5), (2, 4, 6), (3, 4, 7),
                     (5, 3, 6), (6, 1, 7), (7, 2, 5))


def _complete_table():
    table = {}
    for i in range(8):
        table[0, i] = (1, i)
        table[i, 0] = (1, i)
    for i in range(1, 8):
        table[i, i] = (-1, 0)
    for a, b, c in DEFINING_PRODUCTS:
        for i, j, k in ((a, b, c), (b, c, a), (c, a, b)):
            for key, val in (((i, j), (1, k)), ((j, i), (-1, k))):
                if table.setdefault(key, val) != val:
                    raise ArithmeticError(f"inconsistent products at e{key[0]}e{key[1]}")
    if len(table) != 64:
        raise ArithmeticError("the defining products do not determine the table")
    return table


MUL_TABLE = _complete_table()

# STRUCTURE[i, j, k] is the e_k coefficient of e_i e_j
STRUCTURE = np.zeros((8, 8, 8), dtype=int)
for (_i, _j), (_s, _k) in MUL_TABLE.items():
    STRUCTURE[_i, _j, _k] = _s
STRUCTURE.flags.writeable = False


def octonion(coords):
    coords = list(coords)
    if len(coords) != 8:
        raise ValueError(f"an octonion has 8 coordinates, got {len(coords)}")
    return np.array([Fraction(c) for c in coords], dtype=object)


def zero():
    return octonion([0] * 8)


def basis(i):
    v = zero()
    v[i] = Fraction(1)
    return v


E = basis(0)


def mul(a, b):
    out = zero()
    for i in range(8):
        if not a[i]:
            continue
        for j in range(8):
            if b[j]:
                s, k = MUL_TABLE[i, j]
                out[k] += s * a[i] * b[j]
    return out


_CONJ_SIGNS = np.array([1] + [-1] * 7, dtype=object)


def conj(a):
    return a * _CONJ_SIGNS


def re(a):
    return a[0]


def pu(a):
    return (a - conj(a)) / 2


def dot(a, b):
    return sum(a * b)


def norm2(a):
    return dot(a, a)


def associator(a, b, c):
    return mul(mul(a, b), c) - mul(a, mul(b, c))


def lmat(a):
    """Matrix of x -> a x."""
    m = np.full((8, 8), Fraction(0), dtype=object)
    for i in range(8):
        if a[i]:
            for j in range(8):
                s, k = MUL_TABLE[i, j]
                m[k, j] += s * a[i]
    return m


def rmat(a):
    """Matrix of x -> x a."""
    m = np.full((8, 8), Fraction(0), dtype=object)
    for i in range(8):
        if a[i]:
            for j in range(8):
                s, k = MUL_TABLE[j, i]
                m[k, j] += s * a[i]
    return m


def tmat(a):
    return lmat(a) + rmat(a)


def is_alternative():
    """Check both alternative laws on all pairs of basis elements."""
    for i, j in product(range(8), repeat=2):
        x, y = basis(i), basis(j)
        if np.any(associator(x, x, y)) or np.any(associator(x, y, y)):
            return False
    return True


if not is_alternative():  # pragma: no cover - guards the derived table
    raise ArithmeticError("derived multiplication table is not alternative")
