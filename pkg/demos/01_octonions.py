"""
Octonions with exact coordinates
================================

Build a few octonions, multiply them, and watch associativity fail while
the weaker alternative law and the norm survive.
"""
from fractions import Fraction

from f4lie import octonion as oc


def show(v):
    return " ".join(str(c) for c in v)


e = [oc.basis(i) for i in range(8)]

# e1 e2 = e3 is one of the seven defining products
print("e1 e2 =", show(oc.mul(e[1], e[2])))
# the rest of the table follows, e.g. e3 e5 = -e6
print("e3 e5 =", show(oc.mul(e[3], e[5])))

# not associative
print("[e1, e2, e4] =", show(oc.associator(e[1], e[2], e[4])))

x = oc.octonion([1, Fraction(1, 2), 0, -2, 0, 0, 3, 0])
y = oc.octonion([0, 1, 1, 0, Fraction(-1, 3), 0, 0, 1])
print("[x, x, y] =", show(oc.associator(x, x, y)))
print("|xy|^2 =", oc.norm2(oc.mul(x, y)), " |x|^2 |y|^2 =", oc.norm2(x) * oc.norm2(y))

# left multiplication by a unit imaginary squares to -1
L = oc.lmat(e[5])
print("L_e5^2 == -1:", (L @ L == -oc.lmat(oc.E)).all())
