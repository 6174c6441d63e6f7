"""
Restricted roots and the Iwasawa decomposition of f4*
=====================================================
"""
from f4lie import f4star
from f4lie import octonion as oc


def show(v):
    return " ".join(str(c) for c in v)


d = f4star.root_decomposition()
print("dims of g_-2a, g_-a, g_0, g_a, g_2a:", d.dims())

x = oc.octonion([0, 1, 0, 0, 2, 0, 0, 0])
xi = f4star.g_alpha_elt(x)
print("[H, xi] == xi:", f4star.bracket_nc(f4star.H, xi) == xi)

n = d.n
print("lower central series of n:", [S.dim for S in f4star.lower_central_series(n)])
print("derived series of a + n:", [S.dim for S in f4star.derived_series(d.a + n)])

k, an = f4star.iwasawa_k(), f4star.iwasawa_an()
print("dim k + dim an:", k.dim, "+", an.dim, " intersection:", (k & an).dim)

# the bracket of k_0 + a + n in (A, s, x, p) coordinates
c1 = f4star.IwasawaCoords(s=1, x=oc.basis(3))
c2 = f4star.IwasawaCoords(x=oc.basis(5), p=oc.basis(2))
b = f4star.an_bracket(c1, c2)
print("an_bracket: s =", b.s, " x =", show(b.x), " p =", show(b.p))
print("agrees with f4*:", f4star.iota(b) == f4star.bracket_nc(f4star.iota(c1), f4star.iota(c2)))
