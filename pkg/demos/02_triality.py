"""
Triality on so(8)
=================

The automorphisms pi, kappa and lambda of so(8) as exact 28x28 matrices in
the wedge basis e_i ^ e_j.
"""
import numpy as np

from f4lie import octonion as oc
from f4lie import triality as tr


def show(v):
    return " ".join(str(c) for c in v)


I = tr.identity(28)
print("pi^2 = 1:", np.array_equal(tr.PI @ tr.PI, I))
print("lambda^3 = 1:", np.array_equal(tr.LAMBDA @ tr.LAMBDA2, I))
print("lambda kappa = pi:", np.array_equal(tr.LAMBDA @ tr.KAPPA, tr.PI))

# lambda moves a single wedge to a combination of four
A = tr.wedge_basis(0, 1)
coords = tr.skew_to_coords(tr.lam(A))
print("lambda(e0^e1) =", {tr.WEDGE_PAIRS[n]: str(c) for n, c in enumerate(coords) if c})

# infinitesimal triality: lambda^2(A)(xy) relates A and lambda(A) through the product
x, y = oc.basis(2), oc.octonion([1, 0, 0, 1, 0, 2, 0, 0])
A = tr.wedge_basis(3, 6) + 2 * tr.wedge_basis(1, 4)
print("triality defect:", show(tr.infinitesimal_triality_defect(A, x, y)))

# so(9) = so(8) + O
v, w = tr.so9_basis()[30], tr.so9_basis()[33]
b = tr.skew_to_coords(tr.so9_bracket(v, w).A)
print("[(0,e2),(0,e5)] =", {tr.WEDGE_PAIRS[n]: str(c) for n, c in enumerate(b) if c})
