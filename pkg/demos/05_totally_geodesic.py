"""
Totally geodesic subspaces of the octonionic hyperbolic plane
=============================================================

Lie triple systems in p* = O x O, the subalgebras they generate, and
sectional curvature.
"""
from f4lie import geometry
from f4lie.geometry import TG, PStarVector
from f4lie import octonion as oc

for label in (TG.RH2, TG.CH2, TG.HH2, TG.H1, TG.H4, TG.H8, TG.FULL):
    L = geometry.std_triple(label)
    dim, gen = geometry.signature(L)
    curv = sorted(geometry.curvature_spectrum(L)) if dim > 1 else []
    print(f"{label.value:5} dim {dim:2}  generates {gen:2}  curvatures {[str(k) for k in curv]}")

e, e1, z = oc.E, oc.basis(1), oc.zero()
print("K((e,0),(0,e))  =", geometry.sectional_curvature(PStarVector(e, z), PStarVector(z, e)))
print("K((e,0),(e1,0)) =", geometry.sectional_curvature(PStarVector(e, z), PStarVector(e1, z)))

# something that is not a triple system
bad = geometry.pstar_span([("y", 0), ("y", 1), ("z", 0)])
print("y=C, z=R is a triple system:", geometry.is_lie_triple(bad))

# a rotated plane is still recognized
print("span{(e3,0),(e6,0)}:", geometry.classify_triple_system(
    geometry.pstar_span([("y", 3), ("y", 6)])).value)

# centralizers and normalizers in k for a few table rows (~2 s each)
for row in ("RH2", "HH2", "H1"):
    print(row, "Z, N dims:", geometry.table1_dims(row))
