"""
The compact algebra f4 and its non-compact form
===============================================

so(8) x O x O x O with the exact bracket, its structure constants, the
Jacobi identity, the invariant scalar product and the Killing form.
"""
from f4lie import f4
from f4lie.f4 import F4Elt
from f4lie import octonion as oc


def show(v):
    return " ".join(str(c) for c in v)


C = f4.f4_algebra()       # ~2 s to tabulate
NC = f4.f4star_algebra()
print("dim:", C.dim, " nonzero constants:", len(C.constants()))

p = F4Elt(y=oc.basis(0))
q = F4Elt(z=oc.basis(0))
print("[p, q] in f4: ", show(f4.bracket_c(p, q).to_vector()[28:36]))
print("[p, q] in f4*:", show(f4.bracket(p, q, -1).to_vector()[28:36]))

# Jacobi on all basis triples, a quarter second each
print("Jacobi failures f4:", len(C.jacobi_failures()), " f4*:", len(NC.jacobi_failures()))

# the Killing form is a fixed multiple of the scalar product
for i in (0, 30, 45):
    b = F4Elt.basis(i)
    print(f"B(e{i}, e{i}) / <e{i}, e{i}> =", f4.killing(b, b) / f4.inner(b, b))

# any nonzero vector generates the whole algebra as an ideal
print("ideal generated by e_40:", f4.ideal_closure(F4Elt.basis(40)).dim)
