"""
Section orthogonality
=====================

The Lie-algebraic half of the polarity test for a few subalgebras of f4*.
"""
from f4lie import polarity, geometry

rep = polarity.coh2nilp_report()
print("h dim:", rep.h.dim, " section dim:", rep.sigma.dim)
print("orthogonal:", rep.orthogonality_holds, " slice condition:", rep.slice_condition)
print("[sigma, sigma] spanned by coordinate",
      [i for i, c in enumerate(rep.sigma_brackets.basis[0]) if c])
print("section type:", geometry.classify_triple_system(rep.sigma).value)

# the full algebra is never orthogonal to a nonzero bracket
full = polarity.section_orthogonality(polarity.full_algebra(), rep.sigma)
print("full algebra orthogonal:", full.orthogonality_holds, " pairing:", full.witness[3])

print("H^8 witness tr(L_e1 R_e1) =", polarity.nonpolar_witness_h8())

for name, S in polarity.example_subalgebras().items():
    print(f"{name}: dim {S.dim}")

# normalizers in k_0 of coordinate subspaces of g_alpha
print({d: polarity.normalizer_nk0(polarity.codim_subspace(d)).dim for d in range(9)})
