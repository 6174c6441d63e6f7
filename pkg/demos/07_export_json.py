"""
Exporting and re-reading exact data
===================================

Structure constants and subspaces as JSON with "p/q" scalars.  The same
documents come out of ``f4cli export``.
"""
import os
import tempfile

from f4lie import f4, geometry, serialize

tmp = tempfile.mkdtemp()

path = os.path.join(tmp, "f4star.json")
serialize.write(serialize.constants_doc(f4.f4star_algebra()), path)
print(open(path).read()[:300], "...")

back = serialize.load(path)
print("round trip equal:", back.constants() == f4.f4star_algebra().constants())

path = os.path.join(tmp, "sp12.json")
serialize.write(serialize.subspace_doc(geometry.sp12_algebra(), "sp12"), path)
S = serialize.load(path)
print("sp12 basis vectors:", S.dim)
