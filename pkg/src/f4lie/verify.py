"""Verification suites behind ``f4cli verify``.

Each suite runs a fixed, deterministic list of exact checks and returns a
:class:`SuiteResult`.  Suites that use structure constants take them from
the ``algebras`` mapping so that a table read from disk can be checked in
place of the built-in one.
"""
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product

import numpy as np

from . import f4, f4star, geometry, polarity
from . import octonion as oc
from . import triality as tr
from .exactlin import Subspace, canonicalize, unit_vector
from .serialize import fmt

SUITES = ("octonion", "triality", "jacobi", "invariance", "roots", "iwasawa",
          "geometry", "table1", "polarity")


@dataclass
class SuiteResult:
    suite: str
    algebra: str = ""
    checks: int = 0
    failures: list = field(default_factory=list)
    details: dict = field(default_factory=dict)
    counts: dict = field(default_factory=dict)  # checks per family, e.g. "jacobi"
    wall_time: float = 0.0

    @property
    def ok(self):
        return not self.failures

    def check(self, check_id, passed, witness=""):
        self.checks += 1
        family = check_id.split(":")[0]
        self.counts[family] = self.counts.get(family, 0) + 1
        if not passed:
            self.failures.append((check_id, _show(witness)))
        return passed

    def as_dict(self, timing=False):
        d = {"suite": self.suite, "algebra": self.algebra, "checks": self.checks,
             "failures": [list(f) for f in self.failures],
             "details": {k: _show(v) for k, v in sorted(self.details.items())},
             "counts": dict(sorted(self.counts.items()))}
        if timing:
            d["wall_time"] = round(self.wall_time, 3)
        return d

    def summary(self):
        tag = f" [{self.algebra}]" if self.algebra else ""
        lines = [f"suite {self.suite}{tag}: {self.checks} checks, {len(self.failures)} failures"]
        lines += [f"  {k}: {_show(v)}" for k, v in sorted(self.details.items())]
        lines += [f"  FAIL {cid}: {w}" for cid, w in self.failures[:20]]
        if len(self.failures) > 20:
            lines.append(f"  ... {len(self.failures) - 20} more failures")
        return "\n".join(lines)


def _show(w):
    if isinstance(w, Fraction):
        return fmt(w)
    if isinstance(w, dict):
        return "{" + ", ".join(f"{k}: {_show(v)}" for k, v in sorted(w.items())) + "}"
    if isinstance(w, (tuple, list)):
        return "(" + ", ".join(_show(v) for v in w) + ")"
    if isinstance(w, np.ndarray):
        return _show(w.tolist())
    return str(w)


def _sparse(v):
    return {i: c for i, c in enumerate(v) if c}


class Algebras(dict):
    """Name -> LieAlgebra, built on first use; explicit entries override."""

    def __missing__(self, name):
        self[name] = f4.algebra(name)
        return self[name]


def default_algebras():
    return Algebras()


# --- octonion ---------------------------------------------------------------

def suite_octonion(algebras, which=None):
    res = SuiteResult("octonion")
    B = [oc.basis(i) for i in range(8)]
    for a, b, c in oc.DEFINING_PRODUCTS:
        res.check(f"product:e{a}e{b}", np.array_equal(oc.mul(B[a], B[b]), B[c]))
    for i, j in product(range(8), repeat=2):
        x, y = B[i], B[j]
        res.check(f"left-alternative:{i},{j}", not np.any(oc.associator(x, x, y)))
        res.check(f"right-alternative:{i},{j}", not np.any(oc.associator(x, y, y)))
        res.check(f"norm:{i},{j}", oc.norm2(oc.mul(x, y)) == oc.norm2(x) * oc.norm2(y))
        res.check(f"conj-anti:{i},{j}",
                  np.array_equal(oc.conj(oc.mul(x, y)), oc.mul(oc.conj(y), oc.conj(x))))
    for i, x in enumerate(B):
        res.check(f"real-part:{i}", np.array_equal(x + oc.conj(x), 2 * oc.re(x) * oc.E))
    return res


# --- triality ---------------------------------------------------------------

def suite_triality(algebras, which=None):
    res = SuiteResult("triality")
    I = tr.identity(28)
    P, K, L, L2 = tr.PI, tr.KAPPA, tr.LAMBDA, tr.LAMBDA2
    res.check("pi^2 = 1", np.array_equal(P @ P, I))
    res.check("kappa^2 = 1", np.array_equal(K @ K, I))
    res.check("lambda^3 = 1", np.array_equal(L2 @ L, I))
    res.check("kappa lambda^2 = pi", np.array_equal(K @ L2, P))
    res.check("lambda kappa = pi", np.array_equal(L @ K, P))
    W = [tr.wedge_basis(i, j) for i, j in tr.WEDGE_PAIRS]
    images = {name: [tr.apply(m, A) for A in W] for name, m in
              (("pi", P), ("kappa", K), ("lambda", L))}
    for (a, A), (b, B) in combinations(enumerate(W), 2):
        AB = tr.bracket(A, B)
        for name, m in (("pi", P), ("kappa", K), ("lambda", L)):
            img = images[name]
            res.check(f"{name}-hom:{a},{b}",
                      np.array_equal(tr.apply(m, AB), tr.bracket(img[a], img[b])))
    for a in range(1, 8):
        for b in range(8):
            if a == b:
                continue
            ea, eb = oc.basis(a), oc.basis(b)
            rhs = oc.lmat(oc.conj(eb)) @ oc.lmat(oc.conj(ea)) / 2
            res.check(f"lambda-formula:{a},{b}", np.array_equal(tr.lam(tr.wedge(ea, eb)), rhs))
    Bo = [oc.basis(i) for i in range(8)]
    products = {(i, j): oc.mul(Bo[i], Bo[j]) for i, j in product(range(8), repeat=2)}
    for n, A in enumerate(W):
        kl2 = tr.kappa(tr.lam2(A))
        lA = tr.lam(A)
        for i, j in product(range(8), repeat=2):
            d = kl2 @ products[i, j] - oc.mul(Bo[i], lA @ Bo[j]) - oc.mul(A @ Bo[i], Bo[j])
            res.check(f"triality-defect:{tr.WEDGE_PAIRS[n]},{i},{j}", not np.any(d), d)
    so9 = tr.so9_basis()
    for (a, v), (b, w) in combinations(enumerate(so9), 2):
        lhs = tr.so9_embed(tr.so9_bracket(v, w))
        V, Wm = tr.so9_embed(v), tr.so9_embed(w)
        res.check(f"so9-hom:{a},{b}", np.array_equal(lhs, tr.bracket(V, Wm)))
    rank = len(canonicalize([tr.so9_embed(v).flatten() for v in so9]).basis)
    res.check("so9-injective", rank == 36, rank)
    return res


# --- jacobi -----------------------------------------------------------------

def _jacobi_chunk(args):
    alg, i = args
    triples = ((i, j, k) for j in range(i + 1, alg.dim) for k in range(j + 1, alg.dim))
    return [(t, d) for t, d in alg.jacobi_failures(triples)]


def suite_jacobi(algebras, which="f4", jobs=1):
    alg = algebras[which]
    res = SuiteResult("jacobi", which)
    chunks = [(alg, i) for i in range(alg.dim)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            parts = list(ex.map(_jacobi_chunk, chunks))
    else:
        parts = [_jacobi_chunk(c) for c in chunks]
    failures = sorted(f for part in parts for f in part)
    n = alg.dim
    res.checks = n * (n - 1) * (n - 2) // 6
    res.counts = {"jacobi": res.checks}
    res.failures = [(f"jacobi:{t}", _show(d)) for t, d in failures]
    return res


# --- invariance -------------------------------------------------------------

def _form(which):
    if which == "f4":
        return f4.GRAM_DIAGONAL
    # <p, theta q>: theta flips the sign of the p* coordinates
    return f4.GRAM_DIAGONAL[:36] + tuple(-g for g in f4.GRAM_DIAGONAL[36:])


def suite_invariance(algebras, which="f4", jobs=1):
    alg = algebras[which]
    res = SuiteResult("invariance", which)
    g = _form(which)
    n = alg.dim
    for r in range(n):
        adr = [alg.basis_bracket(p, r) for p in range(n)]
        for p in range(n):
            for q in range(p, n):
                lhs = g[q] * adr[p].get(q, 0) + g[p] * adr[q].get(p, 0)
                res.check(f"ad-invariance:{p},{q},{r}", lhs == 0, lhs)
    B = alg.killing_matrix()
    c = B[0][0] / g[0]
    res.details["killing_constant"] = c
    for i in range(n):
        for j in range(n):
            expected = c * g[i] if i == j else 0
            res.check(f"killing:{i},{j}", B[i][j] == expected, B[i][j])
    res.check("killing-negative", c < 0, c)
    if which == "f4":
        basis = f4.f4_basis()
        taus = [f4.tau(b) for b in basis]
        for i, j in combinations(range(n), 2):
            tb = f4.F4Elt.from_vector(alg.bracket(basis[i].to_vector(), basis[j].to_vector()))
            lhs = f4.tau(tb).to_vector()
            rhs = alg.bracket(taus[i].to_vector(), taus[j].to_vector())
            res.check(f"tau-hom:{i},{j}", lhs == rhs)
        for i, j in product(range(n), repeat=2):
            lhs = f4.inner(taus[i], taus[j])
            res.check(f"tau-inner:{i},{j}", lhs == f4.inner(basis[i], basis[j]), lhs)
        for k in range(28):
            X = tr.wedge_basis(*tr.WEDGE_PAIRS[k])
            for j in range(n):
                lhs = f4.so8_derivation(X, basis[j]).to_vector()
                res.check(f"so8-derivation:{k},{j}", lhs == alg.bracket(unit_vector(n, k),
                                                                       unit_vector(n, j)))
    for i in range(n):
        d = alg.ideal_closure(unit_vector(n, i)).dim
        res.check(f"simplicity:{i}", d == n, d)
    return res


# --- roots ------------------------------------------------------------------

def suite_roots(algebras, which="f4star"):
    alg = algebras["f4star"]
    res = SuiteResult("roots", "f4star")
    try:
        d = f4star.root_decomposition()
    except f4star.RootDecompositionError as exc:
        res.check("eigen-relations", False, exc)
        return res
    res.details["dims"] = d.dims()
    res.check("dims", d.dims() == (7, 8, 22, 8, 7), d.dims())
    res.check("g0 = k0 + a", (d.k0.dim, d.a.dim) == (21, 1))
    total = canonicalize([v for S in d.by_root().values() for v in S.basis], ambient_dim=52)
    res.check("direct-sum", total.dim == 52, total.dim)
    H = f4star.H.to_vector()
    for beta, S in d.by_root().items():
        for i, v in enumerate(S.basis):
            lhs = alg.bracket(H, v)
            res.check(f"eigen:{beta}:{i}", lhs == tuple(beta * c for c in v), _sparse(lhs))
    spaces = d.by_root()
    for b1, b2 in product(spaces, repeat=2):
        target = spaces.get(b1 + b2, Subspace.zero(52))
        br = alg.bracket_span(spaces[b1], spaces[b2])
        res.check(f"root-bracket:{b1},{b2}", br <= target, br.dim)
    res.check("g0-commutes-a", alg.bracket_span(d.g_0, d.a).dim == 0)
    return res


# --- iwasawa ----------------------------------------------------------------

def suite_iwasawa(algebras, which="f4star"):
    alg = algebras["f4star"]
    res = SuiteResult("iwasawa", "f4star")
    d = f4star.root_decomposition()
    k, an = f4.K_SUBSPACE, d.a + d.n
    res.check("k + a + n = g", (k + an).dim == 52)
    res.check("k & (a + n) = 0", (k & an).dim == 0)
    try:
        lcs = tuple(S.dim for S in f4star.lower_central_series(d.n, alg))
        ds = tuple(S.dim for S in f4star.derived_series(an, alg))
    except f4star.NotSubalgebraError as exc:
        res.check("n, a+n subalgebras", False, exc.witness)
        return res
    res.details["lower_central_series(n)"] = lcs
    res.details["derived_series(a+n)"] = ds
    res.check("n nilpotent (15, 7, 0)", lcs == (15, 7, 0), lcs)
    res.check("a+n solvable", ds[-1] == 0, ds)
    q = d.k0 + an
    res.check("parabolic closed", alg.is_subalgebra(q) is None)
    basis = f4star.iwasawa_basis()
    images = [f4star.iota(c).to_vector() for c in basis]
    img_space = canonicalize(images, ambient_dim=52)
    res.check("iota injective onto k0+a+n", img_space == q, img_space.dim)
    for a, b in combinations(range(len(basis)), 2):
        lhs = f4star.iota(f4star.an_bracket(basis[a], basis[b])).to_vector()
        rhs = alg.bracket(images[a], images[b])
        res.check(f"an-bracket:{a},{b}", lhs == rhs, _sparse(lhs))
    sign = [1] * 36 + [-1] * 16
    for i, j in combinations(range(52), 2):
        br = alg.basis_bracket(i, j)
        ok = all(sign[m] * c == sign[i] * sign[j] * c for m, c in br.items())
        res.check(f"cartan-involution:{i},{j}", ok)
    return res


# --- geometry ---------------------------------------------------------------

def suite_geometry(algebras, which="f4star"):
    alg = algebras["f4star"]
    res = SuiteResult("geometry", "f4star")
    TG = geometry.TG
    for label in geometry.PROP_LABELS:
        L = geometry.std_triple(label)
        res.check(f"lie-triple:{label.value}", geometry.is_lie_triple(L, alg))
    for m in range(1, 9):
        dim = geometry.generated_subalgebra(geometry.std_triple(TG.hyperbolic(m)), alg).dim
        res.check(f"generated:H{m}", dim == m * (m + 1) // 2, dim)
    hh2 = geometry.generated_subalgebra(geometry.std_triple(TG.HH2), alg)
    res.check("generated:HH2", hh2.dim == 21, hh2.dim)
    res.check("generated:HH2 = sp(1,2)", hh2 == geometry.sp12_algebra())
    e, e1 = oc.E, oc.basis(1)
    k_xy = geometry.sectional_curvature(geometry.PStarVector(e, oc.zero()),
                                        geometry.PStarVector(oc.zero(), e))
    k_xz = geometry.sectional_curvature(geometry.PStarVector(e, oc.zero()),
                                        geometry.PStarVector(e1, oc.zero()))
    res.details["curvatures"] = (k_xy, k_xz)
    res.check("curvature (e,0),(0,e) = 8", k_xy == 8, k_xy)
    res.check("curvature (e,0),(e1,0) = 32", k_xz == 32, k_xz)
    res.check("RH2 constant curvature",
              geometry.curvature_spectrum(geometry.std_triple(TG.RH2)) == {Fraction(8)})
    spectrum = geometry.curvature_spectrum(geometry.std_triple(TG.CH2))
    res.check("CH2 non-constant curvature", spectrum == {Fraction(8), Fraction(32)}, spectrum)
    for label in geometry.PROP_LABELS:
        got = geometry.classify_triple_system(geometry.std_triple(label))
        res.check(f"classify:{label.value}", got is label, got.value)
    for (k1, w1), (k2, w2) in product(_coordinate_subalgebras(), repeat=2):
        if k1 == k2:
            continue
        L = geometry.pstar_span([("y", i) for i in w1] + [("z", i) for i in w2])
        lts = geometry.is_lie_triple(L, alg)
        res.check(f"equal-dims:{k1}x{k2}", not lts or len(w1) == len(w2))
    s13, s14, s12 = geometry.sp13(), geometry.sp14(), geometry.sp12_algebra()
    res.check("dim sp(1)^3 = 9", s13.dim == 9, s13.dim)
    res.check("dim sp(1)^4 = 12", s14.dim == 12, s14.dim)
    res.check("sp(1)^3 closed", alg.is_subalgebra(s13) is None)
    res.check("sp(1,2) closed", alg.is_subalgebra(s12) is None)
    res.check("sp(1)^3 stabilizes sp(1,2)", alg.bracket_span(s13, s12) <= s12)
    lam_s14 = geometry.a_slot_span([tr.lam(f4.F4Elt.from_vector(v).A) for v in s14.basis])
    res.check("lambda(sp(1)^4) = sp(1)^4", lam_s14 == s14)
    c = geometry.centralizer_in(s13, s14, alg)
    res.check("complement c is 3-dim", c.dim == 3 and (c + s13) == s14, c.dim)
    res.check("c centralizes sp(1,2)", alg.bracket_span(c, s12).dim == 0)
    return res


def _coordinate_subalgebras():
    """Coordinate subalgebras R, C, H, O of the octonions, by basis indices."""
    return [("R", (0,)), ("C", (0, 1)), ("H", (0, 1, 2, 3)), ("O", tuple(range(8)))]


# --- centralizer and normalizer table -----------------------------------

def suite_table1(algebras, which="f4star"):
    alg = algebras["f4star"]
    res = SuiteResult("table1", "f4star")
    for row, z_expected, n_expected in geometry.TABLE1_ROWS:
        z, n = geometry.table1_dims(row, alg)
        res.details[f"row {row}"] = (z, n)
        res.check(f"centralizer:{row}", z == z_expected, (z, z_expected))
        res.check(f"normalizer:{row}", n == n_expected, (n, n_expected))
    d = f4star.root_decomposition()
    na = geometry.normalizer_in(d.a, Subspace.full(52), alg)
    res.check("normalizer of a = g_0", na.dim == 22 and na == d.g_0, na.dim)
    for codim, expected in ((0, 21), (1, 14), (2, 9), (3, 6), (5, 6), (6, 9), (7, 14), (8, 21)):
        got = polarity.normalizer_nk0(polarity.codim_subspace(codim), alg).dim
        res.check(f"normalizer_k0:codim {codim}", got == expected, (got, expected))
    res.details["normalizer_k0 codim 4 (coordinate)"] = polarity.normalizer_nk0(
        polarity.codim_subspace(4), alg).dim
    return res


# --- polarity ---------------------------------------------------------------

def suite_polarity(algebras, which="f4star"):
    alg = algebras["f4star"]
    res = SuiteResult("polarity", "f4star")
    try:
        rep = polarity.section_orthogonality(polarity.coh2nilp_h(), polarity.coh2nilp_section(),
                                             alg)
    except f4star.NotSubalgebraError as exc:
        res.check("coh2nilp subalgebra", False, exc.witness)
        return res
    expected = canonicalize([f4.F4Elt(x=-oc.E).to_vector()], ambient_dim=52)
    res.check("coh2nilp orthogonality", rep.orthogonality_holds, rep.witness)
    res.check("coh2nilp [sigma, sigma] = span (0,-e,0,0)", rep.sigma_brackets == expected)
    label = geometry.classify_triple_system(polarity.coh2nilp_section())
    res.check("coh2nilp section is RH2", label is geometry.TG.RH2, label.value)
    w = polarity.nonpolar_witness_h8()
    res.details["nonpolar_witness_h8"] = w
    res.check("tr(L_e1 R_e1) = 4", w == 4, w)
    res.check("witness pairing nonzero", polarity.h8_witness_pairing() != 0)
    for name, S in polarity.example_subalgebras().items():
        res.details[f"dim {name}"] = S.dim
        res.check(f"closed:{name}", alg.is_subalgebra(S) is None)
    return res


_RUNNERS = {
    "octonion": suite_octonion, "triality": suite_triality, "jacobi": suite_jacobi,
    "invariance": suite_invariance, "roots": suite_roots, "iwasawa": suite_iwasawa,
    "geometry": suite_geometry, "table1": suite_table1, "polarity": suite_polarity,
}
_PER_ALGEBRA = {"jacobi", "invariance"}


def run(suite, algebra=None, algebras=None, jobs=1):
    """Run one suite (or ``"all"``) and return the list of results in a fixed order."""
    if not isinstance(algebras, Algebras):
        algebras = Algebras(algebras or {})
    names = SUITES if suite == "all" else (suite,)
    out = []
    for name in names:
        if name not in _RUNNERS:
            raise ValueError(f"unknown suite {name!r}")
        targets = [algebra] if algebra else ["f4", "f4star"]
        for which in (targets if name in _PER_ALGEBRA else [None]):
            t0 = time.perf_counter()
            if name in _PER_ALGEBRA:
                result = _RUNNERS[name](algebras, which, jobs=jobs)
            else:
                result = _RUNNERS[name](algebras)
            result.wall_time = time.perf_counter() - t0
            out.append(result)
    return out
