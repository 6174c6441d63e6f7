"""Acceptance criteria, one test each.

Criteria 1-10 read the machine-readable report of a single clean
``f4cli verify --suite all --json --timing`` run and add a few direct
computations; criterion 11 exercises the command line itself.  A
PASS/FAIL line per criterion is printed in the terminal summary.
"""
import io
import json
from math import comb

import numpy as np
import pytest

from f4lie import cli, f4, f4star, geometry, polarity, serialize
from f4lie import octonion as oc
from f4lie.exactlin import canonicalize
from f4lie.f4 import F4Elt


def criterion(number, title):
    return pytest.mark.criterion(number, title)


def run_cli(*argv):
    out = io.StringIO()
    code = cli.main(list(argv), out=out)
    return code, out.getvalue()


@pytest.fixture(scope="module")
def verify_all():
    code, out = run_cli("verify", "--suite", "all", "--json", "--timing")
    results = {}
    for r in json.loads(out):
        results[(r["suite"], r["algebra"] or None)] = r
    return code, results


def clean(r):
    assert r["failures"] == [], r["failures"][:5]


@criterion(1, "octonion products, alternative laws and norm on all basis pairs, < 1 s")
def test_octonion(verify_all):
    r = verify_all[1][("octonion", None)]
    clean(r)
    c = r["counts"]
    assert c["product"] == 7
    assert c["left-alternative"] == c["right-alternative"] == c["norm"] == 64
    assert r["wall_time"] < 1.0
    assert np.array_equal(oc.mul(oc.basis(3), oc.basis(5)), -oc.basis(6))


@criterion(2, "triality identities, 378 brackets per automorphism, 1792 defect tuples, < 10 s")
def test_triality(verify_all):
    r = verify_all[1][("triality", None)]
    clean(r)
    c = r["counts"]
    for ident in ("pi^2 = 1", "kappa^2 = 1", "lambda^3 = 1", "kappa lambda^2 = pi",
                  "lambda kappa = pi"):
        assert c[ident] == 1
    assert c["pi-hom"] == c["kappa-hom"] == c["lambda-hom"] == comb(28, 2) == 378
    assert c["triality-defect"] == 28 * 8 * 8 == 1792
    assert r["wall_time"] < 10.0


@criterion(3, "so(9) embedding is a homomorphism on all 630 basis pairs")
def test_so9(verify_all):
    r = verify_all[1][("triality", None)]
    clean(r)
    assert r["counts"]["so9-hom"] == comb(36, 2) == 630
    assert r["counts"]["so9-injective"] == 1


@criterion(4, "Jacobi identity on all 22,100 basis triples of f4 and f4*, < 3 min each")
def test_jacobi(verify_all):
    for alg in ("f4", "f4star"):
        r = verify_all[1][("jacobi", alg)]
        clean(r)
        assert r["checks"] == comb(52, 3) == 22100
        assert r["wall_time"] < 180


@criterion(5, "ad-invariance, tau-invariance and Killing form = c <,> with one constant")
def test_invariance(verify_all):
    r = verify_all[1][("invariance", "f4")]
    clean(r)
    c = r["counts"]
    assert c["ad-invariance"] == 52 * comb(53, 2)
    assert c["tau-hom"] == comb(52, 2) and c["tau-inner"] == 52 * 52
    assert c["killing"] == 52 * 52
    assert r["details"]["killing_constant"] == "-9/1"
    # independent spot check through the module-level Killing form
    assert f4.killing(F4Elt.basis(0), F4Elt.basis(0)) == -9 * f4.inner(F4Elt.basis(0),
                                                                        F4Elt.basis(0))
    clean(verify_all[1][("invariance", "f4star")])


@criterion(6, "ideal closure of each basis vector is 52-dimensional")
def test_simplicity(verify_all):
    for alg in ("f4", "f4star"):
        r = verify_all[1][("invariance", alg)]
        clean(r)
        assert r["counts"]["simplicity"] == 52


@criterion(7, "root dims (7,8,22,8,7), eigen-relations, n series (15,7,0), a+n solvable, "
              "an_bracket through iota on the 37-dim parabolic")
def test_roots_iwasawa(verify_all):
    roots = verify_all[1][("roots", "f4star")]
    iw = verify_all[1][("iwasawa", "f4star")]
    clean(roots)
    clean(iw)
    assert roots["details"]["dims"] == "(7, 8, 22, 8, 7)"
    assert roots["counts"]["eigen"] == 52
    assert iw["details"]["lower_central_series(n)"] == "(15, 7, 0)"
    assert iw["details"]["derived_series(a+n)"].endswith(", 0)")
    assert iw["counts"]["an-bracket"] == comb(37, 2)
    assert f4star.parabolic().dim == 37


@criterion(8, "standard triple systems, generated dims m(m+1)/2 and 21, curvature 8 and 32, "
              "CH2 non-constant")
def test_geometry(verify_all):
    r = verify_all[1][("geometry", "f4star")]
    clean(r)
    assert r["counts"]["lie-triple"] == len(geometry.PROP_LABELS) == 12
    # H1..H8 dims, the HH2 dim and HH2 generating sp(1, 2)
    assert r["counts"]["generated"] == 10
    assert r["details"]["curvatures"] == "(8/1, 32/1)"
    assert r["counts"]["CH2 non-constant curvature"] == 1


@criterion(9, "centralizer dims for the 12 table rows, normalizer of a = 22, normalizer_nk0 dims 14/9/6/21")
def test_table1(verify_all):
    r = verify_all[1][("table1", "f4star")]
    clean(r)
    z_dims = [z for _, z, _ in geometry.TABLE1_ROWS]
    assert z_dims == [36, 14, 8, 3, 21, 15, 10, 6, 3, 1, 0, 0]
    assert r["counts"]["centralizer"] == 12
    assert r["counts"]["normalizer of a = g_0"] == 1
    # codims 0, 1, 2, 3 and their mirrors 5, 6, 7, 8; codim 4 is only reported
    assert r["counts"]["normalizer_k0"] == 8
    assert "normalizer_k0 codim 4 (coordinate)" in r["details"]


@criterion(10, "coh2nilp orthogonality with [sigma, sigma] = span (0,-e,0,0); witness = 4")
def test_polarity(verify_all):
    r = verify_all[1][("polarity", "f4star")]
    clean(r)
    assert r["details"]["nonpolar_witness_h8"] == "4/1"
    rep = polarity.coh2nilp_report()
    assert rep.orthogonality_holds
    assert rep.sigma_brackets == canonicalize([F4Elt(x=-oc.E).to_vector()], ambient_dim=52)
    assert polarity.nonpolar_witness_h8() == 4


@pytest.fixture(scope="module")
def corrupted(tmp_path_factory):
    doc = serialize.constants_doc(f4.f4_algebra())
    entry = next(e for e in doc["constants"] if (e["i"], e["j"]) == (0, 1))
    entry["c"] = serialize.fmt(serialize.parse(entry["c"]) + 1)
    path = tmp_path_factory.mktemp("acceptance") / "corrupted.json"
    serialize.write(doc, path)
    return path


@criterion(11, "verify all exits 0 clean and 1 on a corrupted table; export round-trip is "
               "byte-stable")
def test_cli(verify_all, corrupted, tmp_path):
    assert verify_all[0] == 0
    code, out = run_cli("verify", "--suite", "all", "--constants", str(corrupted))
    assert code == 1
    assert "FAIL jacobi:" in out
    for what, extra in [("structure-constants", ["--algebra", "f4"]),
                        ("automorphisms", []), ("subalgebra", ["--name", "sp12"])]:
        first = tmp_path / f"{what}.json"
        assert run_cli("export", "--what", what, *extra, "--out", str(first))[0] == 0
        obj = serialize.load(first)
        if what == "structure-constants":
            doc = serialize.constants_doc(obj)
        elif what == "subalgebra":
            doc = serialize.subspace_doc(obj, "sp12")
        else:
            doc = serialize.automorphisms_doc()
            assert all(np.array_equal(obj[k], serialize.automorphisms_from_doc(doc)[k])
                       for k in obj)
        second = tmp_path / f"{what}-again.json"
        serialize.write(doc, second)
        assert first.read_bytes() == second.read_bytes()
