"""``f4cli``: run verification suites, print reports, export JSON documents.

Exit codes: 0 when everything passes, 1 when a check fails, 2 on usage or
input errors.
"""
import argparse
import json
import sys

from . import f4, f4star, geometry, polarity, serialize, verify
from .exactlin import Subspace


def named_subspaces():
    """Subspaces of f4* that can be exported or reported by name."""
    d = f4star.root_decomposition()
    out = {
        "sp12": geometry.sp12_algebra,
        "sp13": geometry.sp13,
        "sp14": geometry.sp14,
        "k": lambda: f4.K_SUBSPACE,
        "pstar": lambda: f4.P_SUBSPACE,
        "k0": lambda: d.k0,
        "a": lambda: d.a,
        "n": lambda: d.n,
        "an": lambda: d.a + d.n,
        "parabolic": f4star.parabolic,
        "coh2nilp": polarity.coh2nilp_h,
        "coh2nilp-section": polarity.coh2nilp_section,
    }
    for label in geometry.PROP_LABELS:
        out[f"std-{label.value}"] = lambda label=label: geometry.std_triple(label)
    return out


class UsageError(Exception):
    pass


def _parser():
    p = argparse.ArgumentParser(prog="f4cli", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--suite", required=True, choices=verify.SUITES + ("all",))
    v.add_argument("--algebra", choices=("f4", "f4star"))
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--json", action="store_true")
    v.add_argument("--timing", action="store_true", help="include wall times")
    v.add_argument("--constants", metavar="PATH",
                   help="structure-constant document to check instead of the built-in table")

    e = sub.add_parser("export", help="write a JSON document")
    e.add_argument("--what", required=True,
                   choices=("structure-constants", "automorphisms", "subalgebra"))
    e.add_argument("--algebra", choices=("f4", "f4star"), default="f4")
    e.add_argument("--name", help="subspace name for --what subalgebra")
    e.add_argument("--out", required=True, metavar="PATH")

    r = sub.add_parser("report", help="print a report")
    r.add_argument("kind", choices=("classify", "polarity", "table1"))
    r.add_argument("--std", help="standard triple system label, e.g. HH2")
    r.add_argument("--in", dest="path", metavar="PATH", help="subspace document")
    r.add_argument("--example", default="coh2nilp", choices=("coh2nilp",))
    r.add_argument("--json", action="store_true")
    return p


def cmd_verify(args, out):
    if args.jobs < 1:
        raise UsageError("--jobs must be positive")
    algebras = verify.default_algebras()
    if args.constants:
        alg = serialize.load(args.constants)
        if not isinstance(alg, f4.LieAlgebra) or alg.name not in ("f4", "f4star"):
            raise UsageError(f"{args.constants}: expected structure constants of f4 or f4star")
        algebras[alg.name] = alg
    results = verify.run(args.suite, args.algebra, algebras, jobs=args.jobs)
    if args.json:
        out.write(json.dumps([r.as_dict(args.timing) for r in results], indent=1) + "\n")
    else:
        for r in results:
            out.write(r.summary() + "\n")
            if args.timing:
                out.write(f"  wall time: {r.wall_time:.2f} s\n")
        failed = sum(len(r.failures) for r in results)
        out.write(f"{'PASS' if not failed else 'FAIL'}: {sum(r.checks for r in results)} checks, "
                  f"{failed} failures\n")
    return 0 if all(r.ok for r in results) else 1


def cmd_export(args, out):
    if args.what == "structure-constants":
        doc = serialize.constants_doc(f4.algebra(args.algebra))
    elif args.what == "automorphisms":
        doc = serialize.automorphisms_doc()
    else:
        spaces = named_subspaces()
        if args.name not in spaces:
            raise UsageError(f"--name must be one of {', '.join(sorted(spaces))}")
        doc = serialize.subspace_doc(spaces[args.name](), args.name)
    serialize.write(doc, args.out)
    out.write(f"wrote {args.what} to {args.out}\n")
    return 0


def _report_classify(args):
    if bool(args.std) == bool(args.path):
        raise UsageError("report classify needs exactly one of --std or --in")
    if args.std:
        try:
            L = geometry.std_triple(args.std)
        except ValueError:
            raise UsageError(f"unknown label {args.std!r}") from None
        source = f"std {args.std}"
    else:
        L = serialize.load(args.path)
        if not isinstance(L, Subspace) or L.ambient_dim != f4.DIM:
            raise UsageError(f"{args.path}: expected a subspace of the 52-dimensional algebra")
        source = args.path
    if not L <= f4.P_SUBSPACE:
        raise UsageError(f"{source}: a Lie triple system must lie in p*")
    if not geometry.is_lie_triple(L):
        return {"source": source, "lie_triple": False, "label": None}, 1
    dim, gen = geometry.signature(L)
    spectrum = sorted(geometry.curvature_spectrum(L))
    label = geometry.classify_triple_system(L)
    return {"source": source, "lie_triple": True, "label": label.value,
            "dims": [dim, gen], "curvatures": [serialize.fmt(k) for k in spectrum]}, 0


def _report_polarity(args):
    rep = polarity.coh2nilp_report()
    section = geometry.classify_triple_system(rep.sigma)
    return {"example": args.example, "h_dim": rep.h.dim, "sigma_dim": rep.sigma.dim,
            "orthogonality": rep.orthogonality_holds,
            "sigma_brackets": [{str(i): serialize.fmt(c) for i, c in enumerate(v) if c}
                               for v in rep.sigma_brackets.basis],
            "section_label": section.value, "slice_condition": rep.slice_condition,
            "nonpolar_witness_h8": serialize.fmt(polarity.nonpolar_witness_h8())}, 0


def _report_table1(args):
    rows = []
    for row, z_exp, n_exp in geometry.TABLE1_ROWS:
        z, n = geometry.table1_dims(row)
        rows.append({"row": row, "centralizer": z, "centralizer_expected": z_exp,
                     "normalizer": n, "normalizer_expected": n_exp,
                     "match": (z, n) == (z_exp, n_exp)})
    return {"rows": rows}, 0 if all(r["match"] for r in rows) else 1


def _print_report(kind, data, out):
    if kind == "table1":
        out.write(f"{'row':<5} {'Z':>4} {'Z exp':>6} {'N':>4} {'N exp':>6}\n")
        for r in data["rows"]:
            out.write(f"{r['row']:<5} {r['centralizer']:>4} {r['centralizer_expected']:>6} "
                      f"{r['normalizer']:>4} {r['normalizer_expected']:>6}"
                      f"{'' if r['match'] else '  MISMATCH'}\n")
        return
    for k, v in data.items():
        out.write(f"{k}: {v}\n")


def cmd_report(args, out):
    data, code = {"classify": _report_classify, "polarity": _report_polarity,
                  "table1": _report_table1}[args.kind](args)
    if args.json:
        out.write(json.dumps(data, indent=1, sort_keys=True) + "\n")
    else:
        _print_report(args.kind, data, out)
    return code


def main(argv=None, out=None):
    out = out or sys.stdout
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    commands = {"verify": cmd_verify, "export": cmd_export, "report": cmd_report}
    try:
        return commands[args.command](args, out)
    except (UsageError, serialize.SchemaError, OSError, KeyError, TypeError) as exc:
        print(f"f4cli: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
