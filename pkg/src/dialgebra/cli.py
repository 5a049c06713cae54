"""Command-line surface.

Targets are either a path to an algebra file or ``catalog:<id>``.  Exit
codes: 0 all requested checks pass, 1 violations or discrepancies found,
2 usage or input error.  Output is deterministic: the same argv (seeds
included) produces byte-identical stdout.
"""

import argparse
import json
import random
import sys

from . import catalog, fileformat, scalars
from .axioms import (check_dialgebra, check_multiplicativity,
                     check_table_multiplicativity)
from .catalog import Satellite, _axioms_json
from .centroids import FULL, LINEAR, centroid
from .constructions import (inverse_map, symmetrize_zinbiel, transport,
                            untwist_candidate, yau_twist_dipterous,
                            zinbiel_to_dendriform)
from .core import HomDialgebra, LinearMap
from .derivations import derivation_space
from .invariants import ISOMORPHIC, compare, fingerprint

PROG = "dialg"


class CliError(Exception):
    """User-facing input/usage problem: message to stderr, exit 2."""


def _load_target(spec):
    if spec.startswith("catalog:"):
        entry_id = spec[len("catalog:"):]
        try:
            return catalog.get(entry_id)
        except KeyError as exc:
            raise CliError(str(exc.args[0]))
    try:
        return fileformat.load(spec)
    except OSError as exc:
        raise CliError("cannot read %s: %s" % (spec, exc.strerror or exc))
    except fileformat.FileFormatError as exc:
        raise CliError("%s: %s" % (spec, exc))


def _need_dialgebra(obj, what):
    if not isinstance(obj, HomDialgebra):
        raise CliError("%s needs a dialgebra target, got kind %r"
                       % (what, obj.kind))
    return obj


def _need_kind(obj, kind, what):
    if not isinstance(obj, Satellite) or obj.kind != kind:
        got = obj.kind if isinstance(obj, Satellite) else "dialgebra"
        raise CliError("%s needs a %s target, got kind %r" % (what, kind, got))
    return obj


def _describe(obj):
    kind = "dialgebra" if isinstance(obj, HomDialgebra) else obj.kind
    return "%s (%s, dim %d, %s)" % (obj.name, kind, obj.n, obj.backend)


def _matrix_lines(M, indent="  "):
    return [indent + " ".join(scalars.format_scalar(v) for v in row)
            for row in M.m]


def _print_space(space, n, backend, out):
    out.append("dim %d" % space.dim)
    for idx, M in enumerate(space.maps(n, backend), 1):
        out.append("basis %d:" % idx)
        out.extend(_matrix_lines(M))


# ----------------------------------------------------------------------
# subcommands
# ----------------------------------------------------------------------

def _cmd_verify(args):
    obj = _load_target(args.target)
    if isinstance(obj, HomDialgebra):
        ax = check_dialgebra(obj)
        mult = check_multiplicativity(obj)
        noun = "axioms"
    else:
        ax = catalog.check_satellite(obj)
        mult = check_table_multiplicativity(sorted(obj.ops.items()), obj.alpha)
        noun = "identities"
    if args.json:
        doc = {"id": obj.name, "axioms": _axioms_json(ax),
               "multiplicative": mult.ok,
               "multiplicativity": _axioms_json(mult)}
        print(json.dumps(doc, indent=2))
        return 0 if (ax.ok and mult.ok) else 1
    lines = [_describe(obj)]
    passed = 0
    for rec in ax.records:
        if rec.passed:
            lines.append("%s pass" % rec.id)
            passed += 1
        else:
            first = rec.violations[0]
            lines.append("%s FAIL (%d violations; first at %s)"
                         % (rec.id, len(rec.violations), first[0]))
    lines.append("%d/%d %s pass" % (passed, len(ax.records), noun))
    for rec in mult.records:
        if rec.passed:
            lines.append("%s pass" % rec.id)
        else:
            lines.append("%s FAIL (%d violations; first at %s)"
                         % (rec.id, len(rec.violations), rec.violations[0][0]))
    lines.append("multiplicativity %s" % ("passes" if mult.ok else "fails"))
    print("\n".join(lines))
    return 0 if (ax.ok and mult.ok) else 1


def _cmd_der(args):
    A = _need_dialgebra(_load_target(args.target), "der")
    space = derivation_space(A, args.k)
    if args.json:
        doc = {"id": A.name, "k": args.k, "dim": space.dim,
               "basis": [[[scalars.format_scalar(v) for v in row] for row in M.m]
                         for M in space.maps(A.n, A.backend)]}
        print(json.dumps(doc, indent=2))
        return 0
    out = ["derivations k=%d of %s" % (args.k, _describe(A))]
    _print_space(space, A.n, A.backend, out)
    print("\n".join(out))
    return 0


def _cmd_cent(args):
    A = _need_dialgebra(_load_target(args.target), "cent")
    result = centroid(A, args.variant)
    if args.json:
        doc = {"id": A.name, "variant": args.variant,
               "dim_linear": result.dim_linear,
               "closed": result.closed if args.variant == FULL else None,
               "dim_full_closed": (result.dim_full_closed
                                   if args.variant == FULL else None),
               "basis": [[[scalars.format_scalar(v) for v in row] for row in M.m]
                         for M in result.linear_space.maps(A.n, A.backend)]}
        print(json.dumps(doc, indent=2))
        return 0
    out = ["centroid (%s) of %s" % (args.variant, _describe(A))]
    _print_space(result.linear_space, A.n, A.backend, out)
    if args.variant == FULL:
        if result.closed:
            out.append("closed: yes (full = linear)")
        else:
            out.append("closed: no (%d quadratic constraints)"
                       % len(result.constraints))
    print("\n".join(out))
    return 0


def _cmd_fp(args):
    A = _need_dialgebra(_load_target(args.target), "fp")
    fp = fingerprint(A)
    if args.json:
        print(json.dumps({"id": A.name, "fingerprint": fp.as_dict()}, indent=2))
        return 0
    out = ["fingerprint of %s" % _describe(A)]
    for field, value in fp.as_dict().items():
        if isinstance(value, list):
            value = " ".join(str(v) for v in value)
        out.append("%s %s" % (field, value))
    print("\n".join(out))
    return 0


def _cmd_cmp(args):
    A = _need_dialgebra(_load_target(args.target1), "cmp")
    B = _need_dialgebra(_load_target(args.target2), "cmp")
    verdict = compare(A, B, search=args.search_iso, budget=args.budget,
                      seed=args.seed)
    if args.json:
        doc = {"a": A.name, "b": B.name, "verdict": verdict.kind,
               "witness": verdict.witness, "detail": verdict.detail,
               "residual": verdict.residual,
               "phi": ([[scalars.format_scalar(v) for v in row]
                        for row in verdict.phi.m] if verdict.phi else None)}
        print(json.dumps(doc, indent=2))
        return 0 if verdict.kind == ISOMORPHIC else 1
    out = ["%s vs %s" % (A.name, B.name), "verdict %s" % verdict.kind]
    if verdict.witness:
        line = "witness %s" % verdict.witness
        if (isinstance(verdict.detail, dict)
                and "a" in verdict.detail and "b" in verdict.detail):
            line += ": %s vs %s" % (verdict.detail["a"][verdict.witness],
                                    verdict.detail["b"][verdict.witness])
        out.append(line)
    elif isinstance(verdict.detail, str) and verdict.detail:
        out.append("detail %s" % verdict.detail)
    if verdict.phi is not None:
        out.append("phi:")
        out.extend(_matrix_lines(verdict.phi))
        out.append("residual %s" % verdict.residual)
    print("\n".join(out))
    return 0 if verdict.kind == ISOMORPHIC else 1


def _parse_param_overrides(text):
    out = {}
    if not text:
        return out
    for piece in text.split(","):
        name, eq, value = piece.partition("=")
        if not eq or not name.strip():
            raise CliError("--params expects name=value[,name=value...],"
                           " got %r" % piece)
        out[name.strip()] = value.strip()
    return out


def _cmd_catalog(args):
    if args.action == "list":
        rows = [(e.id, e.kind, e.dim, e.backend) for e in catalog.entries()]
        if args.json:
            print(json.dumps([{"id": i, "kind": k, "dim": d, "scalars": s}
                              for i, k, d, s in rows], indent=2))
            return 0
        width = max(len(r[0]) for r in rows)
        for i, k, d, s in rows:
            print("%-*s  %-10s dim %d  %s" % (width, i, k, d, s))
        return 0
    overrides = _parse_param_overrides(args.params)
    report = catalog.verify_all(param_overrides=overrides)
    if args.json:
        text = json.dumps(report.as_dict(), indent=2) + "\n"
    else:
        dash = lambda v: "-" if v is None else v
        lines = ["%-9s %-10s axioms %-4s mult %-3s der %s/%s cent %s(%s)/%s"
                 " discrepancies %d"
                 % (r["id"], r["kind"],
                    "ok" if all(a["pass"] for a in r["axioms"]) else "FAIL",
                    "yes" if r["multiplicative"] else "no",
                    dash(r["der_dim"]), dash(r["der_dim_paper"]),
                    dash(r["cent_dim_linear"]), dash(r["cent_dim_full_closed"]),
                    dash(r["cent_dim_paper"]), len(r["discrepancies"]))
                 for r in report.results]
        for cls in report.ranges:
            lines.append("dim %d: der %d..%d listed %d..%d %s |"
                         " cent %d..%d listed %d..%d %s"
                         % (cls["dim"],
                            cls["der"]["computed_min"], cls["der"]["computed_max"],
                            cls["der"]["printed_low"], cls["der"]["printed_high"],
                            "within" if cls["der"]["within"] else "OUTSIDE",
                            cls["cent"]["computed_min"], cls["cent"]["computed_max"],
                            cls["cent"]["printed_low"], cls["cent"]["printed_high"],
                            "within" if cls["cent"]["within"] else "OUTSIDE"))
        lines.append("%d entries, %d discrepancies"
                     % (len(report.results), report.discrepancy_count))
        text = "\n".join(lines) + "\n"
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            raise CliError("cannot write %s: %s" % (args.out, exc.strerror or exc))
    else:
        sys.stdout.write(text)
    return 1 if report.discrepancy_count else 0


def _read_matrix_file(path, n, backend):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = fh.read()
    except OSError as exc:
        raise CliError("cannot read %s: %s" % (path, exc.strerror or exc))
    rows = []
    for lineno, line in enumerate(raw.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if len(toks) != n:
            raise CliError("%s line %d: expected %d values, got %d"
                           % (path, lineno, n, len(toks)))
        try:
            rows.append([scalars.parse_scalar(t, backend) for t in toks])
        except (ValueError, ZeroDivisionError) as exc:
            raise CliError("%s line %d: %s" % (path, lineno, exc))
    if len(rows) != n:
        raise CliError("%s: expected %d rows, got %d" % (path, n, len(rows)))
    return LinearMap(n, rows, backend)


def random_invertible(n, backend, seed, tries=100):
    """Seeded random invertible map with small integer entries."""
    rng = random.Random(seed)
    for _ in range(tries):
        rows = [[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)]
        M = LinearMap(n, rows, backend)
        if inverse_map(M) is not None:
            return M
    raise CliError("no invertible matrix found in %d tries" % tries)


def _cmd_transport(args):
    A = _need_dialgebra(_load_target(args.target), "transport")
    if args.matrix:
        phi = _read_matrix_file(args.matrix, A.n, A.backend)
        if inverse_map(phi) is None:
            raise CliError("%s: matrix is singular" % args.matrix)
    else:
        phi = random_invertible(A.n, A.backend, args.seed)
    moved = transport(A, phi)
    sys.stdout.write(fileformat.serialize(moved))
    return 0


def _cmd_construct(args):
    obj = _load_target(args.target)
    op = args.operation
    try:
        if op == "zinbiel2dend":
            sat = _need_kind(obj, "zinbiel", op)
            prec, succ, alpha = zinbiel_to_dendriform(sat.ops["circ"], sat.alpha)
            out = Satellite("%s_dend" % sat.name, "dendriform", sat.n,
                            {"prec": prec, "succ": succ}, alpha)
            report_ok = True
        elif op == "symmetrize":
            sat = _need_kind(obj, "zinbiel", op)
            sym, report = symmetrize_zinbiel(sat.ops["circ"], sat.alpha)
            out = HomDialgebra("%s_sym" % sat.name, sym, sym, sat.alpha)
            report_ok = report.ok
        elif op == "diptwist":
            sat = _need_kind(obj, "dipterous", op)
            other = sat.ops["succ" if sat.side == "left" else "prec"]
            tstar, tother, alpha, report = yau_twist_dipterous(
                sat.ops["star"], other, sat.alpha, sat.side)
            roles = {"star": tstar,
                     ("succ" if sat.side == "left" else "prec"): tother}
            out = Satellite("%s_tw" % sat.name, "dipterous", sat.n, roles,
                            alpha, side=sat.side)
            report_ok = report.ok
        else:  # untwist
            A = _need_dialgebra(obj, op)
            out, report = untwist_candidate(A, use_inverse=args.inverse)
            report_ok = report.ok
    except ValueError as exc:
        raise CliError(str(exc))
    sys.stdout.write(fileformat.serialize(out))
    return 0 if report_ok else 1


# ----------------------------------------------------------------------
# parser
# ----------------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(
        prog=PROG,
        description="Verify, solve, compare, and transform algebras given by"
                    " structure constants.",
        epilog="Targets are file paths or catalog:<id>. Exit codes: 0 checks"
               " pass, 1 violations/discrepancies, 2 usage or input error.")
    sub = p.add_subparsers(dest="command", required=True)

    def add_json(sp):
        sp.add_argument("--json", action="store_true",
                        help="machine-readable output")

    sp = sub.add_parser("verify", help="axioms + multiplicativity")
    sp.add_argument("target")
    add_json(sp)
    sp.set_defaults(func=_cmd_verify)

    sp = sub.add_parser("der", help="derivation space")
    sp.add_argument("target")
    sp.add_argument("--k", type=int, default=1,
                    help="twist exponent (default 1)")
    add_json(sp)
    sp.set_defaults(func=_cmd_der)

    sp = sub.add_parser("cent", help="centroid")
    sp.add_argument("target")
    sp.add_argument("--variant", choices=[LINEAR, FULL], default=LINEAR)
    add_json(sp)
    sp.set_defaults(func=_cmd_cent)

    sp = sub.add_parser("fp", help="invariant fingerprint")
    sp.add_argument("target")
    add_json(sp)
    sp.set_defaults(func=_cmd_fp)

    sp = sub.add_parser("cmp", help="compare two algebras up to isomorphism")
    sp.add_argument("target1")
    sp.add_argument("target2")
    sp.add_argument("--search-iso", action="store_true",
                    help="numerically search for an isomorphism")
    sp.add_argument("--budget", type=int, default=200)
    sp.add_argument("--seed", type=int, default=0)
    add_json(sp)
    sp.set_defaults(func=_cmd_cmp)

    sp = sub.add_parser("catalog", help="bundled classification tables")
    sp.add_argument("action", choices=["list", "report"])
    sp.add_argument("--out", help="write the report to a file")
    sp.add_argument("--params",
                    help="parameter overrides name=value[,name=value...]")
    add_json(sp)
    sp.set_defaults(func=_cmd_catalog)

    sp = sub.add_parser("transport", help="conjugate by an invertible map")
    sp.add_argument("target")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--matrix", help="file with n rows of n values,"
                   " entry (i,j) = coefficient of e_i in phi(e_j)")
    g.add_argument("--random", action="store_true",
                   help="seeded random invertible map")
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=_cmd_transport)

    sp = sub.add_parser("construct", help="bridges and twists")
    sp.add_argument("operation",
                    choices=["zinbiel2dend", "symmetrize", "diptwist",
                             "untwist"])
    sp.add_argument("target")
    sp.add_argument("--inverse", action="store_true",
                    help="untwist with the inverse of the twist map")
    sp.set_defaults(func=_cmd_construct)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except CliError as exc:
        print("%s: error: %s" % (PROG, exc), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
