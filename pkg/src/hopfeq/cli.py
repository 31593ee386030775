"""Command line front end.

Subcommands: check (equation verdicts), frt (B(R) presentation, completion,
dimension, tables), verify (the unconditional chi identities), enumerate
(brute force over a prime field). Exit codes: 0 ok, 2 malformed input,
3 field parse failure, 4 precondition violated, 5 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import bialgebras, frt, hopfmodules, rewriting, tensorops
from .fields import FieldError, parse_field
from .fixtures import FIXTURE_NAMES, FixtureError, build_fixture
from .frt import NotCommutativeSolutionError, NotHopfSolutionError
from .tensorops import CapExceededError, TensorOp

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_FIELD = 3
EXIT_PRECONDITION = 4
EXIT_CAP = 5


class CliInputError(Exception):
    pass


def _load_operator(args) -> TensorOp:
    if args.fixture and args.matrix:
        raise CliInputError("give either --fixture or a matrix file, not both")
    if args.fixture:
        field = parse_field(args.field)
        return build_fixture(args.fixture, field)
    if args.matrix:
        try:
            with open(args.matrix) as fh:
                doc = json.load(fh)
        except OSError as exc:
            raise CliInputError(f"cannot read {args.matrix}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise CliInputError(f"not valid JSON: {exc}") from exc
        try:
            return TensorOp.from_json(doc)
        except FieldError:
            raise
        except Exception as exc:
            raise CliInputError(f"bad matrix document: {exc}") from exc
    raise CliInputError("need --fixture <id> or a matrix file")


def _print_bools(pairs):
    width = max(len(k) for k, _ in pairs)
    for k, v in pairs:
        print(f"{k:<{width}}  {'true' if v else 'false'}")


def _generator_names(n, rs=None):
    """Paper lettering x=c11, y=c22, z=c12 when n=2 and c21 rewrites to 0."""
    names = [f"c[{i + 1},{j + 1}]" for i in range(n) for j in range(n)]
    if n == 2 and rs is not None:
        c21_to_zero = any(r.lhs == (2,) and r.tail.is_zero() for r in rs.rules)
        if c21_to_zero:
            names = ["x", "z", "c[2,1]", "y"]
    return names


def _render_poly(poly, names):
    if poly.is_zero():
        return "0"
    parts = []
    for w, c in poly.sorted_terms():
        mono = "*".join(names[k] for k in w) if w else "1"
        cs = poly.field.render(c)
        if w and cs == "1":
            parts.append(mono)
        elif w and cs == "-1":
            parts.append(f"-{mono}")
        elif w:
            parts.append(f"{cs}*{mono}")
        else:
            parts.append(cs)
    return " + ".join(parts).replace("+ -", "- ")


def cmd_check(args):
    R = _load_operator(args)
    report = tensorops.solution_report(R)
    if args.json:
        print(json.dumps({"input": R.to_json(), "report": report}, indent=2))
    else:
        _print_bools(list(report.items()))
    return EXIT_OK


def cmd_frt(args):
    R = _load_operator(args)
    if args.commutative:
        pres = frt.frt_commutative(R, force=args.force)
    else:
        pres = frt.frt_presentation(R, force=args.force)
    annihilates = None
    if args.force and not tensorops.check_hopf(R):
        # coideal property still holds for the chi ideal; annihilation may not
        annihilates = hopfmodules.check_annihilation(
            pres, hopfmodules.module_from_R(R))
    rs = rewriting.complete(pres.relations, max_degree=args.max_deg)
    report = rewriting.dimension(rs, max_len=args.max_deg)
    names = _generator_names(R.n, rs)
    chi_index = dict(zip((id(r) for r in pres.relations), pres.chi_origin))

    doc = {
        "presentation": pres.to_json(),
        "rewrite_system": rs.to_json(),
        "dimension": {
            "kind": report.kind,
            "count": report.count,
            "hilbert_prefix": report.hilbert_prefix,
            "word_length_cap": report.word_length_cap,
        },
    }
    if annihilates is not None:
        doc["annihilates_module"] = annihilates
    quotient = None
    if report.is_finite():
        quotient = rewriting.quotient_bialgebra(pres, rs, max_len=args.max_deg)
        doc["basis"] = quotient.basis_labels
        if args.tables:
            doc["tables"] = quotient.to_json()

    if args.json:
        print(json.dumps(doc, indent=2))
        return EXIT_OK

    print(f"generators: n = {R.n} ({R.n * R.n} comatrix symbols)")
    if annihilates is not None:
        print(f"warning: not a Hopf solution; chi relations annihilate V: "
              f"{'true' if annihilates else 'false'}")
    print(f"relations ({len(pres.relations)}, paper index order"
          f"{', commutators adjoined' if pres.commutative_closure else ''}):")
    for k, r in enumerate(pres.relations):
        origin = pres.chi_origin[k] if k < len(pres.chi_origin) else None
        tag = f"chi{tuple(x + 1 for x in origin)}: " if origin is not None else "[comm] "
        print(f"  {tag}{_render_poly(r, names)}")
    print(f"completion: {rs.status} (max degree {rs.max_degree}), {len(rs.rules)} rules")
    for r in rs.rules:
        lhs = "*".join(names[k] for k in r.lhs) if r.lhs else "1"
        print(f"  {lhs} -> {_render_poly(r.tail, names)}")
    if report.is_finite():
        print(f"dimension: finite, {report.count}")
    else:
        print(f"dimension: lower bound {report.count} at word length {report.word_length_cap}")
    print(f"irreducible words by degree: {report.hilbert_prefix}")
    if quotient is not None:
        basis = [
            "*".join(names[k] for k in w) if w else "1" for w in quotient.basis_words
        ]
        print(f"basis: {{{', '.join(basis)}}}")
        if args.tables:
            _print_tables(quotient, basis)
    return EXIT_OK


def _print_tables(B, basis):
    f = B.field

    def vec_text(vec):
        parts = []
        for c, label in zip(vec, basis):
            if c == f.zero:
                continue
            cs = f.render(c)
            parts.append(label if cs == "1" else f"{cs}*{label}")
        return " + ".join(parts) if parts else "0"

    print("multiplication:")
    for i in range(B.dim):
        for j in range(B.dim):
            print(f"  {basis[i]} . {basis[j]} = {vec_text(B.mult[i][j])}")
    print("comultiplication:")
    for i in range(B.dim):
        parts = []
        for u in range(B.dim):
            for v in range(B.dim):
                c = B.comult[i][u][v]
                if c != f.zero:
                    cs = f.render(c)
                    head = "" if cs == "1" else f"{cs}*"
                    parts.append(f"{head}{basis[u]}(x){basis[v]}")
        print(f"  Delta({basis[i]}) = {' + '.join(parts) if parts else '0'}")
    print("counit:")
    for i in range(B.dim):
        print(f"  eps({basis[i]}) = {f.render(B.counit[i])}")


def _verify_one(R):
    return {
        "delta_chi": frt.verify_delta_chi(R),
        "eps_chi_zero": frt.eps_chi_zero(R),
        "defect_identity": frt.verify_defect_identity(R),
        "commutator_identity": frt.verify_commutator_identity(R),
    }


def cmd_verify(args):
    if args.random:
        field = parse_field(args.field)
        rng = random.Random(args.seed)
        results = []
        for _ in range(args.random):
            R = tensorops.random_tensorop(args.n, field, rng)
            results.append(_verify_one(R))
        agg = {k: all(r[k] for r in results) for k in results[0]}
        if args.json:
            print(json.dumps({"samples": args.random, "seed": args.seed,
                              "all_hold": agg}, indent=2))
        else:
            print(f"random samples: {args.random} (n={args.n}, field={args.field}, "
                  f"seed={args.seed})")
            _print_bools(list(agg.items()))
        return EXIT_OK
    R = _load_operator(args)
    report = _verify_one(R)
    if args.json:
        print(json.dumps({"report": report}, indent=2))
    else:
        _print_bools(list(report.items()))
    return EXIT_OK


def cmd_enumerate(args):
    field = parse_field(args.field)
    solutions = tensorops.enumerate_solutions(
        args.n, field, which=args.eq, cap=args.cap, jobs=args.jobs
    )
    table = {}
    for R in solutions:
        key = (
            tensorops.check_commutative(R),
            tensorops.check_cocommutative(R),
            tensorops.is_bijective(R),
        )
        table[key] = table.get(key, 0) + 1
    if args.json:
        doc = {
            "n": args.n,
            "field": args.field,
            "equation": args.eq,
            "count": len(solutions),
            "classification": [
                {"commutative": k[0], "cocommutative": k[1], "bijective": k[2],
                 "count": v}
                for k, v in sorted(table.items())
            ],
        }
        if args.dump:
            doc["solutions"] = [R.to_json() for R in solutions]
        print(json.dumps(doc, indent=2))
        return EXIT_OK
    print(f"solutions of {args.eq} over {args.field}, n={args.n}: {len(solutions)}")
    print("commutative  cocommutative  bijective  count")
    for k in sorted(table):
        print(f"{str(k[0]):<12} {str(k[1]):<14} {str(k[2]):<10} {table[k]}")
    if args.dump:
        for R in solutions:
            print(json.dumps(R.to_json()))
    return EXIT_OK


def _add_input_args(p):
    p.add_argument("matrix", nargs="?", help="matrix JSON file")
    p.add_argument("--fixture", help="fixture id, e.g. char2 or r_q:1")
    p.add_argument("--field", default="q", help="field descriptor: q | fp:<p>")


def build_parser():
    root = argparse.ArgumentParser(
        prog="hopfeq",
        description="Exact decision procedures for the Hopf/pentagon/QYBE equations "
                    "and the FRT-type bialgebra construction B(R).",
        epilog="fixtures: " + ", ".join(FIXTURE_NAMES),
    )
    sub = root.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="equation verdicts for an operator")
    _add_input_args(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("frt", help="B(R) presentation, completion and dimension")
    _add_input_args(p)
    p.add_argument("--commutative", action="store_true", help="build the commutative variant")
    p.add_argument("--max-deg", type=int, default=8)
    p.add_argument("--force", action="store_true", help="build even for non-solutions")
    p.add_argument("--tables", action="store_true", help="print quotient structure tables")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_frt)

    p = sub.add_parser("verify", help="the unconditional chi identities")
    _add_input_args(p)
    p.add_argument("--random", type=int, metavar="N", help="run on N random operators")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="brute-force all solutions over F_p")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--field", required=True)
    p.add_argument("--eq", default="hopf",
                   choices=sorted(["hopf", "pentagon", "qybe", "commutative",
                                   "cocommutative"]))
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--cap", type=int, default=2**24)
    p.add_argument("--dump", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_enumerate)
    return root


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FieldError as exc:
        print(f"field error: {exc}", file=sys.stderr)
        return EXIT_FIELD
    except (CliInputError, FixtureError, ValueError) as exc:
        if isinstance(exc, (NotHopfSolutionError, NotCommutativeSolutionError,
                            bialgebras.MissingAntipodeError)):
            print(f"precondition: {exc}", file=sys.stderr)
            return EXIT_PRECONDITION
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapExceededError as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
