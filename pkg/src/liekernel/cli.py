"""Command-line interface: ``liekernel <command> ...``.

Exit codes: 0 when every check passes, 1 when a check fails, 2 for malformed
input or usage errors.  ``info-diff`` records never change the exit code.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .catalog import build_su2su2, build_sp2, build_su3, load_g2, nk_specs, sigma_values
from .gradings import (
    ConstraintError, FAMILY_NAMES, GradingError, family, find_positive_grading,
    grading_extension, table_entry, validate_grading,
)
from .kernelmap import dP, lie_kernel, restrict_to_P, stabilizer, two_plectic_check
from .liealg import JacobiError, betti_numbers, classify, is_23_trivial, jacobi_check
from .notation import NotationError, SchemaError, algebra_from_json, format_algebra, parse, print_algebra, to_json
from .report import VerificationReport
from .verify import SECTIONS, verify_all

CATALOG = {"su3": lambda: build_su3()[0], "sp2": lambda: build_sp2()[0], "su2su2": build_su2su2}


class UsageError(Exception):
    pass


def _parse_params(items) -> dict:
    out = {}
    for item in items or []:
        name, sep, value = item.partition("=")
        if not sep or not name:
            raise UsageError(f"--param expects name=value, got {item!r}")
        try:
            out[name.strip()] = Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"--param {name}: {value!r} is not a rational number") from None
    return out


def _load_algebra(source: str, params: dict, g2_path=None, check: bool = True):
    """An algebra from a catalog name, a JSON file or a structure string."""
    if source in CATALOG:
        return CATALOG[source]()
    if source == "g2":
        g = load_g2(g2_path)
        if g is None:
            raise UsageError("g2 data file not available")
        return g
    path = Path(source)
    if source.endswith(".json") and path.exists():
        return algebra_from_json(json.loads(path.read_text()), params, check=check)
    return parse(source).bind(params, check=check)


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=1, sort_keys=True))
    else:
        print(text)


def _weights(text: str) -> list:
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError:
        raise UsageError(f"weights must be integers, got {text!r}") from None


# --- commands --------------------------------------------------------------------------

def cmd_parse(args) -> int:
    pa = parse(args.algebra)
    _emit(args, to_json(pa), print_algebra(pa))
    return 0


def cmd_print(args) -> int:
    path = Path(args.algebra)
    if args.algebra.endswith(".json") and path.exists():
        from .notation import from_json
        pa = from_json(json.loads(path.read_text()))
    else:
        pa = parse(args.algebra)
    _emit(args, {"text": print_algebra(pa)}, print_algebra(pa))
    return 0


def cmd_betti(args) -> int:
    g = _load_algebra(args.algebra, _parse_params(args.param), args.g2_data)
    b = betti_numbers(g)
    _emit(args, {"betti": b, "23_trivial": is_23_trivial(g)},
          " ".join(f"b{i}={x}" for i, x in enumerate(b)))
    return 0


def cmd_check(args) -> int:
    g = _load_algebra(args.algebra, _parse_params(args.param), args.g2_data, check=False)
    wit = jacobi_check(g)
    if wit is not None:
        _emit(args, {"jacobi": False, "witness": wit}, f"Jacobi identity fails: {wit}")
        return 1
    c = classify(g)
    payload = {
        "jacobi": True, "dim": g.dim, "solvable": c.is_solvable, "nilpotent": c.is_nilpotent,
        "unimodular": c.is_unimodular, "derived_series": list(c.derived_series_dims),
        "lower_central_series": list(c.lower_central_dims), "23_trivial": is_23_trivial(g),
        "betti": betti_numbers(g),
    }
    _emit(args, payload, "\n".join(f"{k}: {v}" for k, v in payload.items()))
    return 0


def cmd_kernel(args) -> int:
    g = _load_algebra(args.algebra, _parse_params(args.param), args.g2_data)
    P = lie_kernel(g)
    doc = P.to_json(g.dim)
    lines = [f"dim P = {P.dim}"] + [_kvector_text(v, g.names) for v in P.kvectors(g.dim)]
    _emit(args, doc, "\n".join(lines))
    return 0


def _kvector_text(v, names) -> str:
    return " + ".join(f"{c}*" + "^".join(names[i] for i in t) for t, c in sorted(v.terms.items())) or "0"


def cmd_orbit(args) -> int:
    specs = {s.name: s for s in nk_specs(args.g2_data)}
    if args.name not in specs:
        raise UsageError(f"unknown orbit {args.name!r}; expected one of {', '.join(specs)}")
    spec = specs[args.name]
    if spec.algebra is None:
        raise UsageError("g2 data file not available")
    g = spec.algebra
    beta = restrict_to_P(g, spec.beta, lie_kernel(g))
    psi = dP(g, beta)
    stab = stabilizer(g, beta)
    plectic = two_plectic_check(g, beta, spec.metric)
    ok = psi == spec.expected_dPbeta and stab.dim == spec.expected_stab_dim and plectic
    payload = {
        "algebra": args.name, "dP_beta": psi.to_json(), "dP_matches": psi == spec.expected_dPbeta,
        "stabilizer_dim": stab.dim, "expected_stabilizer_dim": spec.expected_stab_dim,
        "two_plectic": plectic, "sigma": [str(x) for x in sigma_values(spec)],
    }
    _emit(args, payload, "\n".join(f"{k}: {v}" for k, v in payload.items() if k != "dP_beta"))
    return 0 if ok else 1


def cmd_grading(args) -> int:
    g = _load_algebra(args.algebra, _parse_params(args.param))
    if args.validate is not None:
        w = _weights(args.validate)
        if len(w) != g.dim:
            raise UsageError(f"{len(w)} weights for a {g.dim}-dimensional algebra")
        ok = validate_grading(g, w)
        _emit(args, {"weights": w, "valid": ok}, "valid" if ok else "not a positive grading")
        return 0 if ok else 1
    found = find_positive_grading(g)
    if found is None:
        _emit(args, {"weights": None}, "no positive grading")
        return 1
    _emit(args, {"weights": found.to_json()}, " ".join(str(x) for x in found.weights))
    return 0


def cmd_extend(args) -> int:
    k = _load_algebra(args.algebra, _parse_params(args.param))
    ext = grading_extension(k, _weights(args.weights))
    _emit(args, {**to_json(ext), "text": format_algebra(ext), "23_trivial": is_23_trivial(ext)},
          format_algebra(ext))
    return 0


def cmd_family(args) -> int:
    params = _parse_params(args.param)
    if args.k is not None:
        params["k"] = args.k
    g = family(args.name, args.n, params)
    _emit(args, {**to_json(g), "text": format_algebra(g)}, format_algebra(g))
    return 0


def cmd_table(args) -> int:
    table, _, rest = args.id.partition(".")
    if table not in ("T1", "T2", "T3") or not rest:
        raise UsageError(f"table ids look like T1.07, T2.r3.lambda or T3.d5_2.lambda; got {args.id!r}")
    res = table_entry(table, args.id, _parse_params(args.param))
    payload = {
        "id": res.entry.id, "structure": res.entry.structure, "text": format_algebra(res.algebra),
        "admissible": res.admissible, "violated": [list(v) for v in res.violated],
    }
    text = f"{format_algebra(res.algebra)}\nadmissible: {res.admissible}"
    if res.violated:
        text += "\nviolated: " + ", ".join(label for label, _ in res.violated)
    _emit(args, payload, text)
    return 0


def cmd_verify(args) -> int:
    sections = args.section or list(SECTIONS)
    rep: VerificationReport = verify_all(sections, args.g2_data)
    if args.json:
        print(json.dumps(rep.to_json(), indent=1))
    else:
        print(rep.format_text())
    return rep.exit_code()


# --- argument parsing -------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--param", action="append", metavar="NAME=P/Q", help="bind a parameter (repeatable)")
    common.add_argument("--g2-data", metavar="PATH", help="g2 structure-constant file")

    p = argparse.ArgumentParser(prog="liekernel", description="Lie kernels and (2,3)-trivial Lie algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, algebra=True):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        if algebra:
            sp.add_argument("algebra", help="structure string, JSON file, or su3/sp2/su2su2/g2")
        sp.set_defaults(func=func)
        return sp

    add("parse", cmd_parse, "parse a structure string")
    add("print", cmd_print, "print an algebra in canonical notation")
    add("betti", cmd_betti, "Betti numbers")
    add("check", cmd_check, "Jacobi identity, classification and (2,3)-triviality")
    add("kernel", cmd_kernel, "basis of the Lie kernel")
    sp = add("orbit", cmd_orbit, "dP, stabilizer and 2-plectic test for a nearly Kähler orbit", algebra=False)
    sp.add_argument("name", help="su3, sp2, su2su2 or g2")
    sp = add("grading", cmd_grading, "find or validate a positive grading")
    mode = sp.add_mutually_exclusive_group()
    mode.add_argument("--find", action="store_true", help="find the minimal positive grading (default)")
    mode.add_argument("--validate", metavar="WEIGHTS", help="check the given weights, e.g. '1 1 2'")
    sp = add("extend", cmd_extend, "extension by the derivation of a positive grading")
    sp.add_argument("weights", help="weights, e.g. '1 1 2'")
    sp = add("family", cmd_family, "member of an infinite family", algebra=False)
    sp.add_argument("name", choices=FAMILY_NAMES)
    sp.add_argument("n", type=int)
    sp.add_argument("--k", type=int, help="block size for r_nk and r_nlk")
    sp = add("table", cmd_table, "table entry with its admissibility verdict", algebra=False)
    sp.add_argument("id")
    sp = add("verify-paper", cmd_verify, "run the verification suites", algebra=False)
    sp.add_argument("--section", action="append", choices=SECTIONS, help="restrict to a section (repeatable)")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) and 2
    try:
        return args.func(args)
    except (UsageError, NotationError, SchemaError, ConstraintError, GradingError, JacobiError,
            KeyError, ValueError) as exc:
        msg = exc.args[0] if exc.args else str(exc)
        print(f"liekernel: error: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
