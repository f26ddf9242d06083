"""Command-line front end.

Every command prints one JSON report per input (one line each, keys
sorted, numbers as decimal strings) so runs are byte-reproducible.
Exit codes: 0 success, 2 usage, 3 invalid diagram, 4 enumeration budget
exceeded.  KNOTCODE_BUDGET overrides the default enumeration budget.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import math
import os
import sys
import warnings

from .laurent import LaurentPoly
from .fields import FqField, is_prime
from .diagram import Diagram, DiagramError
from . import generators as gen
from . import coloring as col
from . import codes as cd
from . import cable as cab
from .exactlin import RingFpT, RingZ, snf

SCHEMA = "knotcode/1"

EXIT_USAGE = 2
EXIT_BAD_DIAGRAM = 3
EXIT_BUDGET = 4


class UsageError(ValueError):
    pass


def _stringify(x):
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, int):
        return str(x)
    if isinstance(x, float):
        return "inf" if math.isinf(x) else str(x)
    if isinstance(x, LaurentPoly):
        return {"min_deg": str(x.min_deg), "coeffs": [str(c) for c in x.coeffs], "text": str(x)}
    if isinstance(x, dict):
        return {k: _stringify(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_stringify(v) for v in x]
    return x


def emit(report: dict, out=None):
    (out or sys.stdout).write(json.dumps(_stringify(report), sort_keys=True, separators=(",", ":")) + "\n")


def report_for(command: str, inputs: dict, outputs: dict, warn=()):
    return {
        "schema": SCHEMA,
        "command": command,
        "inputs": inputs,
        "outputs": outputs,
        "warnings": list(warn),
    }


def _digest(path: str) -> str:
    with open(path, "rb") as fh:
        return hashlib.sha256(fh.read()).hexdigest()


def load_diagram(path: str) -> Diagram:
    try:
        with open(path) as fh:
            d = Diagram.from_json(json.load(fh))
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise DiagramError(f"{path}: cannot parse diagram: {exc}") from exc
    rep = d.validate()
    if not rep.ok:
        raise DiagramError(f"{path}: " + "; ".join(rep.violations))
    return d


def diagram_paths(path: str) -> list[str]:
    if os.path.isdir(path):
        names = sorted(f for f in os.listdir(path) if f.endswith(".json"))
        if not names:
            raise UsageError(f"{path}: no .json diagram files")
        return [os.path.join(path, f) for f in names]
    return [path]


# -- field / t parsing -----------------------------------------------------------


def parse_field(qtext: str, modulus: str | None) -> FqField:
    if "^" in qtext:
        p_s, a_s = qtext.split("^", 1)
        p, a = int(p_s), int(a_s)
    else:
        q = int(qtext)
        p, a = _factor_prime_power(q)
    if not is_prime(p):
        raise UsageError(f"field size {qtext} is not a prime power")
    if a == 1:
        if modulus is not None:
            raise UsageError("--modulus only applies to extension fields")
        return FqField(p)
    if modulus is None:
        raise UsageError(f"extension field of degree {a} needs --modulus c0,c1,...,1")
    coeffs = [int(c) for c in modulus.split(",")]
    if len(coeffs) != a + 1:
        raise UsageError(f"--modulus must have degree {a}")
    try:
        return FqField(p, coeffs)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _factor_prime_power(q: int):
    if q < 2:
        raise UsageError(f"{q} is not a prime power")
    for p in range(2, q + 1):
        if q % p == 0:
            a = 0
            while q % p == 0:
                q //= p
                a += 1
            if q != 1:
                raise UsageError("field size is not a prime power")
            return p, a
    raise UsageError("field size is not a prime power")


def parse_t(field: FqField, text: str):
    """-1 is sugar for p-1; 'alpha' for the residue of x; comma lists are
    ascending coefficient vectors."""
    if text == "alpha":
        if field.a == 1:
            raise UsageError("'alpha' needs an extension field")
        return field.element([0, 1])
    if "," in text:
        return field.element([int(c) for c in text.split(",")])
    return field.element(int(text))


# -- subcommands -------------------------------------------------------------------


def cmd_gen(args) -> int:
    inputs = None
    if args.family == "sum":
        # file problems exit 3; only bad parameters count as usage errors
        inputs = (load_diagram(args.files[0]), load_diagram(args.files[1]))
    try:
        if args.family == "builtin":
            d = gen.builtin(args.name)
        elif args.family == "torus":
            d = gen.torus_diagram(args.a, args.b)
        elif args.family == "pretzel":
            d = gen.pretzel_diagram(args.twists)
        else:
            d1, d2 = inputs
            arc1 = args.arc1 if args.arc1 is not None else max(d1.arcs.values(), default=0)
            arc2 = args.arc2 if args.arc2 is not None else max(d2.arcs.values(), default=0)
            d = gen.connected_sum(d1, arc1, d2, arc2)
    except DiagramError as exc:
        raise UsageError(str(exc)) from exc
    text = d.dumps()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_invariants(args, command="invariants") -> int:
    for path in diagram_paths(args.diagram):
        d = load_diagram(path)
        delta = col.alexander_polynomial(d)
        outputs = {
            "alexander": delta,
            "determinant": abs(delta.eval_int(-1)),
            "value_at_1": delta.eval_int(1),
        }
        if command == "invariants":
            outputs.update(
                {
                    "crossings": d.n,
                    "arcs": d.arc_count,
                    "regions": d.region_count,
                }
            )
            if 1 <= d.n <= args.minor_limit:
                fam = col.minor_family(d, "fox", 1)
                outputs["minors_agree_up_to_units"] = all(
                    m.is_zero or m.unit_ratio(delta) is not None for m in fam
                )
        emit(report_for(command, {"file": path, "sha256": _digest(path)}, outputs))
    return 0


def cmd_matrix(args) -> int:
    for path in diagram_paths(args.diagram):
        d = load_diagram(path)
        mat = col.fox_matrix(d) if args.kind == "fox" else col.dehn_matrix(d)
        emit(report_for("matrix", {"file": path, "sha256": _digest(path), "kind": args.kind}, mat.to_json()))
    return 0


def cmd_code(args) -> int:
    field = parse_field(args.q, args.modulus)
    t = parse_t(field, args.t)
    worst = 0
    budget = args.budget if args.budget is not None else cd.default_budget()
    for path in diagram_paths(args.diagram):
        d = load_diagram(path)
        warn = []
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            code = cd.code_from_diagram(d, field, t, kind=args.kind)
            warn += [str(w.message) for w in caught]
        profile = cd.ldpc_profile(code)
        outputs = {
            "n": code.n,
            "k": code.k,
            "q": field.q,
            "ldpc": {
                "row": profile.right_regular,
                "col": profile.left_regular,
                "row_weights": list(profile.row_weights),
                "col_weights": list(profile.col_weights),
            },
            "dual_feasible": cd.dual_knot_feasibility(code).to_json(),
        }
        status = 0
        if args.min_dist:
            dist = cd.min_distance(code, budget)
            if dist is None:
                warn.append(f"minimum distance needs {field.q}^{code.k} codewords > budget {budget}")
                status = EXIT_BUDGET
            outputs["d"] = dist
        if args.weights:
            try:
                outputs["weights"] = cd.weight_enumerator(code, budget).to_json()
            except cd.BudgetExceeded as exc:
                warn.append(str(exc))
                status = EXIT_BUDGET
        emit(report_for("code", {"file": path, "sha256": _digest(path), "q": field.q, "t": list(t.coeffs), "kind": args.kind}, outputs, warn))
        worst = max(worst, status)
    return worst


def cmd_snf(args) -> int:
    with open(args.matrix) as fh:
        obj = json.load(fh)
    entries = obj["entries"] if isinstance(obj, dict) else obj
    if args.ring == "Z":
        rows = [[int(x) for x in row] for row in entries]
        res = snf(rows, RingZ())
        factors = [str(dd) for dd in res.invariant_factors]
    else:
        if args.p is None:
            raise UsageError("--ring FpT needs --p")
        ring = RingFpT(args.p)
        rows = [[_parse_fp_entry(x, args.p) for x in row] for row in entries]
        res = snf(rows, ring)
        factors = [[str(c) for c in dd] for dd in res.invariant_factors]
    emit(
        report_for(
            "snf",
            {"file": args.matrix, "sha256": _digest(args.matrix), "ring": args.ring},
            {"invariant_factors": factors, "rank": res.rank},
        )
    )
    return 0


def _parse_fp_entry(x, p):
    from .fields import fp_trim

    if isinstance(x, dict):
        poly = LaurentPoly.make([int(c) for c in x["coeffs"]], int(x["min_deg"]))
        if poly.min_deg < 0:
            raise UsageError("matrix entries over F_p[T] cannot have negative exponents")
        return fp_trim([0] * poly.min_deg + list(poly.coeffs), p)
    if isinstance(x, list):
        return fp_trim([int(c) for c in x], p)
    return fp_trim([int(x)], p)


def cmd_colorings(args) -> int:
    for path in diagram_paths(args.diagram):
        d = load_diagram(path)
        if args.mod is not None:
            t = int(args.t)
            count = col.count_colorings_mod(d, args.mod, t)
            inputs = {"file": path, "sha256": _digest(path), "modulus": args.mod, "t": t}
            colorable = count > args.mod
        else:
            p_s, coeffs_s = args.poly_mod.split(":", 1)
            p = int(p_s)
            f = tuple(int(c) for c in coeffs_s.split(","))
            t = _parse_poly_t(args.t, p)
            count = col.count_colorings_poly_mod(d, p, f, t)
            inputs = {"file": path, "sha256": _digest(path), "p": p, "modulus_poly": list(f), "t": list(t)}
            colorable = count > p ** (len(col._as_fp_poly(f, p)) - 1)
        emit(report_for("colorings", inputs, {"count": count, "nontrivially_colorable": colorable}))
    return 0


def _parse_poly_t(text: str, p: int):
    if "," in text:
        return tuple(int(c) for c in text.split(","))
    return (int(text) % p,)


def cmd_cable(args) -> int:
    field = parse_field(args.q, args.modulus)
    t = parse_t(field, args.t)
    nums = [int(x) for x in args.pairs.split(",")]
    if len(nums) % 2 or not nums:
        raise UsageError("--pairs needs a1,b1[,a2,b2,...]")
    pairs = [(nums[i], nums[i + 1]) for i in range(0, len(nums), 2)]

    t_step = [None] * (len(pairs) + 1)
    t_step[len(pairs)] = field.element(t)
    for i in range(len(pairs), 0, -1):
        t_step[i - 1] = t_step[i] ** abs(pairs[i - 1][1])

    inputs = {"pairs": [list(p) for p in pairs], "q": field.q, "t": list(t.coeffs)}
    if args.base:
        base_d = load_diagram(args.base)
        seq = cab.ideal_seq_from_diagram(base_d, field, t_step[0])
        inputs["base"] = args.base
        inputs["base_sha256"] = _digest(args.base)
    else:
        seq = cab.unknot_ideal_seq(field, t_step[0])
        inputs["base"] = "unknot"
    rows = [{"dim": seq.dimension, "stage": "base", "t": list(seq.t.coeffs)}]
    for i, (a, b) in enumerate(pairs, start=1):
        delta = cab.torus_delta(field, a, b, t_step[i])
        seq = cab.cable_ideal_seq(seq, a, b, t_step[i])
        row = {
            "stage": i,
            "a": a,
            "b": b,
            "t": list(seq.t.coeffs),
            "delta": list(delta.coeffs),
            "dim": seq.dimension,
        }
        rows.append(row)
    outputs = {"steps": rows, "dim": seq.dimension}
    p0 = pairs[0]
    if not args.base and all(pr == p0 for pr in pairs) and p0[0] == 2 and p0[1] % 2 and is_prime(p0[1]):
        outputs["lengths"] = [cab.iterated_cable_length(p0[1], m) for m in range(1, len(pairs) + 1)]
    emit(report_for("cable", inputs, outputs))
    return 0


def cmd_sum(args) -> int:
    field = parse_field(args.q, args.modulus)
    t = parse_t(field, args.t)
    d1 = load_diagram(args.files[0])
    d2 = load_diagram(args.files[1])
    c1 = cd.code_from_diagram(d1, field, t)
    c2 = cd.code_from_diagram(d2, field, t)
    pos1 = args.pos1 if args.pos1 is not None else c1.n - 1
    pos2 = args.pos2 if args.pos2 is not None else c2.n - 1
    total = cd.sum_code(c1, pos1, c2, pos2)
    budget = args.budget if args.budget is not None else cd.default_budget()
    outputs = {"n": total.n, "k": total.k, "q": field.q}
    warn = []
    status = 0
    try:
        c1p = cd.subcode_last_zero(c1, pos1)
        c2p = cd.subcode_last_zero(c2, pos2)
        outputs["d"] = cd.sum_min_distance(c1, c1p, c2, c2p, budget)
        if args.weights:
            outputs["weights"] = cd.sum_weight_enumerator(c1, c1p, c2, c2p, budget).to_json()
    except cd.BudgetExceeded as exc:
        warn.append(str(exc))
        status = EXIT_BUDGET
    emit(
        report_for(
            "sum",
            {
                "files": list(args.files),
                "sha256": [_digest(f) for f in args.files],
                "q": field.q,
                "t": list(t.coeffs),
                "positions": [pos1, pos2],
            },
            outputs,
            warn,
        )
    )
    return status


def cmd_check(args) -> int:
    worst = 0
    for path in diagram_paths(args.diagram):
        d = load_diagram(path)
        failures = []
        checks = []

        def run(name, fn):
            try:
                ok = bool(fn())
            except Exception as exc:  # a failed invariant, not a crash
                ok = False
                name = f"{name}: {exc}"
            checks.append({"name": name, "ok": ok})
            if not ok:
                failures.append(name)

        rep = d.validate()
        run("validates", lambda: rep.ok)
        if rep.ok and d.n >= 1:
            fox = col.fox_matrix(d)
            run("row_sums_zero", lambda: all(_row_sum_zero(row) for row in fox.entries))
            delta = col.alexander_polynomial(d)
            run("alexander_value_at_1_is_unit", lambda: abs(delta.eval_int(1)) == 1)
            run("arc_count", lambda: d.arc_count == d.n)
            run("region_count", lambda: d.region_count == d.n + 2)
            run("checkerboard_exists", lambda: len(set(d.checkerboard.values())) <= 2)
            run("region_index_steps", lambda: _index_steps_ok(d))
            if d.n <= args.minor_limit:
                fam = col.minor_family(d, "fox", 1)
                run(
                    "fox_minors_agree_up_to_units",
                    lambda: all(m.is_zero or m.unit_ratio(delta) is not None for m in fam),
                )
            for p in (3, 5):
                field = FqField(p)
                run(
                    f"dehn_kernel_exceeds_fox_by_one_F{p}",
                    lambda field=field: cd.code_from_diagram(d, field, -1, kind="dehn").k
                    == cd.code_from_diagram(d, field, -1).k + 1,
                )
        emit(
            report_for(
                "check",
                {"file": path, "sha256": _digest(path)},
                {"ok": not failures, "checks": checks, "first_failure": failures[0] if failures else None},
            )
        )
        if failures:
            worst = EXIT_BAD_DIAGRAM
    return worst


def _row_sum_zero(row):
    total = row[0]
    for e in row[1:]:
        total = total + e
    return total.is_zero


def _index_steps_ok(d: Diagram) -> bool:
    idx = d.region_index
    return all(idx[d.regions[(e, "left")]] - idx[d.regions[(e, "right")]] == 1 for e in range(2 * d.n))


# -- parser ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="knotcode", description="codes from knot diagram colorings")
    sub = ap.add_subparsers(dest="cmd", required=True)

    g = sub.add_parser("gen", help="generate a diagram file")
    gsub = g.add_subparsers(dest="family", required=True)
    gb = gsub.add_parser("builtin")
    gb.add_argument("name", choices=gen.builtin_names())
    gt = gsub.add_parser("torus")
    gt.add_argument("--a", type=int, required=True)
    gt.add_argument("--b", type=int, required=True)
    gp = gsub.add_parser("pretzel")
    gp.add_argument("twists", type=int, nargs="+")
    gs = gsub.add_parser("sum")
    gs.add_argument("files", nargs=2)
    gs.add_argument("--arc1", type=int)
    gs.add_argument("--arc2", type=int)
    for sp in (gb, gt, gp, gs):
        sp.add_argument("-o", "--out")

    inv = sub.add_parser("invariants", help="Alexander polynomial, determinant, counts")
    inv.add_argument("diagram")
    inv.add_argument("--minor-limit", type=int, default=7)

    alex = sub.add_parser("alex", help="Alexander polynomial and determinant only")
    alex.add_argument("diagram")

    mat = sub.add_parser("matrix", help="coloring matrix over Z[T,T^-1]")
    mat.add_argument("diagram")
    mat.add_argument("--kind", choices=("fox", "dehn"), default="fox")

    code = sub.add_parser("code", help="knot code parameters over F_q")
    code.add_argument("diagram")
    code.add_argument("--q", required=True)
    code.add_argument("--modulus")
    code.add_argument("--t", required=True)
    code.add_argument("--kind", choices=("fox", "dehn"), default="fox")
    code.add_argument("--min-dist", action="store_true")
    code.add_argument("--weights", action="store_true")
    code.add_argument("--budget", type=int)

    sn = sub.add_parser("snf", help="Smith normal form of a matrix file")
    sn.add_argument("matrix")
    sn.add_argument("--ring", choices=("Z", "FpT"), default="Z")
    sn.add_argument("--p", type=int)

    co = sub.add_parser("colorings", help="count Fox colorings over a quotient ring")
    co.add_argument("diagram")
    group = co.add_mutually_exclusive_group(required=True)
    group.add_argument("--mod", type=int)
    group.add_argument("--poly-mod", help="p:c0,c1,...  modulus over F_p[T]")
    co.add_argument("--t", required=True)

    ca = sub.add_parser("cable", help="dimensions of iterated torus knots around a companion")
    base = ca.add_mutually_exclusive_group(required=True)
    base.add_argument("--base")
    base.add_argument("--base-unknot", action="store_true")
    ca.add_argument("--pairs", required=True)
    ca.add_argument("--q", required=True)
    ca.add_argument("--modulus")
    ca.add_argument("--t", required=True)

    sm = sub.add_parser("sum", help="connected-sum code of two diagram files")
    sm.add_argument("files", nargs=2)
    sm.add_argument("--q", required=True)
    sm.add_argument("--modulus")
    sm.add_argument("--t", required=True)
    sm.add_argument("--pos1", type=int)
    sm.add_argument("--pos2", type=int)
    sm.add_argument("--weights", action="store_true")
    sm.add_argument("--budget", type=int)

    ck = sub.add_parser("check", help="run the invariant suite on a diagram")
    ck.add_argument("diagram")
    ck.add_argument("--minor-limit", type=int, default=7)

    return ap


_HANDLERS = {
    "gen": cmd_gen,
    "invariants": cmd_invariants,
    "alex": lambda args: cmd_invariants(args, command="alex"),
    "matrix": cmd_matrix,
    "code": cmd_code,
    "snf": cmd_snf,
    "colorings": cmd_colorings,
    "cable": cmd_cable,
    "sum": cmd_sum,
    "check": cmd_check,
}


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return _HANDLERS[args.cmd](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DiagramError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_DIAGRAM
    except cd.BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
