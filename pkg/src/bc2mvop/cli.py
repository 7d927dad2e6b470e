r"""Command-line front end.

`verify` runs identity suites over a parameter grid, one report line per
check.  The data subcommands (`weight`, `polys`, `dims`, `moments`) emit
the constructed objects as JSON; `export` writes any of them to disk, as
JSON or as a CSV evaluation grid over the bounding box of the support
region.

Output is deterministic: polynomial terms are serialized in canonical
monomial order, JSON keys are sorted, and CSV floats use the shortest
round-trip representation, so identical invocations give identical bytes.

Exit codes: 0 when no check FAILs (REPORTED discrepancies do not fail a
run), 1 when at least one identity check fails, 2 for parameter errors.
The only environment variable consulted is BC2MVOP_THREADS, the worker
count for independent suite jobs.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import casimir, expansion, leading, orthogonality
from .krawtchouk import STANDARD_PS, standard_suite
from .lie import (MsfLabel, PairParams, casimir_eigenvalue_ip, check_label,
                  label_weight, weyl_dim)
from .poly import MultiPoly
from .report import exit_code, render_json, render_text

SUITES = ("krawtchouk", "weight", "casimir", "transition", "pde",
          "orthogonality", "indecomposable", "duality", "xi")


# ---- argument helpers ----

def _int_list(s: str) -> list[int]:
    try:
        return [int(x) for x in s.split(",") if x != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {s!r}")


def _frac_list(s: str) -> list[Fraction]:
    try:
        return [Fraction(x) for x in s.split(",") if x != ""]
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected comma-separated fractions, got {s!r}")


def _int_tuple(n: int):
    def parse(s: str) -> tuple[int, ...]:
        parts = s.split(",")
        if len(parts) != n or not all(p.strip().lstrip("-").isdigit() for p in parts):
            raise argparse.ArgumentTypeError(
                f"expected {n} comma-separated integers, got {s!r}")
        return tuple(int(p) for p in parts)
    return parse


def _construction_params(m: int, a: int, b: int) -> PairParams:
    """Parameters for direct construction; the b <= -a side is refused with
    a pointer to its b >= 0 partner."""
    params = PairParams(m, a, b)
    if params.b < 0:
        partner = -params.a - params.b
        raise ValueError(
            f"b={b}: direct construction runs in the b >= 0 regime; the "
            f"b <= -a family is the flip-conjugate of (m={m}, a={a}, "
            f"b={partner}) and is verified there by the duality suite")
    return params


def _grid(ms: list[int], as_: list[int], bs: list[int]) -> list[PairParams]:
    if not (ms and as_ and bs):
        raise ValueError("empty parameter grid")
    return [_construction_params(m, a, b) for m in ms for a in as_ for b in bs]


def _run_jobs(jobs):
    workers = int(os.environ.get("BC2MVOP_THREADS", "1") or "1")
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as ex:
            chunks = list(ex.map(lambda job: job(), jobs))
    else:
        chunks = [job() for job in jobs]
    return [r for chunk in chunks for r in chunk]


def _write(text: str, out: str | None):
    if not text.endswith("\n"):
        text += "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---- verify ----

def _verify_jobs(args, grid: list[PairParams]):
    suite = args.suite
    want = lambda s: suite in ("all", s)
    jobs = []
    if want("krawtchouk"):
        nmax = 6 if args.N is None else args.N
        ps = tuple(args.p) if args.p else STANDARD_PS
        jobs.append(lambda nmax=nmax, ps=ps: standard_suite(nmax, ps))
    for params in grid:
        if want("weight"):
            jobs.append(lambda q=params: leading.weight_suite(q))
        if want("casimir"):
            jobs.append(lambda q=params: casimir.casimir_suite(q, args.dmax))
        if want("transition"):
            jobs.append(lambda q=params: expansion.transition_suite(q))
        if want("pde"):
            jobs.append(lambda q=params: expansion.pde_suite(q, args.dmax))
        if want("orthogonality"):
            jobs.append(lambda q=params: [orthogonality.positivity_check(q)]
                        + orthogonality.orthogonality_suite(q, args.dmax))
            if args.numeric:
                jobs.append(
                    lambda q=params: orthogonality.numeric_suite(q, args.dmax))
        if want("indecomposable"):
            jobs.append(lambda q=params: orthogonality.indecomposability_suite(q))
        if want("duality"):
            jobs.append(lambda q=params: expansion.duality_suite(q, args.dmax))
    seen = []
    for params in grid:
        if params.m not in seen:
            seen.append(params.m)
    for m in seen:
        if want("orthogonality"):
            jobs.append(lambda mm=m: [orthogonality.total_mass_check(mm)])
        if want("xi"):
            jobs.append(lambda mm=m: casimir.xi_suite(mm))
    return jobs


def _cmd_verify(args) -> int:
    grid = _grid(args.m, args.a, args.b)
    results = _run_jobs(_verify_jobs(args, grid))
    text = render_json(results) if args.format == "json" else render_text(results)
    _write(text, args.out)
    return exit_code(results)


# ---- data payloads ----

def _weight_payload(args) -> dict:
    params = _construction_params(args.m, args.a, args.b)
    fn = {"c": leading.weight_matrix_c,
          "psi": leading.weight_matrix_psi,
          "x": leading.weight_matrix_x}[args.coords]
    return {"kind": "weight", "m": params.m, "a": params.a, "b": params.b,
            "coords": args.coords, "matrix": fn(params).to_json()}


def _polys_payload(args) -> dict:
    params = _construction_params(args.m, args.a, args.b)
    d = tuple(args.d)
    if min(d) < 0:
        raise ValueError(f"degree d={d} must be non-negative")
    mat = (expansion.poly_matrix_psi(params, d) if args.coords == "psi"
           else expansion.poly_matrix_x(params, d))
    eigs = [str(casimir_eigenvalue_ip(label_weight(params, MsfLabel(i, d[0], d[1]))))
            for i in range(params.size)]
    return {"kind": "polys", "m": params.m, "a": params.a, "b": params.b,
            "d": list(d), "coords": args.coords, "eigenvalues": eigs,
            "matrix": mat.to_json()}


def _dims_payload(args) -> dict:
    params = PairParams(args.m, args.a, args.b)
    i, d1, d2 = args.label
    if d1 < 0 or d2 < 0:
        raise ValueError(f"label degrees ({d1},{d2}) must be non-negative")
    label = MsfLabel(i, d1, d2)
    check_label(params, label)
    w = label_weight(params, label)
    return {"kind": "dims", "m": params.m, "a": params.a, "b": params.b,
            "label": [i, d1, d2], "omega": list(w.omega),
            "dim": weyl_dim(w), "eigenvalue": str(casimir_eigenvalue_ip(w))}


def _moments_payload(args) -> dict:
    p, q = args.monomial
    if p < 0 or q < 0:
        raise ValueError(f"monomial exponents ({p},{q}) must be non-negative")
    params = PairParams(args.m, 0, 0)
    c1 = MultiPoly.var(leading.C_VARS, "c1")
    c2 = MultiPoly.var(leading.C_VARS, "c2")
    mono = (c1 ** (2 * p)) * (c2 ** (2 * q))
    return {"kind": "moments", "m": args.m, "monomial": [p, q],
            "beta_p": str(orthogonality.beta_moment(args.m, p)),
            "beta_q": str(orthogonality.beta_moment(args.m, q)),
            "delta_integral": str(orthogonality.integrate_against_delta(params, mono))}


_PAYLOADS = {"weight": _weight_payload, "polys": _polys_payload,
             "dims": _dims_payload, "moments": _moments_payload}


def _cmd_data(args) -> int:
    payload = _PAYLOADS[args.kind](args)
    _write(json.dumps(payload, indent=2, sort_keys=True), args.out)
    return 0


# ---- export ----

def _grid_csv(params: PairParams, mat) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["x1", "x2"]
                    + [f"entry_{i}_{j}" for i in range(mat.rows)
                       for j in range(mat.cols)]
                    + ["in_region"])
    for x1, x2, vals, inside in orthogonality.region_grid(params, mat=mat):
        writer.writerow([repr(float(x1)), repr(float(x2))]
                        + [repr(float(v)) for v in vals]
                        + ["1" if inside else "0"])
    return buf.getvalue()


def _kv_csv(payload: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    keys = sorted(k for k in payload if k != "matrix")
    writer.writerow(keys)
    writer.writerow([json.dumps(payload[k]) if isinstance(payload[k], list)
                     else payload[k] for k in keys])
    return buf.getvalue()


def _cmd_export(args) -> int:
    if args.format == "json":
        return _cmd_data(args)
    if args.kind == "weight":
        params = _construction_params(args.m, args.a, args.b)
        text = _grid_csv(params, leading.weight_matrix_x(params))
    elif args.kind == "polys":
        params = _construction_params(args.m, args.a, args.b)
        d = tuple(args.d)
        text = _grid_csv(params, expansion.poly_matrix_x(params, d))
    else:
        text = _kv_csv(_PAYLOADS[args.kind](args))
    _write(text, args.out)
    return 0


# ---- parser ----

def _add_point(ap, need_ab=True):
    ap.add_argument("--m", type=int, required=True, help="rank parameter, >= 3")
    if need_ab:
        ap.add_argument("--a", type=int, required=True)
        ap.add_argument("--b", type=int, required=True)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="bc2mvop",
        description="two-variable matrix orthogonal polynomials: "
                    "construction and exact verification")
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run identity suites over a parameter grid")
    v.add_argument("suite", nargs="?", default="all", choices=("all",) + SUITES)
    v.add_argument("--m", type=_int_list, default=[3, 4, 5],
                   help="comma-separated list, default 3,4,5")
    v.add_argument("--a", type=_int_list, default=[0, 1, 2, 3],
                   help="comma-separated list, default 0,1,2,3")
    v.add_argument("--b", type=_int_list, default=[0, 1, 2],
                   help="comma-separated list, default 0,1,2")
    v.add_argument("--dmax", type=int, default=2)
    v.add_argument("--numeric", action="store_true",
                   help="add the floating-point quadrature cross-check")
    v.add_argument("--N", type=int, default=None,
                   help="largest Krawtchouk size, default 6")
    v.add_argument("--p", type=_frac_list, default=None,
                   help="Krawtchouk parameters, default 1/4,1/3,1/2,2/3")
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.add_argument("--out", default=None)
    v.set_defaults(func=_cmd_verify)

    w = sub.add_parser("weight", help="emit the weight matrix as JSON")
    _add_point(w)
    w.add_argument("--coords", choices=("c", "psi", "x"), default="x")
    w.add_argument("--out", default=None)
    w.set_defaults(func=_cmd_data, kind="weight")

    pl = sub.add_parser("polys", help="emit a matrix orthogonal polynomial as JSON")
    _add_point(pl)
    pl.add_argument("--d", type=_int_tuple(2), default=(0, 0),
                    help="degree d1,d2, default 0,0")
    pl.add_argument("--coords", choices=("psi", "x"), default="x")
    pl.add_argument("--out", default=None)
    pl.set_defaults(func=_cmd_data, kind="polys")

    dm = sub.add_parser("dims", help="dimension and eigenvalue data for a label")
    _add_point(dm)
    dm.add_argument("--label", type=_int_tuple(3), required=True,
                    help="bottom index and degrees: i,d1,d2")
    dm.add_argument("--out", default=None)
    dm.set_defaults(func=_cmd_data, kind="dims")

    mo = sub.add_parser("moments", help="exact torus moments of a monomial")
    _add_point(mo, need_ab=False)
    mo.add_argument("--monomial", type=_int_tuple(2), required=True,
                    help="exponents p,q of c1^(2p) c2^(2q)")
    mo.add_argument("--out", default=None)
    mo.set_defaults(func=_cmd_data, kind="moments")

    ex = sub.add_parser("export", help="write any payload to disk, JSON or CSV")
    ex.add_argument("--kind", choices=("weight", "polys", "dims", "moments"),
                    required=True)
    ex.add_argument("--m", type=int, required=True)
    ex.add_argument("--a", type=int, default=0)
    ex.add_argument("--b", type=int, default=0)
    ex.add_argument("--d", type=_int_tuple(2), default=(0, 0))
    ex.add_argument("--label", type=_int_tuple(3), default=(0, 0, 0))
    ex.add_argument("--monomial", type=_int_tuple(2), default=(0, 0))
    ex.add_argument("--coords", choices=("c", "psi", "x"), default="x")
    ex.add_argument("--format", choices=("json", "csv"), default="json")
    ex.add_argument("--out", default=None)
    ex.set_defaults(func=_cmd_export)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as err:
        print(f"parameter error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
