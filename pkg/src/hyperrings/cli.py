"""Command line front end.

    hyperrings validate z2.hr
    hyperrings closure --kind lambda-star-e --e 1 z4coset.hr
    hyperrings parts --e 1 --subset 0,1 --catalog coset-hyperring:Z4/0,2
    hyperrings demo

Exit codes: 0 when the computation ran and the queried property holds, 1 when
it is violated (the report carries a witness), 2 for bad input.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time

from .catalog import parse_catalog_spec, standard_catalog
from .closure import STARRED, preset, smallest_regular
from .core import Hyperring, HyperstructureError, elements, mask_of, validate
from .document import digest, parse, serialize
from .expr import Bounds, evaluate, parse_expression
from .oracle import DEFAULT_CAP, GENERATOR_FOR, OracleError, cross_validate
from .parts import (
    completeness,
    default_bounds,
    is_lambda_e_strong,
    lambda_e_strong_counterexample,
    neighborhood,
    part_conditions,
    part_escape,
    strong_implies_transitive,
    transitivity_report,
)
from .quotient import build_quotient, check_fiber_identities
from .relations import (
    E_KINDS,
    KINDS,
    generate,
    regularity_counterexample,
    saturated_generate,
    transitive_closure,
)

__all__ = ["main", "build_parser", "run", "execute", "render"]

SCHEMA = 1

_KEBAB = {
    "beta": "beta", "gamma": "gamma", "alpha-plus": "alphaPlus",
    "alpha-times": "alphaTimes", "alpha": "alpha", "alpha-union": "alphaUnion",
    "lambda-times-e": "lambdaTimesE", "lambda-e": "lambdaE", "big-lambda-e": "LambdaE",
    "gamma-star": "gammaStar", "alpha-star": "alphaStar",
    "lambda-star-e": "lambdaStarE", "big-lambda-star-e": "LambdaStarE",
}
_STAR_OF = {v: k for k, v in GENERATOR_FOR.items()}


class InputError(HyperstructureError):
    pass


def _kind(text: str | None, default: str, starred: bool) -> str:
    if text is None:
        return default
    name = _KEBAB.get(text, text)
    if starred:
        name = _STAR_OF.get(name, name)
        if name not in STARRED:
            raise InputError(f"unknown starred kind {text!r}; choose from {', '.join(STARRED)}")
    elif name not in KINDS:
        raise InputError(f"unknown relation kind {text!r}; choose from {', '.join(KINDS)}")
    return name


def _subset(text: str, q: int) -> int:
    try:
        items = [int(s) for s in text.split(",") if s.strip()]
    except ValueError:
        raise InputError(f"--subset expects comma-separated indices, got {text!r}") from None
    if not items or any(not 0 <= x < q for x in items):
        raise InputError(f"--subset must name elements of 0..{q - 1}")
    return mask_of(items)


def _need_e(args, what):
    if args.e is None:
        raise InputError(f"{what} needs --e")
    return args.e


# serialization helpers

def _bounds(b: Bounds) -> dict:
    return {"maxTerms": b.max_terms, "maxFactors": b.max_factors,
            "maxInsertRun": b.max_insert_run}


def _quotient(qr) -> dict:
    return {
        "classes": [list(c) for c in qr.classes],
        "add": [list(r) for r in qr.add],
        "mul": [list(r) for r in qr.mul],
        "zeroClass": qr.zero_class,
        "identityClass": qr.identity_class,
        "isRing": qr.is_ring,
        "addCommutative": qr.add_commutative,
        "mulCommutative": qr.mul_commutative,
    }


def _jsonable(x):
    if isinstance(x, tuple):
        return [_jsonable(v) for v in x]
    return x


# commands: each returns (parameters, result, witnesses, violated)

def cmd_validate(r, args):
    report = validate(r)
    checks = [{"axiom": c.name, "ok": c.ok, "witness": _jsonable(c.witness), "detail": c.detail}
              for c in report.checks]
    wit = [c for c in checks if not c["ok"]]
    return {"axiomMode": r.distributivity}, {"ok": report.ok, "axioms": checks}, wit, not report.ok


def cmd_relation(r, args):
    kind = _kind(args.kind, "gamma", starred=False)
    e = _need_e(args, kind) if kind in E_KINDS else None
    params = {"kind": kind, "e": e}
    result = {}
    if args.bounds:
        b = Bounds.parse(args.bounds)
        rel = generate(r, kind, b, e)
        closed = transitive_closure(rel)
        params["bounds"] = _bounds(b)
    else:
        sat = saturated_generate(r, kind, e)
        rel, closed, b = sat.history[-1], sat.relation, sat.bounds
        params["bounds"] = "saturated"
        result["saturation"] = {"bounds": _bounds(b), "rounds": sat.rounds,
                                "stabilized": sat.stabilized}
    result["pairs"] = [list(p) for p in rel.pairs()]
    result["transitive"] = rel.is_transitive()
    result["closure"] = closed.classes()
    bad = regularity_counterexample(r, closed)
    result["closureStronglyRegular"] = bad is None
    if args.expr:
        ex = parse_expression(args.expr)
        if any(x >= r.q for t in ex.terms for x in t):
            raise InputError(f"expression {args.expr!r} uses elements outside 0..{r.q - 1}")
        v = evaluate(r, ex)
        params["expr"] = str(ex)
        result["expression"] = {"value": elements(v), "image": elements(rel.image(v))}
    wit = [] if bad is None else [{"regularity": vars(bad)}]
    return params, result, wit, bad is not None


def cmd_closure(r, args):
    kind = _kind(args.kind, "gammaStar", starred=True)
    e = _need_e(args, kind) if kind in ("lambdaStarE", "LambdaStarE") else None
    ax = preset(kind, e)
    p = smallest_regular(r, ax)
    qr = build_quotient(r, p)
    result = {"kind": kind, "partition": p.classes(), "classCount": p.class_count,
              "quotient": _quotient(qr)}
    problems = []
    if not qr.is_ring:
        problems.append({"quotient": "not a ring"})
    if ax.unit is not None:
        unit_class = qr.class_index(ax.unit)
        result["identityClass"] = list(qr.classes[unit_class])
        if qr.identity_class != unit_class:
            problems.append({"identity": f"class of {ax.unit} is not the identity"})
    return {"kind": kind, "e": e}, result, problems, bool(problems)


def cmd_quotient(r, args):
    kind = _kind(args.kind, "gammaStar", starred=True)
    e = _need_e(args, kind) if kind in ("lambdaStarE", "LambdaStarE") else None
    p = smallest_regular(r, preset(kind, e))
    qr = build_quotient(r, p)
    result = {"kind": kind, "quotient": _quotient(qr),
              "K": list(qr.classes[qr.zero_class]) if qr.zero_class is not None else None,
              "D": list(qr.classes[qr.identity_class]) if qr.identity_class is not None else None}
    params = {"kind": kind, "e": e}
    wit, violated = [], not qr.is_ring
    if args.subset:
        m = _subset(args.subset, r.q)
        strong = kind == "lambdaStarE" and is_lambda_e_strong(r, e)
        fr = check_fiber_identities(r, p, m, strong=strong)
        params["subset"] = elements(m)
        result["fibers"] = {
            "saturation": elements(fr.saturation),
            "K+M": elements(fr.k_plus_m), "M+K": elements(fr.m_plus_k),
            "D*M": elements(fr.d_times_m) if fr.d_times_m is not None else None,
            "M*D": elements(fr.m_times_d) if fr.m_times_d is not None else None,
            "lambdaStrong": strong,
            "sumIdentity": fr.sum_identity,
            "productInclusion": fr.product_inclusion,
            "productEquality": fr.product_equality,
        }
        if not fr.ok:
            violated = True
            wit.append({"fibers": "identity failed", "subset": elements(m)})
    return params, result, wit, violated


def cmd_parts(r, args):
    e = _need_e(args, "parts")
    b = Bounds.parse(args.bounds) if args.bounds else default_bounds(r, e)
    params = {"e": e, "bounds": _bounds(b)}
    if args.subset:
        m = _subset(args.subset, r.q)
        params["subset"] = elements(m)
        c1, c2, c3 = part_conditions(r, m, e, b)
        esc = part_escape(r, m, e)
        result = {"isPart": esc is None,
                  "conditions": {"generatorClosed": c1, "relationClosed": c2, "unionOfClasses": c3},
                  "neighborhoods": {str(x): elements(neighborhood(r, x, e, b).px)
                                    for x in elements(m)}}
        wit = [] if esc is None else [{"escape": list(esc)}]
        return params, result, wit, esc is not None
    rep = transitivity_report(r, e, b)
    result = {"transitive": rep.transitive,
              "classesAreNeighborhoods": rep.classes_are_neighborhoods,
              "neighborhoodsAreParts": rep.neighborhoods_are_parts,
              "agree": rep.agree,
              "neighborhoods": {str(x): elements(neighborhood(r, x, e, b).px) for x in range(r.q)}}
    wit = [] if rep.witness is None else [{"transitivity": _jsonable(rep.witness)}]
    return params, result, wit, not (rep.transitive and rep.agree)


def cmd_strong(r, args):
    e = _need_e(args, "strong")
    bad = lambda_e_strong_counterexample(r, e)
    st = strong_implies_transitive(r, e)
    result = {"strong": bad is None, "transitive": st.report.transitive,
              "impliesTransitive": st.holds, "bounds": _bounds(st.report.bounds)}
    wit = [] if bad is None else [{"clause": bad.clause, "data": list(bad.data)}]
    return {"e": e}, result, wit, bad is not None or not st.holds


def cmd_complete(r, args):
    n = args.n if args.n is not None else 1
    b = Bounds.parse(args.bounds) if args.bounds else None
    c = completeness(r, n, args.e, b)
    result = {
        "nComplete": c.n_complete, "unit": c.unit, "e": c.e,
        "lambdaComplete": c.lambda_complete, "corollary": c.corollary,
        "gammaEqualsLambda": c.gamma_equals_lambda, "collapse": c.collapse,
        "bounds": _bounds(c.bounds),
    }
    wit = []
    if c.n_witness:
        ex, val, img = c.n_witness
        wit.append({"nComplete": {"words": [list(w) for w in ex], "value": val, "gamma": img}})
    if c.lambda_witness:
        ex, img, partners = c.lambda_witness
        wit.append({"lambdaComplete": {"words": [list(w) for w in ex], "image": img,
                                       "partners": partners}})
    return {"n": n, "e": args.e}, result, wit, not (c.n_complete and c.ok)


def _agreements(r, cap):
    out, bad = [], []
    for item in cross_validate(r, cap):
        row = {"kind": item.kind, "e": item.e,
               "closure": item.closure.classes(),
               "oracle": item.oracle.classes() if item.oracle is not None else None,
               "generated": item.generated.classes(),
               "generatorStabilized": item.generator_stabilized,
               "generatorSound": item.generator_sound,
               "agree": item.agree}
        out.append(row)
        if not item.agree:
            bad.append(row)
    return out, bad


def cmd_oracle(r, args):
    if r.q > DEFAULT_CAP:
        raise OracleError(f"q={r.q} exceeds the oracle cap {DEFAULT_CAP}")
    rows, bad = _agreements(r, DEFAULT_CAP)
    return {"cap": DEFAULT_CAP}, {"kinds": rows, "agree": not bad}, bad, bool(bad)


def cmd_demo(_r, args):
    structures, bad = [], []
    for spec, r in standard_catalog().items():
        rows, disagree = _agreements(r, DEFAULT_CAP)
        ok = validate(r).ok
        structures.append({"catalog": spec, "q": r.q, "digest": digest(r), "valid": ok,
                           "kinds": rows})
        if not ok:
            bad.append({"catalog": spec, "invalid": True})
        bad.extend({"catalog": spec, **row} for row in disagree)
    return {"cap": DEFAULT_CAP}, {"structures": structures, "agree": not bad}, bad, bool(bad)


COMMANDS = {
    "validate": (cmd_validate, "check the hyperring axioms"),
    "relation": (cmd_relation, "generate a relation at bounds (or saturated)"),
    "closure": (cmd_closure, "smallest strongly regular equivalence for a starred kind"),
    "quotient": (cmd_quotient, "quotient ring, K and D fibers, fiber identities for --subset"),
    "parts": (cmd_parts, "lambda_e-part test for --subset, else the transitivity triad"),
    "strong": (cmd_strong, "lambda_e-strong test and its transitivity consequence"),
    "complete": (cmd_complete, "n-completeness and (Lambda_e)_n-completeness"),
    "oracle": (cmd_oracle, "brute-force partition scan against the closure engine"),
    "demo": (cmd_demo, "cross-validate the whole built-in catalog"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", nargs="?", help=".hr document path, or - for stdin")
    common.add_argument("--catalog", help="built-in structure, e.g. coset-hyperring:Z4/0,2")
    common.add_argument("--e", type=int, help="element index e")
    common.add_argument("--kind", help="relation or starred kind (camelCase or kebab-case)")
    common.add_argument("--bounds", help="n=<terms>,k=<factors>,run=<insert run>")
    common.add_argument("--subset", help="comma-separated element indices")
    common.add_argument("--n", type=int, help="number of terms for completeness")
    common.add_argument("--expr", help="expression literal such as '0*1 + 2'")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--timings", action="store_true",
                        help="record wall-clock timings (makes output run-dependent)")
    parser = argparse.ArgumentParser(prog="hyperrings", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")
    for name, (_, help_) in COMMANDS.items():
        sub.add_parser(name, parents=[common], help=help_, description=help_)
    return parser


def _load(args) -> tuple[Hyperring | None, str]:
    if args.command == "demo":
        if args.input or args.catalog:
            raise InputError("demo takes no input structure")
        blob = "".join(serialize(r) for r in standard_catalog().values())
        return None, "sha256:" + hashlib.sha256(blob.encode()).hexdigest()
    if bool(args.input) == bool(args.catalog):
        raise InputError("give exactly one of an input file or --catalog")
    if args.catalog:
        r = parse_catalog_spec(args.catalog)
    else:
        try:
            text = sys.stdin.read() if args.input == "-" else open(args.input).read()
        except OSError as exc:
            raise InputError(f"cannot read {args.input}: {exc.strerror}") from None
        r = parse(text)
    if args.e is not None and not 0 <= args.e < r.q:
        raise InputError(f"--e {args.e} out of range for q={r.q}")
    return r, digest(r)


def execute(args) -> tuple[int, dict]:
    t0 = time.perf_counter()
    r, dig = _load(args)
    t1 = time.perf_counter()
    params, result, witnesses, violated = COMMANDS[args.command][0](r, args)
    t2 = time.perf_counter()
    timings = {"loadSeconds": round(t1 - t0, 6), "computeSeconds": round(t2 - t1, 6)} \
        if args.timings else {}
    report = {
        "schema": SCHEMA,
        "command": args.command,
        "input-digest": dig,
        "parameters": params,
        "result": result,
        "witnesses": witnesses,
        "timings": timings,
    }
    return (1 if violated else 0), report


def run(argv=None) -> tuple[int, dict]:
    """Parse arguments, run the command, return ``(exit code, report)``."""
    return execute(build_parser().parse_args(argv))


def _text(value, indent=0) -> list[str]:
    pad = "  " * indent
    lines = []
    for key, v in value.items():
        if isinstance(v, dict) and v:
            lines.append(f"{pad}{key}:")
            lines.extend(_text(v, indent + 1))
        elif isinstance(v, list) and v and all(isinstance(i, dict) for i in v):
            lines.append(f"{pad}{key}:")
            for item in v:
                sub = _text(item, indent + 2)
                sub[0] = pad + "  - " + sub[0].lstrip()
                lines.extend(sub)
        else:
            lines.append(f"{pad}{key}: {json.dumps(v)}")
    return lines


def render(report: dict, fmt: str = "json") -> str:
    if fmt == "text":
        return "\n".join(_text(report)) + "\n"
    return json.dumps(report, indent=2) + "\n"


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        code, report = execute(args)
    except HyperstructureError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(render(report, args.format))
    return code
