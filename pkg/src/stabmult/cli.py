"""Command-line interface: ``stabmult <command> ...``.

Exit codes: 0 success, 1 computation error (reported as a structured
payload), 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
from typing import Any, Sequence

from .cache import Cache
from .errors import StabMultError
from .evaluator import Evaluator
from .partitions import Partition
from .stability import (
    DEFAULT_WINDOW,
    IntegerMatrix,
    StretchReport,
    is_additive,
    kron_limit,
    kron_stretched_sequence,
    lr_limit,
    lr_stretched_sequence,
    plethysm_limit,
    plethysm_restriction_multiplicity,
    plethysm_stability_report,
    triple_from_matrix,
)
from .symchar import plethysm_schur
from .verify import SUITES, run_suite

FIELDS = ("query", "result", "certificate", "values", "plateau", "predicted_limit", "agreement", "warnings", "elapsed_ms")


class UsageError(Exception):
    pass


# -- argument types ------------------------------------------------------------

def partition_arg(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a partition: {text!r} ({exc})") from None


def weight_arg(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",")) if text.strip() else ()
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer vector: {text!r}") from None


def matrix_arg(text: str) -> IntegerMatrix:
    try:
        return IntegerMatrix.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a matrix: {text!r} ({exc})") from None


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1: {text!r}")
    return value


def natural(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {text!r}")
    return value


# -- output --------------------------------------------------------------------

def envelope(query: dict, **fields: Any) -> dict:
    out = {name: None for name in FIELDS}
    out["query"] = query
    out["warnings"] = []
    out.update(fields)
    return {name: out[name] for name in FIELDS}


def dump_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False)


def _cell(value: Any) -> str:
    if isinstance(value, (dict, list)):
        return json.dumps(value, separators=(",", ":"), ensure_ascii=False)
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def render_table(doc: dict) -> str:
    rows = [(k, _cell(v)) for k, v in doc.items() if v is not None and v != []]
    width = max(len(k) for k, _ in rows)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in rows)


def _report_fields(report: StretchReport, certificate: dict | None = None) -> dict:
    d = report.to_dict()
    return {
        "result": {k: d[k] for k in ("direction", "offsets", "n_max", "window", "observation")},
        "certificate": certificate,
        "values": d["values"],
        "plateau": d["plateau"],
        "predicted_limit": d["predicted_limit"],
        "agreement": d["agreement"],
        "warnings": list(report.warnings),
    }


def echo_query(args: argparse.Namespace) -> dict:
    """The parsed command line in canonical text form."""
    skip = {"run", "format", "cache", "jobs"}
    out: dict = {}
    for name, value in vars(args).items():
        if name in skip or value is None or value is False:
            continue
        if isinstance(value, (Partition, IntegerMatrix)):
            value = str(value)
        elif isinstance(value, tuple):
            value = list(value)
        out[name] = value
    return out


# -- commands ------------------------------------------------------------------

def cmd_kron(args, ev):
    return {"result": ev.kron(args.alpha, args.beta, args.gamma)}


def cmd_lr(args, ev):
    return {"result": ev.lr(args.lam, args.mu, args.nu)}


def cmd_kostka(args, ev):
    return {"result": ev.kostka(args.lam, args.mu)}


def cmd_char(args, ev):
    return {"result": ev.character(args.lam, args.rho)}


def cmd_plethysm(args, ev):
    if args.lam is not None:
        if len(args.inner) != 1:
            raise UsageError("--lam needs a one-row inner partition (k)")
        return {"result": plethysm_restriction_multiplicity(args.inner[0], args.outer, args.lam)}
    expansion = plethysm_schur(args.outer, args.inner)
    return {"result": {str(nu): m for nu, m in expansion.items()}}


def cmd_additive(args, ev):
    cert = is_additive(args.matrix)
    return {"result": cert is not None, "certificate": cert and cert.to_dict()}


def cmd_triple(args, ev):
    t = triple_from_matrix(args.matrix)
    return {"result": {"alpha": str(t.alpha), "beta": str(t.beta), "gamma": str(t.gamma)}}


def _check_mode(args) -> None:
    needed = {"kron": ("matrix", "a", "b", "c"), "lr": ("a", "b", "c", "mu1", "mu2"), "plethysm": ("k", "sigma", "lam")}
    missing = [n for n in needed[args.mode] if getattr(args, n) is None]
    if missing:
        raise UsageError(f"--mode {args.mode} needs " + ", ".join("--" + n for n in missing))


def cmd_stretch(args, ev):
    _check_mode(args)
    if args.mode == "kron":
        report = kron_stretched_sequence(
            args.a, args.b, args.c, args.matrix, args.nmax, args.window,
            allow_non_additive=args.allow_non_additive, evaluate=ev.kron_many,
        )
        cert = is_additive(args.matrix)
        return _report_fields(report, cert and cert.to_dict())
    if args.mode == "lr":
        report = lr_stretched_sequence(args.a, args.b, args.c, args.mu1, args.mu2, args.nmax, args.window)
    else:
        theta = args.theta if args.theta is not None else Partition()
        report = plethysm_stability_report(args.k, args.sigma, args.lam, theta, args.nmax, args.window)
    return _report_fields(report)


def cmd_limit(args, ev):
    _check_mode(args)
    if args.mode == "kron":
        cert = is_additive(args.matrix)
        value = kron_limit(args.a, args.b, args.c, args.matrix)
        return {"result": value, "predicted_limit": value, "certificate": cert and cert.to_dict()}
    if args.mode == "lr":
        value = lr_limit(args.a, args.b, args.c, args.mu1, args.mu2)
    else:
        theta = args.theta if args.theta is not None else Partition()
        value = plethysm_limit(args.k, args.sigma, args.lam, theta)
    return {"result": value, "predicted_limit": value}


def cmd_verify(args, ev, echo):
    outcomes = run_suite(args.suite, ev, echo=echo)
    result = [
        {
            "criterion": o.criterion.number,
            "title": o.criterion.title,
            "tag": o.criterion.tag,
            "passed": o.passed,
            "detail": o.detail,
            "elapsed_ms": o.elapsed_ms,
        }
        for o in outcomes
    ]
    return {"result": result}, all(o.passed for o in outcomes)


# -- parser --------------------------------------------------------------------

def _stretch_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--mode", choices=("kron", "lr", "plethysm"), default="kron")
    p.add_argument("--matrix", type=matrix_arg)
    p.add_argument("--a", type=partition_arg)
    p.add_argument("--b", type=partition_arg)
    p.add_argument("--c", type=partition_arg)
    p.add_argument("--mu1", type=weight_arg)
    p.add_argument("--mu2", type=weight_arg)
    p.add_argument("--k", type=positive_int)
    p.add_argument("--sigma", type=partition_arg)
    p.add_argument("--theta", type=partition_arg)
    p.add_argument("--lam", type=weight_arg, help="U(2) highest weight, e.g. 4,0")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json"), default="table")
    common.add_argument("--cache", metavar="PATH", help="JSON-lines result cache (default: $STABMULT_CACHE)")
    common.add_argument("--jobs", type=positive_int, default=os.cpu_count() or 1)

    parser = argparse.ArgumentParser(prog="stabmult", description="Exact branching multiplicities and their stability.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kron", parents=[common], help="Kronecker coefficient g(alpha, beta, gamma)")
    for name in ("alpha", "beta", "gamma"):
        p.add_argument(name, type=partition_arg)
    p.set_defaults(run=cmd_kron)

    p = sub.add_parser("lr", parents=[common], help="Littlewood-Richardson coefficient c^lam_{mu,nu}")
    for name in ("lam", "mu", "nu"):
        p.add_argument(name, type=partition_arg)
    p.set_defaults(run=cmd_lr)

    p = sub.add_parser("kostka", parents=[common], help="Kostka number K_{lam,mu}")
    p.add_argument("lam", type=partition_arg)
    p.add_argument("mu", type=partition_arg)
    p.set_defaults(run=cmd_kostka)

    p = sub.add_parser("char", parents=[common], help="symmetric group character chi^lam(rho)")
    p.add_argument("lam", type=partition_arg)
    p.add_argument("rho", type=partition_arg)
    p.set_defaults(run=cmd_char)

    p = sub.add_parser("plethysm", parents=[common], help="Schur expansion of s_outer[s_inner]")
    p.add_argument("outer", type=partition_arg)
    p.add_argument("inner", type=partition_arg)
    p.add_argument("--lam", type=weight_arg, help="only the U(2) multiplicity of this weight; inner must be (k)")
    p.set_defaults(run=cmd_plethysm)

    p = sub.add_parser("additive", parents=[common], help="additivity test with an exact certificate")
    p.add_argument("matrix", type=matrix_arg)
    p.set_defaults(run=cmd_additive)

    p = sub.add_parser("triple", parents=[common], help="partition triple of a matrix")
    p.add_argument("matrix", type=matrix_arg)
    p.set_defaults(run=cmd_triple)

    p = sub.add_parser("stretch", parents=[common], help="stretched sequence with plateau and predicted limit")
    _stretch_flags(p)
    p.add_argument("--nmax", type=natural, default=6)
    p.add_argument("--window", type=positive_int, default=DEFAULT_WINDOW)
    p.add_argument("--allow-non-additive", action="store_true", help="compute values even without a certificate")
    p.set_defaults(run=cmd_stretch)

    p = sub.add_parser("limit", parents=[common], help="limit multiplicity from the graded-module formula")
    _stretch_flags(p)
    p.set_defaults(run=cmd_limit)

    p = sub.add_parser("verify", parents=[common], help="run the acceptance battery")
    p.add_argument("suite", choices=SUITES)
    p.set_defaults(run=None)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with 2 on usage errors
    start = time.perf_counter()
    cache = Cache.from_env(args.cache)
    ev = Evaluator(cache, jobs=args.jobs)
    query = echo_query(args)
    code = 0
    try:
        if args.command == "verify":
            echo = (lambda line: print(line, file=sys.stderr)) if args.format == "json" else print
            fields, ok = cmd_verify(args, ev, echo)
            code = 0 if ok else 1
        else:
            fields = args.run(args, ev)
    except UsageError as exc:
        parser.error(str(exc))
    except (StabMultError, ValueError, ArithmeticError) as exc:
        fields = {"result": {"error": {"type": type(exc).__name__, "message": str(exc)}}}
        code = 1
    if cache.skipped:
        fields.setdefault("warnings", []).append(f"skipped {cache.skipped} corrupt cache lines")
    doc = envelope(query, **fields, elapsed_ms=int((time.perf_counter() - start) * 1000))
    if args.format == "json":
        print(dump_json(doc))
    elif args.command == "verify":
        passed = sum(r["passed"] for r in doc["result"])
        print(f"{passed}/{len(doc['result'])} criteria passed in {doc['elapsed_ms']} ms")
    else:
        print(render_table(doc))
    return code


if __name__ == "__main__":
    sys.exit(main())
