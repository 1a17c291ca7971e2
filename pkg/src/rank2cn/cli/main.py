"""``rank2cn`` command line entry point."""

from __future__ import annotations

import argparse
import sys
import time
import warnings

from .. import __version__
from ..mod2 import nilpotency_a1, nilpotency_alpha, table1
from ..pairings.cn import DegreeMismatch, ResourceGuardError, cn_tangent, cn_xi, cn_z
from ..pairings.handles import b1_pairing
from ..schur import ShapeError, SkewShape, kostka_ssyt, skew_schur
from ..symcore.partitions import parse_partition
from .cache import ResultCache, cache_key
from .envelope import ResultEnvelope, rational_json, render, symfn_json
from .expr import ExpressionError, evaluate, parse_expression

EXIT_OK, EXIT_INVALID, EXIT_GUARD = 0, 2, 3


class UsageError(ValueError):
    pass


# ---------------------------------------------------------------------------
# commands: each takes the normalized params dict and returns a JSON-ready result


def run_cn(p):
    space = p["space"]
    if space == "tangent":
        cn = cn_tangent(p["g"])
    elif space == "N":
        cn = cn_xi(p["g"], p["k"])
    else:
        cn = cn_z(p["g"], p["k"])
    return symfn_json(cn.data, p["basis"])


def run_pair(p):
    mono = parse_expression(p["expression"])
    return {"value": rational_json(evaluate(mono, p["g"], p["k"], p["space"]))}


def run_table1(p):
    rows = table1(p["gmax"], p["part_bound"])
    return {"rows": [{"g": r.g, "p": r.p, "k": r.k, "partitions": [list(x) for x in r.odd_partitions]}
                     for r in rows]}


def run_nilpotency(p):
    cert = nilpotency_alpha(p["g"]) if p["target"] == "alpha" else nilpotency_a1(p["g"])
    out = {
        "target": cert.target,
        "g": cert.g,
        "nilpotency_degree": cert.degree,
        "witness": cert.witness,
        "witness_value": rational_json(cert.witness_value),
        "witness_odd": cert.witness_odd,
        "completions_checked": cert.checked,
        "completions_even": cert.even,
        "coverage": cert.coverage,
        "ok": cert.ok,
    }
    if cert.window:
        out["odd_window"] = [j for j, b in cert.window.items() if b]
        out["window_ok"] = cert.window_ok
    return out


def _shape(p) -> SkewShape:
    return SkewShape(parse_partition(p["outer"]), parse_partition(p["inner"]))


def run_schur(p):
    return symfn_json(skew_schur(_shape(p), via=p["via"]), p["basis"])


def run_kostka(p):
    return {"value": kostka_ssyt(_shape(p), parse_partition(p["type"]))}


def run_b1(p):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        rep = b1_pairing(p["g"], p["k"], p["j"], parse_partition(p["partition"]), as_printed=p["as_printed"])
    if p["as_printed"]:
        print("warning: the as-printed b1 formula is internally inconsistent; "
              "see the notes in the payload", file=sys.stderr)
    fmt = lambda v: None if v is None else rational_json(v)  # noqa: E731
    return {
        "as_printed": fmt(rep.as_printed),
        "via_mg": fmt(rep.via_mg),
        "degree_checks": rep.degree_checks,
        "notes": rep.notes,
    }


COMMANDS = {
    "cn": run_cn,
    "pair": run_pair,
    "table1": run_table1,
    "nilpotency": run_nilpotency,
    "schur": run_schur,
    "kostka": run_kostka,
    "b1": run_b1,
}


def params_from_args(args) -> dict:
    c = args.command
    if c == "cn":
        if args.space != "tangent" and args.k is None:
            raise UsageError("cn N|M needs both g and k")
        return {"space": args.space, "g": args.g, "k": args.g if args.space == "tangent" else args.k,
                "basis": args.basis}
    if c == "pair":
        return {"expression": args.expression, "g": args.g, "k": args.k if args.k is not None else args.g,
                "space": args.space}
    if c == "table1":
        return {"gmax": args.gmax, "part_bound": args.part_bound}
    if c == "nilpotency":
        return {"target": args.target, "g": args.g}
    if c == "schur":
        return {"outer": args.outer, "inner": args.inner, "via": args.via, "basis": args.basis}
    if c == "kostka":
        return {"outer": args.outer, "inner": args.inner, "type": args.type}
    if c == "b1":
        return {"g": args.g, "k": args.k, "j": args.j, "partition": args.partition,
                "as_printed": args.as_printed}
    raise UsageError(f"unknown command {c}")


def execute(command: str, params: dict, use_cache: bool = True) -> ResultEnvelope:
    start = time.perf_counter()
    cache = ResultCache() if use_cache else None
    key = cache_key(__version__, command, params)
    result = cache.get(key) if cache else None
    hit = result is not None
    if not hit:
        result = COMMANDS[command](params)
        if cache:
            try:
                cache.put(key, result)
            except OSError as exc:
                print(f"warning: could not write cache: {exc}", file=sys.stderr)
    ms = round((time.perf_counter() - start) * 1000, 3)
    return ResultEnvelope(command, params, result, __version__, ms, cached=hit)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="rank2cn", description="Exact intersection pairings on N_g and M_g.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default="text")
    common.add_argument("--no-cache", action="store_true", help="compute afresh and do not store the result")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("cn", parents=[common], help="Chern number polynomial")
    s.add_argument("space", choices=("N", "M", "tangent"))
    s.add_argument("g", type=int)
    s.add_argument("k", type=int, nargs="?")
    s.add_argument("--basis", choices=("m", "e"), default="m")

    s = sub.add_parser("pair", parents=[common], help="pair a monomial against the fundamental class")
    s.add_argument("expression")
    s.add_argument("g", type=int)
    s.add_argument("k", type=int, nargs="?")
    s.add_argument("--space", choices=("N", "M"), default="N")

    s = sub.add_parser("table1", parents=[common], help="odd mod-2 pairings P_{g,k}")
    s.add_argument("--gmax", type=int, default=4)
    s.add_argument("--part-bound", choices=("ambient", "restricted"), default="ambient")

    s = sub.add_parser("nilpotency", parents=[common], help="mod-2 nilpotency certificate")
    s.add_argument("target", choices=("alpha", "a1"))
    s.add_argument("g", type=int)

    s = sub.add_parser("schur", parents=[common], help="skew Schur function")
    s.add_argument("outer")
    s.add_argument("inner", nargs="?", default="[]")
    s.add_argument("--via", choices=("E", "H"), default="E")
    s.add_argument("--basis", choices=("m", "e"), default="m")

    s = sub.add_parser("kostka", parents=[common], help="skew Kostka number by tableau count")
    s.add_argument("outer")
    s.add_argument("inner")
    s.add_argument("type")

    s = sub.add_parser("b1", parents=[common], help="pairings with b_1 handle classes")
    s.add_argument("g", type=int)
    s.add_argument("k", type=int)
    s.add_argument("j", type=int)
    s.add_argument("partition")
    s.add_argument("--as-printed", action="store_true",
                   help="evaluate the extraction formula exactly as printed (known to be inconsistent)")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        params = params_from_args(args)
        env = execute(args.command, params, use_cache=not args.no_cache)
    except ResourceGuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (UsageError, ExpressionError, DegreeMismatch, ShapeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    print(render(env, args.format))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
