"""Command-line entry point.

Machine-readable output goes to stdout (one JSON object or "x y z" record per
line), diagnostics to stderr.  Exit codes: 0 success, 1 verification
failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import configparser
import json
import logging
import sys
from pathlib import Path

from . import certify, descent, newform, search
from .arith import power_shape

DEFAULTS = {
    "zmax": 200,
    "n": ",".join(map(str, search.DEFAULT_N_VALUES)),
    "workers": 1,
    "bound": 200,
    "eq4_box": "3,3,3",
    "alpha_max": 25,
    "k_max": 25,
    "table_path": None,
}


def _dump(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, separators=(", ", ": "))


def read_config(path) -> dict:
    """key = value lines, no sections; '#' starts a comment."""
    parser = configparser.ConfigParser(inline_comment_prefixes=("#",))
    parser.read_string("[config]\n" + Path(path).read_text("utf-8"))
    out = dict(parser["config"])
    unknown = set(out) - set(DEFAULTS)
    if unknown:
        raise ValueError(f"unknown config keys: {', '.join(sorted(unknown))}")
    return out


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in str(text).split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="quintic-descent", description=__doc__.splitlines()[0])
    p.add_argument("--config", help="key = value file with default bounds")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("enumerate", help="primitive solutions of x^2 + y^2 = z^5")
    e.add_argument("--zmax", type=int)
    e.add_argument("--oracle", action="store_true", help="use the brute-force scan instead of (u, v)")

    s = sub.add_parser("shape", help="decompose an integer as 2^(2a) 5^(2b) p^(2c)")
    s.add_argument("value", type=int)

    c = sub.add_parser("certify", help="emit residue certificates")
    g = c.add_mutually_exclusive_group(required=True)
    g.add_argument("--branch", choices=[b.value for b in certify.Branch])
    g.add_argument("--all", action="store_true")
    c.add_argument("--bound", type=int)

    lv = sub.add_parser("level", help="Bennett-Skinner level for the n = 7 endgame")
    lv.add_argument("--alpha", type=int)
    lv.add_argument("--k", type=int)
    lv.add_argument("--set", action="store_true")
    lv.add_argument("--alpha-max", type=int)
    lv.add_argument("--k-max", type=int)

    se = sub.add_parser("search", help="exhaustive check of the theorem for Z <= zmax")
    se.add_argument("--zmax", type=int)
    se.add_argument("--n", type=_int_list)
    se.add_argument("--workers", type=int)
    se.add_argument("--checkpoint")

    o = sub.add_parser("oracle-match", help="compare the (u, v) sweep with the brute-force scan")
    o.add_argument("--zmax", type=int)
    return p


def _setting(args, cfg, key, conv=int):
    val = getattr(args, key, None)
    if val is None:
        val = cfg.get(key, DEFAULTS[key])
    return conv(val) if val is not None else None


def cmd_enumerate(args, cfg, out):
    z_max = _setting(args, cfg, "zmax")
    sols = descent.oracle_enumerate(z_max) if args.oracle else descent.enumerate_primitive(z_max)
    for s in sols:
        print(f"{s.x} {s.y} {s.z}", file=out)
    return 0


def cmd_shape(args, cfg, out):
    if args.value < 1:
        raise UsageError("shape expects a positive integer")
    shape = power_shape(args.value)
    print("none" if shape is None else _dump(shape.as_dict()), file=out)
    return 0


def cmd_certify(args, cfg, out):
    bound = _setting(args, cfg, "bound")
    box = tuple(_int_list(cfg.get("eq4_box", DEFAULTS["eq4_box"])))
    if len(box) != 3:
        raise UsageError("eq4_box needs three integers")
    if args.all:
        certs = certify.run_all(bound, box)
    else:
        certs = [certify.run_branch(args.branch, bound, box)]
    problems = [msg for c in certs for msg in certify.check_certificate(c)]
    lines = [c.to_line() for c in certs]
    if args.all:
        lines += [a.to_line() for a in certify.AXIOMS]
    for line in lines:
        print(line, file=out)
    for msg in problems:
        logging.error(msg)
    return 1 if problems else 0


def cmd_level(args, cfg, out):
    table = _setting(args, cfg, "table_path", str)
    if args.set:
        a_max = args.alpha_max if args.alpha_max is not None else _setting(args, cfg, "alpha_max")
        k_max = args.k_max if args.k_max is not None else _setting(args, cfg, "k_max")
        levels = sorted(newform.n7_level_set(a_max, k_max))
        flags = {lvl: newform.has_newforms(lvl, table) for lvl in levels}
        print(_dump({"alpha_max": a_max, "k_max": k_max, "levels": levels,
                     "has_newforms": [flags[lvl] for lvl in levels]}), file=out)
        return 1 if any(flags.values()) else 0
    if args.alpha is None or args.k is None:
        raise UsageError("level needs --alpha and --k, or --set")
    lc = newform.level_computation(args.alpha, args.k)
    rec = lc.as_dict()
    rec["has_newforms"] = newform.has_newforms(lc.level, table)
    print(_dump(rec), file=out)
    return 1 if rec["has_newforms"] else 0


def cmd_search(args, cfg, out):
    z_max = _setting(args, cfg, "zmax")
    n_values = args.n if args.n is not None else _int_list(cfg.get("n", DEFAULTS["n"]))
    workers = _setting(args, cfg, "workers")
    report = search.theorem_search(z_max, n_values, workers=workers, checkpoint=args.checkpoint)
    for h in report.hits:
        print(_dump(h.as_dict()), file=out)
    print(_dump(report.summary()), file=out)
    logging.info("scanned %d candidates in %d ms", report.pairs_scanned, report.elapsed_ms)
    for h in report.counterexamples:
        logging.error("COUNTEREXAMPLE %s", h.as_dict())
    return 1 if report.counterexamples else 0


def cmd_oracle_match(args, cfg, out):
    rep = descent.completeness_report(_setting(args, cfg, "zmax"))
    print(_dump({"z_max": rep.z_max, "equal": rep.equal, "parametrized": len(rep.parametrized),
                 "oracle": len(rep.oracle), "non_primitive_pairs": len(rep.non_primitive_pairs)}), file=out)
    for msg in rep.failures():
        logging.error(msg)
    return 0 if rep.equal else 1


class UsageError(Exception):
    pass


COMMANDS = {
    "enumerate": cmd_enumerate, "shape": cmd_shape, "certify": cmd_certify,
    "level": cmd_level, "search": cmd_search, "oracle-match": cmd_oracle_match,
}


def run_cli(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s", stream=sys.stderr)
    try:
        cfg = read_config(args.config) if args.config else {}
        return COMMANDS[args.command](args, cfg, out)
    except (UsageError, ValueError, LookupError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
